#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace siegel {

enum class ErrorKind {
  InvalidConductor,
  NotRealCoefficient,
  DivisionByZero,
  InconsistentMonodromy,
  DisconnectedCover,
  InvalidCover,
  NotUnitary,
  ConductorMismatch,
  NotBlockDiagonal,
  WrongPart,
  NotStable,
  UnsplittableOverField,
  RankUndecided,
  NotElliptic,
  Unclassified,
  UnknownFixture,
  Parse,
  SignUndecided,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure carries a machine-readable kind so callers and tests
/// can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace siegel
