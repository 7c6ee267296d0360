#include "siegel/error.hpp"

namespace siegel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConductor: return "invalid-conductor";
    case ErrorKind::NotRealCoefficient: return "not-real-coefficient";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::InconsistentMonodromy: return "inconsistent-monodromy";
    case ErrorKind::DisconnectedCover: return "disconnected-cover";
    case ErrorKind::InvalidCover: return "invalid-cover";
    case ErrorKind::NotUnitary: return "not-unitary";
    case ErrorKind::ConductorMismatch: return "conductor-mismatch";
    case ErrorKind::NotBlockDiagonal: return "not-block-diagonal";
    case ErrorKind::WrongPart: return "wrong-part";
    case ErrorKind::NotStable: return "not-stable";
    case ErrorKind::UnsplittableOverField: return "unsplittable-over-field";
    case ErrorKind::RankUndecided: return "rank-undecided";
    case ErrorKind::NotElliptic: return "not-elliptic";
    case ErrorKind::Unclassified: return "unclassified";
    case ErrorKind::UnknownFixture: return "unknown-fixture";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::SignUndecided: return "sign-undecided";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

}  // namespace siegel
