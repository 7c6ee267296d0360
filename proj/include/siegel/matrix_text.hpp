#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "siegel/cyclotomic.hpp"

namespace siegel {

/// Scalars are sums of terms `c`, `c*zN^k`, `zN^k` or `i` with integer or
/// p/q coefficients, e.g. "z4^3", "-1", "1/2*z12^2-z12". The conductor of the
/// result is the lcm of the N that occur.
CycNum parse_scalar(std::string_view text);

/// "diag(a, b, ...)" or "[[a, b], [c, d]]"; entries share the lcm conductor.
CycMatrix parse_matrix(std::string_view text);

/// Inverse of parse_matrix: diag(...) for diagonal matrices, nested rows otherwise.
std::string format_matrix(const CycMatrix& m);

}  // namespace siegel
