#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ogglab/quaternion.hpp"

namespace ogglab {

/// Visits every nonzero integer vector c with c^T G c <= bound, for G
/// positive definite. Exact Fincke-Pohst enumeration over the rationals.
/// The visitor returns false to stop early.
void forEachShortVector(const RationalMatrix& gram, const Rational& bound,
                        const std::function<bool(const std::vector<long>&, const Rational&)>& visit);

/// counts[n] = #{c != 0 : c^T G c == n} for 0 <= n <= maxValue. The form
/// must take integer values; a non-integral value throws std::logic_error.
std::vector<Integer> thetaCounts(const RationalMatrix& gram, long maxValue);

std::optional<std::vector<long>> findVectorOfValue(const RationalMatrix& gram, const Rational& value);

}  // namespace ogglab
