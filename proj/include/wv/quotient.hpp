#pragma once

#include <cstddef>
#include <set>
#include <string>

#include "wv/colors.hpp"
#include "wv/spherical_system.hpp"

namespace wv {

struct QuotientResult {
  SphericalSystem system;
  std::set<std::size_t> removed_sigma;   // 0-based input Sigma indices
  std::set<std::string> removed_colors;  // full color labels
};

// Labels of colors whose functional is nonnegative on every spherical root.
std::set<std::string> positive_colors(const SphericalSystem& sys);

// The quotient system by a set of positive colors: spherical roots where
// a chosen color is strictly positive disappear, the chosen colors
// disappear, and S^p / A are rebuilt from the surviving colors. The
// result is cross-checked against the color reconstruction of the new
// system; a mismatch raises InconsistentQuotient.
QuotientResult quotient_by(const SphericalSystem& sys, const std::set<std::string>& labels);

}  // namespace wv
