#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "wv/spherical_system.hpp"

namespace wv {

enum class ColorKind { TypeA, TypeHalf, TypeB };

std::string color_kind_name(ColorKind k);

// A reconstructed color with its functional on Sigma. TypeA rows are the
// stored A-rows; TypeHalf rows are half coroot functionals; TypeB rows
// are coroot functionals of a class representative.
struct Color {
  ColorKind kind;
  std::string label;
  std::set<SimpleRootId> moved_by;
  std::vector<Rat> row;

  bool operator==(const Color&) const = default;
};

struct ColorSet {
  std::vector<Color> colors;

  const Color* find(const std::string& label) const;
};

// Display name for a simple root: "a2" in the first component, primes
// mark later components ("a1'", "a1''", ...).
std::string root_display_name(SimpleRootId id);

// The full color set A u Delta^{a'} u Delta^{b} of a validate-clean system.
ColorSet compute_colors(const SphericalSystem& sys);

// 0-based indices i with <D, gamma_i> < 0 for some color D.
std::set<std::size_t> fixed_divisors(const SphericalSystem& sys);

// The boundary divisors that remain boundary under the full connected
// automorphism group; same set as fixed_divisors.
std::set<std::size_t> boundary_under_aut(const SphericalSystem& sys);

}  // namespace wv
