#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "wv/spherical_system.hpp"

namespace wv {

// One indecomposable factor, together with the positions it occupies in
// the input: component indices and Sigma indices, both 0-based.
struct Factor {
  SphericalSystem system;
  std::set<std::size_t> components;
  std::set<std::size_t> sigma_indices;
};

struct Decomposition {
  std::vector<Factor> factors;
  bool trivial = false;
};

// Finest product decomposition. Two Dynkin components are tied together
// when a spherical root's support meets both, or an A-color moved in one
// has a nonzero functional entry at a spherical root supported in the
// other. Factors are ordered by smallest component index.
Decomposition decompose(const SphericalSystem& sys);

// 0-based indices of factors with empty Sigma.
std::set<std::size_t> rank0_factors(const Decomposition& d);

// supp Sigma u S^p covers all simple roots.
bool is_cuspidal(const SphericalSystem& sys);

struct CuspidalCore {
  SphericalSystem core;
  std::set<SimpleRootId> stripped;
  RootMap embedding;  // core root -> original root
};

// Restriction to the Levi subdiagram generated by supp Sigma u S^p; the
// induced subdiagram is re-typed into standard components. Satisfies
// induce(core, sys.rs, embedding) == original triple.
CuspidalCore cuspidal_core(const SphericalSystem& sys);

}  // namespace wv
