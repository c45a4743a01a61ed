#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wv/root_system.hpp"

namespace wv {

// A color moved by simple roots that are themselves spherical roots.
// `row` holds the coupling <D, gamma> against Sigma, in Sigma order.
struct AColor {
  std::string label;
  std::set<SimpleRootId> moved_by;
  std::vector<long long> row;

  bool operator==(const AColor&) const = default;
};

// Luna's spherical system (S^p, Sigma, A) over a root system, plus the
// flag telling whether the group is assumed to act faithfully with
// adjoint isogeny type. Values are immutable in spirit: every operation
// returns a fresh system.
struct SphericalSystem {
  RootSystem rs;
  std::set<SimpleRootId> sp;
  std::vector<Weight> sigma;
  std::vector<AColor> acolors;
  bool adjoint_faithful = true;

  bool operator==(const SphericalSystem&) const = default;
};

struct Violation {
  std::string code;  // "V1".."V7"
  std::string message;
};

// Structural checks (in-bounds ids, row lengths, unique labels). Throws
// InvalidSystem; callers of validate() get this for free.
void check_structure(const SphericalSystem& sys);

// Returns the failed checks V1..V7. Violations are data, not failures.
std::vector<Violation> validate(const SphericalSystem& sys);

bool is_valid(const SphericalSystem& sys);
void require_valid(const SphericalSystem& sys);  // throws InvalidSystem

std::size_t rank(const SphericalSystem& sys);
std::set<SimpleRootId> supp_sigma(const SphericalSystem& sys);

// Spherical roots that are single simple roots (coefficient one), with
// their positions in Sigma.
std::map<SimpleRootId, std::size_t> simple_sigma_roots(const SphericalSystem& sys);

// Simple roots alpha with 2*alpha in Sigma, with the position of 2*alpha.
std::map<SimpleRootId, std::size_t> doubled_sigma_roots(const SphericalSystem& sys);

// Restriction to a G-stable subvariety: keeps the selected spherical
// roots (0-based indices), drops A-colors all of whose moving roots left
// Sigma, restricts surviving rows to the kept columns.
SphericalSystem localize(const SphericalSystem& sys, const std::set<std::size_t>& keep);

using RootMap = std::map<SimpleRootId, SimpleRootId>;

// Parabolic induction: transports the triple along an injective,
// Cartan-pairing-preserving embedding of simple roots into `target`.
SphericalSystem induce(const SphericalSystem& core, const RootSystem& target,
                       const RootMap& embedding);

// Product assembly: places `b` after `a`, shifting component indices and
// padding functional rows with zeros. Labels must not clash.
SphericalSystem concat(const SphericalSystem& a, const SphericalSystem& b);

}  // namespace wv
