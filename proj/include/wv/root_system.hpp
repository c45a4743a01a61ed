#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wv/rational.hpp"

namespace wv {

enum class Kind { A, B, C, D, E, F, G };

char kind_letter(Kind k);
Kind kind_from_letter(char c);

// One simple factor of the Dynkin diagram, with Bourbaki numbering of
// its simple roots.
struct SimpleComponent {
  Kind kind;
  int rank;

  bool operator==(const SimpleComponent&) const = default;
};

// Address of a simple root: component and Bourbaki index, both 1-based.
struct SimpleRootId {
  int component;
  int index;

  auto operator<=>(const SimpleRootId&) const = default;
};

// A product of simple root systems. Components are immutable once
// constructed; rank bounds per kind are enforced here.
class RootSystem {
public:
  explicit RootSystem(std::vector<SimpleComponent> components);

  int num_components() const { return static_cast<int>(components_.size()); }
  const SimpleComponent& component(int c) const;  // 1-based
  const std::vector<SimpleComponent>& components() const { return components_; }

  bool contains(SimpleRootId id) const;
  void require(SimpleRootId id) const;  // throws InvalidRootId

  int num_roots() const;
  std::vector<SimpleRootId> all_roots() const;

  // "C3", "A1" and the like; 1-based component index.
  std::string descriptor(int c) const;
  std::vector<std::string> descriptors() const;

  bool operator==(const RootSystem&) const = default;

private:
  std::vector<SimpleComponent> components_;
};

// A rational combination of simple roots. Only nonzero coefficients are
// stored; denominators are restricted to 1 or 2, which covers every
// spherical root handled here including the half-root fixtures.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::map<SimpleRootId, Rat> coefficients);

  static Weight simple_root(SimpleRootId id);

  const std::map<SimpleRootId, Rat>& coefficients() const { return coeffs_; }
  Rat coeff(SimpleRootId id) const;
  std::set<SimpleRootId> support() const;
  bool is_zero() const { return coeffs_.empty(); }

  Weight plus(const Weight& other) const;
  Weight scaled(const Rat& factor) const;

  bool operator==(const Weight&) const = default;

private:
  std::map<SimpleRootId, Rat> coeffs_;
};

// <alpha_i^vee, alpha_j> in Bourbaki conventions; 2 on the diagonal,
// 0 across distinct components.
int cartan_pairing(const RootSystem& rs, SimpleRootId i, SimpleRootId j);

bool orthogonal(const RootSystem& rs, SimpleRootId i, SimpleRootId j);

// <alpha_i^vee, w> extended linearly to rational weights.
Rat coroot_eval(const RootSystem& rs, SimpleRootId i, const Weight& w);

std::set<SimpleRootId> support(const Weight& w);

}  // namespace wv
