#include "wv/colors.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "wv/errors.hpp"

namespace wv {

std::string color_kind_name(ColorKind k) {
  switch (k) {
    case ColorKind::TypeA: return "a";
    case ColorKind::TypeHalf: return "a1";
    case ColorKind::TypeB: return "b";
  }
  return "?";
}

const Color* ColorSet::find(const std::string& label) const {
  for (const auto& c : colors) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

std::string root_display_name(SimpleRootId id) {
  std::string name = "a" + std::to_string(id.index);
  name.append(static_cast<std::size_t>(id.component - 1), '\'');
  return name;
}

namespace {

// Union-find over the b-type candidates; two roots are directly related
// when they are orthogonal and their sum (or half-sum) is a spherical root.
struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ColorSet compute_colors(const SphericalSystem& sys) {
  require_valid(sys);
  ColorSet out;

  for (const auto& d : sys.acolors) {
    Color c{ColorKind::TypeA, "a:" + d.label, d.moved_by, {}};
    for (auto v : d.row) c.row.push_back(Rat(v));
    out.colors.push_back(std::move(c));
  }

  const auto doubled = doubled_sigma_roots(sys);
  for (const auto& [alpha, pos] : doubled) {
    Color c{ColorKind::TypeHalf, "a1:" + root_display_name(alpha), {alpha}, {}};
    for (const auto& gamma : sys.sigma) {
      c.row.push_back(coroot_eval(sys.rs, alpha, gamma) / Rat(2));
    }
    out.colors.push_back(std::move(c));
  }

  const auto simple = simple_sigma_roots(sys);
  std::vector<SimpleRootId> candidates;
  for (const auto& alpha : sys.rs.all_roots()) {
    if (simple.count(alpha) || doubled.count(alpha) || sys.sp.count(alpha)) continue;
    candidates.push_back(alpha);
  }
  UnionFind uf(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (!orthogonal(sys.rs, candidates[i], candidates[j])) continue;
      Weight s = Weight::simple_root(candidates[i]).plus(Weight::simple_root(candidates[j]));
      Weight half = s.scaled(Rat(1, 2));
      for (const auto& gamma : sys.sigma) {
        if (gamma == s || gamma == half) {
          uf.unite(i, j);
          break;
        }
      }
    }
  }
  std::map<std::size_t, std::set<SimpleRootId>> classes;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    classes[uf.find(i)].insert(candidates[i]);
  }
  // Iterate classes by their smallest member; candidates are already in
  // root order, so keyed iteration below is made deterministic explicitly.
  std::vector<std::set<SimpleRootId>> ordered;
  for (auto& [root, members] : classes) ordered.push_back(members);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
  for (const auto& members : ordered) {
    const SimpleRootId rep = *members.begin();
    std::string label = "b:";
    bool first = true;
    for (const auto& m : members) {
      if (!first) label += "+";
      label += root_display_name(m);
      first = false;
    }
    Color c{ColorKind::TypeB, std::move(label), members, {}};
    for (const auto& gamma : sys.sigma) {
      c.row.push_back(coroot_eval(sys.rs, rep, gamma));
    }
    out.colors.push_back(std::move(c));
  }

  return out;
}

std::set<std::size_t> fixed_divisors(const SphericalSystem& sys) {
  const auto colors = compute_colors(sys);
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
    for (const auto& c : colors.colors) {
      if (c.row[i] < Rat(0)) {
        out.insert(i);
        break;
      }
    }
  }
  return out;
}

std::set<std::size_t> boundary_under_aut(const SphericalSystem& sys) {
  return fixed_divisors(sys);
}

}  // namespace wv
