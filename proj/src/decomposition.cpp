#include "wv/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "wv/errors.hpp"

namespace wv {

namespace {

std::string root_name(SimpleRootId id) {
  return std::to_string(id.component) + "." + std::to_string(id.index);
}

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

Decomposition decompose(const SphericalSystem& sys) {
  require_valid(sys);
  const std::size_t nc = static_cast<std::size_t>(sys.rs.num_components());
  UnionFind uf(nc);

  auto comp0 = [](SimpleRootId id) { return static_cast<std::size_t>(id.component - 1); };

  // (a) supports of spherical roots tie components together.
  for (const auto& gamma : sys.sigma) {
    const auto supp = gamma.support();
    auto it = supp.begin();
    for (auto jt = supp.begin(); jt != supp.end(); ++jt) {
      uf.unite(comp0(*it), comp0(*jt));
    }
  }
  // (b) an A-color moved in one component with a nonzero entry at a
  // spherical root supported in another ties those components.
  for (const auto& d : sys.acolors) {
    for (const auto& mover : d.moved_by) {
      for (std::size_t j = 0; j < sys.sigma.size(); ++j) {
        if (d.row[j] == 0) continue;
        for (const auto& id : sys.sigma[j].support()) {
          uf.unite(comp0(mover), comp0(id));
        }
      }
    }
  }

  std::map<std::size_t, std::set<std::size_t>> classes;
  for (std::size_t c = 0; c < nc; ++c) classes[uf.find(c)].insert(c);
  std::vector<std::set<std::size_t>> ordered;
  for (auto& [key, members] : classes) ordered.push_back(members);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });

  Decomposition out;
  for (const auto& members : ordered) {
    std::map<int, int> comp_map;  // old 1-based -> new 1-based
    std::vector<SimpleComponent> comps;
    for (auto c : members) {
      comp_map[static_cast<int>(c) + 1] = static_cast<int>(comps.size()) + 1;
      comps.push_back(sys.rs.components()[c]);
    }
    auto remap = [&](SimpleRootId id) {
      return SimpleRootId{comp_map.at(id.component), id.index};
    };
    auto in_factor = [&](SimpleRootId id) {
      return members.count(static_cast<std::size_t>(id.component - 1)) != 0;
    };

    SphericalSystem fsys{RootSystem(std::move(comps)), {}, {}, {}, sys.adjoint_faithful};
    std::set<std::size_t> sigma_indices;
    for (const auto& id : sys.sp) {
      if (in_factor(id)) fsys.sp.insert(remap(id));
    }
    for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
      const auto supp = sys.sigma[i].support();
      if (supp.empty() || !in_factor(*supp.begin())) continue;
      sigma_indices.insert(i);
      std::map<SimpleRootId, Rat> coeffs;
      for (const auto& [id, value] : sys.sigma[i].coefficients()) {
        assert(in_factor(id));
        coeffs[remap(id)] = value;
      }
      fsys.sigma.push_back(Weight(std::move(coeffs)));
    }
    for (const auto& d : sys.acolors) {
      if (!in_factor(*d.moved_by.begin())) continue;
      AColor nd{d.label, {}, {}};
      for (const auto& id : d.moved_by) {
        assert(in_factor(id));
        nd.moved_by.insert(remap(id));
      }
      for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
        if (sigma_indices.count(i)) {
          nd.row.push_back(d.row[i]);
        } else {
          assert(d.row[i] == 0);
        }
      }
      fsys.acolors.push_back(std::move(nd));
    }
    out.factors.push_back(Factor{std::move(fsys), members, std::move(sigma_indices)});
  }
  out.trivial = out.factors.size() == 1;
  return out;
}

std::set<std::size_t> rank0_factors(const Decomposition& d) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    if (d.factors[i].system.sigma.empty()) out.insert(i);
  }
  return out;
}

bool is_cuspidal(const SphericalSystem& sys) {
  require_valid(sys);
  std::set<SimpleRootId> covered = supp_sigma(sys);
  covered.insert(sys.sp.begin(), sys.sp.end());
  for (const auto& id : sys.rs.all_roots()) {
    if (!covered.count(id)) return false;
  }
  return true;
}

namespace {

// Connected induced subdiagram of a Dynkin diagram, to be re-typed as a
// standard component with its own Bourbaki numbering.
struct Subdiagram {
  const RootSystem* rs;
  std::vector<SimpleRootId> nodes;  // sorted

  int pair(std::size_t a, std::size_t b) const {
    return cartan_pairing(*rs, nodes[a], nodes[b]);
  }
  bool adjacent(std::size_t a, std::size_t b) const { return a != b && pair(a, b) != 0; }
  std::vector<std::size_t> neighbors(std::size_t a) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if (adjacent(a, b)) out.push_back(b);
    }
    return out;
  }
};

// Walks a path graph from `start`, returning node indices in order.
std::vector<std::size_t> walk_path(const Subdiagram& d, std::size_t start) {
  std::vector<std::size_t> order{start};
  std::size_t prev = start;
  std::size_t cur = start;
  while (true) {
    std::size_t next = d.nodes.size();
    for (auto nb : d.neighbors(cur)) {
      if (nb != prev) {
        next = nb;
        break;
      }
    }
    if (next == d.nodes.size()) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

// Classifies one connected subdiagram; fills the component kind and the
// Bourbaki-ordered node list.
std::pair<SimpleComponent, std::vector<SimpleRootId>> classify(const Subdiagram& d) {
  const std::size_t n = d.nodes.size();
  auto unsupported = [&](const std::string& why) -> UnsupportedSubdiagram {
    return UnsupportedSubdiagram("induced subdiagram is not a standard type: " + why);
  };

  if (n == 1) return {{Kind::A, 1}, {d.nodes[0]}};

  std::size_t edge_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> multi_edges;
  std::size_t max_degree = 0;
  std::vector<std::size_t> branch_nodes;
  for (std::size_t a = 0; a < n; ++a) {
    auto nb = d.neighbors(a);
    max_degree = std::max(max_degree, nb.size());
    if (nb.size() >= 3) branch_nodes.push_back(a);
    for (auto b : nb) {
      if (a < b) {
        ++edge_count;
        int m = d.pair(a, b) * d.pair(b, a);
        if (m > 1) multi_edges.push_back({a, b});
      }
    }
  }
  if (edge_count != n - 1) throw unsupported("not a tree");

  auto ends = [&]() {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < n; ++a) {
      if (d.neighbors(a).size() == 1) out.push_back(a);
    }
    return out;
  };

  if (!multi_edges.empty()) {
    if (multi_edges.size() > 1) throw unsupported("two multiple bonds");
    auto [u, v] = multi_edges[0];
    int m = d.pair(u, v) * d.pair(v, u);
    if (m == 3) {
      if (n != 2) throw unsupported("triple bond in a diagram of rank > 2");
      // the short root pairs to -3 against the long one
      std::size_t short_node = d.pair(0, 1) == -3 ? 0 : 1;
      return {{Kind::G, 2}, {d.nodes[short_node], d.nodes[1 - short_node]}};
    }
    if (max_degree > 2) throw unsupported("branch node with a double bond");
    // path with one double bond
    auto e = ends();
    bool u_end = d.neighbors(u).size() == 1;
    bool v_end = d.neighbors(v).size() == 1;
    if (!u_end && !v_end) {
      // double bond in the interior: F4 shape only
      if (n != 4) throw unsupported("interior double bond in rank != 4");
      // number from the long end: the long side pairs to -1 against the
      // short side of the double bond
      std::size_t long_side = d.pair(u, v) == -1 ? u : v;
      std::size_t short_side = long_side == u ? v : u;
      // number from the end adjacent to the long side
      std::size_t start = e[0];
      for (auto end_node : e) {
        auto path = walk_path(d, end_node);
        if (path[1] == long_side) {
          start = end_node;
          break;
        }
      }
      auto path = walk_path(d, start);
      if (path.size() != 4 || path[1] != long_side || path[2] != short_side) {
        throw unsupported("double bond not in the F4 position");
      }
      std::vector<SimpleRootId> ordered;
      for (auto idx : path) ordered.push_back(d.nodes[idx]);
      return {{Kind::F, 4}, ordered};
    }
    if (n == 2) {
      // B2 and C2 carry the same diagram; keep the original id order and
      // let the short end decide the label, so whole components re-type
      // to themselves.
      bool first_short = d.pair(0, 1) == -2;
      return {{first_short ? Kind::C : Kind::B, 2}, {d.nodes[0], d.nodes[1]}};
    }
    // double bond at an end: B or C, numbered from the other end
    std::size_t t = u_end ? u : v;  // terminal node of the double bond
    std::size_t s = u_end ? v : u;  // its partner
    std::size_t start = t;
    for (auto end_node : e) {
      if (end_node != t) start = end_node;
    }
    auto path = walk_path(d, start);
    if (path.back() != t) throw unsupported("double bond not at the end of the chain");
    std::vector<SimpleRootId> ordered;
    for (auto idx : path) ordered.push_back(d.nodes[idx]);
    // terminal long root -> C, terminal short root -> B
    Kind kind = d.pair(s, t) == -2 ? Kind::C : Kind::B;
    return {{kind, static_cast<int>(n)}, ordered};
  }

  // simply laced
  if (branch_nodes.empty()) {
    auto e = ends();
    // deterministic numbering: start from the end with the smaller id
    std::size_t start = e[0];
    if (d.nodes[e[1]] < d.nodes[e[0]]) start = e[1];
    auto path = walk_path(d, start);
    std::vector<SimpleRootId> ordered;
    for (auto idx : path) ordered.push_back(d.nodes[idx]);
    return {{Kind::A, static_cast<int>(n)}, ordered};
  }
  if (branch_nodes.size() > 1 || d.neighbors(branch_nodes[0]).size() != 3) {
    throw unsupported("more than one branch point");
  }
  const std::size_t center = branch_nodes[0];
  std::vector<std::vector<std::size_t>> arms;  // center excluded, inner first
  for (auto nb : d.neighbors(center)) {
    std::vector<std::size_t> arm{nb};
    std::size_t prev = center;
    std::size_t cur = nb;
    while (true) {
      std::size_t next = n;
      for (auto x : d.neighbors(cur)) {
        if (x != prev) next = x;
      }
      if (next == n) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(std::move(arm));
  }
  std::sort(arms.begin(), arms.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return d.nodes[a.back()] < d.nodes[b.back()];
  });
  const auto la = arms[0].size();
  const auto lb = arms[1].size();
  const auto lc = arms[2].size();
  if (la == 1 && lb == 1) {
    // D_n: long arm gives alpha_1 .. alpha_{n-3}, then the center, then
    // the two short arms in id order
    std::vector<SimpleRootId> ordered;
    for (auto it = arms[2].rbegin(); it != arms[2].rend(); ++it) ordered.push_back(d.nodes[*it]);
    ordered.push_back(d.nodes[center]);
    SimpleRootId x = d.nodes[arms[0][0]];
    SimpleRootId y = d.nodes[arms[1][0]];
    if (y < x) std::swap(x, y);
    ordered.push_back(x);
    ordered.push_back(y);
    return {{Kind::D, static_cast<int>(n)}, ordered};
  }
  if (la == 1 && lb == 2 && (lc >= 2 && lc <= 4)) {
    // E_6, E_7, E_8
    std::vector<SimpleRootId> ordered(n, SimpleRootId{0, 0});
    ordered[1] = d.nodes[arms[0][0]];   // alpha_2
    ordered[3] = d.nodes[center];       // alpha_4
    const auto& two_arm = arms[1];
    const auto& long_arm = arms[2];
    ordered[2] = d.nodes[two_arm[0]];   // alpha_3
    ordered[0] = d.nodes[two_arm[1]];   // alpha_1
    for (std::size_t k = 0; k < long_arm.size(); ++k) {
      ordered[4 + k] = d.nodes[long_arm[k]];
    }
    return {{Kind::E, static_cast<int>(n)}, ordered};
  }
  throw unsupported("branching pattern matches no standard type");
}

}  // namespace

CuspidalCore cuspidal_core(const SphericalSystem& sys) {
  require_valid(sys);
  std::set<SimpleRootId> kept = supp_sigma(sys);
  kept.insert(sys.sp.begin(), sys.sp.end());

  std::set<SimpleRootId> stripped;
  RootMap embedding;
  for (const auto& id : sys.rs.all_roots()) {
    if (!kept.count(id)) stripped.insert(id);
  }

  // connected pieces of the induced subdiagram
  std::vector<SimpleRootId> nodes(kept.begin(), kept.end());
  UnionFind uf(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (cartan_pairing(sys.rs, nodes[a], nodes[b]) != 0) uf.unite(a, b);
    }
  }
  std::map<std::size_t, std::vector<SimpleRootId>> pieces;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    pieces[uf.find(a)].push_back(nodes[a]);
  }
  std::vector<std::vector<SimpleRootId>> ordered_pieces;
  for (auto& [key, piece] : pieces) ordered_pieces.push_back(piece);
  std::sort(ordered_pieces.begin(), ordered_pieces.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<SimpleComponent> comps;
  RootMap inverse;  // original -> core
  for (const auto& piece : ordered_pieces) {
    Subdiagram sub{&sys.rs, piece};
    auto [component, bourbaki_order] = classify(sub);
    comps.push_back(component);
    const int c = static_cast<int>(comps.size());
    for (std::size_t k = 0; k < bourbaki_order.size(); ++k) {
      SimpleRootId core_id{c, static_cast<int>(k) + 1};
      embedding[core_id] = bourbaki_order[k];
      inverse[bourbaki_order[k]] = core_id;
    }
  }
  if (comps.empty()) {
    throw UnsupportedSubdiagram("empty core: the system has no spherical roots and no S^p");
  }

  SphericalSystem core{RootSystem(std::move(comps)), {}, {}, {}, sys.adjoint_faithful};
  for (const auto& id : sys.sp) core.sp.insert(inverse.at(id));
  for (const auto& w : sys.sigma) {
    std::map<SimpleRootId, Rat> coeffs;
    for (const auto& [id, value] : w.coefficients()) coeffs[inverse.at(id)] = value;
    core.sigma.push_back(Weight(std::move(coeffs)));
  }
  for (const auto& d : sys.acolors) {
    AColor nd{d.label, {}, d.row};
    for (const auto& id : d.moved_by) {
      auto it = inverse.find(id);
      if (it == inverse.end()) {
        throw InvalidSystem("A-color '" + d.label + "' moved by stripped root " + root_name(id));
      }
      nd.moved_by.insert(it->second);
    }
    core.acolors.push_back(std::move(nd));
  }
  return CuspidalCore{std::move(core), std::move(stripped), std::move(embedding)};
}

}  // namespace wv
