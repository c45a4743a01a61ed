#include "wv/spherical_system.hpp"

#include <algorithm>
#include <sstream>

#include "wv/errors.hpp"

namespace wv {

namespace {

std::string root_name(SimpleRootId id) {
  return std::to_string(id.component) + "." + std::to_string(id.index);
}

// Exact rank of the Sigma coefficient matrix via Gaussian elimination.
std::size_t sigma_rank(const SphericalSystem& sys) {
  const auto roots = sys.rs.all_roots();
  std::vector<std::vector<Rat>> m;
  for (const auto& w : sys.sigma) {
    std::vector<Rat> row;
    row.reserve(roots.size());
    for (const auto& r : roots) row.push_back(w.coeff(r));
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  std::size_t col = 0;
  while (rank < m.size() && col < roots.size()) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == Rat(0)) ++pivot;
    if (pivot == m.size()) {
      ++col;
      continue;
    }
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == Rat(0)) continue;
      Rat factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < roots.size(); ++c) {
        m[r][c] -= factor * m[rank][c];
      }
    }
    ++rank;
    ++col;
  }
  return rank;
}

}  // namespace

void check_structure(const SphericalSystem& sys) {
  for (const auto& id : sys.sp) sys.rs.require(id);
  for (const auto& w : sys.sigma) {
    for (const auto& [id, value] : w.coefficients()) {
      if (!sys.rs.contains(id)) {
        throw InvalidSystem("spherical root mentions unknown simple root " + root_name(id));
      }
    }
  }
  std::set<std::string> labels;
  for (const auto& d : sys.acolors) {
    if (d.label.empty()) throw InvalidSystem("A-color with empty label");
    if (!labels.insert(d.label).second) {
      throw InvalidSystem("duplicate A-color label '" + d.label + "'");
    }
    if (d.moved_by.empty()) {
      throw InvalidSystem("A-color '" + d.label + "' moved by no simple root");
    }
    for (const auto& id : d.moved_by) sys.rs.require(id);
    if (d.row.size() != sys.sigma.size()) {
      throw InvalidSystem("A-color '" + d.label + "' row length " +
                          std::to_string(d.row.size()) + " != |Sigma| " +
                          std::to_string(sys.sigma.size()));
    }
  }
}

std::size_t rank(const SphericalSystem& sys) {
  return sys.sigma.size();
}

std::set<SimpleRootId> supp_sigma(const SphericalSystem& sys) {
  std::set<SimpleRootId> out;
  for (const auto& w : sys.sigma) {
    auto s = w.support();
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::map<SimpleRootId, std::size_t> simple_sigma_roots(const SphericalSystem& sys) {
  std::map<SimpleRootId, std::size_t> out;
  for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
    const auto& coeffs = sys.sigma[i].coefficients();
    if (coeffs.size() == 1 && coeffs.begin()->second == Rat(1)) {
      out[coeffs.begin()->first] = i;
    }
  }
  return out;
}

std::map<SimpleRootId, std::size_t> doubled_sigma_roots(const SphericalSystem& sys) {
  std::map<SimpleRootId, std::size_t> out;
  for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
    const auto& coeffs = sys.sigma[i].coefficients();
    if (coeffs.size() == 1 && coeffs.begin()->second == Rat(2)) {
      out[coeffs.begin()->first] = i;
    }
  }
  return out;
}

std::vector<Violation> validate(const SphericalSystem& sys) {
  check_structure(sys);
  std::vector<Violation> out;
  auto fail = [&](const char* code, const std::string& msg) {
    out.push_back({code, msg});
  };

  // V1: Sigma linearly independent over Q.
  if (sigma_rank(sys) != sys.sigma.size()) {
    fail("V1", "spherical roots are linearly dependent");
  }

  // V2: nonnegative coefficients.
  for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
    for (const auto& [id, value] : sys.sigma[i].coefficients()) {
      if (value < Rat(0)) {
        fail("V2", "negative coefficient in spherical root " + std::to_string(i + 1));
      }
    }
  }

  const auto simple = simple_sigma_roots(sys);
  const auto doubled = doubled_sigma_roots(sys);

  // V3: each simple spherical root moves exactly two A-colors; their rows
  // sum to the coroot functional and each carries 1 at its own position.
  for (const auto& d : sys.acolors) {
    for (const auto& id : d.moved_by) {
      if (!simple.count(id)) {
        fail("V3", "color '" + d.label + "' moved by " + root_name(id) +
                       " which is not a simple spherical root");
      }
    }
  }
  for (const auto& [alpha, pos] : simple) {
    std::vector<const AColor*> movers;
    for (const auto& d : sys.acolors) {
      if (d.moved_by.count(alpha)) movers.push_back(&d);
    }
    if (movers.size() != 2) {
      fail("V3", "simple spherical root " + root_name(alpha) + " moves " +
                     std::to_string(movers.size()) + " A-colors, expected 2");
      continue;
    }
    bool sums_ok = true;
    for (std::size_t j = 0; j < sys.sigma.size(); ++j) {
      Rat sum = Rat(movers[0]->row[j]) + Rat(movers[1]->row[j]);
      if (sum != coroot_eval(sys.rs, alpha, sys.sigma[j])) sums_ok = false;
    }
    if (!sums_ok) {
      fail("V3", "rows of the two colors moved by " + root_name(alpha) +
                     " do not sum to the coroot functional");
    }
    for (const auto* d : movers) {
      if (d->row[pos] != 1) {
        fail("V3", "color '" + d->label + "' has entry " + std::to_string(d->row[pos]) +
                       " at its own spherical root, expected 1");
      }
    }
  }

  // V4: coroot functionals of color-carrying roots outside supp Sigma are
  // integral on Sigma.
  const auto supp = supp_sigma(sys);
  for (const auto& alpha : sys.rs.all_roots()) {
    if (supp.count(alpha) || sys.sp.count(alpha)) continue;
    for (const auto& gamma : sys.sigma) {
      if (coroot_eval(sys.rs, alpha, gamma).denominator() != 1) {
        fail("V4", "coroot of " + root_name(alpha) + " is not integral on Sigma");
        break;
      }
    }
  }

  // V5: for 2*alpha in Sigma, half the coroot functional is integral.
  for (const auto& [alpha, pos] : doubled) {
    for (const auto& gamma : sys.sigma) {
      Rat half = coroot_eval(sys.rs, alpha, gamma) / Rat(2);
      if (half.denominator() != 1) {
        fail("V5", "half-coroot of " + root_name(alpha) + " is not integral on Sigma");
        break;
      }
    }
  }

  // V6: directly related representatives of one b-type class must carry
  // the same functional.
  std::set<SimpleRootId> b_candidates;
  for (const auto& alpha : sys.rs.all_roots()) {
    if (simple.count(alpha) || doubled.count(alpha) || sys.sp.count(alpha)) continue;
    b_candidates.insert(alpha);
  }
  std::vector<SimpleRootId> bc(b_candidates.begin(), b_candidates.end());
  for (std::size_t i = 0; i < bc.size(); ++i) {
    for (std::size_t j = i + 1; j < bc.size(); ++j) {
      if (!orthogonal(sys.rs, bc[i], bc[j])) continue;
      Weight s = Weight::simple_root(bc[i]).plus(Weight::simple_root(bc[j]));
      Weight half = s.scaled(Rat(1, 2));
      bool related = false;
      for (const auto& gamma : sys.sigma) {
        if (gamma == s || gamma == half) related = true;
      }
      if (!related) continue;
      for (const auto& gamma : sys.sigma) {
        if (coroot_eval(sys.rs, bc[i], gamma) != coroot_eval(sys.rs, bc[j], gamma)) {
          fail("V6", "equivalent roots " + root_name(bc[i]) + " ~ " + root_name(bc[j]) +
                         " carry different functionals");
          break;
        }
      }
    }
  }

  // V7: S^p must not contain a simple spherical root, nor a root whose
  // double is a spherical root (such roots move colors).
  for (const auto& alpha : sys.sp) {
    if (simple.count(alpha)) {
      fail("V7", root_name(alpha) + " lies in S^p but is a spherical root");
    }
    if (doubled.count(alpha)) {
      fail("V7", root_name(alpha) + " lies in S^p but its double is a spherical root");
    }
  }

  return out;
}

bool is_valid(const SphericalSystem& sys) {
  return validate(sys).empty();
}

void require_valid(const SphericalSystem& sys) {
  auto violations = validate(sys);
  if (violations.empty()) return;
  std::ostringstream os;
  os << "system fails validation:";
  for (const auto& v : violations) os << " [" << v.code << "] " << v.message << ";";
  throw InvalidSystem(os.str());
}

SphericalSystem localize(const SphericalSystem& sys, const std::set<std::size_t>& keep) {
  check_structure(sys);
  for (auto i : keep) {
    if (i >= sys.sigma.size()) {
      throw InvalidIndex("spherical root index " + std::to_string(i + 1) + " out of range");
    }
  }
  SphericalSystem out{sys.rs, sys.sp, {}, {}, sys.adjoint_faithful};
  for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
    if (keep.count(i)) out.sigma.push_back(sys.sigma[i]);
  }
  std::set<SimpleRootId> kept_simple;
  for (const auto& [alpha, pos] : simple_sigma_roots(sys)) {
    if (keep.count(pos)) kept_simple.insert(alpha);
  }
  for (const auto& d : sys.acolors) {
    std::set<SimpleRootId> moved;
    for (const auto& id : d.moved_by) {
      if (kept_simple.count(id)) moved.insert(id);
    }
    if (moved.empty()) continue;  // moved only by roots that left Sigma
    AColor nd{d.label, std::move(moved), {}};
    for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
      if (keep.count(i)) nd.row.push_back(d.row[i]);
    }
    out.acolors.push_back(std::move(nd));
  }
  return out;
}

SphericalSystem induce(const SphericalSystem& core, const RootSystem& target,
                       const RootMap& embedding) {
  check_structure(core);
  auto map_root = [&](SimpleRootId id) {
    auto it = embedding.find(id);
    if (it == embedding.end()) {
      throw InvalidEmbedding("embedding undefined on simple root " + root_name(id));
    }
    return it->second;
  };
  const auto roots = core.rs.all_roots();
  std::set<SimpleRootId> image;
  for (const auto& r : roots) {
    SimpleRootId t = map_root(r);
    if (!target.contains(t)) {
      throw InvalidEmbedding("embedding sends " + root_name(r) + " outside the target");
    }
    if (!image.insert(t).second) {
      throw InvalidEmbedding("embedding is not injective at " + root_name(t));
    }
  }
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      if (cartan_pairing(core.rs, a, b) != cartan_pairing(target, map_root(a), map_root(b))) {
        throw InvalidEmbedding("embedding does not preserve the pairing of " + root_name(a) +
                               " and " + root_name(b));
      }
    }
  }

  SphericalSystem out{target, {}, {}, {}, core.adjoint_faithful};
  for (const auto& id : core.sp) out.sp.insert(map_root(id));
  for (const auto& w : core.sigma) {
    std::map<SimpleRootId, Rat> coeffs;
    for (const auto& [id, value] : w.coefficients()) coeffs[map_root(id)] = value;
    out.sigma.push_back(Weight(std::move(coeffs)));
  }
  for (const auto& d : core.acolors) {
    AColor nd{d.label, {}, d.row};
    for (const auto& id : d.moved_by) nd.moved_by.insert(map_root(id));
    out.acolors.push_back(std::move(nd));
  }
  return out;
}

SphericalSystem concat(const SphericalSystem& a, const SphericalSystem& b) {
  check_structure(a);
  check_structure(b);
  std::vector<SimpleComponent> comps = a.rs.components();
  for (const auto& c : b.rs.components()) comps.push_back(c);
  const int shift = a.rs.num_components();
  auto shifted = [&](SimpleRootId id) { return SimpleRootId{id.component + shift, id.index}; };

  SphericalSystem out{RootSystem(std::move(comps)), a.sp, a.sigma, {}, a.adjoint_faithful && b.adjoint_faithful};
  for (const auto& id : b.sp) out.sp.insert(shifted(id));
  for (const auto& w : b.sigma) {
    std::map<SimpleRootId, Rat> coeffs;
    for (const auto& [id, value] : w.coefficients()) coeffs[shifted(id)] = value;
    out.sigma.push_back(Weight(std::move(coeffs)));
  }
  std::set<std::string> labels;
  for (const auto& d : a.acolors) labels.insert(d.label);
  for (const auto& d : b.acolors) {
    if (labels.count(d.label)) {
      throw InvalidSystem("label '" + d.label + "' appears in both factors");
    }
  }
  const std::size_t ra = a.sigma.size();
  const std::size_t rb = b.sigma.size();
  for (const auto& d : a.acolors) {
    AColor nd{d.label, d.moved_by, d.row};
    nd.row.insert(nd.row.end(), rb, 0);
    out.acolors.push_back(std::move(nd));
  }
  for (const auto& d : b.acolors) {
    AColor nd{d.label, {}, std::vector<long long>(ra, 0)};
    for (const auto& id : d.moved_by) nd.moved_by.insert(shifted(id));
    nd.row.insert(nd.row.end(), d.row.begin(), d.row.end());
    out.acolors.push_back(std::move(nd));
  }
  return out;
}

}  // namespace wv
