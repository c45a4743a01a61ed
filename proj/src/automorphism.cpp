#include "wv/automorphism.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "wv/colors.hpp"
#include "wv/errors.hpp"
#include "wv/quotient.hpp"

namespace wv {

std::string verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Unchanged: return "Unchanged";
    case VerdictKind::Rank0Exceptional: return "Rank0Exceptional";
    case VerdictKind::PSpToPSL: return "PSpToPSL";
    case VerdictKind::Rank2B4: return "Rank2B4";
    case VerdictKind::Rank1KnownFixture: return "Rank1KnownFixture";
    case VerdictKind::Rank1UnspecifiedHomogeneous: return "Rank1UnspecifiedHomogeneous";
  }
  return "?";
}

namespace {

// alpha_1 + 2 alpha_2 + ... + 2 alpha_{n-1} + alpha_n of a C-type
// component (alpha_1 + alpha_2 when n = 2).
Weight c_type_marker_root(int component, int n) {
  std::map<SimpleRootId, Rat> coeffs;
  for (int i = 1; i <= n; ++i) {
    coeffs[{component, i}] = (i == 1 || i == n) ? Rat(1) : Rat(2);
  }
  return Weight(std::move(coeffs));
}

std::optional<std::size_t> sigma_index_of(const SphericalSystem& sys, const Weight& w) {
  for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
    if (sys.sigma[i] == w) return i;
  }
  return std::nullopt;
}

// Everything aut_group rewrites, expressed against the input system.
struct RewritePlan {
  std::map<std::size_t, SimpleComponent> comp_replace;    // 0-based component
  std::map<std::size_t, std::set<SimpleRootId>> comp_sp;  // new S^p per replaced component
  std::set<std::size_t> delete_sigma;                     // 0-based Sigma indices
  std::map<std::size_t, Weight> replace_sigma;            // rewritten in place
};

SphericalSystem apply_plan(const SphericalSystem& sys, const RewritePlan& plan) {
  std::vector<SimpleComponent> comps = sys.rs.components();
  for (const auto& [c, replacement] : plan.comp_replace) comps[c] = replacement;

  SphericalSystem out{RootSystem(std::move(comps)), {}, {}, {}, sys.adjoint_faithful};
  for (const auto& id : sys.sp) {
    if (!plan.comp_replace.count(static_cast<std::size_t>(id.component - 1))) {
      out.sp.insert(id);
    }
  }
  for (const auto& [c, sp] : plan.comp_sp) out.sp.insert(sp.begin(), sp.end());

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
    if (plan.delete_sigma.count(i)) continue;
    kept.push_back(i);
    auto it = plan.replace_sigma.find(i);
    out.sigma.push_back(it == plan.replace_sigma.end() ? sys.sigma[i] : it->second);
  }
  for (const auto& d : sys.acolors) {
    AColor nd{d.label, d.moved_by, {}};
    for (auto i : kept) nd.row.push_back(d.row[i]);
    out.acolors.push_back(std::move(nd));
  }
  require_valid(out);
  return out;
}

// Checks the classified shape around one C-type marker component and
// registers its rewrite. Throws NotClassified on any mismatch.
void plan_psp_component(const SphericalSystem& sys, std::size_t c, RewritePlan& plan) {
  const int comp = static_cast<int>(c) + 1;
  const int n = sys.rs.component(comp).rank;
  const Weight marker = c_type_marker_root(comp, n);
  auto marker_pos = sigma_index_of(sys, marker);
  if (!marker_pos) {
    throw NotClassified("component " + std::to_string(comp) + " carries no marker root");
  }

  std::set<SimpleRootId> expected_sp;
  for (int i = 3; i <= n; ++i) expected_sp.insert({comp, i});
  std::set<SimpleRootId> actual_sp;
  for (const auto& id : sys.sp) {
    if (id.component == comp) actual_sp.insert(id);
  }
  if (actual_sp != expected_sp) {
    throw NotClassified("S^p on component " + std::to_string(comp) +
                        " does not consist of alpha_3 .. alpha_n");
  }
  for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
    if (i == *marker_pos) continue;
    for (const auto& id : sys.sigma[i].support()) {
      if (id.component == comp && id.index >= 2) {
        throw NotClassified("spherical root " + std::to_string(i + 1) +
                            " involves an inner root of component " + std::to_string(comp));
      }
    }
  }

  plan.comp_replace[c] = SimpleComponent{Kind::A, 2 * n - 1};
  std::set<SimpleRootId> new_sp;
  for (int i = 3; i <= 2 * n - 1; ++i) new_sp.insert({comp, i});
  plan.comp_sp[c] = std::move(new_sp);
  plan.delete_sigma.insert(*marker_pos);
}

bool matches_case15(const SphericalSystem& f) {
  if (f.rs != RootSystem({{Kind::G, 2}})) return false;
  if (!f.sp.empty() || !f.acolors.empty()) return false;
  return f.sigma.size() == 1 &&
         f.sigma[0] == Weight::simple_root({1, 1}).plus(Weight::simple_root({1, 2}));
}

bool matches_9b(const SphericalSystem& f) {
  if (f.rs.num_components() != 1) return false;
  const auto& comp = f.rs.component(1);
  if (comp.kind != Kind::B || !f.acolors.empty() || f.sigma.size() != 1) return false;
  std::map<SimpleRootId, Rat> coeffs;
  for (int i = 1; i <= comp.rank; ++i) coeffs[{1, i}] = Rat(1);
  if (f.sigma[0] != Weight(std::move(coeffs))) return false;
  std::set<SimpleRootId> expected;
  for (int i = 2; i <= comp.rank - 1; ++i) expected.insert({1, i});
  return f.sp == expected;
}

bool matches_b4_rank2(const SphericalSystem& f) {
  if (f.rs != RootSystem({{Kind::B, 4}})) return false;
  if (!f.acolors.empty() || f.sigma.size() != 2) return false;
  if (f.sp != std::set<SimpleRootId>{{1, 2}, {1, 3}}) return false;
  Weight g1({{{1, 2}, Rat(1)}, {{1, 3}, Rat(2)}, {{1, 4}, Rat(3)}});
  Weight g2({{{1, 1}, Rat(1)}, {{1, 2}, Rat(1)}, {{1, 3}, Rat(1)}, {{1, 4}, Rat(1)}});
  // Sigma order is presentation, match as a set.
  return (f.sigma[0] == g1 && f.sigma[1] == g2) || (f.sigma[0] == g2 && f.sigma[1] == g1);
}

// The three exceptional complete homogeneous spaces; returns the rewrite
// for the factor's single component, if any.
struct Rank0Match {
  std::string detail;
  SimpleComponent new_component;
  int sp_from, sp_to;  // new S^p = {beta_i : sp_from <= i <= sp_to}
};

std::optional<Rank0Match> match_rank0(const SphericalSystem& f) {
  if (f.rs.num_components() != 1) return std::nullopt;
  const auto& comp = f.rs.component(1);
  auto sp_is = [&](int from, int to) {
    std::set<SimpleRootId> expected;
    for (int i = from; i <= to; ++i) expected.insert({1, i});
    return f.sp == expected;
  };
  if (comp.kind == Kind::C && sp_is(2, comp.rank)) {
    return Rank0Match{"1_rk0", {Kind::A, 2 * comp.rank - 1}, 2, 2 * comp.rank - 1};
  }
  if (comp.kind == Kind::B && sp_is(1, comp.rank - 1)) {
    return Rank0Match{"2_rk0", {Kind::D, comp.rank + 1}, 1, comp.rank};
  }
  if (comp.kind == Kind::G && f.sp == std::set<SimpleRootId>{{1, 2}}) {
    return Rank0Match{"3_rk0", {Kind::B, 3}, 2, 3};
  }
  return std::nullopt;
}

}  // namespace

std::set<std::size_t> psp_criterion(const SphericalSystem& sys) {
  require_valid(sys);
  std::set<std::size_t> out;
  for (int c = 1; c <= sys.rs.num_components(); ++c) {
    const auto& comp = sys.rs.component(c);
    if (comp.kind != Kind::C) continue;
    if (sys.sp.count({c, 1})) continue;
    if (sigma_index_of(sys, c_type_marker_root(c, comp.rank))) {
      out.insert(static_cast<std::size_t>(c - 1));
    }
  }
  return out;
}

SphericalSystem psp_to_psl_transform(const SphericalSystem& sys,
                                     const std::set<std::size_t>& comps) {
  const auto criterion = psp_criterion(sys);
  for (auto c : comps) {
    if (!criterion.count(c)) {
      throw NotClassified("component " + std::to_string(c + 1) +
                          " does not satisfy the marker-root criterion");
    }
  }
  RewritePlan plan;
  for (auto c : comps) plan_psp_component(sys, c, plan);
  return apply_plan(sys, plan);
}

AutReport aut_group(const SphericalSystem& sys) {
  require_valid(sys);
  if (!sys.adjoint_faithful) {
    throw NotAdjoint("the decision procedure needs a faithful adjoint action");
  }

  const auto d = decompose(sys);
  AutReport report;
  report.boundary_under_aut = fixed_divisors(sys);
  report.homogeneous_under_aut = report.boundary_under_aut.empty();

  RewritePlan plan;
  std::set<std::size_t> unknown_components;

  for (const auto& factor : d.factors) {
    const auto& f = factor.system;
    std::vector<std::size_t> global_comps(factor.components.begin(), factor.components.end());
    std::vector<std::size_t> global_sigma(factor.sigma_indices.begin(),
                                          factor.sigma_indices.end());
    FactorVerdict verdict;

    if (f.sigma.empty()) {
      if (auto m = match_rank0(f)) {
        verdict.kind = VerdictKind::Rank0Exceptional;
        verdict.detail = m->detail;
        const std::size_t c = global_comps[0];
        plan.comp_replace[c] = m->new_component;
        std::set<SimpleRootId> sp;
        for (int i = m->sp_from; i <= m->sp_to; ++i) {
          sp.insert({static_cast<int>(c) + 1, i});
        }
        plan.comp_sp[c] = std::move(sp);
      }
    } else if (auto local_psp = psp_criterion(f); !local_psp.empty()) {
      verdict.kind = VerdictKind::PSpToPSL;
      for (auto local : local_psp) {
        verdict.replaced_components.insert(global_comps[local]);
      }
      for (auto c : verdict.replaced_components) plan_psp_component(sys, c, plan);
    } else if (f.sigma.size() == 2 && is_cuspidal(f) && matches_b4_rank2(f)) {
      verdict.kind = VerdictKind::Rank2B4;
      verdict.detail = "4_rk2";
      const std::size_t c = global_comps[0];
      const int comp = static_cast<int>(c) + 1;
      plan.comp_replace[c] = SimpleComponent{Kind::D, 5};
      plan.comp_sp[c] = {{comp, 2}, {comp, 3}, {comp, 4}};
      plan.replace_sigma[global_sigma[0]] = Weight({{{comp, 2}, Rat(1)},
                                                    {{comp, 3}, Rat(2)},
                                                    {{comp, 4}, Rat(1)},
                                                    {{comp, 5}, Rat(2)}});
      plan.delete_sigma.insert(global_sigma[1]);
    } else if (f.sigma.size() == 1 && is_cuspidal(f) && !matches_case15(f)) {
      if (matches_9b(f)) {
        verdict.kind = VerdictKind::Rank1KnownFixture;
        verdict.detail = "9B";
        const std::size_t c = global_comps[0];
        const int comp = static_cast<int>(c) + 1;
        const int n = f.rs.component(1).rank;
        plan.comp_replace[c] = SimpleComponent{Kind::D, n + 1};
        std::set<SimpleRootId> sp;
        for (int i = 2; i <= n; ++i) sp.insert({comp, i});
        plan.comp_sp[c] = std::move(sp);
        plan.delete_sigma.insert(global_sigma[0]);
      } else {
        verdict.kind = VerdictKind::Rank1UnspecifiedHomogeneous;
        unknown_components.insert(factor.components.begin(), factor.components.end());
      }
    }

    report.verdicts.push_back(std::move(verdict));
  }

  report.equals_g = std::all_of(report.verdicts.begin(), report.verdicts.end(),
                                [](const FactorVerdict& v) {
                                  return v.kind == VerdictKind::Unchanged;
                                });

  for (std::size_t c = 0; c < static_cast<std::size_t>(sys.rs.num_components()); ++c) {
    if (unknown_components.count(c)) {
      report.new_group_description.push_back("?");
    } else if (auto it = plan.comp_replace.find(c); it != plan.comp_replace.end()) {
      report.new_group_description.push_back(std::string(1, kind_letter(it->second.kind)) +
                                             std::to_string(it->second.rank));
    } else {
      report.new_group_description.push_back(sys.rs.descriptor(static_cast<int>(c) + 1));
    }
  }

  if (unknown_components.empty()) {
    report.new_system = apply_plan(sys, plan);
  }
  return report;
}

Main2Result main2_criterion(const SphericalSystem& sys) {
  require_valid(sys);
  if (!decompose(sys).trivial) {
    throw NotIndecomposable("the criterion applies to indecomposable systems");
  }
  if (sys.sigma.size() < 2) {
    throw RankTooSmall("the criterion applies to systems of rank >= 2");
  }
  for (const auto& label : positive_colors(sys)) {
    const auto q = quotient_by(sys, {label});
    for (const auto& factor : decompose(q.system).factors) {
      if (factor.system.sigma.size() == 1 && fixed_divisors(factor.system).empty()) {
        return {true, label};
      }
    }
  }
  return {false, std::nullopt};
}

}  // namespace wv
