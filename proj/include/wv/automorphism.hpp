#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wv/decomposition.hpp"
#include "wv/spherical_system.hpp"

namespace wv {

enum class VerdictKind {
  Unchanged,
  Rank0Exceptional,
  PSpToPSL,
  Rank2B4,
  Rank1KnownFixture,
  Rank1UnspecifiedHomogeneous,
};

std::string verdict_kind_name(VerdictKind k);

// Per-factor outcome; `detail` names the matched case where one exists,
// `replaced_components` holds 0-based input component indices for the
// PSp -> PSL rewrite.
struct FactorVerdict {
  VerdictKind kind = VerdictKind::Unchanged;
  std::string detail;
  std::set<std::size_t> replaced_components;

  bool operator==(const FactorVerdict&) const = default;
};

struct AutReport {
  bool equals_g = true;
  std::vector<FactorVerdict> verdicts;  // in decomposition order
  std::optional<SphericalSystem> new_system;
  std::vector<std::string> new_group_description;  // one entry per component, "?" if unknown
  std::set<std::size_t> boundary_under_aut;        // 0-based input Sigma indices
  bool homogeneous_under_aut = false;
};

// 0-based indices of C-type components whose long dominant short root
// alpha_1 + 2 alpha_2 + ... + 2 alpha_{n-1} + alpha_n lies in Sigma while
// alpha_1 is outside S^p.
std::set<std::size_t> psp_criterion(const SphericalSystem& sys);

// Rewrites each selected C_n component into A_{2n-1}: the distinguished
// spherical root disappears, alpha_1 transports to beta_1, functional
// rows drop the deleted columns, and S^p on the rewritten component
// becomes {beta_3 .. beta_{2n-1}}. Inputs outside the classified shape
// raise NotClassified.
SphericalSystem psp_to_psl_transform(const SphericalSystem& sys,
                                     const std::set<std::size_t>& comps);

// Decides the connected automorphism group and, where determined, the
// spherical system of the variety under it.
AutReport aut_group(const SphericalSystem& sys);

struct Main2Result {
  bool exceeds = false;
  std::optional<std::string> witness;
};

// Independent route: some positive color quotient has a rank 1 factor
// with no fixed divisor. Requires an indecomposable system of rank >= 2.
Main2Result main2_criterion(const SphericalSystem& sys);

}  // namespace wv
