#include "wv/quotient.hpp"

#include <algorithm>
#include <map>

#include "wv/errors.hpp"

namespace wv {

std::set<std::string> positive_colors(const SphericalSystem& sys) {
  const auto colors = compute_colors(sys);
  std::set<std::string> out;
  for (const auto& c : colors.colors) {
    bool positive = true;
    for (const auto& v : c.row) {
      if (v < Rat(0)) positive = false;
    }
    if (positive) out.insert(c.label);
  }
  return out;
}

QuotientResult quotient_by(const SphericalSystem& sys, const std::set<std::string>& labels) {
  const auto colors = compute_colors(sys);
  const auto positives = positive_colors(sys);

  std::vector<const Color*> chosen;
  for (const auto& label : labels) {
    const Color* c = colors.find(label);
    if (!c) throw NotPositive("no color labelled '" + label + "'");
    if (!positives.count(label)) {
      throw NotPositive("color '" + label + "' is negative on some spherical root");
    }
    chosen.push_back(c);
  }

  std::set<std::size_t> removed_sigma;
  for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
    for (const auto* c : chosen) {
      if (c->row[i] > Rat(0)) {
        removed_sigma.insert(i);
        break;
      }
    }
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
    if (!removed_sigma.count(i)) kept.push_back(i);
  }

  std::vector<const Color*> survivors;
  for (const auto& c : colors.colors) {
    if (!labels.count(c.label)) survivors.push_back(&c);
  }

  // S^p of the quotient: simple roots moving no surviving color.
  std::set<SimpleRootId> moved;
  for (const auto* c : survivors) moved.insert(c->moved_by.begin(), c->moved_by.end());

  SphericalSystem next{sys.rs, {}, {}, {}, sys.adjoint_faithful};
  for (const auto& id : sys.rs.all_roots()) {
    if (!moved.count(id)) next.sp.insert(id);
  }
  for (auto i : kept) next.sigma.push_back(sys.sigma[i]);

  // Surviving A-colors still moved by a simple root of the new Sigma.
  const auto kept_simple = simple_sigma_roots(next);
  for (const auto& d : sys.acolors) {
    if (labels.count("a:" + d.label)) continue;
    std::set<SimpleRootId> still;
    for (const auto& id : d.moved_by) {
      if (kept_simple.count(id)) still.insert(id);
    }
    if (still.empty()) continue;
    AColor nd{d.label, std::move(still), {}};
    for (auto i : kept) nd.row.push_back(d.row[i]);
    next.acolors.push_back(std::move(nd));
  }

  // Consistency: reconstructing the colors of the quotient system must
  // reproduce the surviving functionals and moved-by sets exactly.
  require_valid(next);
  auto reconstructed = compute_colors(next);
  std::multiset<std::string> left, right;
  auto fingerprint = [&](const std::set<SimpleRootId>& moved_by, const std::vector<Rat>& row) {
    std::string s;
    for (const auto& id : moved_by) {
      s += std::to_string(id.component) + "." + std::to_string(id.index) + ",";
    }
    s += "|";
    for (const auto& v : row) s += to_string(v) + ",";
    return s;
  };
  for (const auto* c : survivors) {
    std::vector<Rat> restricted;
    for (auto i : kept) restricted.push_back(c->row[i]);
    left.insert(fingerprint(c->moved_by, restricted));
  }
  for (const auto& c : reconstructed.colors) {
    right.insert(fingerprint(c.moved_by, c.row));
  }
  if (left != right) {
    throw InconsistentQuotient(
        "surviving colors do not match the reconstruction on the quotient system");
  }

  return QuotientResult{std::move(next), std::move(removed_sigma), labels};
}

}  // namespace wv
