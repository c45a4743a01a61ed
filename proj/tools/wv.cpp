// Command line front end: every pipeline stage as a subcommand, with
// human-readable output by default and a machine format that feeds back
// into the toolchain.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wv/automorphism.hpp"
#include "wv/colors.hpp"
#include "wv/decomposition.hpp"
#include "wv/errors.hpp"
#include "wv/io.hpp"
#include "wv/quotient.hpp"

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw wv::ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

wv::Fixture load_fixture(const std::string& path) {
  wv::Fixture f = wv::parse_fixture(read_input(path));
  if (f.name.empty()) f.name = fs::path(path).stem().string();
  return f;
}

std::string weight_to_text(const wv::Weight& w) {
  if (w.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [id, value] : w.coefficients()) {
    if (!first) out += " + ";
    if (value != wv::Rat(1)) out += wv::to_string(value) + " ";
    out += wv::root_display_name(id);
    first = false;
  }
  return out;
}

std::string roots_to_text(const std::set<wv::SimpleRootId>& ids) {
  std::string out = "{";
  bool first = true;
  for (const auto& id : ids) {
    if (!first) out += ", ";
    out += wv::root_display_name(id);
    first = false;
  }
  return out + "}";
}

std::string group_to_text(const wv::RootSystem& rs) {
  std::string out;
  for (int c = 1; c <= rs.num_components(); ++c) {
    if (c > 1) out += " x ";
    out += rs.descriptor(c);
  }
  return out;
}

void print_system_human(std::ostream& os, const wv::SphericalSystem& sys,
                        const std::string& indent) {
  os << indent << "group: " << group_to_text(sys.rs) << "\n";
  os << indent << "S^p:   " << roots_to_text(sys.sp) << "\n";
  for (std::size_t i = 0; i < sys.sigma.size(); ++i) {
    os << indent << "gamma_" << i + 1 << " = " << weight_to_text(sys.sigma[i]) << "\n";
  }
  for (const auto& d : sys.acolors) {
    os << indent << "A-color " << d.label << " moved by " << roots_to_text(d.moved_by)
       << " row (";
    for (std::size_t i = 0; i < d.row.size(); ++i) {
      if (i) os << ", ";
      os << d.row[i];
    }
    os << ")\n";
  }
  if (!sys.adjoint_faithful) {
    os << indent << "adjoint_faithful: false\n";
  }
}

ordered_json indices_1based(const std::set<std::size_t>& s) {
  ordered_json out = ordered_json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

// ---------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------

int run_validate(const wv::Fixture& f, bool machine) {
  auto violations = wv::validate(f.system);
  if (machine) {
    ordered_json doc;
    doc["valid"] = violations.empty();
    doc["violations"] = ordered_json::array();
    for (const auto& v : violations) {
      doc["violations"].push_back({{"code", v.code}, {"message", v.message}});
    }
    std::cout << doc.dump(2) << "\n";
  } else if (violations.empty()) {
    std::cout << "clean\n";
  } else {
    for (const auto& v : violations) {
      std::cout << v.code << ": " << v.message << "\n";
    }
  }
  return violations.empty() ? 0 : 3;
}

int run_colors(const wv::Fixture& f, bool machine) {
  auto colors = wv::compute_colors(f.system);
  if (machine) {
    ordered_json doc;
    doc["colors"] = ordered_json::array();
    for (const auto& c : colors.colors) {
      ordered_json entry;
      entry["label"] = c.label;
      entry["kind"] = wv::color_kind_name(c.kind);
      entry["moved_by"] = ordered_json::array();
      for (const auto& id : c.moved_by) entry["moved_by"].push_back(wv::root_token(id));
      entry["row"] = ordered_json::array();
      for (const auto& v : c.row) entry["row"].push_back(wv::to_string(v));
      doc["colors"].push_back(std::move(entry));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& c : colors.colors) {
      std::cout << c.label << "  kind=" << wv::color_kind_name(c.kind) << "  moved_by="
                << roots_to_text(c.moved_by) << "  row=(";
      for (std::size_t i = 0; i < c.row.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << wv::to_string(c.row[i]);
      }
      std::cout << ")\n";
    }
  }
  return 0;
}

int run_fixed(const wv::Fixture& f, bool machine) {
  auto fixed = wv::fixed_divisors(f.system);
  if (machine) {
    ordered_json doc;
    doc["rank"] = f.system.sigma.size();
    doc["fixed"] = indices_1based(fixed);
    std::cout << doc.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < f.system.sigma.size(); ++i) {
      std::cout << "gamma_" << i + 1 << ": " << (fixed.count(i) ? "fixed" : "non-fixed")
                << "\n";
    }
    if (f.system.sigma.empty()) std::cout << "rank 0, no boundary divisors\n";
  }
  return 0;
}

int run_decompose(const wv::Fixture& f, bool machine) {
  auto d = wv::decompose(f.system);
  ordered_json doc;
  doc["trivial"] = d.trivial;
  doc["factors"] = ordered_json::array();
  for (const auto& factor : d.factors) {
    ordered_json entry;
    entry["components"] = indices_1based(factor.components);
    entry["sigma"] = indices_1based(factor.sigma_indices);
    entry["cuspidal"] = wv::is_cuspidal(factor.system);
    entry["rank0"] = factor.system.sigma.empty();
    entry["system"] = wv::system_to_json(factor.system);
    if (!wv::supp_sigma(factor.system).empty() || !factor.system.sp.empty()) {
      auto core = wv::cuspidal_core(factor.system);
      ordered_json cj;
      cj["system"] = wv::system_to_json(core.core);
      cj["stripped"] = ordered_json::array();
      for (const auto& id : core.stripped) cj["stripped"].push_back(wv::root_token(id));
      cj["embedding"] = ordered_json::object();
      for (const auto& [from, to] : core.embedding) {
        cj["embedding"][wv::root_token(from)] = wv::root_token(to);
      }
      entry["core"] = std::move(cj);
    } else {
      entry["core"] = nullptr;  // trivial Levi, nothing to restrict to
    }
    doc["factors"].push_back(std::move(entry));
  }
  if (machine) {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << (d.trivial ? "indecomposable" : "product of " +
                                                   std::to_string(d.factors.size()) +
                                                   " factors")
            << "\n";
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const auto& factor = d.factors[i];
    std::cout << "factor " << i + 1 << ": components " << doc["factors"][i]["components"].dump()
              << " sigma " << doc["factors"][i]["sigma"].dump()
              << (doc["factors"][i]["cuspidal"].get<bool>() ? " cuspidal" : " non-cuspidal")
              << "\n";
    print_system_human(std::cout, factor.system, "  ");
    if (!doc["factors"][i]["core"].is_null()) {
      auto core = wv::cuspidal_core(factor.system);
      if (!core.stripped.empty()) {
        std::cout << "  cuspidal core (stripped " << roots_to_text(core.stripped) << "):\n";
        print_system_human(std::cout, core.core, "    ");
      }
    }
  }
  return 0;
}

int run_quotient(const wv::Fixture& f, const std::vector<std::string>& labels, bool machine) {
  std::set<std::string> chosen(labels.begin(), labels.end());
  auto q = wv::quotient_by(f.system, chosen);
  std::ostringstream report;
  report << "removed spherical roots:";
  for (auto i : q.removed_sigma) report << " gamma_" << i + 1;
  if (q.removed_sigma.empty()) report << " none";
  report << "\nremoved colors:";
  for (const auto& l : q.removed_colors) report << " " << l;
  if (q.removed_colors.empty()) report << " none";
  report << "\n";
  if (machine) {
    std::cerr << report.str();
    std::cout << wv::serialize_system(q.system);
  } else {
    std::cout << report.str() << "quotient system:\n";
    print_system_human(std::cout, q.system, "  ");
  }
  return 0;
}

int run_localize(const wv::Fixture& f, const std::vector<int>& keep, bool machine) {
  std::set<std::size_t> kept;
  for (int i : keep) {
    if (i < 1) throw wv::InvalidIndex("spherical root indices are 1-based");
    kept.insert(static_cast<std::size_t>(i - 1));
  }
  auto sub = wv::localize(f.system, kept);
  if (machine) {
    std::cout << wv::serialize_system(sub);
  } else {
    print_system_human(std::cout, sub, "");
  }
  return 0;
}

int run_aut(const wv::Fixture& f, bool machine) {
  auto report = wv::aut_group(f.system);
  if (machine) {
    ordered_json doc;
    doc["equals_g"] = report.equals_g;
    doc["homogeneous_under_aut"] = report.homogeneous_under_aut;
    doc["boundary_under_aut"] = indices_1based(report.boundary_under_aut);
    doc["verdicts"] = ordered_json::array();
    for (const auto& v : report.verdicts) {
      ordered_json entry;
      entry["kind"] = wv::verdict_kind_name(v.kind);
      entry["detail"] = v.detail;
      entry["replaced_components"] = indices_1based(v.replaced_components);
      doc["verdicts"].push_back(std::move(entry));
    }
    doc["new_group"] = report.new_group_description;
    if (report.new_system) {
      doc["new_system"] = wv::system_to_json(*report.new_system);
    } else {
      doc["new_system"] = nullptr;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "verdict: Aut0(X) " << (report.equals_g ? "=" : ">") << " G\n";
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    const auto& v = report.verdicts[i];
    std::cout << "factor " << i + 1 << ": " << wv::verdict_kind_name(v.kind);
    if (!v.detail.empty()) std::cout << " [" << v.detail << "]";
    if (!v.replaced_components.empty()) {
      std::cout << " components" << indices_1based(v.replaced_components).dump();
    }
    std::cout << "\n";
  }
  std::cout << "new group: ";
  for (std::size_t i = 0; i < report.new_group_description.size(); ++i) {
    if (i) std::cout << " x ";
    std::cout << report.new_group_description[i];
  }
  std::cout << "\n";
  std::cout << "boundary under Aut0:";
  for (auto i : report.boundary_under_aut) std::cout << " gamma_" << i + 1;
  if (report.boundary_under_aut.empty()) std::cout << " (empty)";
  std::cout << "\n";
  std::cout << "homogeneous under Aut0: " << (report.homogeneous_under_aut ? "yes" : "no")
            << "\n";
  if (report.new_system && !report.equals_g) {
    std::cout << "system under Aut0:\n";
    print_system_human(std::cout, *report.new_system, "  ");
  }
  return 0;
}

int run_main2(const wv::Fixture& f, bool machine) {
  auto result = wv::main2_criterion(f.system);
  if (machine) {
    ordered_json doc;
    doc["automorphisms_exceed_g"] = result.exceeds;
    if (result.witness) {
      doc["witness"] = *result.witness;
    } else {
      doc["witness"] = nullptr;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "Aut0(X) > G: " << (result.exceeds ? "yes" : "no");
    if (result.witness) std::cout << "  (witness " << *result.witness << ")";
    std::cout << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------
// selftest: run the expected checks stored in a fixture directory
// ---------------------------------------------------------------------

struct CheckOutcome {
  std::string check;
  bool pass;
  std::string message;
};

ordered_json json_of_string_list(const std::vector<std::string>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

std::vector<CheckOutcome> run_expected_checks(const wv::Fixture& f) {
  std::vector<CheckOutcome> out;
  if (f.expected.is_null()) return out;

  std::optional<wv::AutReport> aut;
  std::string aut_error;
  auto get_aut = [&]() -> const std::optional<wv::AutReport>& {
    if (!aut && aut_error.empty()) {
      try {
        aut = wv::aut_group(f.system);
      } catch (const wv::Error& e) {
        aut_error = e.name();
      }
    }
    return aut;
  };

  for (const auto& [check, expected] : f.expected.items()) {
    ordered_json actual;
    try {
      if (check == "validate_clean") {
        actual = wv::validate(f.system).empty();
      } else if (check == "violations") {
        std::set<std::string> codes;
        for (const auto& v : wv::validate(f.system)) codes.insert(v.code);
        actual = ordered_json(codes);
      } else if (check == "rank") {
        actual = wv::rank(f.system);
      } else if (check == "cuspidal") {
        actual = wv::is_cuspidal(f.system);
      } else if (check == "indecomposable") {
        actual = wv::decompose(f.system).trivial;
      } else if (check == "num_factors") {
        actual = wv::decompose(f.system).factors.size();
      } else if (check == "rank0_factors") {
        actual = indices_1based(wv::rank0_factors(wv::decompose(f.system)));
      } else if (check == "fixed_divisors" || check == "boundary_under_aut") {
        actual = indices_1based(wv::fixed_divisors(f.system));
      } else if (check == "color_labels") {
        std::vector<std::string> labels;
        for (const auto& c : wv::compute_colors(f.system).colors) labels.push_back(c.label);
        actual = json_of_string_list(labels);
      } else if (check == "positive_colors") {
        actual = ordered_json(wv::positive_colors(f.system));
      } else if (check == "psp_components") {
        actual = indices_1based(wv::psp_criterion(f.system));
      } else if (check == "equals_g") {
        if (get_aut()) actual = aut->equals_g;
        else actual = "error:" + aut_error;
      } else if (check == "homogeneous_under_aut") {
        if (get_aut()) actual = aut->homogeneous_under_aut;
        else actual = "error:" + aut_error;
      } else if (check == "verdicts") {
        if (get_aut()) {
          std::vector<std::string> names;
          for (const auto& v : aut->verdicts) names.push_back(wv::verdict_kind_name(v.kind));
          actual = json_of_string_list(names);
        } else {
          actual = "error:" + aut_error;
        }
      } else if (check == "new_group") {
        if (get_aut()) actual = json_of_string_list(aut->new_group_description);
        else actual = "error:" + aut_error;
      } else if (check == "new_system") {
        if (get_aut()) {
          actual = aut->new_system ? wv::system_to_json(*aut->new_system)
                                   : ordered_json(nullptr);
        } else {
          actual = "error:" + aut_error;
        }
      } else if (check == "aut_error") {
        get_aut();
        actual = aut_error.empty() ? ordered_json(nullptr) : ordered_json(aut_error);
      } else if (check == "main2") {
        actual = wv::main2_criterion(f.system).exceeds;
      } else if (check == "main2_witness") {
        auto r = wv::main2_criterion(f.system);
        actual = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
      } else {
        out.push_back({check, false, "unknown check name"});
        continue;
      }
    } catch (const wv::Error& e) {
      out.push_back({check, false, std::string("error ") + e.name() + ": " + e.what()});
      continue;
    }
    bool pass = actual == expected;
    out.push_back({check, pass,
                   pass ? "" : "expected " + expected.dump() + ", got " + actual.dump()});
  }
  return out;
}

int run_selftest(const std::string& dir, bool machine) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".wv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw wv::ParseError("no .wv fixtures in '" + dir + "'");

  ordered_json doc;
  doc["fixtures"] = ordered_json::array();
  std::size_t checks = 0, failures = 0;
  for (const auto& path : files) {
    wv::Fixture f = load_fixture(path.string());
    auto outcomes = run_expected_checks(f);
    ordered_json entry;
    entry["name"] = f.name;
    entry["checks"] = ordered_json::array();
    for (const auto& o : outcomes) {
      ++checks;
      if (!o.pass) ++failures;
      entry["checks"].push_back({{"check", o.check}, {"pass", o.pass}, {"message", o.message}});
      if (!machine) {
        if (o.pass) {
          std::cout << "ok   " << f.name << " :: " << o.check << "\n";
        } else {
          std::cout << "FAIL " << f.name << " :: " << o.check << " :: " << o.message << "\n";
        }
      }
    }
    doc["fixtures"].push_back(std::move(entry));
  }
  doc["checks"] = checks;
  doc["failures"] = failures;
  doc["pass"] = failures == 0;
  if (machine) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << checks << " checks over " << files.size() << " fixtures, " << failures
              << " failures\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of wonderful varieties: Luna spherical systems, colors, "
               "quotients and connected automorphism groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "machine"}));

  std::string file;
  std::vector<std::string> color_labels;
  std::vector<int> keep_indices;
  std::string dir;

  auto* c_validate = app.add_subcommand("validate", "check the structural conditions");
  c_validate->add_option("FILE", file)->required();
  auto* c_colors = app.add_subcommand("colors", "reconstruct the full color set");
  c_colors->add_option("FILE", file)->required();
  auto* c_fixed = app.add_subcommand("fixed", "fixed boundary divisors");
  c_fixed->add_option("FILE", file)->required();
  auto* c_decompose = app.add_subcommand("decompose", "product decomposition and cores");
  c_decompose->add_option("FILE", file)->required();
  auto* c_quotient = app.add_subcommand("quotient", "quotient by positive colors");
  c_quotient->add_option("FILE", file)->required();
  c_quotient->add_option("--colors", color_labels, "color labels")
      ->required()
      ->delimiter(',');
  auto* c_localize = app.add_subcommand("localize", "restrict to chosen spherical roots");
  c_localize->add_option("FILE", file)->required();
  c_localize->add_option("--keep", keep_indices, "1-based spherical root indices")
      ->required()
      ->delimiter(',');
  auto* c_aut = app.add_subcommand("aut", "connected automorphism group");
  c_aut->add_option("FILE", file)->required();
  auto* c_main2 = app.add_subcommand("check-main2", "positive-color route to Aut0(X) != G");
  c_main2->add_option("FILE", file)->required();
  auto* c_selftest = app.add_subcommand("selftest", "run all expected checks in a directory");
  c_selftest->add_option("DIR", dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  const bool machine = format == "machine";
  try {
    if (app.got_subcommand(c_selftest)) return run_selftest(dir, machine);
    wv::Fixture f = load_fixture(file);
    if (app.got_subcommand(c_validate)) return run_validate(f, machine);
    if (app.got_subcommand(c_colors)) return run_colors(f, machine);
    if (app.got_subcommand(c_fixed)) return run_fixed(f, machine);
    if (app.got_subcommand(c_decompose)) return run_decompose(f, machine);
    if (app.got_subcommand(c_quotient)) return run_quotient(f, color_labels, machine);
    if (app.got_subcommand(c_localize)) return run_localize(f, keep_indices, machine);
    if (app.got_subcommand(c_aut)) return run_aut(f, machine);
    if (app.got_subcommand(c_main2)) return run_main2(f, machine);
  } catch (const wv::Error& e) {
    std::cerr << "error (" << e.name() << "): " << e.what() << "\n";
    return e.code();
  }
  return 1;
}
