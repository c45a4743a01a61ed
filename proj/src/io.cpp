#include "wv/io.hpp"

#include <charconv>
#include <set>

#include "wv/errors.hpp"

namespace wv {

using nlohmann::ordered_json;

std::string root_token(SimpleRootId id) {
  return std::to_string(id.component) + "." + std::to_string(id.index);
}

SimpleRootId parse_root_token(const std::string& token) {
  auto dot = token.find('.');
  if (dot == std::string::npos) {
    throw ParseError("root id '" + token + "' is not of the form <component>.<index>");
  }
  auto parse_part = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || value < 1) {
      throw ParseError("bad root id '" + token + "'");
    }
    return value;
  };
  std::string_view sv = token;
  return {parse_part(sv.substr(0, dot)), parse_part(sv.substr(dot + 1))};
}

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw ParseError(what);
}

void check_known_fields(const ordered_json& doc, bool allow_fixture_fields) {
  static const std::set<std::string> system_fields = {"group", "sp", "sigma", "A",
                                                      "adjoint_faithful"};
  for (const auto& [key, value] : doc.items()) {
    if (system_fields.count(key)) continue;
    if (allow_fixture_fields && (key == "name" || key == "expected")) continue;
    reject("unknown field '" + key + "'");
  }
}

Rat parse_coefficient(const std::string& text) {
  Rat value = parse_rational(text);
  if (value.denominator() != 1 && value.denominator() != 2) {
    reject("coefficient '" + text + "' has denominator outside {1, 2}");
  }
  if (value == Rat(0)) reject("explicit zero coefficient");
  return value;
}

SphericalSystem system_from_checked_json_inner(const ordered_json& doc) {
  if (!doc.is_object()) reject("top-level document must be an object");
  if (!doc.contains("group")) reject("missing field 'group'");

  std::vector<SimpleComponent> comps;
  for (const auto& item : doc.at("group")) {
    if (!item.is_object() || !item.contains("kind") || !item.contains("rank")) {
      reject("each group component needs 'kind' and 'rank'");
    }
    for (const auto& [key, value] : item.items()) {
      if (key != "kind" && key != "rank") reject("unknown component field '" + key + "'");
    }
    const std::string kind = item.at("kind").get<std::string>();
    if (kind.size() != 1) reject("component kind must be a single letter");
    comps.push_back({kind_from_letter(kind[0]), item.at("rank").get<int>()});
  }
  if (comps.empty()) reject("empty group");

  SphericalSystem sys{RootSystem(std::move(comps)), {}, {}, {}, true};
  if (doc.contains("sp")) {
    for (const auto& item : doc.at("sp")) {
      SimpleRootId id = parse_root_token(item.get<std::string>());
      sys.rs.require(id);
      if (!sys.sp.insert(id).second) reject("duplicate root in sp");
    }
  }
  if (doc.contains("sigma")) {
    for (const auto& item : doc.at("sigma")) {
      if (!item.is_object() || item.empty()) reject("each spherical root must be a nonempty object");
      std::map<SimpleRootId, Rat> coeffs;
      for (const auto& [key, value] : item.items()) {
        SimpleRootId id = parse_root_token(key);
        sys.rs.require(id);
        coeffs[id] = parse_coefficient(value.get<std::string>());
      }
      sys.sigma.push_back(Weight(std::move(coeffs)));
    }
  }
  if (doc.contains("A")) {
    for (const auto& item : doc.at("A")) {
      if (!item.is_object()) reject("each A-color must be an object");
      for (const auto& [key, value] : item.items()) {
        if (key != "label" && key != "moved_by" && key != "row") {
          reject("unknown A-color field '" + key + "'");
        }
      }
      if (!item.contains("label") || !item.contains("moved_by") || !item.contains("row")) {
        reject("each A-color needs 'label', 'moved_by' and 'row'");
      }
      AColor d;
      d.label = item.at("label").get<std::string>();
      for (const auto& tok : item.at("moved_by")) {
        SimpleRootId id = parse_root_token(tok.get<std::string>());
        sys.rs.require(id);
        d.moved_by.insert(id);
      }
      for (const auto& v : item.at("row")) {
        if (!v.is_number_integer()) reject("A-color rows are integers");
        d.row.push_back(v.get<long long>());
      }
      sys.acolors.push_back(std::move(d));
    }
  }
  if (doc.contains("adjoint_faithful")) {
    sys.adjoint_faithful = doc.at("adjoint_faithful").get<bool>();
  }

  check_structure(sys);
  return sys;
}

// Semantic failures (bad ids, denominators, row lengths) surface as
// parse errors naming the violated structural invariant.
SphericalSystem system_from_checked_json(const ordered_json& doc) {
  try {
    return system_from_checked_json_inner(doc);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    reject(e.what());
  } catch (const nlohmann::json::exception& e) {
    reject(e.what());
  }
}

ordered_json parse_json_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // translate the byte offset into line / column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": " + e.what());
  }
}

}  // namespace

SphericalSystem system_from_json(const ordered_json& doc) {
  check_known_fields(doc, false);
  return system_from_checked_json(doc);
}

SphericalSystem parse_system(const std::string& text) {
  return system_from_json(parse_json_text(text));
}

Fixture parse_fixture(const std::string& text) {
  ordered_json doc = parse_json_text(text);
  if (!doc.is_object()) reject("top-level document must be an object");
  check_known_fields(doc, true);
  Fixture f{"", system_from_checked_json(doc), nullptr};
  if (doc.contains("name")) f.name = doc.at("name").get<std::string>();
  if (doc.contains("expected")) f.expected = doc.at("expected");
  return f;
}

ordered_json system_to_json(const SphericalSystem& sys) {
  ordered_json doc = ordered_json::object();
  doc["group"] = ordered_json::array();
  for (const auto& comp : sys.rs.components()) {
    doc["group"].push_back({{"kind", std::string(1, kind_letter(comp.kind))},
                            {"rank", comp.rank}});
  }
  doc["sp"] = ordered_json::array();
  for (const auto& id : sys.sp) doc["sp"].push_back(root_token(id));
  doc["sigma"] = ordered_json::array();
  for (const auto& w : sys.sigma) {
    ordered_json entry = ordered_json::object();
    for (const auto& [id, value] : w.coefficients()) {
      entry[root_token(id)] = to_string(value);
    }
    doc["sigma"].push_back(std::move(entry));
  }
  doc["A"] = ordered_json::array();
  for (const auto& d : sys.acolors) {
    ordered_json entry = ordered_json::object();
    entry["label"] = d.label;
    entry["moved_by"] = ordered_json::array();
    for (const auto& id : d.moved_by) entry["moved_by"].push_back(root_token(id));
    entry["row"] = d.row;
    doc["A"].push_back(std::move(entry));
  }
  doc["adjoint_faithful"] = sys.adjoint_faithful;
  return doc;
}

std::string serialize_system(const SphericalSystem& sys) {
  return system_to_json(sys).dump(2) + "\n";
}

std::string serialize_fixture(const Fixture& f) {
  ordered_json doc = ordered_json::object();
  if (!f.name.empty()) doc["name"] = f.name;
  ordered_json sys = system_to_json(f.system);
  for (auto& [key, value] : sys.items()) doc[key] = value;
  if (!f.expected.is_null()) doc["expected"] = f.expected;
  return doc.dump(2) + "\n";
}

}  // namespace wv
