#pragma once

#include <string>

#include <json.hpp>

#include "wv/spherical_system.hpp"

namespace wv {

// One stored system, optionally with a name and a block of expected
// check values consumed by the selftest subcommand.
struct Fixture {
  std::string name;
  SphericalSystem system;
  nlohmann::ordered_json expected;  // null when absent
};

// "1.2" <-> {component 1, index 2}
std::string root_token(SimpleRootId id);
SimpleRootId parse_root_token(const std::string& token);

SphericalSystem parse_system(const std::string& text);
Fixture parse_fixture(const std::string& text);

// Canonical serialization: fixed field order, root tokens in root order,
// Sigma order preserved. parse(serialize(x)) == x.
std::string serialize_system(const SphericalSystem& sys);
std::string serialize_fixture(const Fixture& f);

nlohmann::ordered_json system_to_json(const SphericalSystem& sys);
SphericalSystem system_from_json(const nlohmann::ordered_json& doc);

}  // namespace wv
