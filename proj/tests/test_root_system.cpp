#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "wv/errors.hpp"
#include "wv/root_system.hpp"

using wv::Kind;
using wv::Rat;
using wv::RootSystem;
using wv::SimpleRootId;
using wv::Weight;

namespace {

Weight w(std::initializer_list<std::pair<SimpleRootId, Rat>> items) {
  std::map<SimpleRootId, Rat> coeffs;
  for (const auto& [id, value] : items) coeffs[id] = value;
  return Weight(std::move(coeffs));
}

RootSystem single(Kind k, int n) { return RootSystem({{k, n}}); }

}  // namespace

TEST_CASE("cartan pairings pinned by convention") {
  RootSystem c3 = single(Kind::C, 3);
  CHECK(cartan_pairing(c3, {1, 2}, {1, 3}) == -2);  // alpha_3 long
  CHECK(cartan_pairing(c3, {1, 3}, {1, 2}) == -1);

  RootSystem g2 = single(Kind::G, 2);
  CHECK(cartan_pairing(g2, {1, 1}, {1, 2}) == -3);  // alpha_1 short
  CHECK(cartan_pairing(g2, {1, 2}, {1, 1}) == -1);

  RootSystem a1c2({{Kind::A, 1}, {Kind::C, 2}});
  CHECK(cartan_pairing(a1c2, {1, 1}, {2, 1}) == 0);  // distinct components
}

TEST_CASE("cartan matrices match the Bourbaki tables") {
  // Hand-encoded: entry [i][j] is <alpha_{i+1}^vee, alpha_{j+1}>.
  const std::map<std::string, std::vector<std::vector<int>>> tables = {
      {"A1", {{2}}},
      {"A2", {{2,-1},{-1,2}}},
      {"A3", {{2,-1,0},{-1,2,-1},{0,-1,2}}},
      {"A4", {{2,-1,0,0},{-1,2,-1,0},{0,-1,2,-1},{0,0,-1,2}}},
      {"A5", {{2,-1,0,0,0},{-1,2,-1,0,0},{0,-1,2,-1,0},{0,0,-1,2,-1},{0,0,0,-1,2}}},
      {"A6", {{2,-1,0,0,0,0},{-1,2,-1,0,0,0},{0,-1,2,-1,0,0},{0,0,-1,2,-1,0},{0,0,0,-1,2,-1},{0,0,0,0,-1,2}}},
      {"A7", {{2,-1,0,0,0,0,0},{-1,2,-1,0,0,0,0},{0,-1,2,-1,0,0,0},{0,0,-1,2,-1,0,0},{0,0,0,-1,2,-1,0},{0,0,0,0,-1,2,-1},{0,0,0,0,0,-1,2}}},
      {"A8", {{2,-1,0,0,0,0,0,0},{-1,2,-1,0,0,0,0,0},{0,-1,2,-1,0,0,0,0},{0,0,-1,2,-1,0,0,0},{0,0,0,-1,2,-1,0,0},{0,0,0,0,-1,2,-1,0},{0,0,0,0,0,-1,2,-1},{0,0,0,0,0,0,-1,2}}},
      {"B2", {{2,-1},{-2,2}}},
      {"B3", {{2,-1,0},{-1,2,-1},{0,-2,2}}},
      {"B4", {{2,-1,0,0},{-1,2,-1,0},{0,-1,2,-1},{0,0,-2,2}}},
      {"B5", {{2,-1,0,0,0},{-1,2,-1,0,0},{0,-1,2,-1,0},{0,0,-1,2,-1},{0,0,0,-2,2}}},
      {"B6", {{2,-1,0,0,0,0},{-1,2,-1,0,0,0},{0,-1,2,-1,0,0},{0,0,-1,2,-1,0},{0,0,0,-1,2,-1},{0,0,0,0,-2,2}}},
      {"B7", {{2,-1,0,0,0,0,0},{-1,2,-1,0,0,0,0},{0,-1,2,-1,0,0,0},{0,0,-1,2,-1,0,0},{0,0,0,-1,2,-1,0},{0,0,0,0,-1,2,-1},{0,0,0,0,0,-2,2}}},
      {"B8", {{2,-1,0,0,0,0,0,0},{-1,2,-1,0,0,0,0,0},{0,-1,2,-1,0,0,0,0},{0,0,-1,2,-1,0,0,0},{0,0,0,-1,2,-1,0,0},{0,0,0,0,-1,2,-1,0},{0,0,0,0,0,-1,2,-1},{0,0,0,0,0,0,-2,2}}},
      {"C2", {{2,-2},{-1,2}}},
      {"C3", {{2,-1,0},{-1,2,-2},{0,-1,2}}},
      {"C4", {{2,-1,0,0},{-1,2,-1,0},{0,-1,2,-2},{0,0,-1,2}}},
      {"C5", {{2,-1,0,0,0},{-1,2,-1,0,0},{0,-1,2,-1,0},{0,0,-1,2,-2},{0,0,0,-1,2}}},
      {"C6", {{2,-1,0,0,0,0},{-1,2,-1,0,0,0},{0,-1,2,-1,0,0},{0,0,-1,2,-1,0},{0,0,0,-1,2,-2},{0,0,0,0,-1,2}}},
      {"C7", {{2,-1,0,0,0,0,0},{-1,2,-1,0,0,0,0},{0,-1,2,-1,0,0,0},{0,0,-1,2,-1,0,0},{0,0,0,-1,2,-1,0},{0,0,0,0,-1,2,-2},{0,0,0,0,0,-1,2}}},
      {"C8", {{2,-1,0,0,0,0,0,0},{-1,2,-1,0,0,0,0,0},{0,-1,2,-1,0,0,0,0},{0,0,-1,2,-1,0,0,0},{0,0,0,-1,2,-1,0,0},{0,0,0,0,-1,2,-1,0},{0,0,0,0,0,-1,2,-2},{0,0,0,0,0,0,-1,2}}},
      {"D3", {{2,-1,-1},{-1,2,0},{-1,0,2}}},
      {"D4", {{2,-1,0,0},{-1,2,-1,-1},{0,-1,2,0},{0,-1,0,2}}},
      {"D5", {{2,-1,0,0,0},{-1,2,-1,0,0},{0,-1,2,-1,-1},{0,0,-1,2,0},{0,0,-1,0,2}}},
      {"D6", {{2,-1,0,0,0,0},{-1,2,-1,0,0,0},{0,-1,2,-1,0,0},{0,0,-1,2,-1,-1},{0,0,0,-1,2,0},{0,0,0,-1,0,2}}},
      {"D7", {{2,-1,0,0,0,0,0},{-1,2,-1,0,0,0,0},{0,-1,2,-1,0,0,0},{0,0,-1,2,-1,0,0},{0,0,0,-1,2,-1,-1},{0,0,0,0,-1,2,0},{0,0,0,0,-1,0,2}}},
      {"D8", {{2,-1,0,0,0,0,0,0},{-1,2,-1,0,0,0,0,0},{0,-1,2,-1,0,0,0,0},{0,0,-1,2,-1,0,0,0},{0,0,0,-1,2,-1,0,0},{0,0,0,0,-1,2,-1,-1},{0,0,0,0,0,-1,2,0},{0,0,0,0,0,-1,0,2}}},
      {"E6", {{2,0,-1,0,0,0},{0,2,0,-1,0,0},{-1,0,2,-1,0,0},{0,-1,-1,2,-1,0},{0,0,0,-1,2,-1},{0,0,0,0,-1,2}}},
      {"E7", {{2,0,-1,0,0,0,0},{0,2,0,-1,0,0,0},{-1,0,2,-1,0,0,0},{0,-1,-1,2,-1,0,0},{0,0,0,-1,2,-1,0},{0,0,0,0,-1,2,-1},{0,0,0,0,0,-1,2}}},
      {"E8", {{2,0,-1,0,0,0,0,0},{0,2,0,-1,0,0,0,0},{-1,0,2,-1,0,0,0,0},{0,-1,-1,2,-1,0,0,0},{0,0,0,-1,2,-1,0,0},{0,0,0,0,-1,2,-1,0},{0,0,0,0,0,-1,2,-1},{0,0,0,0,0,0,-1,2}}},
      {"F4", {{2,-1,0,0},{-1,2,-1,0},{0,-2,2,-1},{0,0,-1,2}}},
      {"G2", {{2,-3},{-1,2}}},
  };
  for (const auto& [name, matrix] : tables) {
    CAPTURE(name);
    RootSystem rs = single(wv::kind_from_letter(name[0]), std::stoi(name.substr(1)));
    const int n = static_cast<int>(matrix.size());
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        CAPTURE(i);
        CAPTURE(j);
        CHECK(cartan_pairing(rs, {1, i}, {1, j}) == matrix[i - 1][j - 1]);
      }
    }
  }
}

TEST_CASE("zero pattern of off-diagonal pairings is symmetric") {
  std::vector<RootSystem> systems = {
      single(Kind::A, 5), single(Kind::B, 6),  single(Kind::C, 7),
      single(Kind::D, 6), single(Kind::E, 8),  single(Kind::F, 4),
      single(Kind::G, 2), RootSystem({{Kind::B, 3}, {Kind::G, 2}}),
  };
  for (const auto& rs : systems) {
    const auto roots = rs.all_roots();
    for (const auto& i : roots) {
      for (const auto& j : roots) {
        if (i == j) continue;
        CHECK((cartan_pairing(rs, i, j) == 0) == (cartan_pairing(rs, j, i) == 0));
      }
    }
  }
}

TEST_CASE("coroot evaluation on pinned examples") {
  RootSystem g2 = single(Kind::G, 2);
  CHECK(coroot_eval(g2, {1, 1}, w({{{1, 1}, Rat(1)}, {{1, 2}, Rat(1)}})) == Rat(-1));

  for (int n = 3; n <= 6; ++n) {
    RootSystem cn = single(Kind::C, n);
    std::map<SimpleRootId, Rat> coeffs;
    for (int i = 1; i <= n; ++i) coeffs[{1, i}] = (i == 1 || i == n) ? Rat(1) : Rat(2);
    CHECK(coroot_eval(cn, {1, 2}, Weight(coeffs)) == Rat(1));
  }

  CHECK(coroot_eval(g2, {1, 2}, Weight()) == Rat(0));
}

TEST_CASE("coroot evaluation is linear") {
  RootSystem rs({{Kind::B, 3}, {Kind::C, 2}});
  const auto roots = rs.all_roots();
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> numer(-4, 4);
  std::uniform_int_distribution<int> denom(1, 2);
  auto random_weight = [&]() {
    std::map<SimpleRootId, Rat> coeffs;
    for (const auto& id : roots) {
      Rat v(numer(rng), denom(rng));
      if (v != Rat(0)) coeffs[id] = v;
    }
    return Weight(coeffs);
  };
  for (int trial = 0; trial < 50; ++trial) {
    Weight u = random_weight();
    Weight v = random_weight();
    Rat c(numer(rng), denom(rng));
    bool representable = true;
    for (const auto& [rid, value] : u.coefficients()) {
      if ((value * c).denominator() > 2) representable = false;
    }
    for (const auto& id : roots) {
      CHECK(coroot_eval(rs, id, u.plus(v)) ==
            coroot_eval(rs, id, u) + coroot_eval(rs, id, v));
      if (representable) {
        CHECK(coroot_eval(rs, id, u.scaled(c)) == c * coroot_eval(rs, id, u));
      }
    }
  }
}

TEST_CASE("orthogonality and support") {
  RootSystem a1cn({{Kind::A, 1}, {Kind::C, 4}});
  CHECK(orthogonal(a1cn, {1, 1}, {2, 1}));
  CHECK(!orthogonal(RootSystem({{Kind::C, 2}}), {1, 1}, {1, 2}));
  Weight s = w({{{1, 1}, Rat(1)}, {{2, 1}, Rat(1)}});
  CHECK(support(s) == std::set<SimpleRootId>{{1, 1}, {2, 1}});
}

TEST_CASE("errors on malformed data") {
  RootSystem c2 = single(Kind::C, 2);
  CHECK_THROWS_AS(cartan_pairing(c2, {1, 1}, {1, 3}), wv::InvalidRootId);
  CHECK_THROWS_AS(cartan_pairing(c2, {2, 1}, {1, 1}), wv::InvalidRootId);
  CHECK_THROWS_AS(coroot_eval(c2, {1, 1}, Weight::simple_root({2, 1})), wv::InvalidWeight);
  CHECK_THROWS_AS(w({{{1, 1}, Rat(1, 3)}}), wv::InvalidWeight);
  CHECK_THROWS_AS(w({{{1, 1}, Rat(0)}}), wv::InvalidWeight);
  CHECK_THROWS_AS(RootSystem({{Kind::D, 2}}), wv::InvalidRootId);
  CHECK_THROWS_AS(RootSystem({{Kind::E, 9}}), wv::InvalidRootId);
  CHECK_THROWS_AS(RootSystem({{Kind::F, 3}}), wv::InvalidRootId);
  CHECK_THROWS_AS(RootSystem({}), wv::InvalidRootId);
}
