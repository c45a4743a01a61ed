#include "corpus.hpp"

#include "wv/decomposition.hpp"

namespace corpus {

using wv::AColor;
using wv::Kind;
using wv::Rat;
using wv::RootMap;
using wv::RootSystem;
using wv::SimpleRootId;
using wv::SphericalSystem;
using wv::Weight;

namespace {

Weight w(std::initializer_list<std::pair<SimpleRootId, Rat>> items) {
  std::map<SimpleRootId, Rat> coeffs;
  for (const auto& [id, value] : items) coeffs[id] = value;
  return Weight(std::move(coeffs));
}

// alpha_1 + 2 alpha_2 + ... + 2 alpha_{n-1} + alpha_n
Weight marker(int comp, int n) {
  std::map<SimpleRootId, Rat> coeffs;
  for (int i = 1; i <= n; ++i) coeffs[{comp, i}] = (i == 1 || i == n) ? Rat(1) : Rat(2);
  return Weight(std::move(coeffs));
}

std::set<SimpleRootId> roots(int comp, int from, int to) {
  std::set<SimpleRootId> out;
  for (int i = from; i <= to; ++i) out.insert({comp, i});
  return out;
}

RootMap shift_map(int rank, int offset) {
  RootMap out;
  for (int i = 1; i <= rank; ++i) out[{1, i}] = {1, i + offset};
  return out;
}

}  // namespace

SphericalSystem case15() {
  return {RootSystem({{Kind::G, 2}}),
          {},
          {w({{{1, 1}, Rat(1)}, {{1, 2}, Rat(1)}})},
          {},
          true};
}

SphericalSystem rank0_C(int n) {
  return {RootSystem({{Kind::C, n}}), roots(1, 2, n), {}, {}, true};
}

SphericalSystem rank0_B(int n) {
  return {RootSystem({{Kind::B, n}}), roots(1, 1, n - 1), {}, {}, true};
}

SphericalSystem rank0_G2() {
  return {RootSystem({{Kind::G, 2}}), {{1, 2}}, {}, {}, true};
}

SphericalSystem rank0_C3_alt() {
  return {RootSystem({{Kind::C, 3}}), roots(1, 1, 2), {}, {}, true};
}

SphericalSystem rank0_A3() {
  return {RootSystem({{Kind::A, 3}}), {{1, 2}, {1, 3}}, {}, {}, true};
}

SphericalSystem rank0_D4() {
  return {RootSystem({{Kind::D, 4}}), roots(1, 2, 4), {}, {}, true};
}

SphericalSystem rank0_E6() {
  return {RootSystem({{Kind::E, 6}}), roots(1, 2, 6), {}, {}, true};
}

SphericalSystem rank0_F4() {
  return {RootSystem({{Kind::F, 4}}), roots(1, 2, 4), {}, {}, true};
}

SphericalSystem r1_9B(int n) {
  std::map<SimpleRootId, Rat> coeffs;
  for (int i = 1; i <= n; ++i) coeffs[{1, i}] = Rat(1);
  return {RootSystem({{Kind::B, n}}), roots(1, 2, n - 1), {Weight(std::move(coeffs))}, {}, true};
}

SphericalSystem r1_9C(int n) {
  return {RootSystem({{Kind::C, n}}), roots(1, 3, n), {marker(1, n)}, {}, true};
}

SphericalSystem r2_case1(int n) {
  return {RootSystem({{Kind::A, 1}, {Kind::C, n}}),
          roots(2, 3, n),
          {w({{{1, 1}, Rat(1)}, {{2, 1}, Rat(1)}}), marker(2, n)},
          {},
          true};
}

SphericalSystem r2_case2(int n) {
  return {RootSystem({{Kind::C, n}}),
          roots(1, 3, n),
          {w({{{1, 1}, Rat(2)}}), marker(1, n)},
          {},
          true};
}

SphericalSystem r2_case3(int n) {
  return {RootSystem({{Kind::C, n}}),
          roots(1, 3, n),
          {w({{{1, 1}, Rat(1)}}), marker(1, n)},
          {AColor{"D+1", {{1, 1}}, {1, 0}}, AColor{"D-1", {{1, 1}}, {1, 0}}},
          true};
}

SphericalSystem r2_case4() {
  return {RootSystem({{Kind::B, 4}}),
          {{1, 2}, {1, 3}},
          {w({{{1, 2}, Rat(1)}, {{1, 3}, Rat(2)}, {{1, 4}, Rat(3)}}),
           w({{{1, 1}, Rat(1)}, {{1, 2}, Rat(1)}, {{1, 3}, Rat(1)}, {{1, 4}, Rat(1)}})},
          {},
          true};
}

SphericalSystem r3_case3(int n, int m) {
  SphericalSystem sys{RootSystem({{Kind::C, n}, {Kind::C, m}}), {}, {}, {}, true};
  sys.sp = roots(1, 3, n);
  for (const auto& id : roots(2, 3, m)) sys.sp.insert(id);
  sys.sigma = {marker(1, n), marker(2, m), w({{{1, 1}, Rat(1)}, {{2, 1}, Rat(1)}})};
  return sys;
}

SphericalSystem r3_comb() {
  return {RootSystem({{Kind::C, 2}, {Kind::A, 1}}),
          {},
          {marker(1, 2), w({{{1, 1}, Rat(1)}}), w({{{2, 1}, Rat(1)}})},
          {AColor{"D1", {{1, 1}, {2, 1}}, {0, 1, 1}},
           AColor{"D2", {{1, 1}}, {0, 1, -1}},
           AColor{"D3", {{2, 1}}, {0, -1, 1}}},
          true};
}

SphericalSystem r2_case5_A2C2() {
  RootMap embedding;
  embedding[{1, 1}] = {1, 1};
  embedding[{2, 1}] = {2, 1};
  embedding[{2, 2}] = {2, 2};
  return induce(r2_case1(2), RootSystem({{Kind::A, 2}, {Kind::C, 2}}), embedding);
}

SphericalSystem r2_case5_C2C2() {
  return localize(r3_case3(2, 2), {0, 2});
}

SphericalSystem g_ind_C3_pair() {
  return induce(r2_case3(2), RootSystem({{Kind::C, 3}}), shift_map(2, 1));
}

SphericalSystem g_ind_C3_half() {
  return induce(r2_case2(2), RootSystem({{Kind::C, 3}}), shift_map(2, 1));
}

SphericalSystem g_ind_C4_pair() {
  return induce(r2_case3(2), RootSystem({{Kind::C, 4}}), shift_map(2, 2));
}

SphericalSystem g_ind_B3() {
  SphericalSystem core{RootSystem({{Kind::B, 2}}),
                       {},
                       {w({{{1, 1}, Rat(1)}}), w({{{1, 1}, Rat(1)}, {{1, 2}, Rat(1)}})},
                       {AColor{"E+1", {{1, 1}}, {1, 1}}, AColor{"E-1", {{1, 1}}, {1, 0}}},
                       true};
  return induce(core, RootSystem({{Kind::B, 3}}), shift_map(2, 1));
}

SphericalSystem g_A3_cuspidal() {
  return {RootSystem({{Kind::A, 3}}),
          {},
          {w({{{1, 1}, Rat(1)}, {{1, 3}, Rat(1)}}), w({{{1, 2}, Rat(1)}})},
          {AColor{"F+2", {{1, 2}}, {-1, 1}}, AColor{"F-2", {{1, 2}}, {-1, 1}}},
          true};
}

SphericalSystem inter_11_6D() {
  return {RootSystem({{Kind::B, 3}}),
          {{1, 1}, {1, 2}},
          {w({{{1, 1}, Rat(1)}, {{1, 2}, Rat(2)}, {{1, 3}, Rat(3)}})},
          {},
          true};
}

SphericalSystem inter_14_8B() {
  return {RootSystem({{Kind::G, 2}}),
          {{1, 2}},
          {w({{{1, 1}, Rat(4)}, {{1, 2}, Rat(2)}})},
          {},
          true};
}

SphericalSystem inter_10_5D() {
  return {RootSystem({{Kind::B, 3}}),
          {{1, 1}, {1, 2}},
          {w({{{1, 1}, Rat(1, 2)}, {{1, 2}, Rat(1)}, {{1, 3}, Rat(3, 2)}})},
          {},
          false};
}

SphericalSystem inter_13_7B() {
  return {RootSystem({{Kind::G, 2}}),
          {{1, 2}},
          {w({{{1, 1}, Rat(2)}, {{1, 2}, Rat(1)}})},
          {},
          false};
}

SphericalSystem prod_A1A1() {
  return {RootSystem({{Kind::A, 1}, {Kind::A, 1}}),
          {},
          {w({{{1, 1}, Rat(1)}})},
          {AColor{"P+1", {{1, 1}}, {1}}, AColor{"P-1", {{1, 1}}, {1}}},
          true};
}

std::vector<Named> all() {
  std::vector<Named> out;
  out.push_back({"case15", case15()});
  for (int n = 2; n <= 5; ++n) {
    out.push_back({"rank0_C" + std::to_string(n), rank0_C(n)});
    out.push_back({"rank0_B" + std::to_string(n), rank0_B(n)});
  }
  out.push_back({"rank0_G2", rank0_G2()});
  out.push_back({"rank0_C3_alt", rank0_C3_alt()});
  out.push_back({"rank0_A3", rank0_A3()});
  out.push_back({"rank0_D4", rank0_D4()});
  out.push_back({"rank0_E6", rank0_E6()});
  out.push_back({"rank0_F4", rank0_F4()});
  for (int n = 2; n <= 5; ++n) {
    out.push_back({"r1_9B_n" + std::to_string(n), r1_9B(n)});
    out.push_back({"r1_9C_n" + std::to_string(n), r1_9C(n)});
  }
  for (int n = 2; n <= 4; ++n) {
    out.push_back({"r2_case1_n" + std::to_string(n), r2_case1(n)});
    out.push_back({"r2_case2_n" + std::to_string(n), r2_case2(n)});
    out.push_back({"r2_case3_n" + std::to_string(n), r2_case3(n)});
  }
  out.push_back({"r2_case4", r2_case4()});
  out.push_back({"r3_case3_n2m2", r3_case3(2, 2)});
  out.push_back({"r3_case3_n2m3", r3_case3(2, 3)});
  out.push_back({"r3_comb", r3_comb()});
  out.push_back({"r2_case5_A2C2", r2_case5_A2C2()});
  out.push_back({"r2_case5_C2C2", r2_case5_C2C2()});
  out.push_back({"g_ind_C3_pair", g_ind_C3_pair()});
  out.push_back({"g_ind_C3_half", g_ind_C3_half()});
  out.push_back({"g_ind_C4_pair", g_ind_C4_pair()});
  out.push_back({"g_ind_B3", g_ind_B3()});
  out.push_back({"g_A3_cuspidal", g_A3_cuspidal()});
  out.push_back({"inter_11_6D", inter_11_6D()});
  out.push_back({"inter_14_8B", inter_14_8B()});
  out.push_back({"inter_10_5D", inter_10_5D()});
  out.push_back({"inter_13_7B", inter_13_7B()});
  out.push_back({"prod_A1A1", prod_A1A1()});
  return out;
}

std::vector<Named> main2_corpus() {
  std::vector<Named> out;
  for (int n = 2; n <= 4; ++n) {
    out.push_back({"r2_case1_n" + std::to_string(n), r2_case1(n)});
    out.push_back({"r2_case2_n" + std::to_string(n), r2_case2(n)});
    out.push_back({"r2_case3_n" + std::to_string(n), r2_case3(n)});
  }
  out.push_back({"r2_case4", r2_case4()});
  out.push_back({"r3_case3_n2m2", r3_case3(2, 2)});
  out.push_back({"r3_case3_n2m3", r3_case3(2, 3)});
  out.push_back({"r3_comb", r3_comb()});
  out.push_back({"r2_case5_A2C2", r2_case5_A2C2()});
  out.push_back({"r2_case5_C2C2", r2_case5_C2C2()});
  out.push_back({"g_ind_C3_pair", g_ind_C3_pair()});
  out.push_back({"g_ind_C3_half", g_ind_C3_half()});
  out.push_back({"g_ind_C4_pair", g_ind_C4_pair()});
  out.push_back({"g_ind_B3", g_ind_B3()});
  out.push_back({"g_A3_cuspidal", g_A3_cuspidal()});
  return out;
}

std::vector<Induction> inductions() {
  SphericalSystem b2core{RootSystem({{Kind::B, 2}}),
                         {},
                         {w({{{1, 1}, Rat(1)}}), w({{{1, 1}, Rat(1)}, {{1, 2}, Rat(1)}})},
                         {AColor{"E+1", {{1, 1}}, {1, 1}}, AColor{"E-1", {{1, 1}}, {1, 0}}},
                         true};
  return {
      {"g_ind_C3_pair", r2_case3(2), g_ind_C3_pair()},
      {"g_ind_C3_half", r2_case2(2), g_ind_C3_half()},
      {"g_ind_C4_pair", r2_case3(2), g_ind_C4_pair()},
      {"g_ind_B3", b2core, g_ind_B3()},
      {"r2_case5_A2C2", r2_case1(2), r2_case5_A2C2()},
  };
}

}  // namespace corpus
