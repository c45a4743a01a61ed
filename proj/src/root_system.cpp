#include "wv/root_system.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "wv/errors.hpp"

namespace wv {

std::string to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    s += "/" + std::to_string(r.denominator());
  }
  return s;
}

Rat parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view part) -> long long {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParseError("malformed rational '" + std::string(part) + "'");
    }
    return value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_int(text));
  }
  long long num = parse_int(text.substr(0, slash));
  long long den = parse_int(text.substr(slash + 1));
  if (den <= 0) {
    throw ParseError("nonpositive denominator in '" + std::string(text) + "'");
  }
  return Rat(num, den);
}

char kind_letter(Kind k) {
  switch (k) {
    case Kind::A: return 'A';
    case Kind::B: return 'B';
    case Kind::C: return 'C';
    case Kind::D: return 'D';
    case Kind::E: return 'E';
    case Kind::F: return 'F';
    case Kind::G: return 'G';
  }
  return '?';
}

Kind kind_from_letter(char c) {
  switch (c) {
    case 'A': return Kind::A;
    case 'B': return Kind::B;
    case 'C': return Kind::C;
    case 'D': return Kind::D;
    case 'E': return Kind::E;
    case 'F': return Kind::F;
    case 'G': return Kind::G;
    default: throw ParseError(std::string("unknown component kind '") + c + "'");
  }
}

namespace {

void check_component(const SimpleComponent& c) {
  bool ok = false;
  switch (c.kind) {
    case Kind::A: ok = c.rank >= 1; break;
    case Kind::B: ok = c.rank >= 2; break;
    case Kind::C: ok = c.rank >= 2; break;
    case Kind::D: ok = c.rank >= 3; break;
    case Kind::E: ok = c.rank >= 6 && c.rank <= 8; break;
    case Kind::F: ok = c.rank == 4; break;
    case Kind::G: ok = c.rank == 2; break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "rank " << c.rank << " out of bounds for type " << kind_letter(c.kind);
    throw InvalidRootId(os.str());
  }
}

// Nonzero off-diagonal pairing <alpha_i^vee, alpha_j> within one
// component, or 0 when the nodes are not adjacent.
int component_pairing(const SimpleComponent& c, int i, int j) {
  const int n = c.rank;
  auto adjacent_chain = [&](int a, int b) { return a + 1 == b || b + 1 == a; };
  switch (c.kind) {
    case Kind::A:
      return adjacent_chain(i, j) ? -1 : 0;
    case Kind::B:
      if (!adjacent_chain(i, j)) return 0;
      return (i == n && j == n - 1) ? -2 : -1;  // alpha_n is short
    case Kind::C:
      if (!adjacent_chain(i, j)) return 0;
      return (i == n - 1 && j == n) ? -2 : -1;  // alpha_n is long
    case Kind::D: {
      bool adj = (adjacent_chain(i, j) && std::max(i, j) <= n - 1) ||
                 (std::min(i, j) == n - 2 && std::max(i, j) == n);
      return adj ? -1 : 0;
    }
    case Kind::E: {
      auto adj = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        if (a == 2 && b == 4) return true;
        if (a == 1 && b == 3) return true;
        if (a >= 3 && b == a + 1 && b <= n) return true;
        return false;
      };
      return adj(i, j) ? -1 : 0;
    }
    case Kind::F:
      if (!adjacent_chain(i, j)) return 0;
      return (i == 3 && j == 2) ? -2 : -1;  // alpha_3, alpha_4 are short
    case Kind::G:
      if (i == 1 && j == 2) return -3;  // alpha_1 is short
      if (i == 2 && j == 1) return -1;
      return 0;
  }
  return 0;
}

}  // namespace

RootSystem::RootSystem(std::vector<SimpleComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw InvalidRootId("a root system needs at least one component");
  }
  for (const auto& c : components_) check_component(c);
}

const SimpleComponent& RootSystem::component(int c) const {
  if (c < 1 || c > num_components()) {
    throw InvalidRootId("component index " + std::to_string(c) + " out of range");
  }
  return components_[static_cast<std::size_t>(c - 1)];
}

bool RootSystem::contains(SimpleRootId id) const {
  if (id.component < 1 || id.component > num_components()) return false;
  const auto& c = components_[static_cast<std::size_t>(id.component - 1)];
  return id.index >= 1 && id.index <= c.rank;
}

void RootSystem::require(SimpleRootId id) const {
  if (!contains(id)) {
    std::ostringstream os;
    os << "no simple root " << id.component << "." << id.index << " in this root system";
    throw InvalidRootId(os.str());
  }
}

int RootSystem::num_roots() const {
  int total = 0;
  for (const auto& c : components_) total += c.rank;
  return total;
}

std::vector<SimpleRootId> RootSystem::all_roots() const {
  std::vector<SimpleRootId> out;
  out.reserve(static_cast<std::size_t>(num_roots()));
  for (int c = 1; c <= num_components(); ++c) {
    for (int i = 1; i <= component(c).rank; ++i) out.push_back({c, i});
  }
  return out;
}

std::string RootSystem::descriptor(int c) const {
  const auto& comp = component(c);
  return std::string(1, kind_letter(comp.kind)) + std::to_string(comp.rank);
}

std::vector<std::string> RootSystem::descriptors() const {
  std::vector<std::string> out;
  for (int c = 1; c <= num_components(); ++c) out.push_back(descriptor(c));
  return out;
}

Weight::Weight(std::map<SimpleRootId, Rat> coefficients) : coeffs_(std::move(coefficients)) {
  for (const auto& [id, value] : coeffs_) {
    if (value == Rat(0)) {
      throw InvalidWeight("zero coefficient stored for a weight");
    }
    if (value.denominator() != 1 && value.denominator() != 2) {
      throw InvalidWeight("weight denominator must be 1 or 2, got " + wv::to_string(value));
    }
  }
}

Weight Weight::simple_root(SimpleRootId id) {
  return Weight({{id, Rat(1)}});
}

Rat Weight::coeff(SimpleRootId id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

std::set<SimpleRootId> Weight::support() const {
  std::set<SimpleRootId> out;
  for (const auto& [id, value] : coeffs_) out.insert(id);
  return out;
}

Weight Weight::plus(const Weight& other) const {
  std::map<SimpleRootId, Rat> sum = coeffs_;
  for (const auto& [id, value] : other.coeffs_) {
    Rat next = value + (sum.count(id) ? sum[id] : Rat(0));
    if (next == Rat(0)) {
      sum.erase(id);
    } else {
      sum[id] = next;
    }
  }
  return Weight(std::move(sum));
}

Weight Weight::scaled(const Rat& factor) const {
  if (factor == Rat(0)) return Weight();
  std::map<SimpleRootId, Rat> out;
  for (const auto& [id, value] : coeffs_) out[id] = value * factor;
  return Weight(std::move(out));
}

int cartan_pairing(const RootSystem& rs, SimpleRootId i, SimpleRootId j) {
  rs.require(i);
  rs.require(j);
  if (i == j) return 2;
  if (i.component != j.component) return 0;
  return component_pairing(rs.component(i.component), i.index, j.index);
}

bool orthogonal(const RootSystem& rs, SimpleRootId i, SimpleRootId j) {
  return i != j && cartan_pairing(rs, i, j) == 0;
}

Rat coroot_eval(const RootSystem& rs, SimpleRootId i, const Weight& w) {
  rs.require(i);
  Rat total(0);
  for (const auto& [id, value] : w.coefficients()) {
    if (!rs.contains(id)) {
      throw InvalidWeight("weight mentions a simple root outside the root system");
    }
    total += value * Rat(cartan_pairing(rs, i, id));
  }
  return total;
}

std::set<SimpleRootId> support(const Weight& w) {
  return w.support();
}

}  // namespace wv
