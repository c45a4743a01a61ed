#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace wv {

// All lattice arithmetic is exact. Every quantity in scope is an integer
// or a half-integer, but intermediate functional values are kept as
// general rationals.
using Rat = boost::rational<long long>;

std::string to_string(const Rat& r);

// Accepts "p" or "p/q" with integer p, positive integer q.
Rat parse_rational(std::string_view text);

}  // namespace wv
