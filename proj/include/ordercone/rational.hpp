#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "ordercone/errors.hpp"

namespace ordercone {

// Exact scalars. cpp_rational keeps the invariants we rely on everywhere:
// denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A vector over Q; the dimension is the length.
using Vec = std::vector<Rat>;

// "p/q" with q = 1 rendered as "p"; sign on the numerator only.
std::string rat_to_string(const Rat& r);

// Accepts "p", "p/q", optional leading +/- on the numerator, no spaces
// inside tokens. Rejects zero or signed denominators.
Rat parse_rat(std::string_view text);

// Comma-separated rationals, e.g. "1,0,1" or "1/2,-3,0".
Vec parse_vec(std::string_view text, char sep = ',');

std::string vec_to_string(const Vec& v, char sep = ',');

Rat dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Rat& c, const Vec& a);
bool vec_is_zero(const Vec& a);

// Total order used whenever output must be deterministic: entrywise, by value.
bool vec_less(const Vec& a, const Vec& b);

} // namespace ordercone
