#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace asyncflow {

// Exact time instant. Always in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

// Accepts "a", "-a", "a/b", "-a/b" with b > 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Largest integer not above r.
std::int64_t floor(const Rational& r);

// Least common multiple of two positive rationals: the smallest positive
// rational that is an integer multiple of both.
Rational lcm(const Rational& a, const Rational& b);

} // namespace asyncflow
