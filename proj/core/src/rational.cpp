#include "asyncflow/rational.hpp"

#include <charconv>
#include <numeric>

#include "asyncflow/errors.hpp"

namespace asyncflow {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    if (!text.empty() && text.front() == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const std::int64_t num = parse_integer(text.substr(0, slash), text);
    const std::int64_t den = parse_integer(text.substr(slash + 1), text);
    if (den <= 0) {
        throw ParseError("rational '" + std::string(text) + "' needs a positive denominator");
    }
    return Rational(num, den);
}

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r)
{
    const std::int64_t num = r.numerator();
    const std::int64_t den = r.denominator();
    if (num >= 0) {
        return num / den;
    }
    return -((-num + den - 1) / den);
}

Rational lcm(const Rational& a, const Rational& b)
{
    if (a <= 0 || b <= 0) {
        throw DomainError("lcm needs positive rationals");
    }
    return Rational(std::lcm(a.numerator(), b.numerator()), std::gcd(a.denominator(), b.denominator()));
}

} // namespace asyncflow
