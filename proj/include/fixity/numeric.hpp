#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "fixity/errors.hpp"

namespace fixity {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw InvalidArgument("rational with zero denominator");
    return Rational(num, den);
}

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Integer& n) { return n.str(); }

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& r)
{
    const Integer den = denominator_of(r);
    if (den == 1)
        return numerator_of(r).str();
    return numerator_of(r).str() + "/" + den.str();
}

/// Shortest round-trip decimal form; deterministic across runs.
inline std::string to_string(double x)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{})
        return "nan";
    return std::string(buf, end);
}

/// Parses "p/q" or "p" into an exact rational.
inline Rational parse_rational(std::string_view text)
{
    auto parse_int = [&](std::string_view part) {
        if (part.empty())
            throw InvalidArgument("malformed rational '" + std::string(text) + "'");
        std::size_t start = (part.front() == '-' || part.front() == '+') ? 1 : 0;
        if (start == part.size())
            throw InvalidArgument("malformed rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw InvalidArgument("malformed rational '" + std::string(text) + "'");
        return Integer(std::string(part));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

inline Integer gcd(Integer a, Integer b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0)
        return 0;
    return a / gcd(a, b) * b;
}

inline double to_double(const Integer& n) { return n.convert_to<double>(); }
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::uint64_t to_u64(const Integer& n)
{
    if (n < 0 || n > std::numeric_limits<std::uint64_t>::max())
        throw CapacityError("integer " + n.str() + " does not fit in 64 bits");
    return n.convert_to<std::uint64_t>();
}

} // namespace fixity
