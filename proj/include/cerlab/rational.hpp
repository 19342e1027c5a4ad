#ifndef CERLAB_RATIONAL_HPP
#define CERLAB_RATIONAL_HPP

#include "error.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace cerlab {

/// Exact rational backed by GMP. Always reduced, denominator positive.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer numerator_of(const Rational &q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational &q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational &q) { return denominator_of(q) == 1; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational &q)
{
    if (is_integer(q))
        return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline Rational parse_rational(const std::string &text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer den(text.substr(slash + 1));
        require(den != 0, "zero denominator in '" + text + "'");
        return Rational(Integer(text.substr(0, slash)), den);
    } catch (const std::runtime_error &) {
        throw InvalidArgument("not a rational number: '" + text + "'");
    }
}

inline Integer floor_of(const Rational &q)
{
    Integer n = numerator_of(q), d = denominator_of(q);
    Integer f = n / d;
    if (n < 0 && f * d != n)
        f -= 1;
    return f;
}

} // namespace cerlab

#endif
