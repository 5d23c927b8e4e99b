/**
 * Exact rational scalars and vectors.
 *
 * All quantities in this library are arbitrary-precision rationals backed by
 * GMP; no floating point appears anywhere on a verification path.
 */

#ifndef BIERKR_RATIONAL_HPP
#define BIERKR_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace bierkr {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using Vec    = std::vector<Rational>;
using Matrix = std::vector<Vec>;

using IntVec    = std::vector<Integer>;
using IntMatrix = std::vector<IntVec>;

/**
 * Parse a rational from a string.  Accepted forms are "p/q", plain integers,
 * and finite decimals ("0.25", "-1.5"); anything else (in particular
 * scientific notation) is rejected.
 */
inline Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("parse_rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos)
    {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("parse_rational: malformed fraction '" + s + "'");
        Integer p(num), q(den);
        if (q == 0)
            throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
        return Rational(p, q);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos)
    {
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (tail.empty())
            throw std::invalid_argument("parse_rational: malformed decimal '" + s + "'");
        for (char c : tail)
            if (c < '0' || c > '9')
                throw std::invalid_argument("parse_rational: malformed decimal '" + s + "'");
        bool neg = (!head.empty() && head[0] == '-');
        std::string digits = neg ? head.substr(1) : head;
        if (!digits.empty() && digits[0] == '+') digits = digits.substr(1);
        if (digits.empty()) digits = "0";
        Integer ip(digits);
        Integer scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Integer total = ip * scale + Integer(tail);
        Rational r(total, scale);
        return neg ? Rational(-r) : r;
    }
    return Rational(Integer(s));
}

inline std::string to_string(const Rational& r)
{
    return r.str();
}

inline Vec parse_vector(const std::vector<std::string>& parts)
{
    Vec v;
    v.reserve(parts.size());
    for (const auto& p : parts) v.push_back(parse_rational(p));
    return v;
}

inline Vec operator+(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector addition: dimension mismatch");
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline Vec operator-(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector subtraction: dimension mismatch");
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline Vec operator*(const Rational& s, const Vec& a)
{
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
    return c;
}

inline Vec operator-(const Vec& a)
{
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

inline Rational dot(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const Vec& a)
{
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

/// Least common multiple of the denominators of a vector (always positive).
inline Integer denominator_lcm(const Vec& a)
{
    Integer l = 1;
    for (const auto& x : a)
        l = lcm(l, Integer(denominator(x)));
    return l;
}

/// Scale a rational vector by an integer known to clear all denominators.
inline IntVec scale_to_integer(const Vec& a, const Integer& mult)
{
    IntVec v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        Rational s = Rational(mult) * a[i];
        if (denominator(s) != 1)
            throw std::logic_error("scale_to_integer: multiplier does not clear denominators");
        v[i] = numerator(s);
    }
    return v;
}

}  // namespace bierkr

#endif  // BIERKR_RATIONAL_HPP
