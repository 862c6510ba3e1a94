#ifndef REPCOL_RATIONAL_HPP
#define REPCOL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "repcol/errors.hpp"

namespace repcol {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/** "p/q" for non-integers, "p" for integers. */
inline std::string to_string(const Rational& q)
{
    return q.str();
}

/**
 * Parses an integer, a fraction `p/q` or a plain decimal `[-]d.ddd`. The
 * result is exact; `0.1` becomes 1/10.
 */
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&]() -> Rational { throw ParseError("not a rational number: '" + std::string(text) + "'"); };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return fail();

    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return BigInt(std::string(s));
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') return fail();
        BigInt d = to_int(den);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(to_int(num), d);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
        if (whole.empty() && frac.empty()) return fail();
        for (char c : whole)
            if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
        std::string digits = std::string(whole) + std::string(frac);
        BigInt num(digits.empty() ? std::string("0") : digits);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Rational q(num, den);
        return negative ? Rational(-q) : q;
    }
    if (!is_int(text)) return fail();
    return Rational(to_int(text));
}

/** True iff q has a terminating decimal expansion (denominator of the form 2^a 5^b). */
inline bool is_finite_decimal(const Rational& q)
{
    BigInt d = denominator_of(q);
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    return d == 1;
}

/** Decimal rendering; only meaningful when is_finite_decimal(q). */
inline std::string to_decimal_string(const Rational& q)
{
    BigInt num = numerator_of(q);
    BigInt den = denominator_of(q);
    bool negative = num < 0;
    if (negative) num = -num;
    int places = 0;
    BigInt scale = 1;
    while ((scale * num) % den != 0) {
        scale *= 10;
        ++places;
    }
    BigInt scaled = scale * num / den;
    std::string digits = scaled.str();
    if (places > 0) {
        if (static_cast<int>(digits.size()) <= places)
            digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    return negative ? "-" + digits : digits;
}

inline BigInt lcm(const BigInt& a, const BigInt& b)
{
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

inline Rational floor_of(const Rational& q)
{
    BigInt num = numerator_of(q);
    BigInt den = denominator_of(q);
    BigInt f = num / den;  // truncates toward zero
    if (num < 0 && f * den != num) f -= 1;
    return Rational(f);
}

}  // namespace repcol

#endif  // REPCOL_RATIONAL_HPP
