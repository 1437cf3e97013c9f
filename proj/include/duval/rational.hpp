#ifndef DUVAL_RATIONAL_HPP
#define DUVAL_RATIONAL_HPP

/*
 * Exact integer and rational arithmetic.
 *
 * BigInt / BigRational are aliases of boost::multiprecision's exact types.
 * BigRational is always stored in lowest terms with positive denominator and
 * canonical zero 0/1 (guaranteed by the backend).  No floating point is used
 * anywhere in this library.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "duval/errors.hpp"

namespace duval {

using BigInt      = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/* n/d with sign normalization; d == 0 is rejected. */
inline BigRational big_rat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw input_error("rational with zero denominator");
    return BigRational(n) / BigRational(d);
}

inline BigInt num(const BigRational& q) { return numerator(q); }
inline BigInt den(const BigRational& q) { return denominator(q); }

inline bool is_integer(const BigRational& q) { return denominator(q) == 1; }

inline BigInt to_integer(const BigRational& q) {
    if (!is_integer(q))
        throw internal_error("expected integral value, got " + q.str());
    return numerator(q);
}

/* Floor division for BigInt (operator/ truncates toward zero). */
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    check(b != 0, "floor_div by zero");
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/* Machine form: always "p/q" with q >= 1, lowest terms. */
inline std::string format_rational(const BigRational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/* Human form: "p" when integral, "p/q" otherwise. */
inline std::string format_rational_human(const BigRational& q) {
    if (is_integer(q)) return numerator(q).str();
    return format_rational(q);
}

/* Accepts "p" or "p/q" (optional sign on p; q positive). */
inline BigRational parse_rational(const std::string& s) {
    auto bad = [&] { throw schema_error("malformed rational '" + s + "'"); };
    if (s.empty()) bad();
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(s));
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (p.empty() || q.empty()) bad();
        BigInt d(q);
        if (d <= 0) bad();
        return big_rat(BigInt(p), d);
    } catch (const std::runtime_error&) {
        bad();
    }
    return BigRational(); // unreachable
}

inline BigInt parse_integer(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::runtime_error&) {
        throw schema_error("malformed integer '" + s + "'");
    }
}

inline long long to_long_checked(const BigInt& v) {
    if (v > BigInt(9223372036854775807LL) || v < BigInt(-9223372036854775807LL - 1))
        throw internal_error("integer too large for 64-bit conversion: " + v.str());
    return static_cast<long long>(v);
}

} // namespace duval

#endif
