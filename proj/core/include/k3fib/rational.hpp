#pragma once

#include <gmpxx.h>

#include <string>

#include "k3fib/errors.hpp"

namespace k3fib {

// Arbitrary-precision integers and rationals are GMP's; the rest of the
// library only ever sees canonical values (gcd(num, den) = 1, den >= 1).
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// floor(a/b) for integers, b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer floor_rat(const Rational& r) { return floor_div(r.get_num(), r.get_den()); }
inline Integer ceil_rat(const Rational& r) { return ceil_div(r.get_num(), r.get_den()); }

// Nearest integer, halves rounded toward +infinity.
inline Integer round_rat(const Rational& r) {
    return floor_rat(r + Rational(1, 2));
}

// floor(sqrt(n)) for n >= 0.
inline Integer isqrt_floor(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of negative integer");
    Integer s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

// Largest x >= 0 with x^2 <= r, for r >= 0.
inline Integer floor_sqrt_rat(const Rational& r) {
    if (r < 0) throw DomainError("floor_sqrt of negative rational");
    const Integer& p = r.get_num();
    const Integer& q = r.get_den();
    Integer x = isqrt_floor(p / q);
    while (x * x * q <= p) ++x;
    while (x * x * q > p) --x;
    return x;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace k3fib
