#pragma once

#include <optional>
#include <vector>

#include "k3fib/poly.hpp"
#include "k3fib/rational.hpp"

namespace k3fib {

// The coefficient world of every curve: Q[t] and Q(t).
using UniPoly = Poly<Rational>;
using RatFunc = RatFrac<Rational>;

// A closed point of P^1 over Q: a monic irreducible polynomial, or infinity.
struct Place {
    // Empty polynomial encodes the place at infinity.
    UniPoly finite;

    static Place infinity() { return Place{}; }
    static Place at(const UniPoly& monic_irreducible) { return Place{monic_irreducible}; }

    bool is_infinity() const { return finite.is_zero(); }
    // Residue degree: deg of the defining polynomial, 1 at infinity.
    int degree() const { return is_infinity() ? 1 : finite.degree(); }

    friend bool operator==(const Place& a, const Place& b) { return a.finite == b.finite; }
};

// Orders polynomials by degree, then by coefficients from the leading one
// down. Gives the deterministic factor ordering used everywhere.
inline int compare_polys(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        const Rational& x = a.coeff(static_cast<std::size_t>(i));
        const Rational& y = b.coeff(static_cast<std::size_t>(i));
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

inline bool poly_less(const UniPoly& a, const UniPoly& b) { return compare_polys(a, b) < 0; }

// Finite places sort by their polynomial; infinity sorts last.
inline bool place_less(const Place& a, const Place& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return poly_less(a.finite, b.finite);
}

// Order of vanishing of a nonzero polynomial at a finite place.
inline long poly_valuation(const UniPoly& a, const UniPoly& p) {
    if (a.is_zero()) throw DomainError("valuation of zero polynomial");
    long v = 0;
    UniPoly r = a;
    while (true) {
        auto [q, rem] = UniPoly::divrem(r, p);
        if (!rem.is_zero()) break;
        r = q;
        ++v;
    }
    return v;
}

// p-adic valuation of a rational function; nullopt encodes +infinity (the
// zero function). At the infinite place this is deg(den) - deg(num); the
// homogeneous-weight adjustment used for surfaces lives in the surface code.
inline std::optional<long> valuation(const RatFunc& r, const Place& v) {
    if (r.is_zero()) return std::nullopt;
    if (v.is_infinity()) return static_cast<long>(r.den().degree() - r.num().degree());
    return poly_valuation(r.num(), v.finite) - poly_valuation(r.den(), v.finite);
}

// Content (gcd of numerators / lcm of denominators signed by the leading
// coefficient) and the primitive integer coefficient vector a/content.
struct PrimitivePoly {
    Rational content;              // a == content * primitive
    std::vector<Integer> coeffs;   // primitive, gcd 1, positive leading entry
};

inline PrimitivePoly to_primitive(const UniPoly& a) {
    if (a.is_zero()) throw DomainError("primitive part of zero polynomial");
    Integer den_lcm = 1;
    for (const auto& c : a.coeffs()) den_lcm = den_lcm / gcd(den_lcm, c.get_den()) * c.get_den();
    std::vector<Integer> ints;
    ints.reserve(a.coeffs().size());
    Integer g = 0;
    for (const auto& c : a.coeffs()) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        g = gcd(g, v);
        ints.push_back(v);
    }
    if (ints.back() < 0) g = -g;
    for (auto& v : ints) v /= g;
    PrimitivePoly out;
    out.content = make_rational(g, den_lcm);
    out.coeffs = std::move(ints);
    return out;
}

inline UniPoly from_integer_coeffs(const std::vector<Integer>& c) {
    std::vector<Rational> rc(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) rc[i] = Rational(c[i]);
    return UniPoly(std::move(rc));
}

} // namespace k3fib
