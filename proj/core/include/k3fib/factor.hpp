#pragma once

#include <utility>
#include <vector>

#include "k3fib/unipoly.hpp"

namespace k3fib {

// Complete irreducible factorization over Q: a = unit * prod f_i^{e_i} with
// the f_i monic irreducible, pairwise distinct and canonically ordered.
struct Factorization {
    Rational unit;
    std::vector<std::pair<UniPoly, unsigned>> factors;

    UniPoly expand() const {
        UniPoly p{Rational(unit)};
        for (const auto& [f, e] : factors) p = p * f.pow(e);
        return p;
    }
};

// Monic gcd, exposed with the UniPoly-specific name used across the library.
inline UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) { return gcd(a, b); }

Factorization factor_over_rationals(const UniPoly& a);

// Irreducibility over Q (degree >= 1).
bool is_irreducible(const UniPoly& a);

} // namespace k3fib
