#include "k3fib/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "k3fib/errors.hpp"

// Univariate factorization over Q: Yun squarefree split, rational-root
// extraction for linear factors, then Zassenhaus (factor mod p, Hensel lift,
// subset recombination) for what remains. Degrees stay small here (duct of a
// K3 discriminant is at most a few dozen), so the quadratic-time classics are
// the right tool.

namespace k3fib {
namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for a word-sized odd prime p.

using FpPoly = std::vector<std::int64_t>; // dense, coeff of x^i at [i], trimmed

struct Fp {
    std::int64_t p;

    std::int64_t norm(std::int64_t a) const {
        a %= p;
        return a < 0 ? a + p : a;
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
    std::int64_t inv(std::int64_t a) const {
        std::int64_t t = 0, new_t = 1, r = p, new_r = norm(a);
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (r != 1) throw InternalError("Fp::inv of non-unit");
        return norm(t);
    }

    static void trim(FpPoly& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    static int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

    FpPoly add(const FpPoly& a, const FpPoly& b) const {
        FpPoly c(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::int64_t v = 0;
            if (i < a.size()) v += a[i];
            if (i < b.size()) v += b[i];
            c[i] = norm(v);
        }
        trim(c);
        return c;
    }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const {
        FpPoly c(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::int64_t v = 0;
            if (i < a.size()) v += a[i];
            if (i < b.size()) v -= b[i];
            c[i] = norm(v);
        }
        trim(c);
        return c;
    }
    FpPoly mulp(const FpPoly& a, const FpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FpPoly c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = norm(c[i + j] + a[i] * b[j]);
        trim(c);
        return c;
    }
    // division with remainder, b != 0
    std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b) const {
        FpPoly r = a, q;
        const int db = deg(b);
        const std::int64_t ilb = inv(b.back());
        while (deg(r) >= db) {
            const std::int64_t f = mul(r.back(), ilb);
            const std::size_t s = r.size() - b.size();
            if (q.size() < s + 1) q.resize(s + 1, 0);
            q[s] = f;
            for (std::size_t i = 0; i < b.size(); ++i) r[s + i] = norm(r[s + i] - f * b[i]);
            trim(r);
        }
        trim(q);
        return {q, r};
    }
    FpPoly rem(const FpPoly& a, const FpPoly& b) const { return divrem(a, b).second; }
    FpPoly monic(const FpPoly& a) const {
        if (a.empty()) return a;
        const std::int64_t f = inv(a.back());
        FpPoly c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = mul(a[i], f);
        return c;
    }
    FpPoly gcdp(FpPoly a, FpPoly b) const {
        while (!b.empty()) {
            FpPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    FpPoly deriv(const FpPoly& a) const {
        if (a.size() < 2) return {};
        FpPoly c(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) c[i - 1] = norm(a[i] * static_cast<std::int64_t>(i % static_cast<std::size_t>(p)));
        trim(c);
        return c;
    }
    FpPoly powmod(FpPoly base, Integer e, const FpPoly& mod) const {
        FpPoly result{1};
        base = rem(base, mod);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = rem(mulp(result, base), mod);
            base = rem(mulp(base, base), mod);
            e >>= 1;
        }
        return result;
    }
};

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial over F_p. Randomness is drawn from a fixed-seed
// generator so runs are reproducible.
void equal_degree_split(const Fp& F, const FpPoly& f, int d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
    if (Fp::deg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer e = 1;
    for (int i = 0; i < d; ++i) e *= F.p;
    e = (e - 1) / 2;
    while (true) {
        FpPoly r(static_cast<std::size_t>(Fp::deg(f)), 0);
        for (auto& c : r) c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(F.p));
        Fp::trim(r);
        if (Fp::deg(r) < 1) continue;
        FpPoly g = F.gcdp(f, r);
        if (Fp::deg(g) > 0 && Fp::deg(g) < Fp::deg(f)) {
            equal_degree_split(F, g, d, rng, out);
            equal_degree_split(F, F.divrem(f, g).first, d, rng, out);
            return;
        }
        FpPoly h = F.powmod(r, e, f);
        h = F.sub(h, FpPoly{1});
        g = F.gcdp(f, h);
        if (Fp::deg(g) > 0 && Fp::deg(g) < Fp::deg(f)) {
            equal_degree_split(F, g, d, rng, out);
            equal_degree_split(F, F.divrem(f, g).first, d, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> factor_mod_p(const Fp& F, const FpPoly& f_in) {
    std::vector<FpPoly> out;
    FpPoly f = F.monic(f_in);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    FpPoly h{0, 1}; // x
    int d = 1;
    while (Fp::deg(f) >= 2 * d) {
        h = F.powmod(h, Integer(F.p), f);
        FpPoly g = F.gcdp(f, F.sub(h, FpPoly{0, 1}));
        if (Fp::deg(g) > 0) {
            equal_degree_split(F, g, d, rng, out);
            f = F.divrem(f, g).first;
            h = F.rem(h, f);
        }
        ++d;
    }
    if (Fp::deg(f) > 0) out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// Z[x] helpers on raw integer coefficient vectors.

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Attempts exact division a / b over Z; returns empty optional on failure.
std::optional<ZPoly> zdivexact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) return std::nullopt;
    ZPoly r = a, q(a.size(), Integer(0));
    const int db = zdeg(b);
    while (zdeg(r) >= db) {
        Integer quot, rem;
        mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0) return std::nullopt;
        const std::size_t s = r.size() - b.size();
        q[s] = quot;
        for (std::size_t i = 0; i < b.size(); ++i) r[s + i] -= quot * b[i];
        ztrim(r);
    }
    if (!r.empty()) return std::nullopt;
    ztrim(q);
    return q;
}

ZPoly zprimitive(ZPoly f) {
    Integer g = 0;
    for (const auto& c : f) g = gcd(g, c);
    if (g == 0) return f;
    if (f.back() < 0) g = -g;
    for (auto& c : f) c /= g;
    return f;
}

// Coefficients reduced mod m into (-m/2, m/2].
ZPoly symmetric_mod(const ZPoly& f, const Integer& m) {
    ZPoly r(f.size());
    const Integer half = m / 2;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer v;
        mpz_fdiv_r(v.get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
        if (v > half) v -= m;
        r[i] = v;
    }
    ztrim(r);
    return r;
}

ZPoly zmod(const ZPoly& f, const Integer& m) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    ztrim(r);
    return r;
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) { return zmod(zmul(a, b), m); }

// Division with remainder mod m by a polynomial whose leading coefficient is
// invertible mod m (monic in all our uses).
std::pair<ZPoly, ZPoly> zdivrem_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r = zmod(a, m), q;
    const int db = zdeg(b);
    Integer lead_inv;
    if (mpz_invert(lead_inv.get_mpz_t(), b.back().get_mpz_t(), m.get_mpz_t()) == 0)
        throw InternalError("zdivrem_mod: leading coefficient not invertible");
    while (zdeg(r) >= db) {
        Integer f = (r.back() * lead_inv) % m;
        const std::size_t s = r.size() - b.size();
        if (q.size() < s + 1) q.resize(s + 1, Integer(0));
        q[s] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            r[s + i] -= f * b[i];
            mpz_fdiv_r(r[s + i].get_mpz_t(), r[s + i].get_mpz_t(), m.get_mpz_t());
        }
        ztrim(r);
    }
    return {zmod(q, m), r};
}

// Extended Euclid over F_p lifted to ZPoly form: s*g + t*h = 1 mod p.
std::pair<ZPoly, ZPoly> bezout_mod_p(const Fp& F, const FpPoly& g, const FpPoly& h) {
    FpPoly r0 = g, r1 = h;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = F.divrem(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, F.sub(s0, F.mulp(q, s1)));
        t0 = std::exchange(t1, F.sub(t0, F.mulp(q, t1)));
    }
    if (Fp::deg(r0) != 0) throw InternalError("bezout_mod_p: inputs not coprime");
    const std::int64_t inv = F.inv(r0[0]);
    auto scale = [&](const FpPoly& f) {
        ZPoly z(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) z[i] = Integer(F.mul(f[i], inv));
        ztrim(z);
        return z;
    };
    return {scale(s0), scale(t0)};
}

ZPoly from_fp(const FpPoly& f) {
    ZPoly z(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) z[i] = Integer(f[i]);
    ztrim(z);
    return z;
}

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m),
// h monic, to the same data mod m^2 (von zur Gathen & Gerhard, Alg. 15.10).
struct HenselPair {
    ZPoly g, h, s, t;
};

HenselPair hensel_step(const ZPoly& f, HenselPair in, const Integer& m) {
    const Integer m2 = m * m;
    ZPoly e = zmod(f, m2);
    {
        ZPoly gh = zmul_mod(in.g, in.h, m2);
        for (std::size_t i = 0; i < gh.size(); ++i) {
            if (e.size() <= i) e.resize(i + 1, Integer(0));
            e[i] -= gh[i];
        }
        e = zmod(e, m2);
    }
    auto [q, r] = zdivrem_mod(zmul_mod(in.s, e, m2), in.h, m2);
    ZPoly g1 = in.g;
    {
        ZPoly te = zmul_mod(in.t, e, m2);
        ZPoly qg = zmul_mod(q, in.g, m2);
        const std::size_t n = std::max({g1.size(), te.size(), qg.size()});
        g1.resize(n, Integer(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (i < te.size()) g1[i] += te[i];
            if (i < qg.size()) g1[i] += qg[i];
        }
        g1 = zmod(g1, m2);
    }
    ZPoly h1 = in.h;
    {
        const std::size_t n = std::max(h1.size(), r.size());
        h1.resize(n, Integer(0));
        for (std::size_t i = 0; i < r.size(); ++i) h1[i] += r[i];
        h1 = zmod(h1, m2);
    }
    // refresh the Bezout pair
    ZPoly b = zmod(ZPoly{Integer(-1)}, m2);
    {
        ZPoly sg = zmul_mod(in.s, g1, m2);
        ZPoly th = zmul_mod(in.t, h1, m2);
        const std::size_t n = std::max({b.size(), sg.size(), th.size()});
        b.resize(n, Integer(0));
        for (std::size_t i = 0; i < sg.size(); ++i) b[i] += sg[i];
        for (std::size_t i = 0; i < th.size(); ++i) b[i] += th[i];
        b = zmod(b, m2); // b = s*g1 + t*h1 - 1 mod m^2
    }
    auto [c, d] = zdivrem_mod(zmul_mod(in.s, b, m2), h1, m2);
    ZPoly s1 = in.s;
    {
        const std::size_t n = std::max(s1.size(), d.size());
        s1.resize(n, Integer(0));
        for (std::size_t i = 0; i < d.size(); ++i) s1[i] -= d[i];
        s1 = zmod(s1, m2);
    }
    ZPoly t1 = in.t;
    {
        ZPoly tb = zmul_mod(in.t, b, m2);
        ZPoly cg = zmul_mod(c, g1, m2);
        const std::size_t n = std::max({t1.size(), tb.size(), cg.size()});
        t1.resize(n, Integer(0));
        for (std::size_t i = 0; i < tb.size(); ++i) t1[i] -= tb[i];
        for (std::size_t i = 0; i < cg.size(); ++i) t1[i] -= cg[i];
        t1 = zmod(t1, m2);
    }
    return {g1, h1, s1, t1};
}

// Lift f = lc(f) * prod(parts) from mod p to mod p^(2^k) >= bound, recursing
// on a balanced factor tree. Returns the parts monic mod the final modulus.
void hensel_lift_tree(const Fp& F, const ZPoly& f, const std::vector<FpPoly>& parts,
                      const Integer& modulus_target, std::vector<ZPoly>& out) {
    if (parts.size() == 1) {
        Integer m = F.p;
        while (m < modulus_target) m *= m;
        ZPoly g = zmod(f, m);
        Integer lead_inv;
        if (mpz_invert(lead_inv.get_mpz_t(), g.back().get_mpz_t(), m.get_mpz_t()) == 0)
            throw InternalError("hensel: leading coefficient not invertible");
        for (auto& c : g) c = (c * lead_inv) % m;
        ztrim(g);
        out.push_back(g);
        return;
    }
    const std::size_t half = parts.size() / 2;
    std::vector<FpPoly> left(parts.begin(), parts.begin() + static_cast<long>(half));
    std::vector<FpPoly> right(parts.begin() + static_cast<long>(half), parts.end());
    // G = lc(f) * prod(left), H = prod(right), both mod p
    FpPoly G{F.norm(mpz_fdiv_ui(f.back().get_mpz_t(), static_cast<unsigned long>(F.p)))};
    for (const auto& u : left) G = F.mulp(G, u);
    FpPoly H{1};
    for (const auto& u : right) H = F.mulp(H, u);
    auto [s, t] = bezout_mod_p(F, G, H);
    HenselPair pair{from_fp(G), from_fp(H), s, t};
    Integer m = F.p;
    while (m < modulus_target) {
        pair = hensel_step(zmod(f, m * m), pair, m);
        m *= m;
    }
    hensel_lift_tree(F, pair.g, left, modulus_target, out);
    hensel_lift_tree(F, pair.h, right, modulus_target, out);
}

// ---------------------------------------------------------------------------

// Coefficient bound for monic-normalized true factors scaled by lc(f)
// (Mignotte-style, deliberately generous).
Integer factor_bound(const ZPoly& f) {
    Integer sum = 0;
    for (const auto& c : f) sum += c * c;
    Integer norm2 = isqrt_floor(sum) + 1;
    Integer b = norm2 * abs(f.back());
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(zdeg(f) + 1));
    return b;
}

// Factor a primitive squarefree integer polynomial of degree >= 1 into
// irreducible primitive integer polynomials.
std::vector<ZPoly> zassenhaus(const ZPoly& input) {
    std::vector<ZPoly> result;
    ZPoly f = input;
    if (zdeg(f) == 1) {
        result.push_back(f);
        return result;
    }

    // Prime selection: smallest p >= 5 keeping f squarefree of full degree
    // mod p (equivalently p divides neither lc(f) nor disc(f)).
    std::int64_t p = 0;
    for (std::int64_t cand = 5;; ++cand) {
        bool prime = cand >= 2;
        for (std::int64_t d = 2; d * d <= cand; ++d)
            if (cand % d == 0) { prime = false; break; }
        if (!prime) continue;
        if (mpz_fdiv_ui(f.back().get_mpz_t(), static_cast<unsigned long>(cand)) == 0) continue;
        Fp F{cand};
        FpPoly fp(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            fp[i] = F.norm(static_cast<std::int64_t>(mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(cand))));
        Fp::trim(fp);
        if (Fp::deg(fp) != zdeg(f)) continue;
        if (Fp::deg(F.gcdp(fp, F.deriv(fp))) != 0) continue;
        p = cand;
        break;
    }
    Fp F{p};

    FpPoly fp(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        fp[i] = F.norm(static_cast<std::int64_t>(mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p))));
    std::vector<FpPoly> modular = factor_mod_p(F, fp);
    if (modular.size() == 1) {
        result.push_back(f);
        return result;
    }
    // Canonical order keeps the recombination sweep deterministic.
    std::sort(modular.begin(), modular.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });

    const Integer bound = 2 * factor_bound(f) + 1;
    Integer modulus = p;
    while (modulus < bound) modulus *= modulus;
    std::vector<ZPoly> lifted;
    hensel_lift_tree(F, zmod(f, modulus), modular, bound, lifted);
    // All factors end up mod p^(2^k) for the k reached from p; recompute it.
    Integer m = p;
    while (m < bound) m *= m;
    modulus = m;

    std::vector<bool> used(lifted.size(), false);
    std::size_t remaining = lifted.size();

    // Subset recombination by increasing cardinality; restart after every hit.
    while (remaining > 0 && zdeg(f) >= 1) {
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (!used[i]) active.push_back(i);
        bool found = false;
        for (std::size_t s = 1; !found && s <= active.size() / 2; ++s) {
            std::vector<std::size_t> idx(s);
            for (std::size_t i = 0; i < s; ++i) idx[i] = i;
            while (true) {
                ZPoly cand{f.back()};
                for (std::size_t i = 0; i < s; ++i) cand = zmul_mod(cand, lifted[active[idx[i]]], modulus);
                cand = symmetric_mod(cand, modulus);
                cand = zprimitive(cand);
                if (auto q = zdivexact(f, cand)) {
                    result.push_back(cand);
                    f = zprimitive(*q);
                    for (std::size_t i = 0; i < s; ++i) used[active[idx[i]]] = true;
                    remaining -= s;
                    found = true;
                    break;
                }
                // advance to the next size-s subset of active, lexicographically
                long j = static_cast<long>(s) - 1;
                while (j >= 0 && idx[static_cast<std::size_t>(j)] ==
                                     active.size() - s + static_cast<std::size_t>(j))
                    --j;
                if (j < 0) break;
                ++idx[static_cast<std::size_t>(j)];
                for (std::size_t k = static_cast<std::size_t>(j) + 1; k < s; ++k) idx[k] = idx[k - 1] + 1;
            }
        }
        if (!found) {
            // no proper subset works: what is left is irreducible
            result.push_back(f);
            remaining = 0;
        }
    }
    return result;
}

// Strips rational roots of a primitive squarefree integer polynomial; each
// root a/b becomes the primitive factor (b x - a). Falls back to doing
// nothing when the constant terms are too expensive to factor by trial
// division (Zassenhaus then picks the linears up anyway).
std::vector<Integer> divisors_by_trial(const Integer& n_in, bool& complete) {
    Integer n = abs(n_in);
    complete = true;
    std::vector<std::pair<Integer, unsigned>> primes;
    for (Integer d = 2; d * d <= n && d < 1000000; ++d) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) { n /= d; ++e; }
            primes.push_back({d, e});
        }
    }
    if (n > 1) {
        if (n < Integer(1000000) * Integer(1000000)) {
            primes.push_back({n, 1});
        } else {
            complete = false;
            return {};
        }
    }
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [q, e] : primes) {
        const std::size_t base = divs.size();
        Integer pw = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pw *= q;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

std::vector<ZPoly> extract_rational_roots(ZPoly& f) {
    std::vector<ZPoly> linears;
    if (zdeg(f) < 1) return linears;
    // roots at zero
    while (f.size() > 1 && f[0] == 0) {
        linears.push_back(ZPoly{Integer(0), Integer(1)});
        f.erase(f.begin());
    }
    if (zdeg(f) < 1) return linears;
    bool c0ok = false, cnok = false;
    std::vector<Integer> ds0 = divisors_by_trial(f[0], c0ok);
    std::vector<Integer> dsn = divisors_by_trial(f.back(), cnok);
    if (!c0ok || !cnok) return linears;
    bool progress = true;
    while (progress && zdeg(f) >= 1) {
        progress = false;
        for (const Integer& a0 : ds0) {
            for (const Integer& b0 : dsn) {
                if (gcd(a0, b0) != 1) continue;
                for (int sign = 0; sign < 2; ++sign) {
                    const Integer a = sign ? -a0 : a0;
                    // candidate root a/b0: test via exact division by (b0 x - a)
                    ZPoly lin{-a, b0};
                    if (auto q = zdivexact(f, lin)) {
                        linears.push_back(lin);
                        f = zprimitive(*q);
                        progress = true;
                    }
                    if (a0 == 0) break;
                }
            }
        }
    }
    return linears;
}

UniPoly monic_from_zpoly(const ZPoly& z) {
    UniPoly p = from_integer_coeffs(z);
    return p.monic();
}

} // namespace

Factorization factor_over_rationals(const UniPoly& a) {
    if (a.is_zero()) throw DomainError("factorization of zero polynomial");
    Factorization out;
    out.unit = a.leading();
    if (a.degree() < 1) return out;

    for (const auto& sq : squarefree_decompose(a)) {
        ZPoly z = to_primitive(sq.base).coeffs;
        std::vector<ZPoly> irred = extract_rational_roots(z);
        if (zdeg(z) >= 1) {
            std::vector<ZPoly> rest = zassenhaus(z);
            irred.insert(irred.end(), rest.begin(), rest.end());
        }
        for (const auto& g : irred) out.factors.push_back({monic_from_zpoly(g), sq.multiplicity});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    return out;
}

bool is_irreducible(const UniPoly& a) {
    if (a.degree() < 1) return false;
    Factorization f = factor_over_rationals(a);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

} // namespace k3fib
