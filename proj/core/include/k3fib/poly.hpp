#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "k3fib/errors.hpp"
#include "k3fib/rational.hpp"

namespace k3fib {

// Dense univariate polynomial over a field K. The variable has no intrinsic
// name; callers decide whether it prints as t, u, x, ...
//
// K must support +, -, *, /, ==, construction from int, and K() == K(0).
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(const K& c) {
        if (!(c == K(0))) coeffs_.push_back(c);
    }
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return monomial(K(1), 1); }

    static Poly monomial(const K& c, std::size_t deg) {
        Poly p;
        if (c == K(0)) return p;
        p.coeffs_.assign(deg + 1, K(0));
        p.coeffs_[deg] = c;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is the sentinel -1 (standing in for -inf).
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const K& coeff(std::size_t i) const {
        static const K zero{};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const K& leading() const {
        if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    const std::vector<K>& coeffs() const { return coeffs_; }

    bool is_constant() const { return degree() <= 0; }
    bool is_monic() const { return !is_zero() && leading() == K(1); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(c));
    }

    Poly operator-() const {
        std::vector<K> c(coeffs_);
        for (auto& x : c) x = K(0) - x;
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const K& s, const Poly& p) {
        std::vector<K> c(p.coeffs_);
        for (auto& x : c) x = s * x;
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; requires b != 0.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        Poly r = a;
        Poly q;
        const int db = b.degree();
        const K& lb = b.leading();
        while (!r.is_zero() && r.degree() >= db) {
            const K f = r.leading() / lb;
            const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
            q.coeffs_.resize(std::max(q.coeffs_.size(), shift + 1), K(0));
            q.coeffs_[shift] = q.coeffs_[shift] + f;
            // r -= f * x^shift * b
            for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
                r.coeffs_[shift + i] = r.coeffs_[shift + i] - f * b.coeffs_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

    // Exact division, throws if the remainder is nonzero.
    static Poly divexact(const Poly& a, const Poly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw InternalError("divexact: division not exact");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        const K inv = K(1) / leading();
        return inv * *this;
    }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<K> c(coeffs_.size() - 1, K(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            c[i - 1] = K(static_cast<int>(i)) * coeffs_[i];
        return Poly(std::move(c));
    }

    Poly pow(unsigned long e) const {
        Poly result{K(1)};
        Poly base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // Horner evaluation in any ring V that K embeds into via `lift`.
    template <class V, class Lift>
    V eval(const V& x, Lift lift) const {
        V acc = lift(K(0));
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + lift(coeffs_[i]);
        return acc;
    }

    K eval(const K& x) const {
        return eval<K>(x, [](const K& c) { return c; });
    }

    Poly compose(const Poly& inner) const {
        Poly acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + Poly(coeffs_[i]);
        return acc;
    }

    // Multiply by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<K> c(coeffs_.size() + k, K(0));
        std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<long>(k));
        return Poly(std::move(c));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
Poly<K> lcm(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    return Poly<K>::divexact(a * b, gcd(a, b)).monic();
}

template <class K>
struct SquarefreeFactor {
    Poly<K> base;
    unsigned multiplicity;
};

// Yun's squarefree decomposition (characteristic 0): a = lc * prod base^mult
// with the bases monic, squarefree, pairwise coprime, multiplicities strictly
// increasing. Constant input yields an empty list.
template <class K>
std::vector<SquarefreeFactor<K>> squarefree_decompose(const Poly<K>& a) {
    if (a.is_zero()) throw DomainError("squarefree decomposition of zero polynomial");
    std::vector<SquarefreeFactor<K>> out;
    Poly<K> f = a.monic();
    if (f.degree() < 1) return out;
    Poly<K> fp = f.derivative();
    Poly<K> g = gcd(f, fp);
    Poly<K> w = Poly<K>::divexact(f, g);
    Poly<K> y = Poly<K>::divexact(fp, g);
    Poly<K> z = y - w.derivative();
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly<K> h = gcd(w, z);
        if (h.degree() > 0) out.push_back({h, i});
        w = Poly<K>::divexact(w, h);
        y = Poly<K>::divexact(z, h);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

// Field of fractions of Poly<K>, kept canonical: denominator monic and
// coprime to the numerator; zero is 0/1.
template <class K>
class RatFrac {
public:
    RatFrac() : num_(), den_(Poly<K>(K(1))) {}
    RatFrac(int n) : num_(Poly<K>(K(n))), den_(Poly<K>(K(1))) {} // NOLINT: implicit by design
    explicit RatFrac(const K& c) : num_(Poly<K>(c)), den_(Poly<K>(K(1))) {}
    explicit RatFrac(const Poly<K>& p) : num_(p), den_(Poly<K>(K(1))) {}
    RatFrac(const Poly<K>& num, const Poly<K>& den) : num_(num), den_(den) { normalize(); }

    static RatFrac variable() { return RatFrac(Poly<K>::variable()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFrac operator+(const RatFrac& a, const RatFrac& b) {
        return RatFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFrac operator-(const RatFrac& a, const RatFrac& b) {
        return RatFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFrac operator-() const {
        RatFrac r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFrac operator*(const RatFrac& a, const RatFrac& b) {
        return RatFrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFrac operator/(const RatFrac& a, const RatFrac& b) {
        if (b.is_zero()) throw DomainError("division by zero rational function");
        return RatFrac(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RatFrac& a, const RatFrac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFrac& a, const RatFrac& b) { return !(a == b); }

    RatFrac pow(unsigned long e) const {
        RatFrac r(K(1));
        RatFrac base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // deg(num) - deg(den); the zero function reports INT_MIN-ish sentinel via
    // is_zero() checks at call sites, so callers must test first.
    int degree_delta() const {
        if (is_zero()) throw DomainError("degree of zero rational function");
        return num_.degree() - den_.degree();
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly<K>::divexact(num_, g);
            den_ = Poly<K>::divexact(den_, g);
        }
        const K inv = K(1) / den_.leading();
        num_ = inv * num_;
        den_ = inv * den_;
    }

    Poly<K> num_, den_;
};

} // namespace k3fib
