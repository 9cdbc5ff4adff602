#pragma once

// Dense univariate polynomials over an exact field F (BigRat or RatFunc).
// Coefficients are stored lowest degree first; the zero polynomial is the
// empty sequence, so degree() == -1 for it.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "twoside/error.hpp"
#include "twoside/rational.hpp"

namespace twoside {

template <class F>
class Poly {
   public:
    using value_type = F;

    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const F& constant) {
        if (!is_zero(constant)) c_.push_back(constant);
    }
    Poly(int constant) : Poly(F(constant)) {}

    static Poly monomial(const F& coeff, int deg) {
        if (is_zero(coeff)) return {};
        std::vector<F> c(static_cast<std::size_t>(deg) + 1, F(0));
        c.back() = coeff;
        return Poly(std::move(c));
    }
    static Poly var() { return monomial(F(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F(0); }
    F lc() const { return c_.empty() ? F(0) : c_.back(); }

    Poly monic() const {
        if (c_.empty()) return {};
        F inv = F(1) / c_.back();
        std::vector<F> r(c_.size(), F(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * inv;
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> r(c_.size() - 1, F(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<int>(i));
        return Poly(std::move(r));
    }

    // Horner evaluation.
    F operator()(const F& x) const {
        F acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly operator-() const {
        std::vector<F> r(c_.size(), F(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& s, const Poly& p) {
        if (is_zero(s)) return {};
        std::vector<F> r(p.c_.size(), F(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.c_.empty()) fail(ErrorKind::Internal, "polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly(), a};
        std::vector<F> rem = a.c_;
        std::vector<F> quo(a.c_.size() - b.c_.size() + 1, F(0));
        F inv = F(1) / b.c_.back();
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            F q = rem[k + b.degree()] * inv;
            quo[k] = q;
            if (is_zero(q)) continue;
            for (int j = 0; j <= b.degree(); ++j) rem[k + j] = rem[k + j] - q * b.c_[j];
        }
        rem.resize(static_cast<std::size_t>(b.degree()));
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    bool divides(const Poly& other) const { return !c_.empty() && (other % *this).is_zero_poly(); }

   private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero_poly()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
struct XGcd {
    Poly<F> g, s, t;
};

template <class F>
XGcd<F> xgcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero_poly()) {
        auto [q, r] = Poly<F>::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero_poly()) return {r0, s0, t0};
    F inv = F(1) / r0.lc();
    return {inv * r0, inv * s0, inv * t0};
}

// Square-free decomposition (Yun). Returns the leading coefficient and the
// monic pairwise coprime square-free parts with multiplicities.
template <class F>
struct SquareFree {
    F lc;
    std::vector<std::pair<Poly<F>, int>> parts;
};

template <class F>
SquareFree<F> yun_squarefree(const Poly<F>& p) {
    if (p.is_zero_poly()) fail(ErrorKind::Validation, "square-free decomposition of the zero polynomial");
    SquareFree<F> out{p.lc(), {}};
    Poly<F> f = p.monic();
    if (f.degree() == 0) return out;
    Poly<F> fp = f.derivative();
    Poly<F> a = gcd(f, fp);
    Poly<F> b = f / a, c = fp / a;
    Poly<F> d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Poly<F> g = gcd(b, d);
        if (g.degree() > 0) out.parts.emplace_back(g.monic(), i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
    }
    return out;
}

using UniPoly = Poly<BigRat>;

}  // namespace twoside
