#pragma once

// Sparse bivariate polynomials over Q in x and y.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twoside/ratfunc.hpp"

namespace twoside {

enum class Var { X, Y };

class BiPoly {
   public:
    using Key = std::pair<int, int>;  // (xdeg, ydeg)

    BiPoly() = default;
    BiPoly(const BigRat& c);
    BiPoly(int c) : BiPoly(BigRat(c)) {}
    static BiPoly x();
    static BiPoly y();
    static BiPoly term(const BigRat& c, int xdeg, int ydeg);

    // Terms in canonical (xdeg, ydeg) order, zero coefficients never stored.
    const std::map<Key, BigRat>& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    BigRat coeff(int xdeg, int ydeg) const;
    int deg_x() const;
    int deg_y() const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(int e) const;
    BiPoly derivative(Var v) const;
    // F(y, x).
    BiPoly swapped() const;
    // Scales to a primitive integer polynomial with positive leading term.
    BiPoly normalized() const;

    // Views: coefficient list in `v`, each coefficient a polynomial in the other variable.
    std::vector<UniPoly> coefficients_in(Var v) const;
    static BiPoly from_coefficients(const std::vector<UniPoly>& cs, Var v);

    // As a polynomial in y over K = Q(t) with x renamed t.
    KPoly as_kpoly_in_y() const;
    // Clears denominators of a polynomial in y over K (t renamed x).
    static BiPoly from_kpoly(const KPoly& p);

    // Substitutes a rational value for `v`, leaving a polynomial in the other variable.
    UniPoly specialize(Var v, const BigRat& value) const;

   private:
    void add_term(const Key& k, const BigRat& c);
    std::map<Key, BigRat> terms_;
};

// Sylvester resultant eliminating `v`; zero iff F and G share a factor of
// positive degree in `v`.
BiPoly resultant(const BiPoly& f, const BiPoly& g, Var v);

// gcd over Q[other] of the coefficients of F seen as a polynomial in `v`.
UniPoly content_in(const BiPoly& f, Var v);

// Human-readable form, descending (xdeg, ydeg), e.g. "x^2*y^2 - x^2 + 2*y^2 - 1".
std::string to_string(const BiPoly& f);
BiPoly parse_bipoly(const std::string& text);

// Term-list serialization [[c, i, j], ...] with c as a decimal-string rational.
std::vector<std::tuple<std::string, int, int>> to_term_list(const BiPoly& f);
BiPoly from_term_list(const std::vector<std::tuple<std::string, int, int>>& terms);

}  // namespace twoside
