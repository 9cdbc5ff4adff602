#pragma once

// Elements of K = Q(t): reduced quotients num/den with den monic.

#include <optional>
#include <string>

#include "twoside/poly.hpp"

namespace twoside {

class RatFunc {
   public:
    RatFunc() : den_(1) {}
    RatFunc(int c) : num_(BigRat(c)), den_(1) {}
    RatFunc(const BigRat& c) : num_(c), den_(1) {}
    RatFunc(UniPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(UniPoly num, UniPoly den);

    static RatFunc t() { return RatFunc(UniPoly::var()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero_value() const { return num_.is_zero_poly(); }
    bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }
    BigRat constant_value() const { return num_.coeff(0); }
    // Degree of the field element in the Lüroth sense: max(deg num, deg den).
    int height() const { return std::max(num_.degree(), den_.degree()); }

    RatFunc operator-() const;
    RatFunc inverse() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // Value at a rational point; fails if the denominator vanishes there.
    BigRat eval(const BigRat& x) const;

   private:
    struct Reduced {};
    RatFunc(UniPoly num, UniPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    UniPoly num_, den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero_value(); }

// Text forms use the variable name `var` ("t" by default), e.g. "(t^2+1)/(t^2+2)".
std::string to_string(const UniPoly& p, char var = 't');
std::string to_string(const RatFunc& r, char var = 't');
RatFunc parse_ratfunc(const std::string& text);

// True iff m = h^2 for some h in K. Fails on m = 0.
bool is_square_in_K(const RatFunc& m);

// h with h^2 = m when m is a square in K.
std::optional<RatFunc> sqrt_in_K(const RatFunc& m);

// [k(t):k(m)] = max(deg num, deg den) for m in lowest terms. Fails on constant m.
int lueroth_degree(const RatFunc& m);

using KPoly = Poly<RatFunc>;

}  // namespace twoside
