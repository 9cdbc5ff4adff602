#include "twoside/ratfunc.hpp"

#include <sstream>

#include "twoside/parse.hpp"

namespace twoside {

RatFunc::RatFunc(UniPoly num, UniPoly den) {
    if (den.is_zero_poly()) fail(ErrorKind::Validation, "rational function with zero denominator");
    if (num.is_zero_poly()) {
        den_ = UniPoly(1);
        return;
    }
    if (den.degree() > 0) {
        UniPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
    }
    BigRat inv = 1 / den.lc();
    num_ = BigRat(inv) * num;
    den_ = den.monic();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc RatFunc::inverse() const {
    if (num_.is_zero_poly()) fail(ErrorKind::Internal, "inverse of zero in K");
    BigRat inv = 1 / num_.lc();
    return RatFunc(inv * den_, num_.monic(), Reduced{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.num_.is_zero_poly()) return b;
    if (b.num_.is_zero_poly()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.degree() == 0) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Reduced{});
        return RatFunc(a.num_ + b.num_, a.den_);
    }
    if (a.den_.degree() == 0) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, RatFunc::Reduced{});
    if (b.den_.degree() == 0) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, RatFunc::Reduced{});
    UniPoly g = gcd(a.den_, b.den_);
    if (g.degree() == 0) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Reduced{});
    UniPoly ad = a.den_ / g, bd = b.den_ / g;
    return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.num_.is_zero_poly() || b.num_.is_zero_poly()) return RatFunc();
    if (a.den_.degree() == 0 && b.den_.degree() == 0) return RatFunc(a.num_ * b.num_, UniPoly(1), RatFunc::Reduced{});
    UniPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    UniPoly g1 = gcd(an, bd), g2 = gcd(bn, ad);
    if (g1.degree() > 0) {
        an = an / g1;
        bd = bd / g1;
    }
    if (g2.degree() > 0) {
        bn = bn / g2;
        ad = ad / g2;
    }
    UniPoly num = an * bn, den = ad * bd;
    BigRat inv = 1 / den.lc();
    return RatFunc(inv * num, den.monic(), RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

BigRat RatFunc::eval(const BigRat& x) const {
    BigRat d = den_(x);
    if (is_zero(d)) fail(ErrorKind::Validation, "rational function has a pole at " + twoside::to_string(x));
    return BigRat(num_(x) / d);
}

std::string to_string(const UniPoly& p, char var) {
    if (p.is_zero_poly()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        BigRat c = p.coeff(i);
        if (is_zero(c)) continue;
        bool neg = sgn(c) < 0;
        BigRat a = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << twoside::to_string(a);
            continue;
        }
        if (a != 1) os << twoside::to_string(a) << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

namespace {
int term_count(const UniPoly& p) {
    int n = 0;
    for (const auto& c : p.coeffs()) n += !is_zero(c);
    return n;
}
}  // namespace

std::string to_string(const RatFunc& r, char var) {
    std::string n = to_string(r.num(), var);
    if (r.den().degree() == 0) return n;
    std::string d = to_string(r.den(), var);
    if (term_count(r.num()) > 1) n = "(" + n + ")";
    if (term_count(r.den()) > 1 || r.den().degree() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

RatFunc parse_ratfunc(const std::string& text) { return parse_rational_function(text, 't'); }

bool is_square_in_K(const RatFunc& m) {
    if (m.is_zero_value()) fail(ErrorKind::Validation, "is_square_in_K: m = 0");
    UniPoly p = m.num() * m.den();
    if (!is_rational_square(p.lc())) return false;
    if (p.degree() == 0) return true;
    if (p.degree() % 2) return false;
    for (const auto& [part, mult] : yun_squarefree(p).parts)
        if (mult % 2) return false;
    return true;
}

std::optional<RatFunc> sqrt_in_K(const RatFunc& m) {
    if (!is_square_in_K(m)) return std::nullopt;
    UniPoly p = m.num() * m.den();
    BigRat lead;
    is_rational_square(p.lc(), &lead);
    UniPoly h(lead);
    if (p.degree() > 0)
        for (const auto& [part, mult] : yun_squarefree(p).parts)
            for (int k = 0; k < mult / 2; ++k) h = h * part;
    return RatFunc(h, m.den());
}

int lueroth_degree(const RatFunc& m) {
    if (m.is_constant()) fail(ErrorKind::Validation, "not a generator of a subfield of finite index");
    return m.height();
}

}  // namespace twoside
