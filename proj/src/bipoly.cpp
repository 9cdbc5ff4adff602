#include "twoside/bipoly.hpp"

#include <sstream>

#include "twoside/matrix.hpp"
#include "twoside/parse.hpp"

namespace twoside {

BiPoly::BiPoly(const BigRat& c) {
    if (!is_zero(c)) terms_[{0, 0}] = c;
}

BiPoly BiPoly::x() { return term(1, 1, 0); }
BiPoly BiPoly::y() { return term(1, 0, 1); }

BiPoly BiPoly::term(const BigRat& c, int xdeg, int ydeg) {
    BiPoly p;
    p.add_term({xdeg, ydeg}, c);
    return p;
}

void BiPoly::add_term(const Key& k, const BigRat& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
}

BigRat BiPoly::coeff(int xdeg, int ydeg) const {
    auto it = terms_.find({xdeg, ydeg});
    return it == terms_.end() ? BigRat(0) : it->second;
}

int BiPoly::deg_x() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::deg_y() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

BiPoly BiPoly::pow(int e) const {
    BiPoly acc(1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

BiPoly BiPoly::derivative(Var v) const {
    BiPoly r;
    for (const auto& [k, c] : terms_) {
        int d = v == Var::X ? k.first : k.second;
        if (d == 0) continue;
        Key nk = v == Var::X ? Key{k.first - 1, k.second} : Key{k.first, k.second - 1};
        r.add_term(nk, c * d);
    }
    return r;
}

BiPoly BiPoly::swapped() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
    return r;
}

BiPoly BiPoly::normalized() const {
    if (terms_.empty()) return {};
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& [k, c] : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    BigRat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(terms_.rbegin()->second) < 0) scale = -scale;
    BiPoly r = *this;
    for (auto& [k, c] : r.terms_) c *= scale;
    return r;
}

std::vector<UniPoly> BiPoly::coefficients_in(Var v) const {
    int d = v == Var::X ? deg_x() : deg_y();
    std::vector<std::vector<BigRat>> raw(static_cast<std::size_t>(std::max(d + 1, 0)));
    int od = v == Var::X ? deg_y() : deg_x();
    for (auto& r : raw) r.assign(static_cast<std::size_t>(od + 1), BigRat(0));
    for (const auto& [k, c] : terms_) {
        int main = v == Var::X ? k.first : k.second;
        int other = v == Var::X ? k.second : k.first;
        raw[main][other] = c;
    }
    std::vector<UniPoly> out;
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
}

BiPoly BiPoly::from_coefficients(const std::vector<UniPoly>& cs, Var v) {
    BiPoly r;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (int j = 0; j <= cs[i].degree(); ++j) {
            int main = static_cast<int>(i);
            r.add_term(v == Var::X ? Key{main, j} : Key{j, main}, cs[i].coeff(j));
        }
    return r;
}

KPoly BiPoly::as_kpoly_in_y() const {
    std::vector<RatFunc> cs;
    for (auto& p : coefficients_in(Var::Y)) cs.emplace_back(std::move(p));
    return KPoly(std::move(cs));
}

BiPoly BiPoly::from_kpoly(const KPoly& p) {
    UniPoly den(1);
    for (const auto& c : p.coeffs()) den = den / gcd(den, c.den()) * c.den();
    std::vector<UniPoly> cs;
    for (const auto& c : p.coeffs()) cs.push_back(c.num() * (den / c.den()));
    return from_coefficients(cs, Var::Y).normalized();
}

UniPoly BiPoly::specialize(Var v, const BigRat& value) const {
    std::vector<UniPoly> cs = coefficients_in(v == Var::X ? Var::Y : Var::X);
    std::vector<BigRat> out;
    for (const auto& c : cs) out.push_back(c(value));
    return UniPoly(std::move(out));
}

BiPoly resultant(const BiPoly& f, const BiPoly& g, Var v) {
    if (f.is_zero_poly() || g.is_zero_poly()) fail(ErrorKind::Validation, "resultant of a zero polynomial");
    std::vector<UniPoly> fc = f.coefficients_in(v), gc = g.coefficients_in(v);
    int m = static_cast<int>(fc.size()) - 1, n = static_cast<int>(gc.size()) - 1;
    if (m == 0 && n == 0) return BiPoly(1);
    std::size_t size = static_cast<std::size_t>(m + n);
    KMatrix syl(size, size);
    // Rows 0..n-1 hold shifted copies of f, rows n..n+m-1 copies of g; highest degree first.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) syl(i, i + j) = RatFunc(fc[m - j]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) syl(n + i, i + j) = RatFunc(gc[n - j]);
    RatFunc det = determinant(syl);
    if (!det.is_polynomial()) fail(ErrorKind::Internal, "resultant is not a polynomial");
    UniPoly d = det.num();
    BiPoly r;
    for (int i = 0; i <= d.degree(); ++i)
        r = r + (v == Var::Y ? BiPoly::term(d.coeff(i), i, 0) : BiPoly::term(d.coeff(i), 0, i));
    return r;
}

UniPoly content_in(const BiPoly& f, Var v) {
    UniPoly g;
    for (const auto& c : f.coefficients_in(v)) g = gcd(g, c);
    return g;
}

std::string to_string(const BiPoly& f) {
    if (f.is_zero_poly()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        auto [xd, yd] = it->first;
        const BigRat& c = it->second;
        bool neg = sgn(c) < 0;
        BigRat a = abs(c);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string mono;
        if (xd > 0) mono += xd == 1 ? "x" : "x^" + std::to_string(xd);
        if (yd > 0) mono += std::string(mono.empty() ? "" : "*") + (yd == 1 ? "y" : "y^" + std::to_string(yd));
        if (mono.empty())
            os << to_string(a);
        else if (a == 1)
            os << mono;
        else
            os << to_string(a) << "*" << mono;
    }
    return os.str();
}

BiPoly parse_bipoly(const std::string& text) { return parse_bipoly_expr(text); }

std::vector<std::tuple<std::string, int, int>> to_term_list(const BiPoly& f) {
    std::vector<std::tuple<std::string, int, int>> out;
    for (const auto& [k, c] : f.terms()) out.emplace_back(to_string(c), k.first, k.second);
    return out;
}

BiPoly from_term_list(const std::vector<std::tuple<std::string, int, int>>& terms) {
    BiPoly r;
    for (const auto& [c, i, j] : terms) {
        if (i < 0 || j < 0) fail(ErrorKind::Validation, "negative exponent in term list");
        r = r + BiPoly::term(parse_rational(c), i, j);
    }
    return r;
}

}  // namespace twoside
