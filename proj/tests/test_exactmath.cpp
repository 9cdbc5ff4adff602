#include <random>

#include "doctest.h"
#include "support.hpp"
#include "twoside/canonical.hpp"
#include "twoside/modp.hpp"
#include "twoside/parse.hpp"

using namespace twoside;
using namespace testsupport;

namespace {

UniPoly P(std::initializer_list<int> cs) {
    std::vector<BigRat> v;
    for (int c : cs) v.emplace_back(c);
    return UniPoly(v);
}

const UniPoly T = UniPoly::var();

RatFunc K(const char* s) { return parse_ratfunc(s); }

// Square root of a polynomial by matching coefficients from the top down.
// Returns false when no polynomial square root exists.
bool newton_sqrt(const UniPoly& p, UniPoly* out) {
    if (p.is_zero_poly()) {
        *out = UniPoly();
        return true;
    }
    if (p.degree() % 2) return false;
    int d = p.degree() / 2;
    BigRat lead;
    if (!is_rational_square(p.lc(), &lead)) return false;
    std::vector<BigRat> h(static_cast<std::size_t>(d) + 1, BigRat(0));
    h[d] = lead;
    for (int k = 1; k <= d; ++k) {
        // coefficient of t^(2d-k) in h^2 = 2 h_d h_(d-k) + sum_{0<i<k} h_(d-i) h_(d-k+i)
        BigRat acc = p.coeff(2 * d - k);
        for (int i = 1; i < k; ++i) acc -= h[d - i] * h[d - k + i];
        h[d - k] = acc / (2 * lead);
    }
    UniPoly r(h);
    if (r * r != p) return false;
    *out = r;
    return true;
}

// Faddeev-LeVerrier: independent characteristic polynomial.
KPoly leverrier(const KMatrix& A) {
    std::size_t n = A.rows();
    std::vector<RatFunc> c(n + 1);
    c[n] = RatFunc(1);
    KMatrix M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = A * M + KMatrix::scalar(n, c[n - k + 1]);
        KMatrix AM = A * M;
        RatFunc tr;
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / RatFunc(static_cast<int>(k));
    }
    return KPoly(c);
}

KPoly kx(std::initializer_list<RatFunc> cs) { return KPoly(std::vector<RatFunc>(cs)); }

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == BigRat(1, 2));
    CHECK(parse_rational("-1.25") == BigRat(-5, 4));
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    BigRat r;
    CHECK(is_rational_square(BigRat(9, 4), &r));
    CHECK(r == BigRat(3, 2));
    CHECK_FALSE(is_rational_square(BigRat(2)));
    CHECK_FALSE(is_rational_square(BigRat(-4)));
}

TEST_CASE("poly_gcd examples") {
    CHECK(gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    CHECK(gcd(P({1, 0, 1}), P({2, 0, 1})) == P({1}));
    CHECK(gcd(UniPoly(), P({0, 3})) == P({0, 1}));
    CHECK(gcd(UniPoly(), UniPoly()).is_zero_poly());
}

TEST_CASE("poly_gcd divides both and absorbs common divisors") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        UniPoly c = rand_nonzero_poly(rng, 3);
        UniPoly a = c * rand_nonzero_poly(rng, 4), b = c * rand_nonzero_poly(rng, 4);
        UniPoly g = gcd(a, b);
        REQUIRE(g.divides(a));
        REQUIRE(g.divides(b));
        CHECK(g.monic() == g);
        if (c.degree() > 0) CHECK(c.divides(g));
    }
}

TEST_CASE("xgcd Bezout identity") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 100; ++it) {
        UniPoly a = rand_nonzero_poly(rng, 5), b = rand_nonzero_poly(rng, 5);
        auto x = xgcd(a, b);
        CHECK(x.s * a + x.t * b == x.g);
        CHECK(x.g == gcd(a, b));
    }
}

TEST_CASE("yun_squarefree examples") {
    auto sf = yun_squarefree(P({1, 1}) * P({1, 1}) * P({-2, 1}));
    REQUIRE(sf.parts.size() == 2);
    CHECK(sf.parts[0] == std::make_pair(P({-2, 1}), 1));
    CHECK(sf.parts[1] == std::make_pair(P({1, 1}), 2));
    auto s2 = yun_squarefree(P({1, 0, 1}));
    REQUIRE(s2.parts.size() == 1);
    CHECK(s2.parts[0] == std::make_pair(P({1, 0, 1}), 1));
    auto s3 = yun_squarefree(P({0, 0, 4}));
    CHECK(s3.lc == 4);
    REQUIRE(s3.parts.size() == 1);
    CHECK(s3.parts[0] == std::make_pair(P({0, 1}), 2));
    CHECK_THROWS_AS(yun_squarefree(UniPoly()), Error);
}

TEST_CASE("yun_squarefree reconstructs random inputs") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        UniPoly p(1);
        std::uniform_int_distribution<int> mult(1, 3);
        while (p.degree() < 6) {
            UniPoly f = rand_nonzero_poly(rng, 3);
            int m = mult(rng);
            for (int k = 0; k < m; ++k) p = p * f;
        }
        if (p.degree() > 12) continue;
        auto sf = yun_squarefree(p);
        UniPoly back(sf.lc);
        for (const auto& [s, m] : sf.parts) {
            CHECK(gcd(s, s.derivative()).degree() == 0);
            for (int k = 0; k < m; ++k) back = back * s;
        }
        CHECK(back == p);
        for (std::size_t i = 0; i < sf.parts.size(); ++i)
            for (std::size_t j = i + 1; j < sf.parts.size(); ++j)
                CHECK(gcd(sf.parts[i].first, sf.parts[j].first).degree() == 0);
    }
}

TEST_CASE("rational function canonical form") {
    RatFunc r(P({-1, 0, 1}), P({-2, 2}));
    CHECK(r.num() == P({1, 1}) * UniPoly(BigRat(1, 2)));
    CHECK(r.den() == P({1}));
    RatFunc s(P({1}), P({2, 4}));
    CHECK(s.den() == UniPoly(std::vector<BigRat>{BigRat(1, 2), BigRat(1)}));
    CHECK(s.num() == UniPoly(BigRat(1, 4)));
    CHECK(K("(t^2+1)/(t^2+2)") * K("(t^2+2)/(t^2+1)") == RatFunc(1));
    CHECK(to_string(K("(t^2+1)/(t^2+2)")) == "(t^2 + 1)/(t^2 + 2)");
    CHECK(to_string(K("1/t")) == "1/t");
    CHECK_THROWS_AS(K("1/(t-t)"), Error);
    CHECK_THROWS_AS(K("2t"), Error);
}

TEST_CASE("rational function field axioms on random samples") {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 100; ++it) {
        RatFunc a = rand_ratfunc(rng), b = rand_ratfunc(rng), c = rand_nonzero_ratfunc(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * c) / c == a);
        CHECK(a - a == RatFunc());
        BigRat x = rand_rat(rng);
        if (!is_zero((a.den() * b.den())(x))) CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    }
}

TEST_CASE("is_square_in_K examples") {
    CHECK_FALSE(is_square_in_K(K("(t^2+1)/(t^2+2)")));
    CHECK(is_square_in_K(K("(t^2+2*t+1)/4")));
    CHECK_FALSE(is_square_in_K(K("t")));
    CHECK_THROWS_AS(is_square_in_K(RatFunc()), Error);
}

TEST_CASE("is_square_in_K agrees with coefficient-matching square root") {
    std::mt19937_64 rng(15);
    std::bernoulli_distribution coin(0.5);
    int squares = 0;
    for (int it = 0; it < 200; ++it) {
        RatFunc m;
        if (coin(rng)) {
            RatFunc h = rand_nonzero_ratfunc(rng, 4);
            m = h * h;
        } else {
            m = RatFunc(rand_nonzero_poly(rng, 8), rand_nonzero_poly(rng, 8));
        }
        if (m.is_zero_value()) continue;
        // m = h^2 in K iff num*den = (h*den)^2 in Q[t].
        UniPoly root;
        bool oracle = newton_sqrt(m.num() * m.den(), &root);
        CHECK(is_square_in_K(m) == oracle);
        squares += oracle;
    }
    CHECK(squares > 50);
}

TEST_CASE("lueroth_degree examples") {
    CHECK(lueroth_degree(K("(t^2+1)/(t^2+2)")) == 2);
    CHECK(lueroth_degree(K("t")) == 1);
    CHECK(lueroth_degree(K("t^3")) == 3);
    CHECK_THROWS_WITH(lueroth_degree(K("5")), "not a generator of a subfield of finite index");
}

TEST_CASE("bivariate parsing and canonical printing") {
    BiPoly f = parse_bipoly("(x^2+2)*y^2 - (x^2+1)");
    CHECK(f.deg_x() == 2);
    CHECK(f.deg_y() == 2);
    CHECK(f.coeff(2, 2) == 1);
    CHECK(f.coeff(0, 0) == -1);
    CHECK(to_string(parse_bipoly("x - y - 1")) == "x - y - 1");
    CHECK(parse_bipoly(to_string(f)) == f);
    CHECK(from_term_list(to_term_list(f)) == f);
    CHECK(parse_bipoly("y/2 - x") == parse_bipoly("1/2*y - x"));
    CHECK_THROWS_AS(parse_bipoly("2x"), Error);
    CHECK_THROWS_AS(parse_bipoly("y/x"), Error);
    CHECK_THROWS_AS(parse_bipoly("y + z"), Error);
    CHECK_THROWS_AS(parse_bipoly(""), Error);
    CHECK(f.swapped().swapped() == f);
}

TEST_CASE("resultant examples") {
    BiPoly x = BiPoly::x(), y = BiPoly::y();
    CHECK(resultant(y - x, y - x - BiPoly(1), Var::Y) == BiPoly(-1));
    BiPoly f = y * y - x;
    BiPoly disc = resultant(f, f.derivative(Var::Y), Var::Y);
    // Equal to the discriminant 4x up to the conventional sign.
    CHECK((disc == BiPoly(4) * x || disc == BiPoly(-4) * x));
    CHECK(resultant(y - x, y - x, Var::Y).is_zero_poly());
}

TEST_CASE("resultant vanishes exactly on shared factors") {
    std::mt19937_64 rng(16);
    BiPoly x = BiPoly::x(), y = BiPoly::y();
    for (int it = 0; it < 30; ++it) {
        BiPoly common = y - BiPoly::from_coefficients({rand_nonzero_poly(rng, 2)}, Var::Y);
        BiPoly a = y * y + BiPoly(rand_rat(rng)) * x;
        BiPoly b = y + BiPoly(rand_rat(rng)) * x * x + BiPoly(1);
        CHECK(resultant(common * a, common * b, Var::Y).is_zero_poly());
        // Product rule Res(gh, k) = Res(g, k) Res(h, k) for monic-in-y factors.
        CHECK(resultant(a * common, b, Var::Y) == resultant(a, b, Var::Y) * resultant(common, b, Var::Y));
    }
}

TEST_CASE("mat_solve examples") {
    QMatrix I = QMatrix::identity(3);
    QMatrix b(3, 1, {BigRat(1), BigRat(2), BigRat(3)});
    CHECK(*solve(I, b) == b);
    KMatrix M(2, 2, {K("t"), RatFunc(), RatFunc(), K("t")});
    KMatrix rhs(2, 1, {RatFunc(1), RatFunc(1)});
    CHECK(*solve(M, rhs) == KMatrix(2, 1, {K("1/t"), K("1/t")}));
    QMatrix S(2, 2, {BigRat(1), BigRat(2), BigRat(2), BigRat(4)});
    CHECK_FALSE(solve(S, QMatrix(2, 1, {BigRat(1), BigRat(0)})).has_value());
    CHECK_THROWS_AS(solve(S, QMatrix(3, 1)), Error);
}

TEST_CASE("linear algebra over K on random matrices") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 20; ++it) {
        KMatrix A = rand_invertible(rng, 3);
        KMatrix Ai = *inverse(A);
        CHECK(A * Ai == KMatrix::identity(3));
        CHECK(determinant(A) * determinant(Ai) == RatFunc(1));
        KMatrix B = rand_kmatrix(rng, 3);
        B(2, 0) = B(0, 0) + B(1, 0);
        B(2, 1) = B(0, 1) + B(1, 1);
        B(2, 2) = B(0, 2) + B(1, 2);
        KMatrix ker = kernel(B.transpose());
        CHECK(ker.cols() + rank(B) == 3);
        CHECK((B.transpose() * ker).is_zero_matrix());
    }
}

TEST_CASE("smith_invariant_factors examples") {
    RatFunc m = K("(t^2+1)/(t^2+2)");
    KMatrix C(2, 2, {RatFunc(), RatFunc(1), m, RatFunc()});
    auto f1 = smith_invariant_factors(char_matrix(C));
    REQUIRE(f1.size() == 2);
    CHECK(f1[0] == KPoly(1));
    CHECK(f1[1] == kx({-m, RatFunc(), RatFunc(1)}));

    RatFunc t2 = K("t^2");
    auto f2 = smith_invariant_factors(char_matrix(KMatrix(2, 2, {t2, RatFunc(), RatFunc(), t2})));
    CHECK(f2 == std::vector<KPoly>{kx({-t2, RatFunc(1)}), kx({-t2, RatFunc(1)})});

    auto f3 = smith_invariant_factors(char_matrix(KMatrix(2, 2, {t2, RatFunc(1), RatFunc(), t2})));
    KPoly lin = kx({-t2, RatFunc(1)});
    CHECK(f3 == std::vector<KPoly>{KPoly(1), lin * lin});

    CHECK_THROWS_AS(smith_invariant_factors(PolyMatrix{{KPoly(1), KPoly(1)}}), Error);
}

TEST_CASE("invariant factors are a similarity invariant and divide in sequence") {
    std::mt19937_64 rng(18);
    for (int it = 0; it < 15; ++it) {
        std::size_t n = 2 + it % 2;
        KMatrix A = rand_kmatrix(rng, n);
        if (it % 3 == 0) A = KMatrix::scalar(n, rand_ratfunc(rng, 1));
        KMatrix Pm = rand_invertible(rng, n);
        KMatrix B = Pm * A * *inverse(Pm);
        auto fa = smith_invariant_factors(char_matrix(A));
        CHECK(fa == smith_invariant_factors(char_matrix(B)));
        KPoly prod(1);
        for (std::size_t i = 0; i < fa.size(); ++i) {
            prod = prod * fa[i];
            if (i + 1 < fa.size()) CHECK(fa[i].divides(fa[i + 1]));
        }
        CHECK(prod == leverrier(A));
    }
}

TEST_CASE("charpoly agrees with Faddeev-LeVerrier") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 1 + it % 4;
        KMatrix A = rand_kmatrix(rng, n);
        if (it % 5 == 0) A(n - 1, 0) = RatFunc();
        CHECK(charpoly(A) == leverrier(A));
    }
    RatFunc m = K("(t^2+1)/(t^2+2)");
    CHECK(charpoly(KMatrix(2, 2, {RatFunc(), RatFunc(1), m, RatFunc()})) == kx({-m, RatFunc(), RatFunc(1)}));
}

TEST_CASE("hom_eval examples") {
    KMatrix t2(1, 1, {K("t^2")});
    CHECK(hom_eval(t2, K("t+1")) == KMatrix(1, 1, {K("t^2+1")}));
    CHECK(hom_eval(t2, K("1/t")) == KMatrix(1, 1, {K("1/t^2")}));
    RatFunc m = K("(t^2+1)/(t^2+2)");
    KMatrix C(2, 2, {RatFunc(), RatFunc(1), m, RatFunc()});
    CHECK(hom_eval(C, K("t^2")) == KMatrix::scalar(2, m));
    CHECK(hom_eval(C, K("t")) == C);
    CHECK_THROWS_WITH(hom_eval(KMatrix(1, 1, {RatFunc(1)}), K("1/(t-1)")), "not an embedding-induced action");
}

TEST_CASE("hom_eval is a ring homomorphism") {
    std::mt19937_64 rng(20);
    RatFunc m = K("(t^2+1)/(t^2+2)");
    KMatrix C(2, 2, {RatFunc(), RatFunc(1), m, RatFunc()});
    for (int it = 0; it < 30; ++it) {
        RatFunc a = rand_ratfunc(rng), b = rand_ratfunc(rng);
        CHECK(hom_eval(C, a + b) == hom_eval(C, a) + hom_eval(C, b));
        CHECK(hom_eval(C, a * b) == hom_eval(C, a) * hom_eval(C, b));
    }
    CHECK(hom_eval(C, RatFunc(1)) == KMatrix::identity(2));
}

TEST_CASE("mod-p irreducibility certificates") {
    CHECK(certify_irreducible_over_Q(P({-2, 0, 0, 1})));
    // x^5 + x + 1 = (x^2 + x + 1)(x^3 - x^2 + 1)
    CHECK_FALSE(certify_irreducible_over_Q(UniPoly(BigRat(3, 7)) * P({1, 1, 0, 0, 0, 1})));
    CHECK_FALSE(certify_irreducible_over_Q(P({-1, 0, 0, 1})));
    CHECK_FALSE(certify_irreducible_over_Q(P({2, 0, 3, 0, 1})));
    // x^4 + 1 is irreducible over Q but splits modulo every prime: never certified.
    CHECK_FALSE(certify_irreducible_over_Q(P({1, 0, 0, 0, 1})));
    CHECK(certify_irreducible_over_Q(P({-1, -1, 0, 0, 0, 1})));
    auto sums = factor_degree_sums_mod_p(P({1, 0, 1}), 5);
    CHECK(sums == std::set<int>{0, 1, 2});
    CHECK(factor_degree_sums_mod_p(P({1, 0, 1}), 3) == std::set<int>{0, 2});
}
