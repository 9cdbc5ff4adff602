#include <random>

#include "doctest.h"
#include "support.hpp"
#include "twoside/adjunction.hpp"

using namespace twoside;
using namespace testsupport;

namespace {

Embedding E(const char* s) { return Embedding(parse_bipoly(s)); }
TwoSidedVS VE(const char* s) { return vs_from_embedding(E(s)); }
RatFunc K(const char* s) { return parse_ratfunc(s); }

const char* kFam = "(x^2+2)*y^2 - (x^2+1)";
const char* kRankEqual[] = {"y - x", "y - x - 1", "y - 2*x", "x*y - 1", kFam, "(x^2+1)*y^2 - (x^2+2)"};
const char* kCorpus[] = {"y - x", "y - x - 1", "y - 2*x", "x*y - 1", "y - x^2", "x - y^2", "y^2 - x",
                         kFam,    "(x^2+1)*y^2 - (x^2+2)", "y^3 - x^3 - x", "y^3 - x"};

KVec unit(std::size_t n, std::size_t i) {
    KVec v(n);
    v[i] = RatFunc(1);
    return v;
}

KVec add(KVec a, const KVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

TEST_CASE("pairing_eval examples") {
    std::mt19937_64 rng(50);
    for (int it = 0; it < 10; ++it) {
        RatFunc c = rand_ratfunc(rng);
        CHECK(pairing_eval(E("y - x"), 1, KVec{c}) == c);
    }
    Embedding fam = E(kFam);
    KVec one{RatFunc(1), RatFunc()};
    CHECK(pairing_eval(fam, 1, one) == RatFunc(1));
    CHECK(pairing_eval(fam, 2, one) == RatFunc());
    // s = 1 . t
    CHECK(pairing_eval(fam, 1, KVec{RatFunc(), RatFunc(1)}) == K("t"));
    CHECK(pairing_eval(fam, 2, KVec{RatFunc(), RatFunc(1)}) == RatFunc());
    CHECK(pairing_eval(fam, 2, KVec{K("t"), RatFunc()}) == RatFunc(1));
    CHECK_THROWS_AS(pairing_eval(fam, 3, one), Error);
    CHECK_THROWS_AS(pairing_eval(fam, 0, one), Error);
}

TEST_CASE("pairing functionals are right linear and reconstruct the element") {
    std::mt19937_64 rng(51);
    for (const char* s : kCorpus) {
        Embedding e = E(s);
        TwoSidedVS V = vs_from_embedding(e);
        for (int it = 0; it < 5; ++it) {
            KVec v = rand_kvec(rng, V.n(), 1);
            RatFunc b = rand_ratfunc(rng, 1);
            KVec vb = V.act_right(v, b);
            // v = sum_l t^l . 1 . e_l
            KVec back(V.n());
            RatFunc tl(1);
            for (int l = 1; l <= e.m(); ++l) {
                REQUIRE(pairing_eval(e, l, vb) == pairing_eval(e, l, v) * b);
                KVec tl_one(V.n());
                tl_one[0] = tl;
                back = add(back, V.act_right(tl_one, pairing_eval(e, l, v)));
                tl *= RatFunc::t();
            }
            CHECK(back == v);
        }
    }
}

TEST_CASE("pairing Gram matrix is invertible on simultaneous bases") {
    for (const char* s : kRankEqual) {
        Embedding e = E(s);
        TwoSidedVS V = vs_from_embedding(e);
        SimulBasis b = simultaneous_basis(V, 3);
        CHECK(rank(pairing_gram(e, b.vectors)) == static_cast<std::size_t>(e.m()));
    }
}

TEST_CASE("unit_element examples") {
    UnitElement id = unit_element(VE("y - x"), 1);
    CHECK(id.ambient->n() == 1);
    CHECK(id.coords == KVec{RatFunc(1)});
    UnitElement fam = unit_element(VE(kFam), 1);
    CHECK(fam.ambient->n() == 4);
    CHECK(fam.coords != KVec(4));
    CHECK(is_central(fam));
    CHECK(sub_closure(*fam.ambient, KMatrix(1, 4, fam.coords)).dim() == 1);
}

TEST_CASE("unit is independent of the simultaneous basis") {
    for (const char* s : {kFam, "x*y - 1", "(x^2+1)*y^2 - (x^2+2)"}) {
        TwoSidedVS V = VE(s);
        UnitElement first = unit_element(V, 1);
        SubBimodule q = sub_closure(*first.ambient, KMatrix(1, first.coords.size(), first.coords));
        for (std::uint64_t seed : {2u, 3u, 4u, 5u}) {
            UnitElement u = unit_element(V, seed);
            CHECK(u.coords == first.coords);
            CHECK(sub_closure(*u.ambient, KMatrix(1, u.coords.size(), u.coords)).basis == q.basis);
        }
    }
}

TEST_CASE("counit_apply examples") {
    TwoSidedVS V = VE(kFam);
    AdjunctionData d = adjunction_data(V, 2);
    auto yphi = [&](std::size_t i, std::size_t j) {
        return tensor_element(V, d.basis.vectors.row(i), d.functionals.row(j));
    };
    CHECK(counit_apply(d, yphi(0, 0)) == RatFunc(1));
    CHECK(counit_apply(d, yphi(0, 1)) == RatFunc());
    CHECK(counit_apply(d, add(yphi(0, 0), yphi(1, 1))) == RatFunc(2));
    // left linear, and balanced across the tensor sign
    RatFunc c = K("(t+3)/(t^2-5)");
    KVec scaled = yphi(1, 1);
    for (auto& x : scaled) x = c * x;
    CHECK(counit_apply(d, scaled) == c);
    KVec v = d.basis.vectors.row(0), x = d.functionals.row(1), cx = x;
    for (auto& e : cx) e = c * e;
    CHECK(counit_apply(d, tensor_element(V, V.act_right(v, c), x)) == counit_apply(d, tensor_element(V, v, cx)));
}

TEST_CASE("counit is the evaluation pairing on left coordinates") {
    std::mt19937_64 rng(52);
    for (const char* s : kRankEqual) {
        TwoSidedVS V = VE(s);
        AdjunctionData d = adjunction_data(V, 1);
        KMatrix Yinv = *inverse(d.basis.vectors);
        for (int it = 0; it < 3; ++it) {
            KVec v = rand_kvec(rng, V.n(), 1);
            // left coordinates of v in the basis
            KVec a = (KMatrix(1, V.n(), v) * Yinv).row(0);
            for (std::size_t j = 0; j < V.n(); ++j)
                CHECK(counit_apply(d, tensor_element(V, v, d.functionals.row(j))) == a[j]);
        }
    }
}

TEST_CASE("triangle identities") {
    CHECK(triangle_check(VE("y - x"), 1).ok);
    CHECK(triangle_check(VE(kFam), 1).ok);
    for (const char* s : kRankEqual) CHECK(triangle_check(VE(s), 7).ok);
    CHECK(triangle_check(direct_sum({VE("y - x"), VE(kFam)}), 3).ok);
}

TEST_CASE("perturbed units fail the triangle identities") {
    for (const char* s : {"y - x", kFam}) {
        TwoSidedVS V = VE(s);
        AdjunctionData d = adjunction_data(V, 1);
        KVec eta = unit_element(d).coords;
        KVec bad = eta;
        bad[0] += RatFunc(1);
        TriangleReport r = triangle_check(d, bad, 1);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.detail.empty());
        KVec doubled = eta;
        for (auto& x : doubled) x = RatFunc(2) * x;
        CHECK_FALSE(triangle_check(d, doubled, 1).ok);
    }
}

TEST_CASE("units for explicit models of the dual") {
    Embedding fam = E(kFam);
    TwoSidedVS lam = vs_from_embedding(fam), mu = vs_from_embedding(swap_dual(fam));
    AdjunctionData even = adjunction_data(mu, lam, 1);
    UnitElement e = unit_element(even);
    CHECK(triangle_check(even, e.coords, 2).ok);
    CHECK(is_central(e));
    AdjunctionData odd = adjunction_data(lam, mu, 1);
    CHECK(triangle_check(odd, unit_element(odd).coords, 2).ok);
    CHECK_THROWS_AS(adjunction_data(VE("y - x"), VE("y - x - 1"), 1), Error);
}
