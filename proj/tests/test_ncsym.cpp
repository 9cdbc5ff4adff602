#include "doctest.h"
#include "twoside/ncsym.hpp"

using namespace twoside;

namespace {

Embedding E(const char* s) { return Embedding(parse_bipoly(s)); }

const char* kFam = "(x^2+2)*y^2 - (x^2+1)";
const char* kRankEqual[] = {"y - x", "y - x - 1", "y - 2*x", "x*y - 1", kFam, "(x^2+1)*y^2 - (x^2+2)"};

// Span computation for R_{0,d} written directly against row-major coordinates of
// V(lambda) (x) V(mu) (x) V(lambda) (x) ..., moving scalars left one factor at a time.
struct BruteForce {
    std::size_t n;
    KMatrix T[2];
    KVec eta[2];

    // (e_{a_1} (x) ... (x) e_{a_p}) . c for the factors 0..p-1, a given as a flat index
    KVec push(int p, std::size_t a, const RatFunc& c) const {
        if (p == 0) return KVec{c};
        std::size_t last = a % n, prefix = a / n;
        KMatrix H = hom_eval(T[(p - 1) % 2], c);
        std::size_t size = 1;
        for (int i = 0; i < p; ++i) size *= n;
        KVec out(size);
        for (std::size_t k = 0; k < n; ++k) {
            if (is_zero(H(last, k))) continue;
            KVec head = push(p - 1, prefix, H(last, k));
            for (std::size_t x = 0; x < head.size(); ++x) out[x * n + k] += head[x];
        }
        return out;
    }

    std::size_t dim_a(int d) const {
        std::size_t total = 1;
        for (int i = 0; i < d; ++i) total *= n;
        std::vector<KVec> gens;
        for (int p = 0; p + 2 <= d; ++p) {
            std::size_t before = 1, after = 1;
            for (int i = 0; i < p; ++i) before *= n;
            for (int i = p + 2; i < d; ++i) after *= n;
            const KVec& q = eta[p % 2];
            for (std::size_t a = 0; a < before; ++a)
                for (std::size_t b = 0; b < after; ++b) {
                    KVec g(total);
                    for (std::size_t l = 0; l < n * n; ++l) {
                        if (is_zero(q[l])) continue;
                        KVec u = push(p, a, q[l]);
                        for (std::size_t x = 0; x < u.size(); ++x) g[(x * n * n + l) * after + b] += u[x];
                    }
                    gens.push_back(g);
                }
        }
        if (gens.empty()) return total;
        return total - rank(KMatrix::from_rows(gens, total));
    }
};

BruteForce brute_force(const Embedding& e) {
    TwoSidedVS lam = vs_from_embedding(e), mu = vs_from_embedding(swap_dual(e));
    return BruteForce{static_cast<std::size_t>(e.n()),
                      {lam.T(), mu.T()},
                      {unit_element(adjunction_data(mu, lam, 11)).coords, unit_element(adjunction_data(lam, mu, 11)).coords}};
}

}  // namespace

TEST_CASE("q_space examples") {
    QSpace id = q_space(E("y - x"), Parity::Even);
    CHECK(id.sub.dim() == 1);
    CHECK(id.sub.ambient->n() == 1);
    QSpace even = q_space(E(kFam), Parity::Even), odd = q_space(E(kFam), Parity::Odd);
    CHECK(even.sub.ambient->n() == 4);
    CHECK(even.sub.dim() == 1);
    CHECK(odd.sub.dim() == 1);
    // lambda and mu have the same shape for this relation, so the two units coincide
    CHECK(even.sub.basis == odd.sub.basis);
    Embedding shifted = family_embedding(parse_family_params("1,1,0,1,1,0,2"));
    CHECK(q_space(shifted, Parity::Even).sub.basis != q_space(shifted, Parity::Odd).sub.basis);
    CHECK_THROWS_AS(q_space(E("y - x^2"), Parity::Even), Error);
}

TEST_CASE("Q is one dimensional for every rank-equal corpus embedding") {
    for (const char* s : kRankEqual)
        for (Parity p : {Parity::Even, Parity::Odd}) CHECK(q_space(E(s), p).sub.dim() == 1);
}

TEST_CASE("units are central") {
    NcTruncation tr = ncsym_truncation(E(kFam), 0);
    for (const auto& u : tr.units) CHECK(is_central(u));
}

TEST_CASE("ncsym_truncation examples") {
    CHECK(ncsym_truncation(E("y - x"), 4).a_dims() == std::vector<std::size_t>{1, 1, 0, 0, 0});
    NcTruncation two = ncsym_truncation(E(kFam), 2);
    CHECK(two.cell(0, 2).dimB == 4);
    CHECK(two.cell(0, 2).dimR == 1);
    CHECK(two.cell(0, 2).dimA == 3);
    NcTruncation four = ncsym_truncation(E(kFam), 4);
    CHECK(four.a_dims() == std::vector<std::size_t>{1, 2, 3, 4, 5});
    CHECK(four.cell(0, 3).dimR == 4);
    for (int i = 0; i <= 4; ++i) {
        CHECK(four.cell(i, i).dimA == 1);
        if (i < 4) CHECK(four.cell(i, i + 1).dimA == 2);
    }
    CHECK_THROWS_AS(ncsym_truncation(E(kFam), -1), Error);
    CHECK_THROWS_AS(ncsym_truncation(E("y - x^2"), 2), Error);
    try {
        ncsym_truncation(E(kFam), 13);
        FAIL("window cap not enforced");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::Resource);
    }
}

TEST_CASE("truncation dimensions agree with the brute-force span") {
    for (const char* s : {kFam, "y - x", "(x^2+1)*y^2 - (x^2+2)"}) {
        Embedding e = E(s);
        NcTruncation tr = ncsym_truncation(e, 4);
        BruteForce bf = brute_force(e);
        for (int d = 0; d <= 4; ++d) CHECK(tr.cell(0, d).dimA == bf.dim_a(d));
    }
}

TEST_CASE("shift coherence of the dimension table") {
    NcTruncation tr = ncsym_truncation(E(kFam), 5);
    for (int d = 0; d <= 4; ++d) CHECK(tr.cell(0, d).dimA == tr.cell(1, 1 + d).dimA);
    for (int i = 0; i + 3 <= 5; ++i) CHECK(tr.cell(i, i + 3).dimA == 4);
}

TEST_CASE("multiplication consistency") {
    CHECK(multiplication_consistency(ncsym_truncation(E("y - x"), 3)).ok);
    CHECK(multiplication_consistency(ncsym_truncation(E(kFam), 4)).ok);
    Embedding shifted = family_embedding(parse_family_params("1,1,0,1,1,0,2"));
    NcTruncation good = ncsym_truncation(shifted, 4);
    CHECK(good.a_dims() == std::vector<std::size_t>{1, 2, 3, 4, 5});
    CHECK(multiplication_consistency(good).ok);
    MultReport bad = multiplication_consistency(ncsym_truncation(shifted, 4, NcOptions{kDefaultSeed, true}));
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.detail.empty());
    // the two units coincide for the symmetric relation, so nothing moves
    NcTruncation same = ncsym_truncation(E(kFam), 4, NcOptions{kDefaultSeed, true});
    CHECK(same.a_dims() == ncsym_truncation(E(kFam), 4).a_dims());
    CHECK(multiplication_consistency(same).ok);
}

TEST_CASE("ncsym_exists_check") {
    CHECK(ncsym_exists_check(E(kFam), 6));
    CHECK(ncsym_exists_check(E("y - x"), 6));
    CHECK_FALSE(ncsym_exists_check(E("y - x^2"), 2));
    for (const char* s : kRankEqual) CHECK(ncsym_exists_check(E(s), 6));
    CHECK_FALSE(ncsym_exists_check(E("y^2 - x"), 0));
}
