#include "twoside/selftest.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace twoside {

const std::vector<std::string>& builtin_corpus() {
    static const std::vector<std::string> corpus{"y - x",   "y - x - 1", "y - 2*x", "x*y - 1",
                                                 "y - x^2", "x - y^2",   "y^2 - x", kFamilyExample,
                                                 "(x^2+1)*y^2 - (x^2+2)", "y^3 - x^3 - x", "y^3 - x"};
    return corpus;
}

const std::vector<std::string>& rank_equal_corpus() {
    static const std::vector<std::string> corpus{"y - x",        "y - x - 1", "y - 2*x",
                                                 "x*y - 1",      kFamilyExample, "(x^2+1)*y^2 - (x^2+2)",
                                                 "y^3 - x^3 - x"};
    return corpus;
}

const char* const kFamilyConditions[5] = {"a = d = 0", "b² = 4ac", "e² = 4df", "ae ≠ bd", "af = cd"};

namespace {

BigRat rand_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    BigRat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

BigRat rand_nonzero_q(std::mt19937_64& rng) {
    for (;;) {
        BigRat q = rand_q(rng);
        if (!is_zero(q)) return q;
    }
}

bool holds(const FamilyParams& p, int condition) {
    switch (condition) {
        case 0: return is_zero(p.a) && is_zero(p.d);
        case 1: return p.b * p.b == 4 * p.a * p.c;
        case 2: return p.e * p.e == 4 * p.d * p.f;
        case 3: return p.a * p.e != p.b * p.d;
        default: return p.a * p.f == p.c * p.d;
    }
}

}  // namespace

FamilyParams random_family_params(std::mt19937_64& rng) {
    for (;;) {
        FamilyParams p;
        p.alpha = rand_q(rng);
        p.a = rand_nonzero_q(rng);
        p.d = rand_nonzero_q(rng);
        p.b = rand_q(rng);
        p.c = rand_q(rng);
        p.f = rand_q(rng);
        p.e = p.b * p.d / p.a;
        bool ok = true;
        for (int c = 0; c < 5; ++c) ok = ok && !holds(p, c);
        if (ok) return p;
    }
}

FamilyParams violating_family_params(std::mt19937_64& rng, int condition) {
    if (condition < 0 || condition > 4) fail(ErrorKind::Validation, "family condition index out of range");
    for (;;) {
        FamilyParams p;
        p.alpha = rand_q(rng);
        p.a = rand_nonzero_q(rng);
        p.d = rand_nonzero_q(rng);
        p.b = rand_q(rng);
        p.c = rand_q(rng);
        p.f = rand_q(rng);
        p.e = p.b * p.d / p.a;
        switch (condition) {
            case 0:
                p.a = p.d = 0;
                p.b = rand_nonzero_q(rng);
                p.e = rand_nonzero_q(rng);
                break;
            case 1: p.c = p.b * p.b / (4 * p.a); break;
            case 2:
                p.e = rand_q(rng);
                p.f = p.e * p.e / (4 * p.d);
                p.b = p.a * p.e / p.d;
                break;
            case 3: p.e = rand_q(rng); break;
            case 4: p.f = p.c * p.d / p.a; break;
        }
        bool ok = holds(p, condition);
        for (int c = 0; c < 5; ++c)
            if (c != condition && !(condition == 0 && c == 4)) ok = ok && !holds(p, c);
        if (ok) return p;
    }
}

std::vector<std::size_t> brute_force_a_dims(const Embedding& e, int dmax, std::uint64_t seed) {
    if (e.n() != e.m()) fail(ErrorKind::Validation, "non-commutative symmetric algebra needs a rank-equal embedding");
    TwoSidedVS lam = vs_from_embedding(e), mu = vs_from_embedding(swap_dual(e));
    const std::size_t n = static_cast<std::size_t>(e.n());
    const KMatrix T[2] = {lam.T(), mu.T()};
    const KVec eta[2] = {unit_element(adjunction_data(mu, lam, seed)).coords,
                         unit_element(adjunction_data(lam, mu, seed)).coords};
    // (e_{a_1} (x) ... (x) e_{a_p}) . c, scalars moved left one factor at a time
    std::function<KVec(int, std::size_t, const RatFunc&)> push = [&](int p, std::size_t a, const RatFunc& c) {
        if (p == 0) return KVec{c};
        std::size_t last = a % n, prefix = a / n, size = 1;
        for (int i = 0; i < p; ++i) size *= n;
        KMatrix H = hom_eval(T[(p - 1) % 2], c);
        KVec out(size);
        for (std::size_t k = 0; k < n; ++k) {
            if (is_zero(H(last, k))) continue;
            KVec head = push(p - 1, prefix, H(last, k));
            for (std::size_t x = 0; x < head.size(); ++x) out[x * n + k] += head[x];
        }
        return out;
    };
    std::vector<std::size_t> dimsA;
    for (int d = 0; d <= dmax; ++d) {
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
                    gens.push_back(std::move(g));
                }
        }
        dimsA.push_back(gens.empty() ? total : total - rank(KMatrix::from_rows(gens, total)));
    }
    return dimsA;
}

namespace {

using Clock = std::chrono::steady_clock;

Embedding E(const std::string& s) { return Embedding(parse_bipoly(s)); }

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// Each check returns an empty string on success, else the first failure.
std::string c1_family_rank(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 100; ++it) {
        FamilyParams p = random_family_params(rng);
        Dims d = dims(vs_from_embedding(family_embedding(p)));
        if (d != Dims{2, 2}) return "params " + to_string(p) + " gave dims " + to_string(d);
    }
    for (int it = 0; it < 20; ++it) {
        int cond = it % 5;
        FamilyParams p = violating_family_params(rng, cond);
        try {
            family_embedding(p);
            return "params " + to_string(p) + " accepted";
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::Validation || std::string(err.what()) != kFamilyConditions[cond])
                return "params " + to_string(p) + " rejected with '" + err.what() + "'";
        }
    }
    for (int it = 0; it < 5; ++it) {
        // b² = 4ac and e² = 4df with a/d a square
        FamilyParams p;
        p.alpha = BigRat(it - 2);
        p.d = BigRat(it + 1);
        BigRat k(it % 2 ? 2 : 3, it + 1);
        k.canonicalize();
        p.a = p.d * k * k;
        p.b = BigRat(it - 1);
        p.c = p.b * p.b / (4 * p.a);
        p.e = BigRat(3 - it);
        p.f = p.e * p.e / (4 * p.d);
        if (!is_square_in_K(family_m(p))) return "degenerate params " + to_string(p) + " gave a non-square m";
        try {
            embedding_new(family_relation(p));
            return "degenerate params " + to_string(p) + " accepted as irreducible";
        } catch (const Error& err) {
            if (std::string(err.what()) != "F reducible: V(λ) would not be simple")
                return "degenerate params " + to_string(p) + " rejected with '" + err.what() + "'";
        }
    }
    return "";
}

std::string c2_lueroth(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 100; ++it) {
        FamilyParams p = random_family_params(rng);
        RatFunc m = family_m(p);
        if (lueroth_degree(m) != 2) return "params " + to_string(p) + ": Lueroth degree " + std::to_string(lueroth_degree(m));
        if (is_square_in_K(m)) return "params " + to_string(p) + ": m is a square";
    }
    return "";
}

std::string c3_dual_formula(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 3);
    std::vector<Embedding> es{E(kFamilyExample)};
    for (int it = 0; it < 10; ++it) es.push_back(family_embedding(random_family_params(rng)));
    for (const auto& e : es) {
        TwoSidedVS V = vs_from_embedding(e), mu = vs_from_embedding(swap_dual(e));
        TwoSidedVS right = dual_matrix_route(V, Side::Right, seed), left = dual_matrix_route(V, Side::Left, seed);
        std::string rel = to_string(e.relation());
        if (!iso_test(right, mu)) return rel + ": right dual not isomorphic to V(mu)";
        if (!iso_test(left, right)) return rel + ": left dual not isomorphic to right dual";
    }
    return "";
}

std::string c4_transpose() {
    for (const auto& s : builtin_corpus()) {
        KMatrix phi = phi_matrix(E(s));
        auto w = iso_test(make_raw(phi), make_raw(phi.transpose()));
        if (!w || w->P * phi != phi.transpose() * w->P) return s + ": no transpose isomorphism";
    }
    return "";
}

std::string c5_ab_inverse(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-4, 4);
    RatFunc random(UniPoly(std::vector<BigRat>{BigRat(coef(rng)), BigRat(coef(rng)), BigRat(1)}),
                   UniPoly(std::vector<BigRat>{BigRat(coef(rng) * 2 + 1), BigRat(1)}));
    std::vector<RatFunc> samples{RatFunc(1), RatFunc::t(), RatFunc::t() * RatFunc::t(),
                                 RatFunc(1) / (RatFunc::t() + RatFunc(1)), random};
    for (const char* s : {"y - x", kFamilyExample}) {
        TwoSidedVS V = vs_from_embedding(E(s));
        SimulBasis b = simultaneous_basis(V, seed);
        ABReport r = ab_identity_check(V, b, samples);
        if (!r.ok) return std::string(s) + ": " + r.detail;
        SimulBasis bad = b;
        bad.leftT(0, 0) += RatFunc(1);
        if (ab_identity_check(V, bad, samples).ok) return std::string(s) + ": perturbed B passed";
    }
    return "";
}

std::string c6_adjunction(std::uint64_t seed) {
    for (const char* s : {"y - x", kFamilyExample}) {
        TwoSidedVS V = vs_from_embedding(E(s));
        TriangleReport r = triangle_check(V, seed);
        if (!r.ok) return std::string(s) + ": " + r.detail;
        KMatrix first;
        for (std::uint64_t k = 0; k < 5; ++k) {
            UnitElement u = unit_element(V, seed + k);
            KMatrix q = sub_closure(*u.ambient, KMatrix(1, u.coords.size(), u.coords)).basis;
            if (k == 0)
                first = q;
            else if (q != first)
                return std::string(s) + ": unit sub-bimodule depends on the basis seed";
        }
    }
    return "";
}

std::string c7_alternation(std::uint64_t seed) {
    std::vector<std::pair<std::string, TwoSidedVS>> mods{
        {"y - x^2", vs_from_embedding(E("y - x^2"))},
        {"y - x - 1", vs_from_embedding(E("y - x - 1"))},
        {"sum", direct_sum({vs_from_embedding(E("y - x^2")), vs_from_embedding(E("y - x - 1"))})},
        {kFamilyExample, vs_from_embedding(E(kFamilyExample))}};
    for (const auto& [name, V] : mods) {
        Dims d = dims(V);
        for (int i = -4; i <= 4; ++i) {
            Dims di = dims(iterated_dual(V, i, seed));
            Dims want = i % 2 == 0 ? d : Dims{d.right, d.left};
            if (di != want) return name + ": dual " + std::to_string(i) + " has dims " + to_string(di);
        }
    }
    TwoSidedVS fam = vs_from_embedding(E(kFamilyExample));
    if (!iso_test(dual(dual(make_raw(fam.T()), Side::Right, seed), Side::Left, seed), fam))
        return "left dual of the right dual is not isomorphic to V";
    return "";
}

std::string c8_existence() {
    for (const auto& s : rank_equal_corpus())
        if (!ncsym_exists_check(E(s), 6)) return s + ": existence check failed";
    if (ncsym_exists_check(E("y - x^2"), 6)) return "y - x^2 passed the existence check";
    return "";
}

std::string c9_truncation(std::uint64_t seed) {
    Embedding fam = E(kFamilyExample);
    std::vector<std::size_t> want{1, 2, 3, 4, 5};
    NcTruncation tr = ncsym_truncation(fam, 4, NcOptions{seed, false});
    std::vector<std::size_t> pipeline = tr.a_dims(), oracle = brute_force_a_dims(fam, 4, seed);
    if (pipeline != want) return "pipeline A-dims " + join(pipeline);
    if (oracle != pipeline) return "oracle A-dims " + join(oracle) + " differ from pipeline " + join(pipeline);
    std::vector<std::size_t> id = ncsym_truncation(E("y - x"), 4, NcOptions{seed, false}).a_dims();
    if (id != std::vector<std::size_t>{1, 1, 0, 0, 0}) return "identity A-dims " + join(id);
    return "";
}

std::string c10_structure(std::uint64_t seed) {
    Embedding fam = E(kFamilyExample);
    for (Parity p : {Parity::Even, Parity::Odd}) {
        std::size_t d = q_space(fam, p, seed).sub.dim();
        if (d != 1) return "dim Q_" + to_string(p) + " = " + std::to_string(d);
    }
    MultReport r = multiplication_consistency(ncsym_truncation(fam, 4, NcOptions{seed, false}));
    if (!r.ok) return r.detail;
    return "";
}

struct CriterionDef {
    const char* title;
    double budget;  // seconds
};

const CriterionDef kDefs[kCriteria] = {
    {"family rank theorem", 60},       {"Lueroth degree and non-square m", 10},
    {"dual formula", 300},             {"transpose isomorphism", 60},
    {"A/B inverse law", 60},           {"adjunction triangle identities", 120},
    {"double dual and alternation", 60}, {"existence of the algebra", 60},
    {"truncation dimensions", 600},    {"Q spaces and multiplication", 60},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > kCriteria) fail(ErrorKind::Validation, "acceptance criterion must be between 1 and 10");
    CriterionResult r;
    r.id = id;
    r.title = kDefs[id - 1].title;
    auto start = Clock::now();
    std::string failure;
    try {
        switch (id) {
            case 1: failure = c1_family_rank(seed); break;
            case 2: failure = c2_lueroth(seed); break;
            case 3: failure = c3_dual_formula(seed); break;
            case 4: failure = c4_transpose(); break;
            case 5: failure = c5_ab_inverse(seed); break;
            case 6: failure = c6_adjunction(seed); break;
            case 7: failure = c7_alternation(seed); break;
            case 8: failure = c8_existence(); break;
            case 9: failure = c9_truncation(seed); break;
            case 10: failure = c10_structure(seed); break;
        }
    } catch (const Error& err) {
        failure = std::string("error: ") + err.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (failure.empty() && r.seconds > kDefs[id - 1].budget) {
        std::ostringstream os;
        os << "exceeded the " << kDefs[id - 1].budget << " s budget";
        failure = os.str();
    }
    r.pass = failure.empty();
    r.detail = failure;
    return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, seed));
    return out;
}

}  // namespace twoside
