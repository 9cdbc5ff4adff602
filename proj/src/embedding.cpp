#include "twoside/embedding.hpp"

#include <random>
#include <sstream>

#include "twoside/modp.hpp"

namespace twoside {

std::string to_string(CertTier tier) {
    return tier == CertTier::Certified ? "Certified" : "AssumedWithWitnessChecks";
}

namespace {

const char* kReducible = "F reducible: V(λ) would not be simple";

// Quadratic A y^2 + B y + C over K is irreducible iff B^2 - 4AC is not a square.
bool quadratic_irreducible(const KPoly& f) {
    RatFunc disc = f.coeff(1) * f.coeff(1) - RatFunc(4) * f.coeff(2) * f.coeff(0);
    return !is_square_in_K(disc);
}

}  // namespace

Embedding::Embedding(const BiPoly& F, std::uint64_t seed) : F_(F) {
    if (F.is_zero_poly() || F.deg_y() == 0) fail(ErrorKind::Validation, "not a relation for an element over K");
    if (F.deg_x() == 0) fail(ErrorKind::Validation, "λ(t) algebraic over k — not an embedding of k(t)");
    n_ = F.deg_y();
    m_ = F.deg_x();
    if (content_in(F, Var::Y).degree() > 0 || content_in(F, Var::X).degree() > 0) fail(ErrorKind::Validation, kReducible);
    if (resultant(F, F.derivative(Var::Y), Var::Y).is_zero_poly())
        fail(ErrorKind::Validation, "inseparable/repeated conjugates");

    if (n_ == 1) return;
    if (n_ == 2) {
        if (!quadratic_irreducible(F.as_kpoly_in_y())) fail(ErrorKind::Validation, kReducible);
        return;
    }
    // A factorization over Q(x)[y] survives every specialization x0 that keeps
    // the leading coefficient nonzero, so one irreducible specialization is a proof.
    cert_ = CertTier::AssumedWithWitnessChecks;
    UniPoly lead = F.coefficients_in(Var::Y).back();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(-40, 40);
    for (int tries = 0; tries < 200 && witnesses_.size() < 3; ++tries) {
        long x0 = pick(rng);
        bool seen = false;
        for (long w : witnesses_) seen = seen || w == x0;
        if (seen || is_zero(lead(BigRat(x0)))) continue;
        if (certify_irreducible_over_Q(F.specialize(Var::X, BigRat(x0)))) witnesses_.push_back(x0);
    }
    if (witnesses_.size() < 3) fail(ErrorKind::Tier, "irreducibility of F undetermined at certification tier");
}

Embedding embedding_new(const BiPoly& F, std::uint64_t seed) { return Embedding(F, seed); }

// Valid relations stay valid under the swap; re-validating assigns the tier
// that matches the new y-degree.
Embedding swap_dual(const Embedding& e) { return Embedding(e.relation().swapped()); }

RelExt relext_structure(const Embedding& e) {
    RelExt r;
    r.n = e.n();
    r.f = e.relation().as_kpoly_in_y().monic();
    std::vector<KPoly> pw{KPoly(1)};
    for (int k = 1; k <= 2 * r.n - 2; ++k) pw.push_back((pw.back() * KPoly::var()) % r.f);
    r.beta.assign(r.n, std::vector<KVec>(r.n, KVec(r.n)));
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            for (int k = 0; k < r.n; ++k) r.beta[i][j][k] = pw[i + j].coeff(k);
    return r;
}

KVec coord_functions(const Embedding& e, const RatFunc& c) {
    KPoly f = e.relation().as_kpoly_in_y().monic();
    auto lift = [&](const UniPoly& p) {
        std::vector<RatFunc> cs;
        for (const auto& q : p.coeffs()) cs.emplace_back(q);
        return KPoly(cs) % f;
    };
    KPoly value = lift(c.num());
    if (!c.is_polynomial()) {
        XGcd<RatFunc> g = xgcd(lift(c.den()), f);
        if (g.g.degree() != 0) fail(ErrorKind::Internal, "denominator vanishes at λ(t)");
        value = (value * g.s) % f;
    }
    KVec out(e.n());
    for (int k = 0; k < e.n(); ++k) out[k] = value.coeff(k);
    return out;
}

KMatrix phi_matrix(const Embedding& e) {
    RelExt r = relext_structure(e);
    KVec lam = coord_functions(e, RatFunc::t());
    KMatrix phi(r.n, r.n);
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            for (int k = 0; k < r.n; ++k) phi(i, j) += r.beta[j][k][i] * lam[k];
    return phi;
}

FamilyParams parse_family_params(const std::string& csv) {
    std::vector<BigRat> v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    if (v.size() != 7) fail(ErrorKind::Validation, "family parameters must be seven values alpha,a,b,c,d,e,f");
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
}

std::string to_string(const FamilyParams& p) {
    std::string out;
    for (const BigRat* q : {&p.alpha, &p.a, &p.b, &p.c, &p.d, &p.e, &p.f}) out += (out.empty() ? "" : ",") + to_string(*q);
    return out;
}

void validate_family(const FamilyParams& p) {
    if (is_zero(p.a) && is_zero(p.d)) fail(ErrorKind::Validation, "a = d = 0");
    if (p.b * p.b == 4 * p.a * p.c) fail(ErrorKind::Validation, "b² = 4ac");
    if (p.e * p.e == 4 * p.d * p.f) fail(ErrorKind::Validation, "e² = 4df");
    if (p.a * p.e != p.b * p.d) fail(ErrorKind::Validation, "ae ≠ bd");
    if (p.a * p.f == p.c * p.d) fail(ErrorKind::Validation, "af = cd");
}

BiPoly family_relation(const FamilyParams& p) {
    BiPoly x = BiPoly::x(), y = BiPoly::y();
    BiPoly den = BiPoly(p.d) * x * x + BiPoly(p.e) * x + BiPoly(p.f);
    BiPoly num = BiPoly(p.a) * x * x + BiPoly(p.b) * x + BiPoly(p.c);
    BiPoly shift = y - BiPoly(p.alpha);
    return (den * shift * shift - num).normalized();
}

RatFunc family_m(const FamilyParams& p) {
    auto quad = [](const BigRat& u, const BigRat& v, const BigRat& w) { return UniPoly(std::vector<BigRat>{w, v, u}); };
    return RatFunc(quad(p.a, p.b, p.c), quad(p.d, p.e, p.f));
}

Embedding family_embedding(const FamilyParams& p) {
    validate_family(p);
    Embedding e(family_relation(p));
    if (e.n() != 2 || e.m() != 2 || e.cert() != CertTier::Certified)
        fail(ErrorKind::Internal, "family relation lost rank 2");
    return e;
}

}  // namespace twoside
