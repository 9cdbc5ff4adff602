#include "twoside/adjunction.hpp"

#include <random>

namespace twoside {

RatFunc pairing_eval(const Embedding& e, int i, const KVec& v) {
    if (i < 1 || i > e.m()) fail(ErrorKind::Validation, "pairing index out of range");
    if (static_cast<int>(v.size()) != e.n()) fail(ErrorKind::Validation, "element length does not match the module");
    Embedding mu = swap_dual(e);
    RatFunc acc, tk(1);
    for (const auto& vk : v) {
        if (!is_zero(vk)) acc += coord_functions(mu, vk)[i - 1] * tk;
        tk *= RatFunc::t();
    }
    return acc;
}

KMatrix pairing_gram(const Embedding& e, const KMatrix& Y) {
    KMatrix G(e.m(), Y.rows());
    for (int i = 0; i < e.m(); ++i)
        for (std::size_t j = 0; j < Y.rows(); ++j) G(i, j) = pairing_eval(e, i + 1, Y.row(j));
    return G;
}

namespace {

std::shared_ptr<const TwoSidedVS> share(const TwoSidedVS& V) { return std::make_shared<const TwoSidedVS>(V); }

KVec combine(const TwoSidedVS& M, const KMatrix& R, const KVec& f) {
    KVec out(M.n());
    for (std::size_t l = 0; l < R.rows(); ++l)
        if (!is_zero(f[l])) {
            KVec part = M.act_right(R.row(l), f[l]);
            for (std::size_t a = 0; a < out.size(); ++a) out[a] += part[a];
        }
    return out;
}

// A bimodule isomorphism h from *V onto M applied to the functionals given as
// columns of Phi (phi(v) = v . column). h is fixed by r_l = h(eps_l), eps_l the
// l-th left coordinate functional; condition h(t . eps_k) = t h(eps_k) with
// t . eps_k = sum_l eps_l . T(l, k).
KMatrix dual_images(const TwoSidedVS& V, const TwoSidedVS& M, const KMatrix& Phi) {
    std::size_t n = V.n(), nm = M.n();
    KMatrix sys(n * nm, n * nm);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            if (is_zero(V.T()(l, k))) continue;
            KMatrix H = hom_eval(M.T(), V.T()(l, k));
            for (std::size_t a = 0; a < nm; ++a)
                for (std::size_t b = 0; b < nm; ++b) sys(k * nm + b, l * nm + a) += H(a, b);
        }
        for (std::size_t b = 0; b < nm; ++b) sys(k * nm + b, k * nm + b) -= RatFunc::t();
    }
    KMatrix ker = kernel(sys);
    std::mt19937_64 rng(n * 104729 + ker.cols());
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int attempt = 0; attempt < 200 && ker.cols() > 0; ++attempt) {
        KMatrix R(n, nm);
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            int w = attempt == 0 ? (c == 0 ? 1 : 0) : coef(rng);
            if (w == 0) continue;
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t a = 0; a < nm; ++a) R(l, a) += RatFunc(w) * ker(l * nm + a, c);
        }
        KMatrix F(Phi.cols(), nm);
        for (std::size_t j = 0; j < Phi.cols(); ++j) {
            KVec row = combine(M, R, Phi.col(j));
            for (std::size_t a = 0; a < nm; ++a) F(j, a) = row[a];
        }
        if (rank(F) == nm) return F;
    }
    fail(ErrorKind::Validation, "model is not isomorphic to the left dual");
}

}  // namespace

AdjunctionData adjunction_data(const TwoSidedVS& V, const TwoSidedVS& model, std::uint64_t seed) {
    SimulBasis basis = simultaneous_basis(V, seed);
    if (model.n() != V.n()) fail(ErrorKind::Validation, "model is not isomorphic to the left dual");
    // phi_j extracts the j-th left coordinate in the basis: column j of Y^-1.
    KMatrix F = dual_images(V, model, *inverse(basis.vectors));
    // Columns y_i (x) phi_j at index i * nm + j; eps reads off sum_i a_ii.
    std::size_t n = V.n(), nm = model.n();
    KMatrix P(n * nm, n * nm);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            KVec c = tensor_element(V, basis.vectors.row(i), F.row(j));
            for (std::size_t r = 0; r < c.size(); ++r) P(r, i * nm + j) = c[r];
        }
    auto Pinv = inverse(P);
    if (!Pinv) fail(ErrorKind::Internal, "y_i (x) phi_j is not a left basis of the tensor");
    KVec form(n * nm);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n * nm; ++r) form[r] += (*Pinv)(i * nm + i, r);
    return AdjunctionData{share(V), share(model), std::move(basis), std::move(F), std::move(form)};
}

AdjunctionData adjunction_data(const TwoSidedVS& V, std::uint64_t seed) {
    return adjunction_data(V, dual(V, Side::Left, seed), seed);
}

UnitElement unit_element(const AdjunctionData& d) {
    const TwoSidedVS& M = *d.model;
    KVec eta(M.n() * d.V->n());
    for (std::size_t j = 0; j < d.V->n(); ++j) {
        KVec term = tensor_element(M, d.functionals.row(j), d.basis.vectors.row(j));
        for (std::size_t a = 0; a < eta.size(); ++a) eta[a] += term[a];
    }
    return UnitElement{share(tensor(M, *d.V)), eta};
}

UnitElement unit_element(const TwoSidedVS& V, std::uint64_t seed) { return unit_element(adjunction_data(V, seed)); }

RatFunc counit_apply(const AdjunctionData& d, const KVec& w) {
    if (w.size() != d.counit_form.size()) fail(ErrorKind::Validation, "element length does not match the tensor");
    RatFunc acc;
    for (std::size_t r = 0; r < w.size(); ++r)
        if (!is_zero(w[r])) acc += d.counit_form[r] * w[r];
    return acc;
}

bool is_central(const UnitElement& u) {
    KVec left = u.coords;
    for (auto& x : left) x = RatFunc::t() * x;
    return left == u.ambient->act_right(u.coords, RatFunc::t());
}

namespace {

KVec unit_vec(std::size_t n, std::size_t i) {
    KVec v(n);
    v[i] = RatFunc(1);
    return v;
}

std::string vec_string(const KVec& v) { return to_string(KMatrix(1, v.size(), v)); }

}  // namespace

TriangleReport triangle_check(const AdjunctionData& d, const KVec& eta, std::uint64_t seed) {
    const TwoSidedVS& V = *d.V;
    const TwoSidedVS& M = *d.model;
    std::size_t n = V.n(), nm = M.n();
    if (eta.size() != n * nm) fail(ErrorKind::Validation, "unit length does not match the tensor");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
    auto random_vec = [&](std::size_t len) {
        KVec v(len);
        for (auto& x : v) {
            int dd = deg(rng);
            std::vector<BigRat> num(dd + 1), den{BigRat(1), BigRat(coef(rng) == 0 ? 0 : 1)};
            for (auto& c : num) c = coef(rng);
            if (is_zero(den[1])) den.pop_back();
            x = RatFunc(UniPoly(num), UniPoly(den));
        }
        return v;
    };
    // eta = sum_{k,l} eta_kl m_k (x) v_l
    // v -> sum_{k,l} eps((v . eta_kl) (x) m_k) v_l
    auto first = [&](const KVec& v) {
        KVec out(n);
        for (std::size_t k = 0; k < nm; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                const RatFunc& c = eta[k * n + l];
                if (is_zero(c)) continue;
                out[l] += counit_apply(d, tensor_element(V, V.act_right(v, c), unit_vec(nm, k)));
            }
        return out;
    };
    // x -> sum_{k,l} eta_kl m_k . eps(v_l (x) x)
    auto second = [&](const KVec& x) {
        KVec out(nm);
        for (std::size_t k = 0; k < nm; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                const RatFunc& c = eta[k * n + l];
                if (is_zero(c)) continue;
                RatFunc e = counit_apply(d, tensor_element(V, unit_vec(n, l), x));
                KVec part = M.act_right(unit_vec(nm, k), e);
                for (std::size_t a = 0; a < nm; ++a) out[a] += c * part[a];
            }
        return out;
    };
    std::vector<KVec> vs, xs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(unit_vec(n, i));
    for (std::size_t i = 0; i < nm; ++i) xs.push_back(unit_vec(nm, i));
    for (int it = 0; it < 20; ++it) {
        vs.push_back(random_vec(n));
        xs.push_back(random_vec(nm));
    }
    for (const auto& v : vs)
        if (first(v) != v) return {false, "V side fails at " + vec_string(v)};
    for (const auto& x : xs)
        if (second(x) != x) return {false, "dual side fails at " + vec_string(x)};
    return {};
}

TriangleReport triangle_check(const TwoSidedVS& V, std::uint64_t seed) {
    AdjunctionData d = adjunction_data(V, seed);
    return triangle_check(d, unit_element(d).coords, seed);
}

}  // namespace twoside
