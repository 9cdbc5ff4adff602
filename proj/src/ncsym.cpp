#include "twoside/ncsym.hpp"

namespace twoside {

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

namespace {

struct Units {
    TwoSidedVS lam, mu;
    UnitElement even, odd;
};

// even: unit of V(mu), whose left dual is modelled by V(lambda); odd: the mirror.
Units make_units(const Embedding& e, std::uint64_t seed) {
    if (e.n() != e.m()) fail(ErrorKind::Validation, "non-commutative symmetric algebra needs a rank-equal embedding");
    TwoSidedVS lam = vs_from_embedding(e), mu = vs_from_embedding(swap_dual(e));
    UnitElement even = unit_element(adjunction_data(mu, lam, seed));
    UnitElement odd = unit_element(adjunction_data(lam, mu, seed));
    return Units{lam, mu, even, odd};
}

KMatrix as_row(const KVec& v) { return KMatrix(1, v.size(), v); }

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Rows e_a (x) w for every left basis vector e_a of X; w in the module after X.
KMatrix left_basis_times(const TwoSidedVS& X, const KVec& w) {
    std::size_t nx = X.n(), nw = w.size();
    KMatrix out(nx, nx * nw);
    for (std::size_t c = 0; c < nw; ++c) {
        if (is_zero(w[c])) continue;
        KMatrix H = hom_eval(X.T(), w[c]);
        for (std::size_t a = 0; a < nx; ++a)
            for (std::size_t k = 0; k < nx; ++k) out(a, k * nw + c) = H(a, k);
    }
    return out;
}

}  // namespace

QSpace q_space(const Embedding& e, Parity parity, std::uint64_t seed) {
    Units u = make_units(e, seed);
    const UnitElement& eta = parity == Parity::Even ? u.even : u.odd;
    return QSpace{parity, sub_closure(*eta.ambient, as_row(eta.coords))};
}

const NcCell& NcTruncation::cell(int i, int j) const {
    if (i < 0 || j < i || j > dmax) fail(ErrorKind::Validation, "cell outside the truncation window");
    // cells for i' < i: sum over i' of (dmax - i' + 1)
    std::size_t idx = 0;
    for (int r = 0; r < i; ++r) idx += static_cast<std::size_t>(dmax - r + 1);
    return cells[idx + static_cast<std::size_t>(j - i)];
}

const TwoSidedVS& NcTruncation::B(int i, int j) const {
    if (i < 0 || j < i || j > dmax) fail(ErrorKind::Validation, "cell outside the truncation window");
    return b_cache[static_cast<std::size_t>(i % 2) * (dmax + 1) + static_cast<std::size_t>(j - i)];
}

std::vector<std::size_t> NcTruncation::a_dims() const {
    std::vector<std::size_t> out;
    for (int d = 0; d <= dmax; ++d) out.push_back(cell(0, d).dimA);
    return out;
}

NcTruncation ncsym_truncation(const Embedding& e, int dmax, const NcOptions& opt) {
    if (dmax < 0) fail(ErrorKind::Validation, "dmax must be nonnegative");
    std::size_t n = static_cast<std::size_t>(e.n());
    double est = 1;
    for (int d = 0; d < dmax; ++d) est *= static_cast<double>(n);
    if (est > static_cast<double>(kMaxWindowDim))
        fail(ErrorKind::Resource, "window too large: n^dmax exceeds " + std::to_string(kMaxWindowDim));
    Units u = make_units(e, opt.seed);

    NcTruncation tr;
    tr.dmax = dmax;
    tr.mis_slotted = opt.mis_slot;
    tr.models = {std::make_shared<const TwoSidedVS>(u.lam), std::make_shared<const TwoSidedVS>(u.mu)};
    tr.units = {u.even, u.odd};
    for (const UnitElement* eta : {&u.even, &u.odd})
        tr.q.push_back(sub_closure(*eta->ambient, as_row(eta->coords)).basis);

    TwoSidedVS K1 = vs_from_embedding(Embedding(parse_bipoly("y - x")));
    for (int parity = 0; parity < 2; ++parity) {
        tr.b_cache.push_back(K1);
        for (int len = 1; len <= dmax; ++len) {
            const TwoSidedVS& factor = *tr.models[static_cast<std::size_t>((parity + len - 1) % 2)];
            if (len == 1)
                tr.b_cache.push_back(factor);
            else
                tr.b_cache.push_back(tensor(tr.b_cache.back(), factor));
        }
    }

    for (int i = 0; i <= dmax; ++i)
        for (int j = i; j <= dmax; ++j) {
            NcCell c;
            c.i = i;
            c.j = j;
            c.dimB = ipow(n, j - i);
            KMatrix gens(0, c.dimB);
            // slot p: B_{i,p} (x) Q_p (x) B_{p+2,j}
            for (int p = i; p + 2 <= j; ++p) {
                int qp = (p % 2) ^ (opt.mis_slot && j == dmax ? 1 : 0);
                const KMatrix& Q = tr.q[static_cast<std::size_t>(qp)];
                const TwoSidedVS& X = tr.B(i, p);
                std::size_t ny = ipow(n, j - p - 2), nq = Q.cols();
                for (std::size_t r = 0; r < Q.rows(); ++r)
                    for (std::size_t b = 0; b < ny; ++b) {
                        KVec w(nq * ny);
                        for (std::size_t l = 0; l < nq; ++l) w[l * ny + b] = Q(r, l);
                        gens = vstack(gens, left_basis_times(X, w));
                    }
            }
            c.R = gens.rows() ? row_space_basis(gens) : KMatrix(0, c.dimB);
            c.dimR = c.R.rows();
            c.dimA = c.dimB - c.dimR;
            tr.cells.push_back(std::move(c));
        }
    return tr;
}

MultReport multiplication_consistency(const NcTruncation& tr) {
    for (int i = 0; i <= tr.dmax; ++i)
        for (int j = i + 1; j <= tr.dmax; ++j)
            for (int k = j + 1; k <= tr.dmax; ++k) {
                const NcCell &ij = tr.cell(i, j), &jk = tr.cell(j, k), &ik = tr.cell(i, k);
                std::string where = "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
                KMatrix gens(0, ik.dimB);
                for (std::size_t r = 0; r < ij.R.rows(); ++r)
                    for (std::size_t b = 0; b < jk.dimB; ++b) {
                        KMatrix g(1, ik.dimB);
                        for (std::size_t a = 0; a < ij.dimB; ++a) g(0, a * jk.dimB + b) = ij.R(r, a);
                        gens = vstack(gens, g);
                    }
                for (std::size_t r = 0; r < jk.R.rows(); ++r) gens = vstack(gens, left_basis_times(tr.B(i, j), jk.R.row(r)));
                if (gens.rows() && !row_space_contains(ik.R, gens))
                    return {false, "R_ij (x) B_jk + B_ij (x) R_jk not inside R_ik at " + where};
                if (ik.dimA > ij.dimA * jk.dimA) return {false, "dim A_ik exceeds dim A_ij * dim A_jk at " + where};
            }
    return {};
}

bool ncsym_exists_check(const Embedding& e, int window) {
    if (window < 0) fail(ErrorKind::Validation, "window must be nonnegative");
    TwoSidedVS V = vs_from_embedding(e);
    Dims want{e.n(), e.n()};
    for (int i = -window; i <= window; ++i)
        if (dims(iterated_dual(V, i)) != want) return false;
    return true;
}

}  // namespace twoside
