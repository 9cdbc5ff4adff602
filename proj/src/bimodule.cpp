#include "twoside/bimodule.hpp"

#include <cstdlib>
#include <random>

namespace twoside {

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

std::string to_string(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        case Tri::Unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(const Dims& d) { return "(" + std::to_string(d.left) + ", " + std::to_string(d.right) + ")"; }

TwoSidedVS::TwoSidedVS(KMatrix T, Provenance prov) : T_(std::move(T)), prov_(std::move(prov)) {
    if (!T_.is_square() || T_.rows() == 0) fail(ErrorKind::Validation, "right multiplication matrix must be square and nonempty");
}

KVec TwoSidedVS::act_right(const KVec& v, const RatFunc& c) const { return v * hom_eval(T_, c); }

namespace {

// charpoly(T) with t renamed x and the matrix variable renamed y.
BiPoly charpoly_relation(const KMatrix& T) { return BiPoly::from_kpoly(charpoly(T)); }

// deg_x of the primitive part of a square-free factor: every irreducible
// factor G of it contributes [K(s):Q(s)] = deg_x G, and deg_x is additive.
int factor_right_dim(const KPoly& g) {
    BiPoly F = BiPoly::from_kpoly(g);
    int d = F.deg_x() - content_in(F, Var::Y).degree();
    if (d <= 0) fail(ErrorKind::Tier, "right dimension undetermined at certification tier");
    return d;
}

int raw_right_dim(const KMatrix& T) {
    KPoly chi = charpoly(T);
    int total = 0;
    for (const auto& [g, mult] : yun_squarefree(chi).parts) total += mult * factor_right_dim(g);
    return total;
}

VSPtr share(const TwoSidedVS& V) { return std::make_shared<const TwoSidedVS>(V); }

}  // namespace

TwoSidedVS make_raw(const KMatrix& T) {
    if (!T.is_square() || T.rows() == 0) fail(ErrorKind::Validation, "right multiplication matrix must be square and nonempty");
    if (content_in(charpoly_relation(T), Var::X).degree() > 0)
        fail(ErrorKind::Validation, "an eigenvalue of T is algebraic over k: not a two-sided vector space");
    return TwoSidedVS(T, Provenance{});
}

TwoSidedVS vs_from_embedding(const Embedding& e) {
    Provenance p;
    p.kind = Provenance::Kind::FromEmbedding;
    p.embedding = e;
    return TwoSidedVS(phi_matrix(e).transpose(), p);
}

TwoSidedVS direct_sum(const std::vector<TwoSidedVS>& parts) {
    if (parts.empty()) fail(ErrorKind::Validation, "direct sum of no modules");
    std::size_t n = 0;
    for (const auto& V : parts) n += V.n();
    KMatrix T(n, n);
    Provenance p;
    p.kind = Provenance::Kind::DirectSum;
    std::size_t off = 0;
    for (const auto& V : parts) {
        for (std::size_t i = 0; i < V.n(); ++i)
            for (std::size_t j = 0; j < V.n(); ++j) T(off + i, off + j) = V.T()(i, j);
        off += V.n();
        p.parts.push_back(share(V));
    }
    return TwoSidedVS(T, p);
}

TwoSidedVS tensor(const TwoSidedVS& V, const TwoSidedVS& W) {
    std::size_t nv = V.n(), nw = W.n();
    KMatrix T(nv * nw, nv * nw);
    for (std::size_t j = 0; j < nw; ++j)
        for (std::size_t l = 0; l < nw; ++l) {
            const RatFunc& c = W.T()(j, l);
            if (is_zero(c)) continue;
            KMatrix h = hom_eval(V.T(), c);
            for (std::size_t i = 0; i < nv; ++i)
                for (std::size_t k = 0; k < nv; ++k) T(i * nw + j, k * nw + l) = h(i, k);
        }
    Provenance p;
    p.kind = Provenance::Kind::Tensor;
    p.parts = {share(V), share(W)};
    return TwoSidedVS(T, p);
}

KVec tensor_element(const TwoSidedVS& V, const KVec& v, const KVec& w) {
    std::size_t nv = V.n(), nw = w.size();
    KVec out(nv * nw);
    for (std::size_t l = 0; l < nw; ++l) {
        if (is_zero(w[l])) continue;
        KVec moved = V.act_right(v, w[l]);
        for (std::size_t k = 0; k < nv; ++k) out[k * nw + l] = moved[k];
    }
    return out;
}

Dims dims(const TwoSidedVS& V) {
    const Provenance& p = V.provenance();
    switch (p.kind) {
        case Provenance::Kind::FromEmbedding: return {p.embedding->n(), p.embedding->m()};
        case Provenance::Kind::DirectSum: {
            Dims d;
            for (const auto& part : p.parts) {
                Dims e = dims(*part);
                d.left += e.left;
                d.right += e.right;
            }
            return d;
        }
        case Provenance::Kind::Tensor: {
            Dims a = dims(*p.parts[0]), b = dims(*p.parts[1]);
            return {a.left * b.left, a.right * b.right};
        }
        case Provenance::Kind::DualOf: {
            Dims d = dims(*p.parts[0]);
            return {d.right, d.left};
        }
        case Provenance::Kind::Raw: return {static_cast<int>(V.n()), raw_right_dim(V.T())};
    }
    fail(ErrorKind::Internal, "unknown provenance");
}

Tri is_simple(const TwoSidedVS& V) {
    if (V.provenance().kind == Provenance::Kind::FromEmbedding) return Tri::True;
    KPoly chi = charpoly(V.T());
    auto sf = yun_squarefree(chi);
    if (sf.parts.size() != 1 || sf.parts[0].second != 1) return Tri::False;
    if (chi.degree() == 1) return Tri::True;
    try {
        Embedding(BiPoly::from_kpoly(chi));
        return Tri::True;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Tier) return Tri::Unknown;
        if (e.kind() == ErrorKind::Validation) return Tri::False;
        throw;
    }
}

std::optional<IsoWitness> iso_test(const TwoSidedVS& V, const TwoSidedVS& W) {
    std::size_t n = V.n();
    if (W.n() != n) return std::nullopt;
    if (V.T() == W.T()) return IsoWitness{KMatrix::identity(n)};
    if (similarity_invariants(V.T()) != similarity_invariants(W.T())) return std::nullopt;
    // Unknown P(r, c) sits at column r*n + c; equations (P T_V - T_W P)(i, j) = 0.
    KMatrix sys(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                sys(row, i * n + k) += V.T()(k, j);
                sys(row, k * n + j) -= W.T()(i, k);
            }
        }
    KMatrix ker = kernel(sys);
    if (ker.cols() == 0) fail(ErrorKind::Internal, "equal invariant factors but no intertwiner");
    std::mt19937_64 rng(n * 7919 + ker.cols());
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int attempt = 0; attempt < 200; ++attempt) {
        KMatrix P(n, n);
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            int w = attempt == 0 ? 1 : coef(rng);
            if (w == 0) continue;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) P(r, s) += RatFunc(w) * ker(r * n + s, c);
        }
        if (rank(P) != n) continue;
        if (P * V.T() != W.T() * P) fail(ErrorKind::Internal, "intertwiner check failed");
        return IsoWitness{P};
    }
    fail(ErrorKind::Internal, "no invertible intertwiner found");
}

SubBimodule sub_closure(const TwoSidedVS& V, const KMatrix& gens) {
    if (gens.rows() == 0) fail(ErrorKind::Validation, "sub_closure needs at least one generator");
    if (gens.cols() != V.n()) fail(ErrorKind::Validation, "generator length does not match the module");
    KMatrix basis = row_space_basis(gens);
    for (;;) {
        KMatrix grown = row_space_basis(vstack(basis, basis * V.T()));
        if (grown.rows() == basis.rows()) break;
        basis = grown;
    }
    return SubBimodule{share(V), basis};
}

std::size_t quotient_dim(const TwoSidedVS& V, const SubBimodule& S) { return V.n() - S.dim(); }

TwoSidedVS restrict_to(const SubBimodule& S) {
    if (S.dim() == 0) fail(ErrorKind::Validation, "zero sub-bimodule");
    const KMatrix& B = S.basis;
    // B T = X B
    auto X = solve(B.transpose(), (B * S.ambient->T()).transpose());
    if (!X) fail(ErrorKind::Internal, "sub-bimodule not closed under the right action");
    return TwoSidedVS(X->transpose(), Provenance{});
}

TwoSidedVS quotient(const SubBimodule& S) {
    std::size_t n = S.ambient->n(), r = S.dim();
    if (r == n) fail(ErrorKind::Validation, "zero quotient");
    Echelon<RatFunc> e = echelon(S.basis);
    std::vector<bool> pivot(n, false);
    for (auto p : e.pivots) pivot[p] = true;
    KMatrix M = S.basis;
    for (std::size_t c = 0; c < n; ++c)
        if (!pivot[c]) {
            KMatrix unit(1, n);
            unit(0, c) = RatFunc(1);
            M = vstack(M, unit);
        }
    KMatrix conj = M * S.ambient->T() * *inverse(M);
    KMatrix Q(n - r, n - r);
    for (std::size_t i = 0; i < n - r; ++i)
        for (std::size_t j = 0; j < n - r; ++j) Q(i, j) = conj(r + i, r + j);
    return TwoSidedVS(Q, Provenance{});
}

int default_max_degree() {
    if (const char* env = std::getenv("TWOSIDE_MAX_DEGREE")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0 || v > 100000)
            fail(ErrorKind::Validation, "TWOSIDE_MAX_DEGREE must be a nonnegative integer");
        return static_cast<int>(v);
    }
    return 40;
}

namespace {

// Q-linear equations expressing sum_u x_u * vecs[u] = 0 in K^n.
QMatrix rational_equations(const std::vector<KVec>& vecs, std::size_t n) {
    std::vector<std::vector<BigRat>> rows;
    for (std::size_t j = 0; j < n; ++j) {
        UniPoly L(1);
        for (const auto& v : vecs) L = L / gcd(L, v[j].den()) * v[j].den();
        std::vector<UniPoly> nums;
        int deg = -1;
        for (const auto& v : vecs) {
            nums.push_back(v[j].num() * (L / v[j].den()));
            deg = std::max(deg, nums.back().degree());
        }
        for (int d = 0; d <= deg; ++d) {
            std::vector<BigRat> row;
            for (const auto& p : nums) row.push_back(p.coeff(d));
            rows.push_back(std::move(row));
        }
    }
    QMatrix out(rows.size(), vecs.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t u = 0; u < vecs.size(); ++u) out(i, u) = rows[i][u];
    return out;
}

}  // namespace

std::optional<KVec> right_coordinates(const KMatrix& T, const KMatrix& Y, const KVec& v, int max_degree) {
    std::size_t n = T.rows(), r = Y.rows();
    if (v.size() != n || Y.cols() != n) fail(ErrorKind::Validation, "coordinate request shape mismatch");
    // Powers y_i T^k and v T^k, extended as the sweep grows.
    std::vector<std::vector<KVec>> ypow(r);
    std::vector<KVec> vpow;
    for (std::size_t i = 0; i < r; ++i) ypow[i].push_back(Y.row(i));
    vpow.push_back(v);
    std::vector<int> schedule{0};
    for (int D = 1; D < max_degree; D *= 2) schedule.push_back(D);
    if (max_degree > 0) schedule.push_back(max_degree);
    for (int D : schedule) {
        while (static_cast<int>(vpow.size()) <= D) {
            for (auto& p : ypow) p.push_back(p.back() * T);
            vpow.push_back(vpow.back() * T);
        }
        // Unknowns: p_{i,k} at i*(D+1)+k, then q_k at r*(D+1)+k.
        std::vector<KVec> vecs;
        for (std::size_t i = 0; i < r; ++i)
            for (int k = 0; k <= D; ++k) vecs.push_back(ypow[i][k]);
        for (int k = 0; k <= D; ++k) {
            KVec neg = vpow[k];
            for (auto& x : neg) x = -x;
            vecs.push_back(neg);
        }
        QMatrix ker = kernel(rational_equations(vecs, n));
        if (ker.cols() == 0) continue;
        std::size_t qoff = r * (D + 1);
        QMatrix qpart(static_cast<std::size_t>(D + 1), ker.cols());
        for (int k = 0; k <= D; ++k)
            for (std::size_t c = 0; c < ker.cols(); ++c) qpart(k, c) = ker(qoff + k, c);
        if (rank(qpart) < ker.cols()) return std::nullopt;  // a right dependence among the y_i
        std::vector<BigRat> q(D + 1);
        for (int k = 0; k <= D; ++k) q[k] = ker(qoff + k, 0);
        UniPoly qp(q);
        KVec c(r);
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<BigRat> p(D + 1);
            for (int k = 0; k <= D; ++k) p[k] = ker(i * (D + 1) + k, 0);
            c[i] = RatFunc(UniPoly(p), qp);
        }
        return c;
    }
    fail(ErrorKind::Resource, "coordinate degree bound exceeded; raise --max-degree");
}

SimulBasis simultaneous_basis(const TwoSidedVS& V, std::uint64_t seed, int retries, int max_degree) {
    Dims d = dims(V);
    std::size_t n = V.n();
    if (d.left != d.right)
        fail(ErrorKind::Validation, "simultaneous basis needs a rank-equal module; dims are " + to_string(d));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(0, 2), coef(-3, 3);
    const RatFunc t = RatFunc::t();
    for (int attempt = 0; attempt < retries; ++attempt) {
        KMatrix Y(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<BigRat> cs(deg(rng) + 1);
                for (auto& c : cs) c = coef(rng);
                Y(i, j) = RatFunc(UniPoly(cs));
            }
        if (rank(Y) != n) continue;
        // The right span of the rows is closed under left multiplication by t
        // once every t . y_i lies in it; it is then all of V.
        KMatrix B(n, n);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            KVec ty = Y.row(i);
            for (auto& x : ty) x = t * x;
            std::optional<KVec> c;
            try {
                c = right_coordinates(V.T(), Y, ty, max_degree);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Resource) throw;
            }
            if (!c) {
                ok = false;
                break;
            }
            for (std::size_t j = 0; j < n; ++j) B(j, i) = (*c)[j];
        }
        if (!ok) continue;
        KMatrix A = Y * V.T() * *inverse(Y);
        return SimulBasis{Y, A, B};
    }
    fail(ErrorKind::Resource, "no simultaneous basis found within " + std::to_string(retries) +
                                  " candidates (this does not disprove existence)");
}

KVec mixed_coordinates(const TwoSidedVS& V, const SimulBasis& basis, const KVec& v, Side side, int max_degree) {
    if (v.size() != V.n()) fail(ErrorKind::Validation, "element length does not match the module");
    if (side == Side::Left) {
        auto x = solve(basis.vectors.transpose(), KMatrix(v.size(), 1, v));
        if (!x) fail(ErrorKind::Internal, "simultaneous basis is not a left basis");
        return x->col(0);
    }
    auto c = right_coordinates(V.T(), basis.vectors, v, max_degree);
    if (!c) fail(ErrorKind::Internal, "simultaneous basis is not a right basis");
    return *c;
}

TwoSidedVS dual_matrix_route(const TwoSidedVS& V, Side side, std::uint64_t seed) {
    Provenance p;
    p.kind = Provenance::Kind::DualOf;
    p.parts = {share(V)};
    p.side = side;
    SimulBasis sb = simultaneous_basis(V, seed);
    if (side == Side::Right) return TwoSidedVS(sb.leftT, p);
    // *V is the opposite of K^n_{A(t)^T}; the opposite of M is K^n_{B_M(t)^T}.
    TwoSidedVS M(sb.rightT.transpose(), p);
    SimulBasis sm = simultaneous_basis(M, seed);
    return TwoSidedVS(sm.leftT.transpose(), p);
}

TwoSidedVS dual(const TwoSidedVS& V, Side side, std::uint64_t seed) {
    const Provenance& p = V.provenance();
    if (p.kind == Provenance::Kind::FromEmbedding) return vs_from_embedding(swap_dual(*p.embedding));
    if (p.kind == Provenance::Kind::DirectSum) {
        std::vector<TwoSidedVS> parts;
        for (const auto& part : p.parts) parts.push_back(dual(*part, side, seed));
        return direct_sum(parts);
    }
    Dims d = dims(V);
    if (d.left != d.right) fail(ErrorKind::Tier, "dual unavailable at this tier");
    return dual_matrix_route(V, side, seed);
}

TwoSidedVS iterated_dual(const TwoSidedVS& V, int i, std::uint64_t seed) {
    TwoSidedVS cur = V;
    for (int k = 0; k < i; ++k) cur = dual(cur, Side::Right, seed);
    for (int k = 0; k > i; --k) cur = dual(cur, Side::Left, seed);
    return cur;
}

ABReport ab_identity_check(const TwoSidedVS& V, const SimulBasis& basis, const std::vector<RatFunc>& samples) {
    std::size_t n = V.n();
    const KMatrix &A = basis.rightT, &B = basis.leftT;
    try {
        for (const auto& delta : samples) {
            // sum_j a_jk(b_ji(delta)) = delta * [i = k]
            KMatrix Bd = hom_eval(B, delta);
            for (std::size_t i = 0; i < n; ++i) {
                KVec acc(n);
                for (std::size_t j = 0; j < n; ++j) {
                    KMatrix a = hom_eval(A, Bd(j, i));
                    for (std::size_t k = 0; k < n; ++k) acc[k] += a(j, k);
                }
                for (std::size_t k = 0; k < n; ++k)
                    if (acc[k] != (k == i ? delta : RatFunc()))
                        return {false, "A^T B fails at sample " + to_string(delta)};
            }
            // sum_j b_kj(a_ij(lambda)) = lambda * [k = i]
            KMatrix Ad = hom_eval(A, delta);
            for (std::size_t i = 0; i < n; ++i) {
                KVec acc(n);
                for (std::size_t j = 0; j < n; ++j) {
                    KMatrix b = hom_eval(B, Ad(i, j));
                    for (std::size_t k = 0; k < n; ++k) acc[k] += b(k, j);
                }
                for (std::size_t k = 0; k < n; ++k)
                    if (acc[k] != (k == i ? delta : RatFunc()))
                        return {false, "B A^T fails at sample " + to_string(delta)};
            }
        }
    } catch (const Error& e) {
        return {false, e.what()};
    }
    return {true, ""};
}

}  // namespace twoside
