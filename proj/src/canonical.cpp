#include "twoside/canonical.hpp"

#include <sstream>

namespace twoside {

KMatrix poly_eval(const KMatrix& T, const UniPoly& p) {
    std::size_t n = T.rows();
    KMatrix acc(n, n);
    for (int i = p.degree(); i >= 0; --i) acc = acc * T + KMatrix::scalar(n, RatFunc(p.coeff(i)));
    return acc;
}

KMatrix hom_eval(const KMatrix& T, const RatFunc& c) {
    if (!T.is_square()) fail(ErrorKind::Validation, "hom_eval needs a square matrix");
    if (c.is_constant()) return KMatrix::scalar(T.rows(), c);
    KMatrix num = poly_eval(T, c.num());
    if (c.is_polynomial()) return num;
    KMatrix den = poly_eval(T, c.den());
    auto x = inverse(den);
    if (!x) fail(ErrorKind::Validation, "not an embedding-induced action");
    return *x * num;
}

// Hessenberg reduction followed by the standard recurrence.
KPoly charpoly(const KMatrix& T) {
    if (!T.is_square()) fail(ErrorKind::Validation, "charpoly of a non-square matrix");
    std::size_t n = T.rows();
    KMatrix H = T;
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = n;
        for (std::size_t i = m; i < n; ++i)
            if (!is_zero(H(i, m - 1))) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        if (piv != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(H(piv, j), H(m, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(H(i, piv), H(i, m));
        }
        RatFunc inv = H(m, m - 1).inverse();
        for (std::size_t i = m + 1; i < n; ++i) {
            if (is_zero(H(i, m - 1))) continue;
            RatFunc u = H(i, m - 1) * inv;
            for (std::size_t j = 0; j < n; ++j) H(i, j) -= u * H(m, j);
            for (std::size_t j = 0; j < n; ++j) H(j, m) += u * H(j, i);
        }
    }
    const KPoly x = KPoly::var();
    std::vector<KPoly> p(n + 1);
    p[0] = KPoly(1);
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = (x - KPoly(H(k - 1, k - 1))) * p[k - 1];
        RatFunc prod(1);
        for (std::size_t i = 1; i < k; ++i) {
            prod *= H(k - i, k - i - 1);
            if (is_zero(prod)) break;
            p[k] -= (prod * H(k - i - 1, k - 1)) * p[k - i - 1];
        }
    }
    return p[n];
}

PolyMatrix char_matrix(const KMatrix& T) {
    std::size_t n = T.rows();
    PolyMatrix P(n, std::vector<KPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            P[i][j] = KPoly(-T(i, j));
            if (i == j) P[i][j] += KPoly::var();
        }
    return P;
}

std::vector<KPoly> smith_invariant_factors(PolyMatrix P) {
    std::size_t n = P.size();
    for (const auto& row : P)
        if (row.size() != n) fail(ErrorKind::Validation, "invariant factors need a square polynomial matrix");
    std::vector<KPoly> out;
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // Smallest-degree nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (!P[i][j].is_zero_poly() && (pi == n || P[i][j].degree() < P[pi][pj].degree())) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n) {
                for (std::size_t r = k; r < n; ++r) out.emplace_back();
                return out;
            }
            std::swap(P[k], P[pi]);
            for (auto& row : P) std::swap(row[k], row[pj]);

            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (P[i][k].is_zero_poly()) continue;
                KPoly q = P[i][k] / P[k][k];
                for (std::size_t j = k; j < n; ++j) P[i][j] -= q * P[k][j];
                if (!P[i][k].is_zero_poly()) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (P[k][j].is_zero_poly()) continue;
                KPoly q = P[k][j] / P[k][k];
                for (std::size_t i = k; i < n; ++i) P[i][j] -= q * P[i][k];
                if (!P[k][j].is_zero_poly()) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the whole trailing block; otherwise fold the offending row in.
            std::size_t bad = n;
            for (std::size_t i = k + 1; i < n && bad == n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!P[k][k].divides(P[i][j])) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            for (std::size_t j = k; j < n; ++j) P[k][j] += P[bad][j];
        }
        out.push_back(P[k][k].monic());
    }
    return out;
}

std::vector<KPoly> similarity_invariants(const KMatrix& T) {
    std::vector<KPoly> out;
    for (auto& d : smith_invariant_factors(char_matrix(T)))
        if (d.degree() > 0) out.push_back(std::move(d));
    return out;
}

std::string to_string(const KMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace twoside
