#pragma once

// Matrix functions over K: evaluation of the homomorphism t -> T, the
// characteristic polynomial, and invariant factors of polynomial matrices.

#include <vector>

#include "twoside/matrix.hpp"

namespace twoside {

// Matrices with entries in K[x].
using PolyMatrix = std::vector<std::vector<KPoly>>;

// p(T) * q(T)^-1 for c = p/q. Fails if q(T) is singular.
KMatrix hom_eval(const KMatrix& T, const RatFunc& c);

// p(T) for a polynomial p over Q.
KMatrix poly_eval(const KMatrix& T, const UniPoly& p);

// det(xI - T), monic of degree n.
KPoly charpoly(const KMatrix& T);

// x*I - T as a polynomial matrix.
PolyMatrix char_matrix(const KMatrix& T);

// Monic invariant factors d_1 | d_2 | ... | d_n of a square polynomial
// matrix. Zero factors (rank deficiency) are reported as the zero polynomial.
std::vector<KPoly> smith_invariant_factors(PolyMatrix P);

// The nontrivial part of the list above for xI - T: factors of degree > 0.
std::vector<KPoly> similarity_invariants(const KMatrix& T);

}  // namespace twoside
