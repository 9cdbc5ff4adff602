#pragma once

// Unit and counit of the adjunction between tensoring with *V and with V,
// and the explicit right-dual functionals of V(lambda).

#include <cstdint>
#include <string>

#include "twoside/bimodule.hpp"

namespace twoside {

// i-th explicit functional (1-based, i <= m) of V(lambda)* applied to v:
// v = sum_l t^l . e_l in the right basis {1, t, ..., t^(m-1)} maps to e_i.
RatFunc pairing_eval(const Embedding& e, int i, const KVec& v);

// Matrix of pairing_eval(e, i, y_j) over a family of rows y_j.
KMatrix pairing_gram(const Embedding& e, const KMatrix& Y);

// A model M of the left dual *V with an explicit isomorphism onto it.
struct AdjunctionData {
    VSPtr V;
    VSPtr model;
    SimulBasis basis;
    // Row j: the functional dual to basis.vectors row j, in left coordinates of the model.
    KMatrix functionals;
    // eps(w) = sum_r counit_form[r] w[r] on V (x) model.
    KVec counit_form;
};

// Uses dual(V, Side::Left) as the model.
AdjunctionData adjunction_data(const TwoSidedVS& V, std::uint64_t seed);
// Uses the given model, which must be isomorphic to *V.
AdjunctionData adjunction_data(const TwoSidedVS& V, const TwoSidedVS& model, std::uint64_t seed);

struct UnitElement {
    VSPtr ambient;  // model (x) V
    KVec coords;
};

UnitElement unit_element(const AdjunctionData& d);
UnitElement unit_element(const TwoSidedVS& V, std::uint64_t seed);

// w in V (x) model; returns sum_i a_ii for w = sum a_ij y_i (x) phi_j.
RatFunc counit_apply(const AdjunctionData& d, const KVec& w);

// t . eta = eta . t
bool is_central(const UnitElement& u);

struct TriangleReport {
    bool ok = true;
    std::string detail;
};

// Both triangle identities on unit vectors and 20 random elements per side.
TriangleReport triangle_check(const AdjunctionData& d, const KVec& eta, std::uint64_t seed);
TriangleReport triangle_check(const TwoSidedVS& V, std::uint64_t seed);

}  // namespace twoside
