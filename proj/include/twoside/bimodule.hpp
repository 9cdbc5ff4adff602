#pragma once

// Two-sided vector spaces K^n_phi: left action coordinatewise on row vectors,
// right action v . c = v * hom_eval(T, c) with T = phi(t).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twoside/canonical.hpp"
#include "twoside/embedding.hpp"

namespace twoside {

enum class Side { Left, Right };
enum class Tri { True, False, Unknown };

std::string to_string(Side s);
std::string to_string(Tri t);

class TwoSidedVS;
using VSPtr = std::shared_ptr<const TwoSidedVS>;

struct Provenance {
    enum class Kind { FromEmbedding, Tensor, DirectSum, DualOf, Raw };
    Kind kind = Kind::Raw;
    std::optional<Embedding> embedding;  // FromEmbedding
    std::vector<VSPtr> parts;            // Tensor (2), DirectSum (k), DualOf (1)
    Side side = Side::Right;             // DualOf
};

class TwoSidedVS {
   public:
    TwoSidedVS(KMatrix T, Provenance prov);

    std::size_t n() const { return T_.rows(); }
    const KMatrix& T() const { return T_; }
    const Provenance& provenance() const { return prov_; }

    // Right action on a row vector.
    KVec act_right(const KVec& v, const RatFunc& c) const;

   private:
    KMatrix T_;
    Provenance prov_;
};

// K^n with right multiplication matrix T. Fails when some eigenvalue of T is
// algebraic over Q (the right action would not extend to K).
TwoSidedVS make_raw(const KMatrix& T);

TwoSidedVS vs_from_embedding(const Embedding& e);
TwoSidedVS direct_sum(const std::vector<TwoSidedVS>& parts);
TwoSidedVS tensor(const TwoSidedVS& V, const TwoSidedVS& W);
// Coordinates of v (x) w in V (x) W, scalars of w moved across through V's right action.
KVec tensor_element(const TwoSidedVS& V, const KVec& v, const KVec& w);

struct Dims {
    int left = 0, right = 0;
    friend bool operator==(const Dims&, const Dims&) = default;
};
std::string to_string(const Dims& d);

Dims dims(const TwoSidedVS& V);
Tri is_simple(const TwoSidedVS& V);

// P with P * T_V = T_W * P; v -> v * P^-1 is a bimodule isomorphism V -> W.
struct IsoWitness {
    KMatrix P;
};
std::optional<IsoWitness> iso_test(const TwoSidedVS& V, const TwoSidedVS& W);

struct SubBimodule {
    VSPtr ambient;
    KMatrix basis;  // reduced row echelon rows
    std::size_t dim() const { return basis.rows(); }
};

SubBimodule sub_closure(const TwoSidedVS& V, const KMatrix& gens);
std::size_t quotient_dim(const TwoSidedVS& V, const SubBimodule& S);
// The sub-bimodule and the quotient as modules in their own right.
TwoSidedVS restrict_to(const SubBimodule& S);
TwoSidedVS quotient(const SubBimodule& S);

// Cap on the coordinate degree sweep: TWOSIDE_MAX_DEGREE if set, else 40.
int default_max_degree();

struct SimulBasis {
    KMatrix vectors;  // rows y_i in left coordinates
    KMatrix rightT;   // A(t): y_i . t = sum_j A_ij y_j
    KMatrix leftT;    // B(t): t . y_i = sum_j y_j . B_ji
};

// Right coordinates of v: c with v = sum_i y_i . c_i, for the rows y_i of Y.
// std::nullopt when the sweep proves the rows are not right independent;
// fails with a resource error when the degree bound is exceeded.
std::optional<KVec> right_coordinates(const KMatrix& T, const KMatrix& Y, const KVec& v, int max_degree);

SimulBasis simultaneous_basis(const TwoSidedVS& V, std::uint64_t seed, int retries = 200,
                              int max_degree = default_max_degree());

KVec mixed_coordinates(const TwoSidedVS& V, const SimulBasis& basis, const KVec& v, Side side,
                       int max_degree = default_max_degree());

// Right dual V* (side Right) or left dual *V (side Left).
TwoSidedVS dual(const TwoSidedVS& V, Side side, std::uint64_t seed = kDefaultSeed);
// The construction from a simultaneous basis, regardless of provenance.
TwoSidedVS dual_matrix_route(const TwoSidedVS& V, Side side, std::uint64_t seed = kDefaultSeed);
TwoSidedVS iterated_dual(const TwoSidedVS& V, int i, std::uint64_t seed = kDefaultSeed);

struct ABReport {
    bool ok = true;
    std::string detail;  // offending sample on failure
};
ABReport ab_identity_check(const TwoSidedVS& V, const SimulBasis& basis, const std::vector<RatFunc>& samples);

}  // namespace twoside
