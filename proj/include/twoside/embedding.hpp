#pragma once

// Embeddings lambda: K -> Kbar presented by a relation F(t, lambda(t)) = 0,
// the relative extension K(lambda)/K in its power basis, and the rank-2 family.

#include <cstdint>
#include <string>
#include <vector>

#include "twoside/bipoly.hpp"
#include "twoside/matrix.hpp"

namespace twoside {

enum class CertTier { Certified, AssumedWithWitnessChecks };

std::string to_string(CertTier tier);

inline constexpr std::uint64_t kDefaultSeed = 20240601;

class Embedding {
   public:
    // Validates F; see embedding_new.
    explicit Embedding(const BiPoly& F, std::uint64_t seed = kDefaultSeed);

    const BiPoly& relation() const { return F_; }
    int n() const { return n_; }  // deg_y F, the left dimension
    int m() const { return m_; }  // deg_x F, the right dimension
    CertTier cert() const { return cert_; }
    // x-values whose specializations proved irreducibility (degree >= 3 only).
    const std::vector<long>& witnesses() const { return witnesses_; }

    friend bool operator==(const Embedding& a, const Embedding& b) { return a.F_ == b.F_; }

   private:
    BiPoly F_;
    int n_ = 0, m_ = 0;
    CertTier cert_ = CertTier::Certified;
    std::vector<long> witnesses_;
};

Embedding embedding_new(const BiPoly& F, std::uint64_t seed = kDefaultSeed);

// The dual embedding mu: the relation with x and y exchanged.
Embedding swap_dual(const Embedding& e);

struct RelExt {
    KPoly f;  // monic in y
    int n = 0;
    // beta[i][j][k]: coefficient of alpha_k in alpha_i * alpha_j (0-based, alpha_i = s^i).
    std::vector<std::vector<KVec>> beta;
};

RelExt relext_structure(const Embedding& e);

// Coordinates of lambda(c) in the power basis {1, s, ..., s^(n-1)}.
KVec coord_functions(const Embedding& e, const RatFunc& c);

// phi(t) with phi_ij = sum_k beta_jki lambda_k(t); its transpose is the right
// multiplication matrix of V(lambda) in the power basis.
KMatrix phi_matrix(const Embedding& e);

// lambda(t) = alpha + sqrt((a t^2 + b t + c) / (d t^2 + e t + f)).
struct FamilyParams {
    BigRat alpha, a, b, c, d, e, f;
};

FamilyParams parse_family_params(const std::string& csv);
std::string to_string(const FamilyParams& p);

// Fails with the name of the first violated condition.
void validate_family(const FamilyParams& p);

// (d x^2 + e x + f)(y - alpha)^2 - (a x^2 + b x + c), normalized; no validation.
BiPoly family_relation(const FamilyParams& p);

// m = (a t^2 + b t + c) / (d t^2 + e t + f).
RatFunc family_m(const FamilyParams& p);

Embedding family_embedding(const FamilyParams& p);

}  // namespace twoside
