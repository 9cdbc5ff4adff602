#pragma once

// Truncations of the non-commutative symmetric algebra of V(lambda) for a
// rank-equal embedding, with V^{i*} identified with V(lambda) for even i and
// V(mu) for odd i.

#include <cstdint>
#include <string>
#include <vector>

#include "twoside/adjunction.hpp"

namespace twoside {

enum class Parity { Even, Odd };
std::string to_string(Parity p);

struct QSpace {
    Parity parity = Parity::Even;
    SubBimodule sub;
};

// Image of the unit in V^{i*} (x) V^{(i+1)*} for i of the given parity.
QSpace q_space(const Embedding& e, Parity parity, std::uint64_t seed = kDefaultSeed);

inline constexpr std::size_t kMaxWindowDim = 4096;

struct NcCell {
    int i = 0, j = 0;
    std::size_t dimB = 0, dimR = 0, dimA = 0;
    KMatrix R;  // reduced row echelon basis of R_ij in B_ij
};

struct NcOptions {
    std::uint64_t seed = kDefaultSeed;
    // Negative control: cells with j = dmax use Q of the wrong parity in every slot.
    bool mis_slot = false;
};

struct NcTruncation {
    int dmax = 0;
    std::vector<VSPtr> models;  // [0] = V(lambda), [1] = V(mu)
    std::vector<UnitElement> units;  // [0] in V(lambda) (x) V(mu), [1] in V(mu) (x) V(lambda)
    std::vector<KMatrix> q;     // bases of Q_even, Q_odd
    std::vector<NcCell> cells;  // all 0 <= i <= j <= dmax, ordered by (i, j)
    bool mis_slotted = false;

    const NcCell& cell(int i, int j) const;
    // B_ij as a module: V^{i*} (x) ... (x) V^{(j-1)*}, K when i = j.
    const TwoSidedVS& B(int i, int j) const;
    // dim A_{0,d} for d = 0..dmax.
    std::vector<std::size_t> a_dims() const;

    std::vector<TwoSidedVS> b_cache;  // indexed by parity * (dmax + 1) + length
};

NcTruncation ncsym_truncation(const Embedding& e, int dmax, const NcOptions& opt = {});

struct MultReport {
    bool ok = true;
    std::string detail;
};

// R_ij (x) B_jk + B_ij (x) R_jk inside R_ik for all i < j < k <= dmax, and
// dim A_ik <= dim A_ij * dim A_jk.
MultReport multiplication_consistency(const NcTruncation& tr);

bool ncsym_exists_check(const Embedding& e, int window);

}  // namespace twoside
