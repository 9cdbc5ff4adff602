#pragma once

// Irreducibility certificates for univariate polynomials over Q via
// distinct-degree factorization modulo small primes.

#include <cstdint>
#include <set>

#include "twoside/poly.hpp"

namespace twoside {

// Degrees d for which some factorization pattern modulo `p` admits a factor of
// degree d (subset sums of the distinct-degree pattern). Empty when p is bad
// for f (p divides the leading coefficient or f is not square-free mod p).
std::set<int> factor_degree_sums_mod_p(const UniPoly& f, std::uint32_t p);

// True when the intersection of admissible factor degrees over up to
// `max_primes` good primes collapses to {0, deg f}: a proof of irreducibility
// over Q. False means "not proved", never "reducible".
bool certify_irreducible_over_Q(const UniPoly& f, int max_primes = 40);

}  // namespace twoside
