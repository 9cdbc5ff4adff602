#pragma once

// Arbitrary-precision rationals (elements of the base field Q), backed by GMP.

#include <gmpxx.h>

#include <string>

namespace twoside {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline bool is_zero(const BigRat& q) { return sgn(q) == 0; }
inline bool is_one(const BigRat& q) { return q == 1; }

// Accepts "p", "-p", "p/q" and finite decimals like "1.25".
BigRat parse_rational(const std::string& text);

// Canonical decimal-string form: "p" or "p/q" with q > 0.
std::string to_string(const BigRat& q);

// True iff q = r^2 for some rational r; stores r in *root when requested.
bool is_rational_square(const BigRat& q, BigRat* root = nullptr);

}  // namespace twoside
