#pragma once

// Built-in corpus and the acceptance suite shared by `twoside selftest` and the
// acceptance test binary.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "twoside/ncsym.hpp"

namespace twoside {

inline constexpr const char* kFamilyExample = "(x^2+2)*y^2 - (x^2+1)";

const std::vector<std::string>& builtin_corpus();
const std::vector<std::string>& rank_equal_corpus();

// A tuple passing validate_family, coefficients in -5..5 with denominators 1..3.
FamilyParams random_family_params(std::mt19937_64& rng);

// A tuple whose first failing condition (in validation order) is `condition`,
// one of 0..4 for "a = d = 0", "b² = 4ac", "e² = 4df", "ae ≠ bd", "af = cd".
// Every other condition holds, except af = cd which a = d = 0 forces.
FamilyParams violating_family_params(std::mt19937_64& rng, int condition);

extern const char* const kFamilyConditions[5];

// dim A_{0,d} for d = 0..dmax from a direct span computation over row-major
// tensor coordinates, independent of the truncation pipeline.
std::vector<std::size_t> brute_force_a_dims(const Embedding& e, int dmax, std::uint64_t seed = kDefaultSeed);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr int kCriteria = 10;

CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

}  // namespace twoside
