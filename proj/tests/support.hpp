#pragma once

// Random generators and small independent oracles shared by the test suites.

#include <random>

#include "twoside/bipoly.hpp"
#include "twoside/matrix.hpp"

namespace testsupport {

using namespace twoside;

inline BigRat rand_rat(std::mt19937_64& rng, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, 3);
    BigRat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline UniPoly rand_poly(std::mt19937_64& rng, int maxdeg, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> deg(0, maxdeg), c(lo, hi);
    std::vector<BigRat> cs;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.emplace_back(c(rng));
    return UniPoly(cs);
}

inline UniPoly rand_nonzero_poly(std::mt19937_64& rng, int maxdeg) {
    for (;;) {
        UniPoly p = rand_poly(rng, maxdeg);
        if (!p.is_zero_poly()) return p;
    }
}

inline RatFunc rand_ratfunc(std::mt19937_64& rng, int maxdeg = 2) {
    return RatFunc(rand_poly(rng, maxdeg), rand_nonzero_poly(rng, maxdeg));
}

inline RatFunc rand_nonzero_ratfunc(std::mt19937_64& rng, int maxdeg = 2) {
    for (;;) {
        RatFunc r = rand_ratfunc(rng, maxdeg);
        if (!r.is_zero_value()) return r;
    }
}

inline KMatrix rand_kmatrix(std::mt19937_64& rng, std::size_t n, int maxdeg = 1) {
    KMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = RatFunc(rand_poly(rng, maxdeg, -2, 2));
    return m;
}

inline KMatrix rand_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        KMatrix m = rand_kmatrix(rng, n);
        if (rank(m) == n) return m;
    }
}

inline KVec rand_kvec(std::mt19937_64& rng, std::size_t n, int maxdeg = 2) {
    KVec v(n);
    for (auto& x : v) x = RatFunc(rand_poly(rng, maxdeg, -3, 3));
    return v;
}

}  // namespace testsupport
