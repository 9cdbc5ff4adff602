#include "twoside/modp.hpp"

#include <vector>

namespace twoside {
namespace {

using u64 = std::uint64_t;
using PolyP = std::vector<u64>;  // lowest degree first, trimmed

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 pow_mod(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

PolyP sub(PolyP a, const PolyP& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

PolyP mul(const PolyP& a, const PolyP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Returns (quotient, remainder).
std::pair<PolyP, PolyP> divmod(PolyP a, const PolyP& b, u64 p) {
    if (a.size() < b.size()) return {{}, a};
    PolyP q(a.size() - b.size() + 1, 0);
    u64 inv = inv_mod(b.back(), p);
    for (std::size_t k = q.size(); k-- > 0;) {
        u64 c = a[k + b.size() - 1] * inv % p;
        q[k] = c;
        if (!c) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + p - c * b[j] % p) % p;
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

PolyP gcd(PolyP a, PolyP b, u64 p) {
    while (!b.empty()) {
        PolyP r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

PolyP powmod(PolyP base, u64 e, const PolyP& m, u64 p) {
    PolyP result{1};
    while (e) {
        if (e & 1) result = divmod(mul(result, base, p), m, p).second;
        base = divmod(mul(base, base, p), m, p).second;
        e >>= 1;
    }
    return result;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::set<int> factor_degree_sums_mod_p(const UniPoly& f, std::uint32_t prime) {
    const u64 p = prime;
    int n = f.degree();
    if (n < 1) return {};
    BigInt lcm_den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    PolyP g(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
        BigInt v = BigInt(f.coeff(i) * lcm_den);
        g[i] = mpz_fdiv_ui(v.get_mpz_t(), prime);
    }
    if (g.back() == 0) return {};
    PolyP dg;
    for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * (i % p) % p);
    trim(dg);
    if (gcd(g, dg, p).size() != 1) return {};

    std::vector<int> parts;  // factor degrees, with multiplicity
    PolyP rest = g;
    PolyP h{0, 1};  // x^(p^d) mod rest
    for (int d = 1; 2 * d <= static_cast<int>(rest.size()) - 1; ++d) {
        h = powmod(divmod(h, rest, p).second, p, rest, p);
        PolyP gd = gcd(rest, sub(h, PolyP{0, 1}, p), p);
        int gdeg = static_cast<int>(gd.size()) - 1;
        if (gdeg > 0) {
            for (int k = 0; k < gdeg / d; ++k) parts.push_back(d);
            rest = divmod(rest, gd, p).first;
        }
    }
    if (rest.size() > 1) parts.push_back(static_cast<int>(rest.size()) - 1);

    std::set<int> sums{0};
    for (int d : parts) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

bool certify_irreducible_over_Q(const UniPoly& f, int max_primes) {
    int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    std::set<int> possible;
    for (int i = 0; i <= n; ++i) possible.insert(i);
    int used = 0;
    for (std::uint32_t p = 3; used < max_primes && p < 100000; p += 2) {
        if (!is_prime(p)) continue;
        std::set<int> s = factor_degree_sums_mod_p(f, p);
        if (s.empty()) continue;
        ++used;
        std::set<int> inter;
        for (int d : possible)
            if (s.count(d)) inter.insert(d);
        possible = std::move(inter);
        if (possible.size() == 2) return true;
    }
    return false;
}

}  // namespace twoside
