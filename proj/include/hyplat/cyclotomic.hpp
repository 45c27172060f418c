#pragma once

#include <hyplat/polynomial.hpp>

#include <map>
#include <vector>

namespace hyplat {

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

/// k-th cyclotomic polynomial by recursive division of x^k - 1.
inline const IntPoly& cyclotomic(unsigned long k) {
    static std::map<unsigned long, IntPoly> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<Int> xk(k + 1, Int(0));
    xk[0] = -1;
    xk[k] = 1;
    IntPoly p(std::move(xk));
    for (unsigned long d : divisors(k)) {
        if (d == k) continue;
        auto q = divide_exact(p, cyclotomic(d));
        if (!q) throw ContractViolation("cyclotomic division failed");
        p = std::move(*q);
    }
    return cache.emplace(k, std::move(p)).first->second;
}

}  // namespace hyplat
