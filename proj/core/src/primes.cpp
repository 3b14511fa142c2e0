#include "zq2/primes.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zq2/errors.hpp"

namespace zq2 {

std::int64_t prime_pi(std::int64_t x) {
    if (x > 100000000)
        throw DomainError("prime_pi: sieve capped at 1e8");
    if (x < 2) return 0;

    const std::int64_t root = std::int64_t(std::sqrt(double(x))) + 1;
    std::vector<char> small(root + 1, 1);
    std::vector<std::int64_t> base;
    for (std::int64_t p = 2; p <= root; ++p) {
        if (!small[p]) continue;
        base.push_back(p);
        for (std::int64_t q = p * p; q <= root; q += p) small[q] = 0;
    }

    std::int64_t count = 0;
    const std::int64_t seg = 1 << 18;
    std::vector<char> mark(seg);
    for (std::int64_t lo = 2; lo <= x; lo += seg) {
        const std::int64_t hi = std::min(lo + seg - 1, x);
        std::fill(mark.begin(), mark.end(), 1);
        for (std::int64_t p : base) {
            if (p * p > hi) break;
            const std::int64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::int64_t q = start; q <= hi; q += p) mark[q - lo] = 0;
        }
        for (std::int64_t n = lo; n <= hi; ++n) count += mark[n - lo];
    }
    return count;
}

double pi_asymptotic(double x) {
    if (x <= 1.0) throw DomainError("pi_asymptotic: requires x > 1");
    return x / std::log(x);
}

}  // namespace zq2
