#pragma once

#include <cstdint>

namespace zq2 {

// Exact prime-counting function by segmented sieve; x <= 1e8.
std::int64_t prime_pi(std::int64_t x);

// Leading asymptotic x / ln x.
double pi_asymptotic(double x);

}  // namespace zq2
