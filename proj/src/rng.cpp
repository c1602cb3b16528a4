#include "salemlab/rng.hpp"

#include "salemlab/errors.hpp"

#include <algorithm>

namespace salemlab {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) raise(ErrorCode::DivisionByZero, "Rng::below(0)");
    std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % n;
    }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Rng mix(master ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    mix.next();
    return mix.next();
}

std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t n, std::uint64_t k) {
    if (k > n) raise(ErrorCode::BudgetExceeded, "sample size exceeds population");
    std::vector<std::uint64_t> pool(n);
    for (std::uint64_t i = 0; i < n; ++i) pool[i] = i;
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t j = i + rng.below(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace salemlab
