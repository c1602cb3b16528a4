#pragma once

#include <cstdint>
#include <vector>

namespace salemlab {

// SplitMix64. Chosen over std::mt19937 + distributions because the standard
// distributions are implementation-defined; sampled sets must be identical
// across platforms for a given seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, n).
    std::uint64_t below(std::uint64_t n);

    double unit() { return (next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

// Stable per-row seed derivation: hash(masterSeed, index). Row results are
// then independent of evaluation schedule.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// k distinct indices from [0, n), in sorted order (partial Fisher-Yates).
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t n, std::uint64_t k);

}  // namespace salemlab
