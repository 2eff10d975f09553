#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace credence {

// xoshiro256** with splitmix64 seeding. Hand-rolled so that sampled values
// are identical across standard libraries and platforms; byte-identical
// outputs for a fixed seed are part of the artifact contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform in [0, 1) with 53 random bits.
    double next_double();

    // Uniform in [0, n); n > 0.
    std::uint64_t next_below(std::uint64_t n);

    bool bernoulli(double p);

    // Independent child stream for a named component. Children derived from
    // the same (seed, tag) pair are identical; different tags decorrelate.
    Rng derive(std::string_view tag) const;

    std::uint64_t seed() const { return seed_; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
};

}  // namespace credence
