#pragma once

#include <array>
#include <cstdint>

namespace fibersynth {

// Deterministic RNG used by every module in this project.
//
// Algorithm: xoshiro256** (Blackman/Vigna, public domain), with the four
// state words seeded through the splitmix64 finalizer as its authors
// recommend. Integer output and the uniform mappings below are bit-exact
// across platforms; normal() goes through libm (log/cos/sin) and is exact
// per libm build.
//
// Child streams come from derive(), which hashes (seed, stream_id) into a
// fresh seed. Derivation reads only the stored seed, never the draw state,
// so it is a pure function of the parent.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform draw in [0, 1): top 53 bits scaled by 2^-53.
    double uniform01();

    // Uniform in [lo, hi). lo == hi returns lo.
    double uniform(double lo, double hi);

    // Uniform integer in [lo, hi], both ends inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    // Standard normal via Box-Muller; generates pairs, caches the second.
    double normal();

    // True with probability p.
    bool bernoulli(double p);

    std::uint64_t seed() const { return seed_; }

    SeededRng derive(std::uint64_t stream_id) const;

private:
    std::uint64_t seed_ = 0;
    std::array<std::uint64_t, 4> state_{};
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

SeededRng derive_rng(const SeededRng& parent, std::uint64_t stream_id);

}  // namespace fibersynth
