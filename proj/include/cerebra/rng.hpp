#pragma once

#include <cstdint>

namespace cerebra {

// Counter-based pseudo-random bits built on the SplitMix64 finalizer.
// Stateless and splittable: every draw is a pure function of (seed,
// counter), so stimulus encodings are reproducible across runs, across
// threads and across language implementations. The exact construction
// is part of the stimulus fixture format (see docs/formats.md); do not
// change it without versioning the fixtures.
namespace rng {

constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

constexpr uint64_t mix(uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive an independent stream seed, e.g. per (sample, input) pair.
constexpr uint64_t derive(uint64_t seed, uint64_t a) {
    return mix(mix(seed) ^ a);
}

constexpr uint64_t derive2(uint64_t seed, uint64_t a, uint64_t b) {
    return mix(derive(seed, a) ^ b);
}

// Draw for counter t within a stream.
constexpr uint64_t at(uint64_t stream_seed, uint64_t t) {
    return mix(stream_seed ^ (t * kGamma));
}

// Uniform double in [0, 1) using the high 53 bits.
constexpr double to_unit(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace rng

}  // namespace cerebra
