#pragma once

#include <cstdint>
#include <limits>

namespace cerebra {

// Signed Q16.16 fixed point. Membrane potentials, synaptic weights and
// firing thresholds all share this format; one unit of potential is
// fixed::kOne in raw representation.
namespace fixed {

using value_t = int32_t;

constexpr value_t kOne = 1 << 16;
constexpr value_t kMax = std::numeric_limits<int32_t>::max();
constexpr value_t kMin = std::numeric_limits<int32_t>::min();
constexpr int kFractionBits = 16;

// Saturating add: clamps at the signed 32-bit extremes instead of wrapping.
constexpr value_t sat_add(value_t a, value_t b) {
    int64_t s = static_cast<int64_t>(a) + static_cast<int64_t>(b);
    if (s > kMax) return kMax;
    if (s < kMin) return kMin;
    return static_cast<value_t>(s);
}

constexpr value_t sat_sub(value_t a, value_t b) {
    int64_t s = static_cast<int64_t>(a) - static_cast<int64_t>(b);
    if (s > kMax) return kMax;
    if (s < kMin) return kMin;
    return static_cast<value_t>(s);
}

// Arithmetic (sign-preserving) right shift. Floors toward -inf for
// negative values, matching a hardware shifter.
constexpr value_t asr(value_t v, int bits) {
    return static_cast<value_t>(static_cast<int64_t>(v) >> bits);
}

// Q16.16 multiply with the low 16 product bits dropped (truncation of
// the 64-bit product, i.e. floor). For factors of the form k/2^n the
// result is bit-identical to an arithmetic right shift by n.
constexpr value_t mul(value_t a, value_t b) {
    int64_t p = static_cast<int64_t>(a) * static_cast<int64_t>(b);
    p >>= kFractionBits;
    if (p > kMax) return kMax;
    if (p < kMin) return kMin;
    return static_cast<value_t>(p);
}

constexpr double to_double(value_t v) {
    return static_cast<double>(v) / static_cast<double>(kOne);
}

constexpr value_t from_int(int32_t units) {
    return static_cast<value_t>(units) << 16;
}

}  // namespace fixed

}  // namespace cerebra
