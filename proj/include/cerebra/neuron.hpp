#pragma once

#include <cstdint>
#include <span>

#include "cerebra/fixed.hpp"

namespace cerebra {

// Retained fraction of the membrane potential per timestep. Leakage is
// approximated with arithmetic right shifts; the four legal rates are
// the ones the shift network can realize.
enum class DecaySelector : uint8_t {
    D125 = 0,  // keep 1/8   (m >> 3)
    D250 = 1,  // keep 1/4   (m >> 2)
    D500 = 2,  // keep 1/2   (m >> 1)
    D750 = 3,  // keep 3/4   ((m >> 1) + (m >> 2))
};

enum class ResetMode : uint8_t {
    Hold = 0,      // membrane keeps the over-threshold value
    Zero = 1,      // membrane returns to 0
    Subtract = 2,  // threshold is subtracted from the membrane
};

struct NeuronConfig {
    fixed::value_t threshold = fixed::kOne;
    DecaySelector decay = DecaySelector::D500;
    ResetMode reset = ResetMode::Zero;

    bool operator==(const NeuronConfig&) const = default;
};

struct NeuronState {
    fixed::value_t membrane = 0;
    fixed::value_t accumulator = 0;
    bool fired = false;

    bool operator==(const NeuronState&) const = default;
};

enum class ConfigError : uint8_t {
    None = 0,
    IllegalDecayEncoding,
    IllegalResetEncoding,
    TruncatedConfig,
};

// Retained fraction as a double, for reference models.
constexpr double decay_fraction(DecaySelector sel) {
    switch (sel) {
        case DecaySelector::D125: return 0.125;
        case DecaySelector::D250: return 0.25;
        case DecaySelector::D500: return 0.5;
        case DecaySelector::D750: return 0.75;
    }
    return 0.0;
}

// Shift-based membrane decay. D750 sums two shifted terms; the sum
// cannot exceed the source magnitude so saturation never triggers, but
// the add is saturating anyway to keep every arithmetic path clamped.
constexpr fixed::value_t decay(fixed::value_t membrane, DecaySelector sel) {
    switch (sel) {
        case DecaySelector::D125: return fixed::asr(membrane, 3);
        case DecaySelector::D250: return fixed::asr(membrane, 2);
        case DecaySelector::D500: return fixed::asr(membrane, 1);
        case DecaySelector::D750:
            return fixed::sat_add(fixed::asr(membrane, 1), fixed::asr(membrane, 2));
    }
    return membrane;
}

// Synaptic integration: one weight added into the accumulator.
// Saturates instead of wrapping; membrane and spike flag are untouched.
// Returns true when the add saturated (used by the harness to certify
// order-independence of a run).
inline bool accumulate(NeuronState& state, fixed::value_t weight) {
    int64_t exact = static_cast<int64_t>(state.accumulator) + weight;
    state.accumulator = fixed::sat_add(state.accumulator, weight);
    return exact != state.accumulator;
}

// Timestep-boundary update: decayed membrane plus accumulated input is
// compared against the threshold (ties fire), the reset mode is applied
// and the accumulator is cleared for the next step.
inline void step(NeuronState& state, const NeuronConfig& cfg) {
    fixed::value_t v = fixed::sat_add(decay(state.membrane, cfg.decay), state.accumulator);
    state.fired = v >= cfg.threshold;
    if (state.fired) {
        switch (cfg.reset) {
            case ResetMode::Hold: state.membrane = v; break;
            case ResetMode::Zero: state.membrane = 0; break;
            case ResetMode::Subtract: state.membrane = fixed::sat_sub(v, cfg.threshold); break;
        }
    } else {
        state.membrane = v;
    }
    state.accumulator = 0;
}

// Neuron-config payload layout (6 flits): threshold as little-endian
// Q16.16, decay selector, reset mode. See docs/formats.md.
constexpr size_t kNeuronConfigFlits = 6;

// Decodes a config payload. On error the output config is untouched.
inline ConfigError configure(std::span<const uint8_t> flits, NeuronConfig& out) {
    if (flits.size() < kNeuronConfigFlits) return ConfigError::TruncatedConfig;
    if (flits[4] > 3) return ConfigError::IllegalDecayEncoding;
    if (flits[5] > 2) return ConfigError::IllegalResetEncoding;
    uint32_t raw = static_cast<uint32_t>(flits[0]) | static_cast<uint32_t>(flits[1]) << 8 |
                   static_cast<uint32_t>(flits[2]) << 16 | static_cast<uint32_t>(flits[3]) << 24;
    out.threshold = static_cast<fixed::value_t>(raw);
    out.decay = static_cast<DecaySelector>(flits[4]);
    out.reset = static_cast<ResetMode>(flits[5]);
    return ConfigError::None;
}

// Encodes a config into the payload layout (the compiler-side inverse
// of configure).
inline void encode_config(const NeuronConfig& cfg, uint8_t out[kNeuronConfigFlits]) {
    uint32_t raw = static_cast<uint32_t>(cfg.threshold);
    out[0] = static_cast<uint8_t>(raw);
    out[1] = static_cast<uint8_t>(raw >> 8);
    out[2] = static_cast<uint8_t>(raw >> 16);
    out[3] = static_cast<uint8_t>(raw >> 24);
    out[4] = static_cast<uint8_t>(cfg.decay);
    out[5] = static_cast<uint8_t>(cfg.reset);
}

}  // namespace cerebra
