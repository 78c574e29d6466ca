#pragma once

#include <cstdint>

#include "frqa/audio.hpp"
#include "frqa/gates.hpp"
#include "frqa/simulator.hpp"

namespace frqa::repr {

/// Quantum audio state: a uniform superposition pairing a q-bit
/// two's-complement amplitude register with an l-bit time register. The
/// layout names at least an "amplitude" and a "time" register; operations may
/// widen the state with extra registers (delay keeps its relocated tail
/// there).
struct FrqaState {
    int q = 1;
    int l = 1;
    sim::StateVector state{1};
    gates::RegisterLayout layout;

    const std::vector<int> &amplitude_wires() const { return layout.at("amplitude").wires; }
    const std::vector<int> &time_wires() const { return layout.at("time").wires; }
};

/// Checks the state-shape contract: exactly 2^l nonzero terms of magnitude
/// 2^(-l/2) (within 1e-10), one per time index, with every register declared
/// clean actually at |0>. Throws NotFrqaShapedError / ResourceError.
void validate_shape(const FrqaState &state);

/// The layout used by preparation: amplitude, time, and the AND-chain
/// ancillas (one conjunction wire plus l-2 chain wires when l >= 2).
gates::RegisterLayout preparation_layout(int q, int l);

/// Value-setting network for one sample: loads the plain binary pattern B_t
/// with NOT gates and complements the MSB, leaving the two's-complement
/// amplitude pattern on |0>^q.
gates::Circuit build_value_setting_op(const audio::BitString &sample_bits);

/// Time-controlled quantization: loads the binary pattern B_k onto the
/// amplitude register exactly when the time register equals k. The l time
/// bits are conjoined into an ancilla via 2(l-1) Toffolis (compute +
/// uncompute) and at most q CNOTs fan out to the amplitude register. The
/// MSB conversion is a single shared NOT placed once by the preparation
/// circuit, not repeated per sample.
gates::Circuit build_controlled_value_setting(std::int64_t k, const audio::BitString &sample_bits, int l);

/// Full preparation: a Hadamard layer on the time wires, one controlled load
/// of each sample's binary pattern, and a single closing NOT on the amplitude
/// MSB that performs the two's-complement conversion for every branch at
/// once. Census per sample: 2(l-1) Toffolis plus popcount(B_t) CNOTs, so the
/// total cost is bounded by (12l + q - 12) * 2^l with equality when every
/// B_t is all ones.
gates::Circuit build_preparation_circuit(const audio::AudioSignal &signal);

FrqaState prepare(const audio::AudioSignal &signal, int max_wires = sim::kDefaultMaxWires);

/// Exact readout of every time index; inverse of prepare up to padding.
audio::AudioSignal retrieve(const FrqaState &state);

} // namespace frqa::repr
