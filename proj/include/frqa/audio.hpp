#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frqa/errors.hpp"

namespace frqa::audio {

/// Fixed-width bit pattern. bits[0] is the most significant bit throughout
/// the project; registers and printed patterns follow the same order.
struct BitString {
    std::vector<std::uint8_t> bits;

    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> b) : bits(std::move(b)) {}
    explicit BitString(const std::string &pattern);

    int width() const { return static_cast<int>(bits.size()); }
    std::string str() const;

    bool operator==(const BitString &other) const = default;
};

/// Digital audio: signed integer samples at resolution q.
struct AudioSignal {
    std::vector<std::int64_t> samples;
    int q = 1;

    AudioSignal() = default;
    AudioSignal(std::vector<std::int64_t> s, int resolution);

    std::int64_t length() const { return static_cast<std::int64_t>(samples.size()); }
    /// Time-register width: ceil(log2(L)), and 1 for a single sample.
    int time_bits() const;
    bool is_padded() const { return length() == (std::int64_t{1} << time_bits()); }

    bool operator==(const AudioSignal &other) const = default;
};

/// Smallest resolution whose two's-complement range covers every sample.
int infer_resolution(const std::vector<std::int64_t> &samples);

BitString encode_twos_complement(std::int64_t value, int q);
std::int64_t decode_twos_complement(const BitString &bits);

/// Reads an unsigned resolution value r as a signed amplitude: r - 2^(q-1),
/// i.e. the plain binary form of r with its MSB complemented.
std::int64_t resolution_to_amplitude(std::uint64_t r, int q);

/// Plain binary form of the sample's resolution value (amplitude + 2^(q-1)).
BitString sample_to_resolution_bits(std::int64_t sample, int q);

AudioSignal pad_to_power_of_two(const AudioSignal &signal);

// Classical oracles. These define ground truth for every circuit operation
// and must stay independent of the gate-level implementations.

AudioSignal oracle_add(const AudioSignal &x, const AudioSignal &y);
AudioSignal oracle_invert(const AudioSignal &x);
AudioSignal oracle_delay(const AudioSignal &x, std::int64_t dt);
AudioSignal oracle_reverse(const AudioSignal &x);

/// Partial assignment of time-bit positions (position, value); position 0 is
/// the MSB of the time register.
using TimeBitAssignment = std::vector<std::pair<int, bool>>;

/// Complements the unfixed time bits of every index matching the assignment;
/// all other indices are untouched. An empty assignment is a full reversal.
AudioSignal oracle_reverse_restricted(const AudioSignal &x, const TimeBitAssignment &fixed_bits);

} // namespace frqa::audio
