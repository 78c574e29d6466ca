#include "frqa/audio.hpp"

#include <algorithm>
#include <cmath>

namespace frqa::audio {

namespace {

void check_resolution(int q) {
    if (q < 1 || q > 62) {
        throw RangeError("resolution q must be in [1, 62], got " + std::to_string(q));
    }
}

std::int64_t min_sample(int q) { return -(std::int64_t{1} << (q - 1)); }
std::int64_t max_sample(int q) { return (std::int64_t{1} << (q - 1)) - 1; }

} // namespace

BitString::BitString(const std::string &pattern) {
    bits.reserve(pattern.size());
    for (char c : pattern) {
        if (c != '0' && c != '1') {
            throw RangeError("bit pattern may contain only 0/1, got '" + pattern + "'");
        }
        bits.push_back(c == '1' ? 1 : 0);
    }
}

std::string BitString::str() const {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

AudioSignal::AudioSignal(std::vector<std::int64_t> s, int resolution) : samples(std::move(s)), q(resolution) {
    check_resolution(q);
    if (samples.empty()) {
        throw ShapeError("audio signal needs at least one sample");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i] < min_sample(q) || samples[i] > max_sample(q)) {
            throw RangeError("sample " + std::to_string(i) + " = " + std::to_string(samples[i]) +
                             " outside [" + std::to_string(min_sample(q)) + ", " +
                             std::to_string(max_sample(q)) + "] for q=" + std::to_string(q));
        }
    }
}

int AudioSignal::time_bits() const {
    if (length() <= 1) {
        return 1;
    }
    int l = 0;
    while ((std::int64_t{1} << l) < length()) {
        ++l;
    }
    return l;
}

int infer_resolution(const std::vector<std::int64_t> &samples) {
    int q = 1;
    for (auto s : samples) {
        while (s < min_sample(q) || s > max_sample(q)) {
            ++q;
        }
    }
    return q;
}

BitString encode_twos_complement(std::int64_t value, int q) {
    check_resolution(q);
    if (value < min_sample(q) || value > max_sample(q)) {
        throw RangeError("value " + std::to_string(value) + " outside two's-complement range [" +
                         std::to_string(min_sample(q)) + ", " + std::to_string(max_sample(q)) +
                         "] for q=" + std::to_string(q));
    }
    const auto pattern = static_cast<std::uint64_t>(value) & ((std::uint64_t{1} << q) - 1);
    BitString out;
    out.bits.resize(q);
    for (int i = 0; i < q; ++i) {
        out.bits[i] = static_cast<std::uint8_t>((pattern >> (q - 1 - i)) & 1U);
    }
    return out;
}

std::int64_t decode_twos_complement(const BitString &bits) {
    const int q = bits.width();
    if (q < 1) {
        throw ShapeError("cannot decode an empty bit string");
    }
    std::int64_t value = bits.bits[0] ? -(std::int64_t{1} << (q - 1)) : 0;
    for (int i = 1; i < q; ++i) {
        value += static_cast<std::int64_t>(bits.bits[i]) << (q - 1 - i);
    }
    return value;
}

std::int64_t resolution_to_amplitude(std::uint64_t r, int q) {
    check_resolution(q);
    if (r > (std::uint64_t{1} << q) - 1) {
        throw RangeError("resolution value " + std::to_string(r) + " outside [0, " +
                         std::to_string((std::uint64_t{1} << q) - 1) + "] for q=" + std::to_string(q));
    }
    return static_cast<std::int64_t>(r) - (std::int64_t{1} << (q - 1));
}

BitString sample_to_resolution_bits(std::int64_t sample, int q) {
    check_resolution(q);
    if (sample < min_sample(q) || sample > max_sample(q)) {
        throw RangeError("sample " + std::to_string(sample) + " out of range for q=" + std::to_string(q));
    }
    const auto r = static_cast<std::uint64_t>(sample + (std::int64_t{1} << (q - 1)));
    BitString out;
    out.bits.resize(q);
    for (int i = 0; i < q; ++i) {
        out.bits[i] = static_cast<std::uint8_t>((r >> (q - 1 - i)) & 1U);
    }
    return out;
}

AudioSignal pad_to_power_of_two(const AudioSignal &signal) {
    AudioSignal out = signal;
    out.samples.resize(std::size_t{1} << signal.time_bits(), 0);
    return out;
}

AudioSignal oracle_add(const AudioSignal &x, const AudioSignal &y) {
    if (x.q != y.q) {
        throw ShapeError("oracle_add needs equal resolutions, got q=" + std::to_string(x.q) +
                         " and q=" + std::to_string(y.q));
    }
    if (x.length() != y.length()) {
        throw ShapeError("oracle_add needs equal lengths, got " + std::to_string(x.length()) +
                         " and " + std::to_string(y.length()));
    }
    std::vector<std::int64_t> sums(x.samples.size());
    for (std::size_t i = 0; i < sums.size(); ++i) {
        sums[i] = x.samples[i] + y.samples[i];
    }
    return AudioSignal(std::move(sums), x.q + 1);
}

AudioSignal oracle_invert(const AudioSignal &x) {
    // Modular negation: -2^(q-1) is a fixed point, matching the circuit.
    const std::int64_t modulus = std::int64_t{1} << x.q;
    AudioSignal out = x;
    for (auto &s : out.samples) {
        if (s != -(modulus / 2)) {
            s = -s;
        }
    }
    return out;
}

AudioSignal oracle_delay(const AudioSignal &x, std::int64_t dt) {
    if (!x.is_padded()) {
        throw ShapeError("oracle_delay expects a padded signal");
    }
    const std::int64_t n = x.length();
    if (dt < 0 || dt > n - 1) {
        throw RangeError("delay " + std::to_string(dt) + " outside [0, " + std::to_string(n - 1) + "]");
    }
    AudioSignal out = x;
    for (std::int64_t t = 0; t < n; ++t) {
        out.samples[static_cast<std::size_t>(t)] = t < dt ? 0 : x.samples[static_cast<std::size_t>(t - dt)];
    }
    return out;
}

AudioSignal oracle_reverse(const AudioSignal &x) {
    if (!x.is_padded()) {
        throw ShapeError("oracle_reverse expects a padded signal");
    }
    AudioSignal out = x;
    std::reverse(out.samples.begin(), out.samples.end());
    return out;
}

AudioSignal oracle_reverse_restricted(const AudioSignal &x, const TimeBitAssignment &fixed_bits) {
    if (!x.is_padded()) {
        throw ShapeError("oracle_reverse_restricted expects a padded signal");
    }
    const int l = x.time_bits();
    std::int64_t fixed_mask = 0;
    std::int64_t fixed_value = 0;
    for (const auto &[pos, val] : fixed_bits) {
        if (pos < 0 || pos >= l) {
            throw RangeError("fixed time-bit position " + std::to_string(pos) + " outside [0, " +
                             std::to_string(l - 1) + "]");
        }
        const std::int64_t bit = std::int64_t{1} << (l - 1 - pos);
        fixed_mask |= bit;
        if (val) {
            fixed_value |= bit;
        }
    }
    const std::int64_t flip_mask = ((std::int64_t{1} << l) - 1) & ~fixed_mask;
    AudioSignal out = x;
    for (std::int64_t t = 0; t < x.length(); ++t) {
        if ((t & fixed_mask) == fixed_value) {
            out.samples[static_cast<std::size_t>(t ^ flip_mask)] = x.samples[static_cast<std::size_t>(t)];
        }
    }
    return out;
}

} // namespace frqa::audio
