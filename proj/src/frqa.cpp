#include "frqa/frqa.hpp"

#include <cmath>
#include <set>

namespace frqa::repr {

using audio::AudioSignal;
using audio::BitString;
using gates::Circuit;
using gates::Control;
using gates::RegisterLayout;

void validate_shape(const FrqaState &fs) {
    const auto terms = fs.state.nonzero_terms(1e-12);
    const auto expected_terms = std::size_t{1} << fs.l;
    if (terms.size() != expected_terms) {
        throw NotFrqaShapedError("expected " + std::to_string(expected_terms) + " nonzero terms, found " +
                                 std::to_string(terms.size()));
    }
    const double coeff = std::pow(2.0, -fs.l / 2.0);
    std::set<std::int64_t> seen_times;
    for (const auto &[bits, amp] : terms) {
        if (std::abs(std::abs(amp) - coeff) > 1e-10) {
            throw NotFrqaShapedError("term magnitude " + std::to_string(std::abs(amp)) +
                                     " deviates from 2^(-l/2)");
        }
        std::int64_t t = 0;
        const auto &tw = fs.time_wires();
        for (std::size_t k = 0; k < tw.size(); ++k) {
            if (bits.bits[static_cast<std::size_t>(tw[k])]) {
                t |= std::int64_t{1} << (tw.size() - 1 - k);
            }
        }
        if (!seen_times.insert(t).second) {
            throw NotFrqaShapedError("time index " + std::to_string(t) + " appears in two basis terms");
        }
        for (const auto &reg : fs.layout.registers()) {
            if (!reg.must_be_clean || reg.role == gates::Role::Amplitude || reg.role == gates::Role::Time) {
                continue;
            }
            for (int w : reg.wires) {
                if (bits.bits[static_cast<std::size_t>(w)]) {
                    throw ResourceError("register '" + reg.name + "' expected clean but wire " +
                                        std::to_string(w) + " is set in term " + bits.str());
                }
            }
        }
    }
}

RegisterLayout preparation_layout(int q, int l) {
    RegisterLayout layout;
    layout.add("amplitude", gates::Role::Amplitude, q);
    layout.add("time", gates::Role::Time, l);
    if (l >= 2) {
        layout.add("and_chain", gates::Role::Ancilla, l - 1);
    }
    return layout;
}

Circuit build_value_setting_op(const BitString &sample_bits) {
    const int q = sample_bits.width();
    if (q < 1) {
        throw ShapeError("sample pattern must have at least one bit");
    }
    RegisterLayout layout;
    layout.add("amplitude", gates::Role::Amplitude, q);
    Circuit circuit(layout);
    for (int i = 0; i < q; ++i) {
        if (sample_bits.bits[static_cast<std::size_t>(i)]) {
            circuit.append(gates::make_not(i));
        }
    }
    circuit.append(gates::make_not(0)); // two's-complement conversion on the MSB
    return circuit;
}

namespace {

// Emits the time-controlled load of `pattern` onto the amplitude register:
// conjunction of the (polarity-adjusted) time bits into the AND chain, CNOT
// fan-out for each set pattern bit, then uncompute.
void controlled_pattern_load(Circuit &circuit, std::int64_t k, const BitString &pattern, int l) {
    const auto &layout = circuit.layout();
    const auto &amp = layout.at("amplitude").wires;
    const auto &time = layout.at("time").wires;
    const int q = static_cast<int>(amp.size());
    if (pattern.width() != q) {
        throw ShapeError("pattern width " + std::to_string(pattern.width()) +
                         " does not match amplitude register width " + std::to_string(q));
    }
    if (k < 0 || k >= (std::int64_t{1} << l)) {
        throw RangeError("time index " + std::to_string(k) + " outside [0, 2^l)");
    }

    auto time_control = [&](int i) {
        const bool bit = (k >> (l - 1 - i)) & 1;
        return Control{time[static_cast<std::size_t>(i)], bit};
    };

    if (l == 1) {
        for (int i = 0; i < q; ++i) {
            if (pattern.bits[static_cast<std::size_t>(i)]) {
                circuit.append(gates::make_x({time_control(0)}, amp[static_cast<std::size_t>(i)]));
            }
        }
        return;
    }

    const auto &chain = layout.at("and_chain").wires;
    std::vector<gates::Gate> compute;
    compute.push_back(gates::make_x({time_control(0), time_control(1)}, chain[0]));
    for (int i = 2; i < l; ++i) {
        compute.push_back(gates::make_x({Control{chain[static_cast<std::size_t>(i - 2)], true}, time_control(i)},
                                        chain[static_cast<std::size_t>(i - 1)]));
    }
    for (const auto &g : compute) {
        circuit.append(g);
    }
    const int and_wire = chain[static_cast<std::size_t>(l - 2)];
    for (int i = 0; i < q; ++i) {
        if (pattern.bits[static_cast<std::size_t>(i)]) {
            circuit.append(gates::make_cnot(and_wire, amp[static_cast<std::size_t>(i)]));
        }
    }
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) {
        circuit.append(*it);
    }
}

} // namespace

Circuit build_controlled_value_setting(std::int64_t k, const BitString &sample_bits, int l) {
    Circuit circuit(preparation_layout(sample_bits.width(), l));
    controlled_pattern_load(circuit, k, sample_bits, l);
    return circuit;
}

Circuit build_preparation_circuit(const AudioSignal &signal) {
    if (!signal.is_padded()) {
        throw ShapeError("preparation expects a signal padded to 2^l samples");
    }
    const int q = signal.q;
    const int l = signal.time_bits();
    Circuit circuit(preparation_layout(q, l));
    const auto &time = circuit.layout().at("time").wires;
    for (int w : time) {
        circuit.append(gates::make_hadamard(w));
    }
    for (std::int64_t t = 0; t < signal.length(); ++t) {
        const BitString b = audio::sample_to_resolution_bits(signal.samples[static_cast<std::size_t>(t)], q);
        controlled_pattern_load(circuit, t, b, l);
    }
    // One NOT converts every branch's binary pattern to two's complement.
    circuit.append(gates::make_not(circuit.layout().at("amplitude").wires[0]));
    return circuit;
}

FrqaState prepare(const AudioSignal &signal, int max_wires) {
    const AudioSignal padded = audio::pad_to_power_of_two(signal);
    const int q = padded.q;
    const int l = padded.time_bits();
    const Circuit circuit = build_preparation_circuit(padded);
    if (circuit.width() > max_wires) {
        throw ResourceError("preparation needs " + std::to_string(circuit.width()) +
                            " wires, cap is " + std::to_string(max_wires));
    }
    sim::StateVector state(circuit.width(), max_wires);
    state = sim::apply_circuit(std::move(state), circuit);

    // The AND chain is uncomputed; drop it so the state is exactly q+l wires.
    std::vector<int> anc;
    if (circuit.layout().has("and_chain")) {
        anc = circuit.layout().at("and_chain").wires;
    }
    FrqaState out;
    out.q = q;
    out.l = l;
    out.state = sim::drop_clean_wires(state, anc);
    out.layout.add("amplitude", gates::Role::Amplitude, q);
    out.layout.add("time", gates::Role::Time, l);
    validate_shape(out);
    return out;
}

AudioSignal retrieve(const FrqaState &fs) {
    std::vector<std::int64_t> samples;
    samples.reserve(std::size_t{1} << fs.l);
    for (std::int64_t t = 0; t < (std::int64_t{1} << fs.l); ++t) {
        samples.push_back(sim::readout_amplitude(fs.state, fs.amplitude_wires(), fs.time_wires(), t));
    }
    return AudioSignal(std::move(samples), fs.q);
}

} // namespace frqa::repr
