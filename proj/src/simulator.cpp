#include "frqa/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <json.hpp>

namespace frqa::sim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::size_t bit_mask(int wire, int n) { return std::size_t{1} << (n - 1 - wire); }

} // namespace

StateVector::StateVector(int n, int max_wires) : n_(n) {
    if (n < 1) {
        throw ShapeError("state needs at least one wire");
    }
    if (n > max_wires) {
        throw ResourceError("requested " + std::to_string(n) + " wires, cap is " +
                            std::to_string(max_wires));
    }
    amps_.assign(std::size_t{1} << n, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

std::size_t StateVector::index_of(const audio::BitString &bits) const {
    if (bits.width() != n_) {
        throw ShapeError("bit pattern width " + std::to_string(bits.width()) +
                         " does not match state width " + std::to_string(n_));
    }
    std::size_t index = 0;
    for (int w = 0; w < n_; ++w) {
        if (bits.bits[static_cast<std::size_t>(w)]) {
            index |= bit_mask(w, n_);
        }
    }
    return index;
}

audio::BitString StateVector::bits_of(std::size_t index) const {
    audio::BitString bits;
    bits.bits.resize(static_cast<std::size_t>(n_));
    for (int w = 0; w < n_; ++w) {
        bits.bits[static_cast<std::size_t>(w)] = (index & bit_mask(w, n_)) ? 1 : 0;
    }
    return bits;
}

void StateVector::set_basis_state(const audio::BitString &bits) {
    std::fill(amps_.begin(), amps_.end(), std::complex<double>{0.0, 0.0});
    amps_[index_of(bits)] = {1.0, 0.0};
}

void StateVector::apply(const gates::Gate &gate) {
    gate.validate(n_);
    const std::size_t tmask = bit_mask(gate.target, n_);
    const std::size_t dim = amps_.size();
    if (gate.hadamard) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & tmask) {
                continue;
            }
            const auto a = amps_[i];
            const auto b = amps_[i | tmask];
            amps_[i] = (a + b) * kInvSqrt2;
            amps_[i | tmask] = (a - b) * kInvSqrt2;
        }
        return;
    }
    std::size_t want = 0;
    std::size_t cmask = 0;
    for (const auto &c : gate.controls) {
        const std::size_t m = bit_mask(c.wire, n_);
        cmask |= m;
        if (c.positive) {
            want |= m;
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tmask) || (i & cmask) != want) {
            continue;
        }
        std::swap(amps_[i], amps_[i | tmask]);
    }
}

std::vector<std::pair<audio::BitString, std::complex<double>>>
StateVector::nonzero_terms(double threshold) const {
    std::vector<std::pair<audio::BitString, std::complex<double>>> out;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (std::abs(amps_[i]) > threshold) {
            out.emplace_back(bits_of(i), amps_[i]);
        }
    }
    return out;
}

StateVector basis_state(const audio::BitString &bits, int max_wires) {
    StateVector state(bits.width(), max_wires);
    state.set_basis_state(bits);
    return state;
}

StateVector tensor(const StateVector &a, const StateVector &b, int max_wires) {
    StateVector out(a.wires() + b.wires(), max_wires);
    const std::size_t db = b.dimension();
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            out[i * db + j] = a[i] * b[j];
        }
    }
    return out;
}

StateVector extend(const StateVector &state, int count, int max_wires) {
    if (count == 0) {
        return state;
    }
    StateVector out(state.wires() + count, max_wires);
    const std::size_t stride = std::size_t{1} << count;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        out[i * stride] = state[i];
        for (std::size_t j = 1; j < stride; ++j) {
            out[i * stride + j] = {0.0, 0.0};
        }
    }
    return out;
}

StateVector drop_clean_wires(const StateVector &state, const std::vector<int> &wires) {
    if (wires.empty()) {
        return state;
    }
    const int n = state.wires();
    std::size_t drop_mask = 0;
    for (int w : wires) {
        drop_mask |= std::size_t{1} << (n - 1 - w);
    }
    std::vector<int> kept;
    for (int w = 0; w < n; ++w) {
        if (!(drop_mask & (std::size_t{1} << (n - 1 - w)))) {
            kept.push_back(w);
        }
    }
    StateVector out(static_cast<int>(kept.size()));
    out[0] = {0.0, 0.0};
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (std::abs(state[i]) <= 1e-14) {
            continue;
        }
        if (i & drop_mask) {
            throw ResourceError("wire expected to be |0> carries amplitude in basis term " +
                                state.bits_of(i).str());
        }
        std::size_t reduced = 0;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if (i & (std::size_t{1} << (n - 1 - kept[k]))) {
                reduced |= std::size_t{1} << (kept.size() - 1 - k);
            }
        }
        out[reduced] = state[i];
    }
    return out;
}

StateVector apply_circuit(StateVector state, const gates::Circuit &circuit) {
    if (circuit.width() != state.wires()) {
        throw ShapeError("circuit width " + std::to_string(circuit.width()) +
                         " does not match state width " + std::to_string(state.wires()));
    }
    for (const auto &g : circuit.ops()) {
        state.apply(g);
    }
    return state;
}

MeasurementOutcome measure_register(const StateVector &state, const gates::RegisterLayout &layout,
                                    const std::string &register_name, std::uint64_t rng_seed) {
    const auto &reg = layout.at(register_name);
    const int n = state.wires();
    const auto width = static_cast<int>(reg.wires.size());

    std::vector<double> probs(std::size_t{1} << width, 0.0);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        const double p = std::norm(state[i]);
        if (p == 0.0) {
            continue;
        }
        std::size_t outcome = 0;
        for (int k = 0; k < width; ++k) {
            if (i & (std::size_t{1} << (n - 1 - reg.wires[static_cast<std::size_t>(k)]))) {
                outcome |= std::size_t{1} << (width - 1 - k);
            }
        }
        probs[outcome] += p;
    }

    std::mt19937_64 rng(rng_seed);
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double acc = 0.0;
    std::size_t picked = probs.size() - 1;
    for (std::size_t o = 0; o < probs.size(); ++o) {
        acc += probs[o];
        if (u < acc) {
            picked = o;
            break;
        }
    }

    if (probs[picked] < 1e-18 || std::sqrt(probs[picked]) < 1e-9) {
        throw NotFrqaShapedError("degenerate measurement: outcome probability below 1e-18");
    }

    MeasurementOutcome result{audio::BitString{}, state};
    result.outcome.bits.resize(static_cast<std::size_t>(width));
    for (int k = 0; k < width; ++k) {
        result.outcome.bits[static_cast<std::size_t>(k)] =
            (picked & (std::size_t{1} << (width - 1 - k))) ? 1 : 0;
    }
    const double scale = 1.0 / std::sqrt(probs[picked]);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        std::size_t outcome = 0;
        for (int k = 0; k < width; ++k) {
            if (i & (std::size_t{1} << (n - 1 - reg.wires[static_cast<std::size_t>(k)]))) {
                outcome |= std::size_t{1} << (width - 1 - k);
            }
        }
        result.collapsed[i] = outcome == picked ? state[i] * scale : std::complex<double>{0.0, 0.0};
    }
    return result;
}

std::int64_t readout_amplitude(const StateVector &state, const std::vector<int> &amplitude_wires,
                               const std::vector<int> &time_wires, std::int64_t t) {
    const int n = state.wires();
    const int l = static_cast<int>(time_wires.size());
    if (t < 0 || t >= (std::int64_t{1} << l)) {
        throw RangeError("time index " + std::to_string(t) + " outside [0, 2^l)");
    }
    bool found = false;
    audio::BitString pattern;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (std::abs(state[i]) <= 1e-10) {
            continue;
        }
        std::int64_t ti = 0;
        for (int k = 0; k < l; ++k) {
            if (i & (std::size_t{1} << (n - 1 - time_wires[static_cast<std::size_t>(k)]))) {
                ti |= std::int64_t{1} << (l - 1 - k);
            }
        }
        if (ti != t) {
            continue;
        }
        audio::BitString p;
        p.bits.reserve(amplitude_wires.size());
        for (int w : amplitude_wires) {
            p.bits.push_back((i & (std::size_t{1} << (n - 1 - w))) ? 1 : 0);
        }
        if (found && !(p == pattern)) {
            throw NotFrqaShapedError("time index " + std::to_string(t) +
                                     " is entangled with more than one amplitude pattern");
        }
        pattern = std::move(p);
        found = true;
    }
    if (!found) {
        throw NotFrqaShapedError("time index " + std::to_string(t) + " has zero total probability");
    }
    return audio::decode_twos_complement(pattern);
}

std::string dump_json(const StateVector &state, double threshold) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[bits, amp] : state.nonzero_terms(threshold)) {
        terms.push_back({{"basis", bits.str()}, {"real", amp.real()}, {"imag", amp.imag()}});
    }
    nlohmann::json j;
    j["wires"] = state.wires();
    j["terms"] = terms;
    return j.dump(2);
}

} // namespace frqa::sim
