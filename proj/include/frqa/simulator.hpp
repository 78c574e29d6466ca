#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "frqa/audio.hpp"
#include "frqa/gates.hpp"

namespace frqa::sim {

inline constexpr int kDefaultMaxWires = 26;

/// Exact statevector over n wires. Wire 0 maps to the most significant bit of
/// the basis index, so basis indices enumerate bitstrings lexicographically.
class StateVector {
  public:
    explicit StateVector(int n, int max_wires = kDefaultMaxWires);

    int wires() const { return n_; }
    std::size_t dimension() const { return amps_.size(); }

    std::complex<double> &operator[](std::size_t i) { return amps_[i]; }
    const std::complex<double> &operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;
    /// Basis index of a wire-ordered bit pattern.
    std::size_t index_of(const audio::BitString &bits) const;
    audio::BitString bits_of(std::size_t index) const;

    void set_basis_state(const audio::BitString &bits);
    void apply(const gates::Gate &gate);

    /// (basis pattern, amplitude) pairs above `threshold`, in lexicographic
    /// basis order.
    std::vector<std::pair<audio::BitString, std::complex<double>>>
    nonzero_terms(double threshold = 1e-12) const;

  private:
    std::vector<std::complex<double>> amps_;
    int n_;
};

StateVector basis_state(const audio::BitString &bits, int max_wires = kDefaultMaxWires);

/// Tensor product; `a`'s wires come first.
StateVector tensor(const StateVector &a, const StateVector &b, int max_wires = kDefaultMaxWires);

/// Appends `count` fresh wires in |0>.
StateVector extend(const StateVector &state, int count, int max_wires = kDefaultMaxWires);

/// Removes wires that are |0> in every nonzero term; throws ResourceError if
/// any of them is not.
StateVector drop_clean_wires(const StateVector &state, const std::vector<int> &wires);

StateVector apply_circuit(StateVector state, const gates::Circuit &circuit);

struct MeasurementOutcome {
    audio::BitString outcome;
    StateVector collapsed;
};

/// Projective measurement of the named register, sampled from Born
/// probabilities with an explicit seed.
MeasurementOutcome measure_register(const StateVector &state, const gates::RegisterLayout &layout,
                                    const std::string &register_name, std::uint64_t rng_seed);

/// Exact, non-destructive readout: the unique amplitude pattern entangled
/// with time index t, decoded as a two's-complement integer. This is the
/// deterministic counterpart of projective measurement and a simulator
/// privilege; a physical device would re-prepare and sample.
std::int64_t readout_amplitude(const StateVector &state, const std::vector<int> &amplitude_wires,
                               const std::vector<int> &time_wires, std::int64_t t);

/// JSON list of nonzero terms (bitstring, real, imag), lexicographic order.
std::string dump_json(const StateVector &state, double threshold = 1e-12);

} // namespace frqa::sim
