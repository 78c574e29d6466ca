#pragma once

#include <cstdint>
#include <string>

#include "frqa/audio.hpp"
#include "frqa/frqa.hpp"
#include "frqa/gates.hpp"

namespace frqa::ops {

/// Measured circuit cost next to the closed-form complexity it is checked
/// against. delta = measured - expected; any nonzero delta is explained in
/// notes.
struct CostReport {
    std::string operation;
    std::string formula;
    std::int64_t expected = 0;
    std::int64_t measured = 0;
    std::int64_t delta = 0;
    std::string notes;
};

std::string to_json(const CostReport &report);

// --- circuit builders ---------------------------------------------------

/// Ripple-carry ADDER: |a>|b> -> |a>|a+b> with the (q+1)-bit sum in b plus
/// its extension wire. Census is exactly 4q-2 Toffolis and 4q CNOTs; the q
/// carry-chain ancillas are returned to |0>.
gates::Circuit build_adder(int q);

/// In-place modular adder over m-bit operands: b <- (a+b) mod 2^m, no carry
/// out. Used on sign-extended operands, where the range guarantee makes the
/// dropped carry irrelevant.
gates::Circuit build_modular_adder(int m);

/// Flag contract: e0 e1 = 00 iff a = b; e0 = 1 iff a > b, e1 = 1 iff a < b.
/// Operands and the decided-chain ancillas are restored.
gates::Circuit build_comparator(int l);

/// Copies each operand's sign bit to its extension wire when the flags read
/// 00 (one 3-controlled NOT per operand).
gates::Circuit build_sign_extension(int q);

/// Full signal addition: comparator on the time registers, flag-conditioned
/// sign extension, and a flag-conditioned modular adder over the extended
/// amplitude registers. Basis terms with t_x != t_y pass through untouched.
gates::Circuit build_addition_circuit(int q, int l, bool uncompute_flags = false);

/// Two's-complement negation as in the reference construction: q NOTs, then
/// an increment whose carry chain costs q-1 Toffolis and q CNOTs. The chain
/// wires keep the ripple carries (declared residual, not clean).
gates::Circuit build_inversion_circuit(int q);

/// Ancilla-free negation over the amplitude wires alone; same permutation,
/// an exact involution, used for state-level inversion.
gates::Circuit build_ancilla_free_inversion(int q);

/// Time shift by the compile-time constant dt: the shift register is loaded
/// with NOTs, a ripple-carry adder moves the time register, and 2q Toffolis
/// relocate wrapped amplitudes into fresh ancillas.
gates::Circuit build_delay_circuit(int l, int q, std::int64_t dt);

/// l NOTs on the time wires: index t maps to its bitwise complement.
gates::Circuit build_reversal_circuit(int l);

/// NOT on each unfixed time wire, controlled on the fixed wires with the
/// assigned polarities. Requires at least one unfixed wire.
gates::Circuit build_restricted_reversal_circuit(int l, const audio::TimeBitAssignment &fixed_bits);

// --- state-level operations ---------------------------------------------

/// Joint simulation through the addition circuit; basis terms with matching
/// time indices are decoded into the (q+1)-bit per-index sums.
audio::AudioSignal add_signals(const repr::FrqaState &x, const repr::FrqaState &y,
                               int max_wires = sim::kDefaultMaxWires);

repr::FrqaState invert_signal(const repr::FrqaState &x);
repr::FrqaState delay_signal(const repr::FrqaState &x, std::int64_t dt,
                             int max_wires = sim::kDefaultMaxWires);
repr::FrqaState reverse_signal(const repr::FrqaState &x);
repr::FrqaState reverse_signal_restricted(const repr::FrqaState &x,
                                          const audio::TimeBitAssignment &fixed_bits);

// --- cost reports --------------------------------------------------------

CostReport preparation_cost_report(int q, int l, gates::CostModel model = gates::CostModel::PaperConsistent);
CostReport adder_cost_report(int q, gates::CostModel model = gates::CostModel::PaperConsistent);
CostReport comparator_cost_report(int l, gates::CostModel model = gates::CostModel::PaperConsistent);
CostReport addition_cost_report(int q, int l, gates::CostModel model = gates::CostModel::PaperConsistent);
CostReport inversion_cost_report(int q, gates::CostModel model = gates::CostModel::PaperConsistent);
CostReport delay_cost_report(int l, int q, std::int64_t dt,
                             gates::CostModel model = gates::CostModel::PaperConsistent);
CostReport reversal_cost_report(int l, gates::CostModel model = gates::CostModel::PaperConsistent);
/// Worst case: l-1 fixed bits leaving a single controlled NOT.
CostReport restricted_reversal_cost_report(int l,
                                           gates::CostModel model = gates::CostModel::PaperConsistent);

} // namespace frqa::ops
