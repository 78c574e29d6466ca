#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frqa/audio.hpp"
#include "frqa/errors.hpp"

namespace frqa::gates {

enum class Role {
    Amplitude,
    Time,
    Ancilla,
    Carry,
    Extension,
    CompareFlags,
};

std::string role_name(Role role);

struct Register {
    std::string name;
    Role role = Role::Ancilla;
    std::vector<int> wires;
    /// Ancilla-style registers declare whether the circuit contract returns
    /// them to |0>. Registers that legitimately hold residual data (delay's
    /// move ancillas, the delay carry) set this to false.
    bool must_be_clean = true;
};

class RegisterLayout {
  public:
    RegisterLayout() = default;

    /// Appends a register of `count` fresh contiguous wires and returns them.
    std::vector<int> add(const std::string &name, Role role, int count, bool must_be_clean = true);
    /// Declares a register over explicit wire indices (wires must be fresh).
    void add_wires(const std::string &name, Role role, std::vector<int> wires, bool must_be_clean = true);

    const Register &at(const std::string &name) const;
    bool has(const std::string &name) const;
    const std::vector<Register> &registers() const { return registers_; }
    int width() const { return width_; }

  private:
    std::vector<Register> registers_;
    int width_ = 0;
};

struct Control {
    int wire = 0;
    bool positive = true;

    bool operator==(const Control &other) const = default;
};

enum class GateKind {
    Not,
    Hadamard,
    Cnot,
    Toffoli,
    Mcx,
};

std::string gate_kind_name(GateKind kind);

/// One reversible gate: an X on `target` conditioned on `controls`, or an
/// unconditional Hadamard. The kind is derived from the control count, so a
/// 2-control X is always a Toffoli and Mcx means three or more controls.
struct Gate {
    bool hadamard = false;
    int target = 0;
    std::vector<Control> controls;

    GateKind kind() const;
    void validate(int width) const;
};

Gate make_not(int target);
Gate make_hadamard(int target);
Gate make_cnot(int control, int target, bool positive = true);
Gate make_toffoli(int c0, int c1, int target);
Gate make_x(std::vector<Control> controls, int target);

/// Gate multiset. Single-qubit gates are tracked but priced separately by the
/// cost model.
struct GateCensus {
    std::int64_t nots = 0;
    std::int64_t hadamards = 0;
    std::int64_t cnots = 0;
    std::int64_t toffolis = 0;
    std::map<int, std::int64_t> mcx; // control count k (>= 3) -> count

    GateCensus &operator+=(const GateCensus &other);
    bool operator==(const GateCensus &other) const = default;
};

enum class CostModel {
    /// CNOT = 1, Toffoli = 6, k-controlled NOT = 12(k-1)+1, single-qubit
    /// gates free. This is the pricing every complexity total assumes.
    PaperConsistent,
    /// Same multi-qubit pricing but single-qubit gates count 1 each.
    AllGates,
};

std::int64_t cnot_cost(const GateCensus &census, CostModel model = CostModel::PaperConsistent);

class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(RegisterLayout layout);

    void append(Gate gate);
    void append(const Circuit &other); // same width required

    const std::vector<Gate> &ops() const { return gates_; }
    const RegisterLayout &layout() const { return layout_; }
    int width() const { return layout_.width(); }
    std::size_t size() const { return gates_.size(); }

    GateCensus census() const;
    std::int64_t cost(CostModel model = CostModel::PaperConsistent) const;

    /// Reversed gate order; every gate here is self-inverse.
    Circuit inverse() const;

  private:
    RegisterLayout layout_;
    std::vector<Gate> gates_;
};

/// Rewrites a k-controlled NOT (k >= 3) into 2(k-1) Toffolis and one CNOT
/// over a chain of k-1 clean ancillas, which are returned to |0>. Negative
/// polarities are realized by NOT sandwiches on the control wires.
std::vector<Gate> decompose_mcx(const Gate &gate, std::span<const int> ancillas);

/// Classical fast path: the image of a basis state under a Hadamard-free
/// circuit. Input bits are indexed by wire.
audio::BitString apply_to_basis_state(const Circuit &circuit, const audio::BitString &input);

/// Adds the given controls to every gate, escalating NOT -> CNOT -> Toffoli
/// -> MCX. Control wires must not touch any gate's wires.
Circuit add_controls(const Circuit &circuit, const std::vector<Control> &controls);

std::string to_json(const Circuit &circuit);
/// Plain quantum-assembly text, one gate per line; negative polarities are
/// emitted as x sandwiches so only x/h/cx/ccx/mcx appear.
std::string to_qasm(const Circuit &circuit);

} // namespace frqa::gates
