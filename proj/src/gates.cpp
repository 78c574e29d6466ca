#include "frqa/gates.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace frqa::gates {

std::string role_name(Role role) {
    switch (role) {
    case Role::Amplitude: return "amplitude";
    case Role::Time: return "time";
    case Role::Ancilla: return "ancilla";
    case Role::Carry: return "carry";
    case Role::Extension: return "extension";
    case Role::CompareFlags: return "compare-flags";
    }
    return "?";
}

std::vector<int> RegisterLayout::add(const std::string &name, Role role, int count, bool must_be_clean) {
    std::vector<int> wires(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        wires[static_cast<std::size_t>(i)] = width_ + i;
    }
    add_wires(name, role, wires, must_be_clean);
    return wires;
}

void RegisterLayout::add_wires(const std::string &name, Role role, std::vector<int> wires, bool must_be_clean) {
    if (has(name)) {
        throw ShapeError("duplicate register name '" + name + "'");
    }
    std::unordered_set<int> taken;
    for (const auto &reg : registers_) {
        taken.insert(reg.wires.begin(), reg.wires.end());
    }
    for (int w : wires) {
        if (w < 0) {
            throw ShapeError("negative wire index in register '" + name + "'");
        }
        if (!taken.insert(w).second) {
            throw ShapeError("wire " + std::to_string(w) + " assigned to two registers");
        }
        width_ = std::max(width_, w + 1);
    }
    registers_.push_back(Register{name, role, std::move(wires), must_be_clean});
}

const Register &RegisterLayout::at(const std::string &name) const {
    for (const auto &reg : registers_) {
        if (reg.name == name) {
            return reg;
        }
    }
    throw ShapeError("no register named '" + name + "'");
}

bool RegisterLayout::has(const std::string &name) const {
    return std::any_of(registers_.begin(), registers_.end(),
                       [&](const Register &r) { return r.name == name; });
}

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::Not: return "x";
    case GateKind::Hadamard: return "h";
    case GateKind::Cnot: return "cx";
    case GateKind::Toffoli: return "ccx";
    case GateKind::Mcx: return "mcx";
    }
    return "?";
}

GateKind Gate::kind() const {
    if (hadamard) {
        return GateKind::Hadamard;
    }
    switch (controls.size()) {
    case 0: return GateKind::Not;
    case 1: return GateKind::Cnot;
    case 2: return GateKind::Toffoli;
    default: return GateKind::Mcx;
    }
}

void Gate::validate(int width) const {
    if (hadamard && !controls.empty()) {
        throw ShapeError("Hadamard gates carry no controls");
    }
    if (target < 0 || target >= width) {
        throw ShapeError("gate target " + std::to_string(target) + " outside circuit width " +
                         std::to_string(width));
    }
    std::unordered_set<int> seen{target};
    for (const auto &c : controls) {
        if (c.wire < 0 || c.wire >= width) {
            throw ShapeError("control wire " + std::to_string(c.wire) + " outside circuit width " +
                             std::to_string(width));
        }
        if (!seen.insert(c.wire).second) {
            throw ShapeError("gate wires must be pairwise distinct (wire " + std::to_string(c.wire) + ")");
        }
    }
}

Gate make_not(int target) { return Gate{false, target, {}}; }
Gate make_hadamard(int target) { return Gate{true, target, {}}; }
Gate make_cnot(int control, int target, bool positive) {
    return Gate{false, target, {Control{control, positive}}};
}
Gate make_toffoli(int c0, int c1, int target) {
    return Gate{false, target, {Control{c0, true}, Control{c1, true}}};
}
Gate make_x(std::vector<Control> controls, int target) {
    return Gate{false, target, std::move(controls)};
}

GateCensus &GateCensus::operator+=(const GateCensus &other) {
    nots += other.nots;
    hadamards += other.hadamards;
    cnots += other.cnots;
    toffolis += other.toffolis;
    for (const auto &[k, n] : other.mcx) {
        mcx[k] += n;
    }
    return *this;
}

std::int64_t cnot_cost(const GateCensus &census, CostModel model) {
    std::int64_t cost = census.cnots + 6 * census.toffolis;
    for (const auto &[k, n] : census.mcx) {
        cost += (12 * (k - 1) + 1) * n;
    }
    if (model == CostModel::AllGates) {
        cost += census.nots + census.hadamards;
    }
    return cost;
}

Circuit::Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}

void Circuit::append(Gate gate) {
    gate.validate(width());
    gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit &other) {
    if (other.width() > width()) {
        throw ShapeError("cannot append a wider circuit (" + std::to_string(other.width()) + " > " +
                         std::to_string(width()) + ")");
    }
    for (const auto &g : other.gates_) {
        append(g);
    }
}

GateCensus Circuit::census() const {
    GateCensus out;
    for (const auto &g : gates_) {
        switch (g.kind()) {
        case GateKind::Not: ++out.nots; break;
        case GateKind::Hadamard: ++out.hadamards; break;
        case GateKind::Cnot: ++out.cnots; break;
        case GateKind::Toffoli: ++out.toffolis; break;
        case GateKind::Mcx: ++out.mcx[static_cast<int>(g.controls.size())]; break;
        }
    }
    return out;
}

std::int64_t Circuit::cost(CostModel model) const { return cnot_cost(census(), model); }

Circuit Circuit::inverse() const {
    Circuit out(layout_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.append(*it);
    }
    return out;
}

std::vector<Gate> decompose_mcx(const Gate &gate, std::span<const int> ancillas) {
    const auto k = static_cast<int>(gate.controls.size());
    if (gate.hadamard || k < 3) {
        throw ShapeError("decompose_mcx expects an X gate with at least 3 controls");
    }
    if (static_cast<int>(ancillas.size()) < k - 1) {
        throw ResourceError("decompose_mcx needs " + std::to_string(k - 1) + " clean ancillas, got " +
                            std::to_string(ancillas.size()));
    }
    std::unordered_set<int> used{gate.target};
    for (const auto &c : gate.controls) {
        used.insert(c.wire);
    }
    for (int i = 0; i < k - 1; ++i) {
        if (!used.insert(ancillas[static_cast<std::size_t>(i)]).second) {
            throw ResourceError("decomposition ancilla overlaps the gate's wires");
        }
    }

    std::vector<Gate> out;
    std::vector<int> negated;
    for (const auto &c : gate.controls) {
        if (!c.positive) {
            negated.push_back(c.wire);
        }
    }
    for (int w : negated) {
        out.push_back(make_not(w));
    }

    // AND-chain: anc[i] accumulates the conjunction of the first i+2 controls.
    std::vector<Gate> chain;
    chain.push_back(make_toffoli(gate.controls[0].wire, gate.controls[1].wire, ancillas[0]));
    for (int i = 2; i < k; ++i) {
        chain.push_back(make_toffoli(ancillas[static_cast<std::size_t>(i - 2)],
                                     gate.controls[static_cast<std::size_t>(i)].wire,
                                     ancillas[static_cast<std::size_t>(i - 1)]));
    }
    out.insert(out.end(), chain.begin(), chain.end());
    out.push_back(make_cnot(ancillas[static_cast<std::size_t>(k - 2)], gate.target));
    out.insert(out.end(), chain.rbegin(), chain.rend());

    for (int w : negated) {
        out.push_back(make_not(w));
    }
    return out;
}

audio::BitString apply_to_basis_state(const Circuit &circuit, const audio::BitString &input) {
    if (input.width() != circuit.width()) {
        throw ShapeError("basis state width " + std::to_string(input.width()) +
                         " does not match circuit width " + std::to_string(circuit.width()));
    }
    audio::BitString state = input;
    for (const auto &g : circuit.ops()) {
        if (g.hadamard) {
            throw ShapeError("circuit contains a Hadamard and is not a basis-state permutation");
        }
        bool fire = true;
        for (const auto &c : g.controls) {
            if ((state.bits[static_cast<std::size_t>(c.wire)] != 0) != c.positive) {
                fire = false;
                break;
            }
        }
        if (fire) {
            state.bits[static_cast<std::size_t>(g.target)] ^= 1U;
        }
    }
    return state;
}

Circuit add_controls(const Circuit &circuit, const std::vector<Control> &controls) {
    Circuit out(circuit.layout());
    for (const auto &g : circuit.ops()) {
        if (g.hadamard) {
            throw ShapeError("cannot add controls to a Hadamard gate");
        }
        Gate widened = g;
        for (const auto &c : controls) {
            if (c.wire == g.target ||
                std::any_of(g.controls.begin(), g.controls.end(),
                            [&](const Control &gc) { return gc.wire == c.wire; })) {
                throw ShapeError("control wire " + std::to_string(c.wire) +
                                 " overlaps a gate inside the controlled circuit");
            }
            widened.controls.push_back(c);
        }
        out.append(std::move(widened));
    }
    return out;
}

std::string to_json(const Circuit &circuit) {
    nlohmann::json j;
    j["width"] = circuit.width();
    j["registers"] = nlohmann::json::array();
    for (const auto &reg : circuit.layout().registers()) {
        j["registers"].push_back({{"name", reg.name},
                                  {"role", role_name(reg.role)},
                                  {"wires", reg.wires},
                                  {"must_be_clean", reg.must_be_clean}});
    }
    j["gates"] = nlohmann::json::array();
    for (const auto &g : circuit.ops()) {
        nlohmann::json controls = nlohmann::json::array();
        for (const auto &c : g.controls) {
            controls.push_back({{"wire", c.wire}, {"polarity", c.positive ? "positive" : "negative"}});
        }
        j["gates"].push_back(
            {{"kind", gate_kind_name(g.kind())}, {"target", g.target}, {"controls", controls}});
    }
    return j.dump(2);
}

std::string to_qasm(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.width() << "\n";
    for (const auto &g : circuit.ops()) {
        std::vector<int> negated;
        for (const auto &c : g.controls) {
            if (!c.positive) {
                negated.push_back(c.wire);
            }
        }
        for (int w : negated) {
            out << "x q[" << w << "]\n";
        }
        out << gate_kind_name(g.kind()) << " ";
        for (const auto &c : g.controls) {
            out << "q[" << c.wire << "], ";
        }
        out << "q[" << g.target << "]\n";
        for (int w : negated) {
            out << "x q[" << w << "]\n";
        }
    }
    return out.str();
}

} // namespace frqa::gates
