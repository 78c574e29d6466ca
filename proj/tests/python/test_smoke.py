"""End-to-end smoke test of the Python bindings."""

import math

import frqa


def expect(cond, msg):
    if not cond:
        raise AssertionError(msg)


def main():
    expect(frqa.encode_twos_complement(3, 3) == "011", "encode")
    expect(frqa.decode_twos_complement("101") == -3, "decode")
    expect(frqa.resolution_to_amplitude(6, 3) == 2, "resolution map")
    expect(frqa.infer_resolution([3, -4]) == 3, "inferred q")

    sig = frqa.AudioSignal([1, -2, 3, 0], 3)
    state = frqa.prepare(sig)
    expect(state.q == 3 and state.l == 2 and state.wires == 5, "state shape")
    frqa.validate_shape(state)
    expect(frqa.retrieve(state) == sig, "round trip")

    terms = state.terms()
    expect(len(terms) == 4, "term count")
    expect(all(abs(abs(a) - 0.5) < 1e-10 for a in terms.values()), "uniform coefficients")

    inv = frqa.invert_signal(state)
    expect(frqa.retrieve(inv) == frqa.oracle_invert(sig), "inversion oracle")
    expect(frqa.retrieve(frqa.invert_signal(inv)) == sig, "inversion involution")

    total = frqa.add_signals(state, frqa.prepare(frqa.AudioSignal([-1, 2, -3, 0], 3)))
    expect(total.q == 4 and list(total.samples) == [0, 0, 0, 0], "cancelling addition")

    delayed = frqa.delay_signal(state, 1)
    expect(list(frqa.retrieve(delayed).samples) == [0, 1, -2, 3], "delay")
    expect(frqa.retrieve(frqa.reverse_signal(state)) == frqa.oracle_reverse(sig), "reversal")
    restricted = frqa.reverse_signal_restricted(state, [(0, True)])
    expect(list(frqa.retrieve(restricted).samples) == [1, -2, 0, 3], "restricted reversal")

    expect(frqa.inversion_cost_report(3).measured == 15, "inversion cost")
    expect(frqa.adder_cost_report(3).delta == 0, "adder cost delta")
    expect(frqa.build_adder(3).census().toffolis == 10, "adder census")
    expect(frqa.build_reversal_circuit(3).cost() == 0, "reversal cost")
    expect(frqa.build_reversal_circuit(3).cost("all-gates") == 3, "all-gates pricing")
    expect("qubits" in frqa.build_inversion_circuit(2).to_qasm(), "qasm export")

    prep = frqa.build_preparation_circuit(frqa.pad_to_power_of_two(frqa.AudioSignal([1, 1, 1, 1], 2)))
    expect(prep.cost() == 56, "preparation equality case")

    try:
        frqa.AudioSignal([9], 3)
    except ValueError:
        pass
    else:
        raise AssertionError("range error not raised")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
