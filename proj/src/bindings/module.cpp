#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frqa/audio.hpp"
#include "frqa/frqa.hpp"
#include "frqa/gates.hpp"
#include "frqa/ops.hpp"
#include "frqa/simulator.hpp"

namespace py = pybind11;
using namespace frqa;

namespace {

gates::CostModel model_from_name(const std::string &name) {
    if (name == "paper-consistent") return gates::CostModel::PaperConsistent;
    if (name == "all-gates") return gates::CostModel::AllGates;
    throw RangeError("unknown cost model '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "quantum audio representation: codec, circuits, simulator, signal operations";

    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<NotFrqaShapedError>(m, "NotFrqaShapedError", PyExc_RuntimeError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

    py::class_<audio::AudioSignal>(m, "AudioSignal")
        .def(py::init<std::vector<std::int64_t>, int>(), py::arg("samples"), py::arg("q"))
        .def_readonly("samples", &audio::AudioSignal::samples)
        .def_readonly("q", &audio::AudioSignal::q)
        .def_property_readonly("l", &audio::AudioSignal::time_bits)
        .def("__len__", [](const audio::AudioSignal &s) { return s.samples.size(); })
        .def("__eq__", [](const audio::AudioSignal &a, const audio::AudioSignal &b) { return a == b; })
        .def("__repr__", [](const audio::AudioSignal &s) {
            std::string out = "AudioSignal(q=" + std::to_string(s.q) + ", [";
            for (std::size_t i = 0; i < s.samples.size(); ++i) {
                out += (i ? ", " : "") + std::to_string(s.samples[i]);
            }
            return out + "])";
        });

    m.def("infer_resolution", &audio::infer_resolution, py::arg("samples"));
    m.def(
        "encode_twos_complement",
        [](std::int64_t value, int q) { return audio::encode_twos_complement(value, q).str(); },
        py::arg("value"), py::arg("q"));
    m.def(
        "decode_twos_complement",
        [](const std::string &bits) { return audio::decode_twos_complement(audio::BitString(bits)); },
        py::arg("bits"));
    m.def("resolution_to_amplitude", &audio::resolution_to_amplitude, py::arg("r"), py::arg("q"));
    m.def("pad_to_power_of_two", &audio::pad_to_power_of_two, py::arg("signal"));

    m.def("oracle_add", &audio::oracle_add, py::arg("x"), py::arg("y"));
    m.def("oracle_invert", &audio::oracle_invert, py::arg("x"));
    m.def("oracle_delay", &audio::oracle_delay, py::arg("x"), py::arg("dt"));
    m.def("oracle_reverse", &audio::oracle_reverse, py::arg("x"));
    m.def("oracle_reverse_restricted", &audio::oracle_reverse_restricted, py::arg("x"),
          py::arg("fixed_bits"));

    py::class_<gates::GateCensus>(m, "GateCensus")
        .def_readonly("nots", &gates::GateCensus::nots)
        .def_readonly("hadamards", &gates::GateCensus::hadamards)
        .def_readonly("cnots", &gates::GateCensus::cnots)
        .def_readonly("toffolis", &gates::GateCensus::toffolis)
        .def_readonly("mcx", &gates::GateCensus::mcx);

    py::class_<gates::Circuit>(m, "Circuit")
        .def_property_readonly("width", &gates::Circuit::width)
        .def("__len__", &gates::Circuit::size)
        .def("census", &gates::Circuit::census)
        .def(
            "cost",
            [](const gates::Circuit &c, const std::string &model) {
                return c.cost(model_from_name(model));
            },
            py::arg("model") = "paper-consistent")
        .def("to_json", [](const gates::Circuit &c) { return gates::to_json(c); })
        .def("to_qasm", [](const gates::Circuit &c) { return gates::to_qasm(c); });

    m.def("build_adder", &ops::build_adder, py::arg("q"));
    m.def("build_comparator", &ops::build_comparator, py::arg("l"));
    m.def("build_addition_circuit", &ops::build_addition_circuit, py::arg("q"), py::arg("l"),
          py::arg("uncompute_flags") = false);
    m.def("build_inversion_circuit", &ops::build_inversion_circuit, py::arg("q"));
    m.def("build_delay_circuit", &ops::build_delay_circuit, py::arg("l"), py::arg("q"), py::arg("dt"));
    m.def("build_reversal_circuit", &ops::build_reversal_circuit, py::arg("l"));
    m.def("build_restricted_reversal_circuit", &ops::build_restricted_reversal_circuit, py::arg("l"),
          py::arg("fixed_bits"));
    m.def("build_preparation_circuit", &repr::build_preparation_circuit, py::arg("signal"));

    py::class_<repr::FrqaState>(m, "FrqaState")
        .def_readonly("q", &repr::FrqaState::q)
        .def_readonly("l", &repr::FrqaState::l)
        .def_property_readonly("wires",
                               [](const repr::FrqaState &s) { return s.state.wires(); })
        .def("terms", [](const repr::FrqaState &s) {
            py::dict out;
            for (const auto &[bits, amp] : s.state.nonzero_terms()) {
                out[py::str(bits.str())] = std::complex<double>(amp);
            }
            return out;
        });

    m.def("prepare", &repr::prepare, py::arg("signal"), py::arg("max_wires") = sim::kDefaultMaxWires);
    m.def("retrieve", &repr::retrieve, py::arg("state"));
    m.def("validate_shape", &repr::validate_shape, py::arg("state"));

    m.def("add_signals", &ops::add_signals, py::arg("x"), py::arg("y"),
          py::arg("max_wires") = sim::kDefaultMaxWires);
    m.def("invert_signal", &ops::invert_signal, py::arg("x"));
    m.def("delay_signal", &ops::delay_signal, py::arg("x"), py::arg("dt"),
          py::arg("max_wires") = sim::kDefaultMaxWires);
    m.def("reverse_signal", &ops::reverse_signal, py::arg("x"));
    m.def("reverse_signal_restricted", &ops::reverse_signal_restricted, py::arg("x"),
          py::arg("fixed_bits"));

    py::class_<ops::CostReport>(m, "CostReport")
        .def_readonly("operation", &ops::CostReport::operation)
        .def_readonly("formula", &ops::CostReport::formula)
        .def_readonly("expected", &ops::CostReport::expected)
        .def_readonly("measured", &ops::CostReport::measured)
        .def_readonly("delta", &ops::CostReport::delta)
        .def_readonly("notes", &ops::CostReport::notes)
        .def("to_json", [](const ops::CostReport &r) { return ops::to_json(r); });

    m.def(
        "preparation_cost_report",
        [](int q, int l, const std::string &model) {
            return ops::preparation_cost_report(q, l, model_from_name(model));
        },
        py::arg("q"), py::arg("l"), py::arg("model") = "paper-consistent");
    m.def(
        "adder_cost_report",
        [](int q, const std::string &model) { return ops::adder_cost_report(q, model_from_name(model)); },
        py::arg("q"), py::arg("model") = "paper-consistent");
    m.def(
        "comparator_cost_report",
        [](int l, const std::string &model) {
            return ops::comparator_cost_report(l, model_from_name(model));
        },
        py::arg("l"), py::arg("model") = "paper-consistent");
    m.def(
        "addition_cost_report",
        [](int q, int l, const std::string &model) {
            return ops::addition_cost_report(q, l, model_from_name(model));
        },
        py::arg("q"), py::arg("l"), py::arg("model") = "paper-consistent");
    m.def(
        "inversion_cost_report",
        [](int q, const std::string &model) {
            return ops::inversion_cost_report(q, model_from_name(model));
        },
        py::arg("q"), py::arg("model") = "paper-consistent");
    m.def(
        "delay_cost_report",
        [](int l, int q, std::int64_t dt, const std::string &model) {
            return ops::delay_cost_report(l, q, dt, model_from_name(model));
        },
        py::arg("l"), py::arg("q"), py::arg("dt"), py::arg("model") = "paper-consistent");
    m.def(
        "reversal_cost_report",
        [](int l, const std::string &model) {
            return ops::reversal_cost_report(l, model_from_name(model));
        },
        py::arg("l"), py::arg("model") = "paper-consistent");
    m.def(
        "restricted_reversal_cost_report",
        [](int l, const std::string &model) {
            return ops::restricted_reversal_cost_report(l, model_from_name(model));
        },
        py::arg("l"), py::arg("model") = "paper-consistent");
}
