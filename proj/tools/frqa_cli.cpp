// frqa: encode audio into quantum superposition states, run signal
// operations on them, and report gate costs.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frqa/audio.hpp"
#include "frqa/frqa.hpp"
#include "frqa/io.hpp"
#include "frqa/ops.hpp"
#include "frqa/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitResource = 4;

using frqa::audio::AudioSignal;

struct PipelineStep {
    std::string name;
    std::string arg; // raw text after ':'
};

PipelineStep parse_step(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        return {text, ""};
    }
    return {text.substr(0, colon), text.substr(colon + 1)};
}

frqa::audio::TimeBitAssignment parse_fixed_bits(const std::string &text) {
    // "t0=1,t2=0"
    frqa::audio::TimeBitAssignment out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string::npos) {
            end = text.size();
        }
        const std::string item = text.substr(pos, end - pos);
        const auto eq = item.find('=');
        if (item.size() < 4 || item[0] != 't' || eq == std::string::npos ||
            (item.substr(eq + 1) != "0" && item.substr(eq + 1) != "1")) {
            throw frqa::RangeError("expected tN=0|1 items, got '" + item + "'");
        }
        out.emplace_back(std::stoi(item.substr(1, eq - 1)), item.substr(eq + 1) == "1");
        pos = end + 1;
    }
    if (out.empty()) {
        throw frqa::RangeError("fixed-bit list is empty");
    }
    return out;
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw frqa::RangeError("cannot write '" + path.string() + "'");
    }
    out << text;
    if (text.empty() || text.back() != '\n') {
        out << "\n";
    }
}

void warn_inversion_fixed_point(const AudioSignal &signal) {
    const std::int64_t floor = -(std::int64_t{1} << (signal.q - 1));
    for (std::size_t i = 0; i < signal.samples.size(); ++i) {
        if (signal.samples[i] == floor) {
            std::cerr << "warning: sample " << i << " = " << floor
                      << " is the two's-complement fixed point; inversion leaves it unchanged\n";
        }
    }
}

int run_encode(const std::string &input, std::optional<int> q, const std::string &out_dir,
               frqa::gates::CostModel model) {
    const AudioSignal signal = frqa::io::read_signal(input, q);
    const auto state = frqa::repr::prepare(signal);
    std::cout << (state.q + state.l) << " qubits (q=" << state.q << ", l=" << state.l << ")\n";

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    frqa::io::write_state(dir / "state.json", state);
    write_text(dir / "preparation_cost.json",
               frqa::ops::to_json(frqa::ops::preparation_cost_report(state.q, state.l, model)));
    const auto census = frqa::repr::build_preparation_circuit(
                            frqa::audio::pad_to_power_of_two(signal))
                            .census();
    std::cout << "preparation cost " << frqa::gates::cnot_cost(census, model) << " (bound "
              << frqa::ops::preparation_cost_report(state.q, state.l, model).expected << ")\n";
    return kExitOk;
}

int run_apply(const std::string &input, std::optional<int> q, const std::vector<std::string> &op_texts,
              const std::string &out_dir, frqa::gates::CostModel model, bool verify) {
    const AudioSignal raw = frqa::io::read_signal(input, q);
    auto state = frqa::repr::prepare(raw);
    AudioSignal oracle = frqa::audio::pad_to_power_of_two(raw);

    std::vector<frqa::ops::CostReport> reports;
    for (std::size_t step = 0; step < op_texts.size(); ++step) {
        const PipelineStep op = parse_step(op_texts[step]);
        try {
            if (op.name == "invert") {
                warn_inversion_fixed_point(frqa::repr::retrieve(state));
                state = frqa::ops::invert_signal(state);
                oracle = frqa::audio::oracle_invert(oracle);
                reports.push_back(frqa::ops::inversion_cost_report(state.q, model));
            } else if (op.name == "reverse") {
                state = frqa::ops::reverse_signal(state);
                oracle = frqa::audio::oracle_reverse(oracle);
                reports.push_back(frqa::ops::reversal_cost_report(state.l, model));
            } else if (op.name == "delay") {
                const std::int64_t dt = std::stoll(op.arg);
                const int l = state.l;
                const int qq = state.q;
                state = frqa::ops::delay_signal(state, dt);
                oracle = frqa::audio::oracle_delay(oracle, dt);
                reports.push_back(frqa::ops::delay_cost_report(l, qq, dt, model));
            } else if (op.name == "reverse-restricted") {
                const auto fixed = parse_fixed_bits(op.arg);
                state = frqa::ops::reverse_signal_restricted(state, fixed);
                oracle = frqa::audio::oracle_reverse_restricted(oracle, fixed);
                reports.push_back(frqa::ops::restricted_reversal_cost_report(state.l, model));
            } else if (op.name == "add") {
                const AudioSignal other_raw = frqa::io::read_signal(op.arg);
                const auto other = frqa::repr::prepare(other_raw);
                const AudioSignal sum = frqa::ops::add_signals(state, other);
                state = frqa::repr::prepare(sum);
                oracle = frqa::audio::oracle_add(oracle, frqa::audio::pad_to_power_of_two(other_raw));
                reports.push_back(frqa::ops::addition_cost_report(other.q, other.l, model));
            } else {
                std::cerr << "unknown pipeline operation '" << op.name << "'\n";
                return kExitUsage;
            }
        } catch (const frqa::ResourceError &) {
            throw;
        } catch (const std::exception &e) {
            std::cerr << "pipeline step " << step << " (" << op.name << ") failed: " << e.what()
                      << "\n";
            return kExitUsage;
        }
    }

    const AudioSignal retrieved = frqa::repr::retrieve(state);

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    frqa::io::write_state(dir / "final_state.json", state);
    frqa::io::write_csv(dir / "output.csv", retrieved);
    std::string all = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        all += (i ? ",\n" : "\n") + frqa::ops::to_json(reports[i]);
    }
    all += "\n]";
    write_text(dir / "cost_reports.json", all);

    if (verify) {
        if (retrieved != oracle) {
            std::cerr << "verification failed: retrieved signal disagrees with the classical "
                         "reference\n";
            return kExitVerify;
        }
        std::cout << "verified: retrieved signal matches the classical reference\n";
    }
    std::cout << "wrote " << (dir / "output.csv").string() << " (q=" << retrieved.q << ", "
              << retrieved.samples.size() << " samples)\n";
    return kExitOk;
}

int run_retrieve(const std::string &input, const std::string &out_dir, int shots,
                 std::uint64_t seed) {
    const auto state = frqa::io::read_state(input);
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    if (shots <= 0) {
        frqa::io::write_csv(dir / "output.csv", frqa::repr::retrieve(state));
        std::cout << "exact retrieval -> " << (dir / "output.csv").string() << "\n";
        return kExitOk;
    }

    // Statistical demonstration: each shot measures the time register, then
    // the amplitude register of the collapsed branch.
    std::map<std::int64_t, std::int64_t> observed;
    std::map<std::int64_t, std::int64_t> counts;
    for (int s = 0; s < shots; ++s) {
        const auto t_out =
            frqa::sim::measure_register(state.state, state.layout, "time", seed + static_cast<std::uint64_t>(s));
        const std::int64_t t = frqa::audio::decode_twos_complement(t_out.outcome) &
                               ((std::int64_t{1} << state.l) - 1);
        const auto a_out = frqa::sim::measure_register(t_out.collapsed, state.layout, "amplitude",
                                                       seed + static_cast<std::uint64_t>(s) + 0x9e3779b9u);
        observed[t] = frqa::audio::decode_twos_complement(a_out.outcome);
        ++counts[t];
    }
    std::vector<std::int64_t> samples(std::size_t{1} << state.l, 0);
    for (const auto &[t, value] : observed) {
        samples[static_cast<std::size_t>(t)] = value;
    }
    for (std::int64_t t = 0; t < (std::int64_t{1} << state.l); ++t) {
        if (!counts.count(t)) {
            std::cerr << "warning: time index " << t << " never observed in " << shots
                      << " shots; sample written as 0\n";
        }
    }
    frqa::io::write_csv(dir / "output.csv", AudioSignal(std::move(samples), state.q));
    std::cout << shots << "-shot retrieval -> " << (dir / "output.csv").string() << "\n";
    for (const auto &[t, n] : counts) {
        std::cout << "t=" << t << " observed " << n << " times, amplitude " << observed[t] << "\n";
    }
    return kExitOk;
}

frqa::ops::CostReport cost_for(const std::string &op, int q, int l, std::int64_t dt,
                               frqa::gates::CostModel model) {
    if (op == "preparation") return frqa::ops::preparation_cost_report(q, l, model);
    if (op == "adder") return frqa::ops::adder_cost_report(q, model);
    if (op == "comparator") return frqa::ops::comparator_cost_report(l, model);
    if (op == "addition") return frqa::ops::addition_cost_report(q, l, model);
    if (op == "inversion") return frqa::ops::inversion_cost_report(q, model);
    if (op == "delay") return frqa::ops::delay_cost_report(l, q, dt, model);
    if (op == "reversal") return frqa::ops::reversal_cost_report(l, model);
    if (op == "restricted-reversal") return frqa::ops::restricted_reversal_cost_report(l, model);
    throw frqa::RangeError("unknown cost operation '" + op + "'");
}

frqa::gates::Circuit circuit_for(const std::string &op, int q, int l, std::int64_t dt,
                                 const std::string &fixed, const std::string &input) {
    if (op == "preparation") {
        if (input.empty()) {
            throw frqa::RangeError("emit-circuit preparation needs --input");
        }
        return frqa::repr::build_preparation_circuit(
            frqa::audio::pad_to_power_of_two(frqa::io::read_signal(input)));
    }
    if (op == "adder") return frqa::ops::build_adder(q);
    if (op == "comparator") return frqa::ops::build_comparator(l);
    if (op == "addition") return frqa::ops::build_addition_circuit(q, l);
    if (op == "inversion") return frqa::ops::build_inversion_circuit(q);
    if (op == "delay") return frqa::ops::build_delay_circuit(l, q, dt);
    if (op == "reversal") return frqa::ops::build_reversal_circuit(l);
    if (op == "restricted-reversal") {
        return frqa::ops::build_restricted_reversal_circuit(l, parse_fixed_bits(fixed));
    }
    throw frqa::RangeError("unknown circuit operation '" + op + "'");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"quantum audio encoder, signal operations, and gate-cost reports"};
    app.require_subcommand(1);

    std::string input, out_dir = ".", cost_model_text = "paper-consistent";
    std::optional<int> q_flag;
    int shots = 0;
    std::uint64_t seed = 0;
    bool verify = false;
    std::vector<std::string> op_texts;
    std::string cost_op, fmt = "json", fixed_text;
    int cost_q = 3, cost_l = 3;
    std::int64_t dt = 1;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--out-dir", out_dir, "output directory");
        cmd->add_option("--cost-model", cost_model_text,
                        "paper-consistent | all-gates (single-qubit gates free vs priced)")
            ->check(CLI::IsMember({"paper-consistent", "all-gates"}));
    };

    auto *encode = app.add_subcommand("encode", "prepare a quantum state from CSV/WAV samples");
    encode->add_option("input", input, "sample file")->required();
    encode->add_option("--q", q_flag, "amplitude resolution override");
    add_common(encode);

    auto *apply = app.add_subcommand("apply", "run an operation pipeline over an input signal");
    apply->add_option("input", input, "sample file")->required();
    apply->add_option("--q", q_flag, "amplitude resolution override");
    apply
        ->add_option("--op", op_texts,
                     "pipeline step: invert | reverse | delay:N | add:FILE | "
                     "reverse-restricted:t0=1[,t1=0...]")
        ->required();
    apply->add_flag("--verify", verify, "cross-check against the classical reference, exit 3 on mismatch");
    add_common(apply);

    auto *retrieve = app.add_subcommand("retrieve", "read samples back out of a state dump");
    retrieve->add_option("input", input, "state JSON file")->required();
    retrieve->add_option("--shots", shots, "statistical retrieval with N measurement shots");
    retrieve->add_option("--seed", seed, "measurement RNG seed");
    add_common(retrieve);

    auto *cost = app.add_subcommand("cost", "closed-form vs measured gate cost for one operation");
    cost->add_option("--op", cost_op,
                     "preparation | adder | comparator | addition | inversion | delay | reversal | "
                     "restricted-reversal")
        ->required();
    cost->add_option("--q", cost_q, "amplitude resolution");
    cost->add_option("--l", cost_l, "time-register width");
    cost->add_option("--dt", dt, "delay amount");
    add_common(cost);

    auto *emit = app.add_subcommand("emit-circuit", "print one circuit as JSON or assembly text");
    emit->add_option("--op", cost_op, "operation name (as in `cost`)")->required();
    emit->add_option("--q", cost_q, "amplitude resolution");
    emit->add_option("--l", cost_l, "time-register width");
    emit->add_option("--dt", dt, "delay amount");
    emit->add_option("--fixed", fixed_text, "restricted-reversal fixed bits, e.g. t0=1");
    emit->add_option("--input", input, "sample file (preparation only)");
    emit->add_option("--format", fmt, "json | qasm")->check(CLI::IsMember({"json", "qasm"}));
    add_common(emit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto model = cost_model_text == "all-gates" ? frqa::gates::CostModel::AllGates
                                                      : frqa::gates::CostModel::PaperConsistent;
    try {
        if (encode->parsed()) {
            return run_encode(input, q_flag, out_dir, model);
        }
        if (apply->parsed()) {
            return run_apply(input, q_flag, op_texts, out_dir, model, verify);
        }
        if (retrieve->parsed()) {
            return run_retrieve(input, out_dir, shots, seed);
        }
        if (cost->parsed()) {
            std::cout << frqa::ops::to_json(cost_for(cost_op, cost_q, cost_l, dt, model)) << "\n";
            return kExitOk;
        }
        if (emit->parsed()) {
            const auto circuit = circuit_for(cost_op, cost_q, cost_l, dt, fixed_text, input);
            std::cout << (fmt == "qasm" ? frqa::gates::to_qasm(circuit) : frqa::gates::to_json(circuit));
            return kExitOk;
        }
    } catch (const frqa::ResourceError &e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const frqa::VerificationError &e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerify;
    } catch (const frqa::NotFrqaShapedError &e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
