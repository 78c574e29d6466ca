#include "frqa/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace frqa::io {

using audio::AudioSignal;

namespace {

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw RangeError("cannot open '" + path.string() + "'");
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

gates::Role role_from_name(const std::string &name) {
    if (name == "amplitude") return gates::Role::Amplitude;
    if (name == "time") return gates::Role::Time;
    if (name == "ancilla") return gates::Role::Ancilla;
    if (name == "carry") return gates::Role::Carry;
    if (name == "extension") return gates::Role::Extension;
    if (name == "compare-flags") return gates::Role::CompareFlags;
    throw ShapeError("unknown register role '" + name + "'");
}

} // namespace

AudioSignal read_csv(const std::filesystem::path &path, std::optional<int> forced_q) {
    std::istringstream in(slurp(path));
    std::string line;
    std::optional<int> header_q;
    std::vector<std::int64_t> samples;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line.rfind("q=", 0) == 0) {
            if (line_no != 1 && !samples.empty()) {
                throw RangeError("q= header must precede the samples");
            }
            header_q = std::stoi(line.substr(2));
            continue;
        }
        std::size_t pos = 0;
        const std::int64_t value = std::stoll(line, &pos);
        if (pos != line.size()) {
            throw RangeError("line " + std::to_string(line_no) + " is not a plain integer: '" + line + "'");
        }
        samples.push_back(value);
    }
    if (samples.empty()) {
        throw RangeError("'" + path.string() + "' holds no samples");
    }
    const int q = forced_q.value_or(header_q.value_or(audio::infer_resolution(samples)));
    return AudioSignal(std::move(samples), q);
}

void write_csv(const std::filesystem::path &path, const AudioSignal &signal) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw RangeError("cannot write '" + path.string() + "'");
    }
    out << "q=" << signal.q << "\n";
    for (auto s : signal.samples) {
        out << s << "\n";
    }
}

AudioSignal read_wav_u8(const std::filesystem::path &path) {
    const std::string raw = slurp(path);
    auto u16 = [&](std::size_t at) {
        return static_cast<std::uint32_t>(static_cast<unsigned char>(raw[at])) |
               static_cast<std::uint32_t>(static_cast<unsigned char>(raw[at + 1])) << 8;
    };
    auto u32 = [&](std::size_t at) { return u16(at) | u16(at + 2) << 16; };

    if (raw.size() < 44 || raw.compare(0, 4, "RIFF") != 0 || raw.compare(8, 4, "WAVE") != 0) {
        throw ShapeError("'" + path.string() + "' is not a RIFF/WAVE file");
    }
    std::size_t pos = 12;
    std::optional<std::pair<std::size_t, std::size_t>> data; // offset, size
    bool fmt_ok = false;
    while (pos + 8 <= raw.size()) {
        const std::string id = raw.substr(pos, 4);
        const std::size_t size = u32(pos + 4);
        const std::size_t body = pos + 8;
        if (id == "fmt ") {
            if (size < 16 || u16(body) != 1 /*PCM*/ || u16(body + 2) != 1 /*mono*/ ||
                u16(body + 14) != 8 /*bits*/) {
                throw ShapeError("only PCM unsigned 8-bit mono WAV input is supported");
            }
            fmt_ok = true;
        } else if (id == "data") {
            data = {body, size};
        }
        pos = body + size + (size % 2);
    }
    if (!fmt_ok || !data || data->first + data->second > raw.size()) {
        throw ShapeError("'" + path.string() + "' lacks a usable fmt/data chunk");
    }
    std::vector<std::int64_t> samples;
    samples.reserve(data->second);
    for (std::size_t i = 0; i < data->second; ++i) {
        const auto r = static_cast<std::uint64_t>(static_cast<unsigned char>(raw[data->first + i]));
        samples.push_back(audio::resolution_to_amplitude(r, 8));
    }
    if (samples.empty()) {
        throw ShapeError("'" + path.string() + "' holds no samples");
    }
    return AudioSignal(std::move(samples), 8);
}

AudioSignal read_signal(const std::filesystem::path &path, std::optional<int> forced_q) {
    if (path.extension() == ".wav") {
        return read_wav_u8(path);
    }
    return read_csv(path, forced_q);
}

std::string state_to_json(const repr::FrqaState &state) {
    nlohmann::json j;
    j["q"] = state.q;
    j["l"] = state.l;
    j["wires"] = state.state.wires();
    j["layout"] = nlohmann::json::array();
    for (const auto &reg : state.layout.registers()) {
        j["layout"].push_back({{"name", reg.name},
                               {"role", gates::role_name(reg.role)},
                               {"wires", reg.wires},
                               {"must_be_clean", reg.must_be_clean}});
    }
    j["terms"] = nlohmann::json::array();
    for (const auto &[bits, amp] : state.state.nonzero_terms(1e-12)) {
        j["terms"].push_back({{"basis", bits.str()}, {"real", amp.real()}, {"imag", amp.imag()}});
    }
    return j.dump(2);
}

repr::FrqaState state_from_json(const std::string &text) {
    const auto j = nlohmann::json::parse(text);
    repr::FrqaState out;
    out.q = j.at("q").get<int>();
    out.l = j.at("l").get<int>();
    const int wires = j.at("wires").get<int>();
    for (const auto &reg : j.at("layout")) {
        out.layout.add_wires(reg.at("name").get<std::string>(),
                             role_from_name(reg.at("role").get<std::string>()),
                             reg.at("wires").get<std::vector<int>>(),
                             reg.value("must_be_clean", true));
    }
    if (out.layout.width() > wires) {
        throw ShapeError("layout references wires beyond the declared width");
    }
    out.state = sim::StateVector(wires);
    out.state[0] = {0.0, 0.0};
    for (const auto &term : j.at("terms")) {
        const audio::BitString bits(term.at("basis").get<std::string>());
        out.state[out.state.index_of(bits)] = {term.at("real").get<double>(),
                                               term.at("imag").get<double>()};
    }
    return out;
}

void write_state(const std::filesystem::path &path, const repr::FrqaState &state) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw RangeError("cannot write '" + path.string() + "'");
    }
    out << state_to_json(state) << "\n";
}

repr::FrqaState read_state(const std::filesystem::path &path) { return state_from_json(slurp(path)); }

} // namespace frqa::io
