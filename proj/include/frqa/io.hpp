#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "frqa/audio.hpp"
#include "frqa/frqa.hpp"

namespace frqa::io {

/// CSV: one signed decimal integer per line, optional leading `q=<int>`
/// header. Without a header the smallest resolution covering all samples is
/// used (or `forced_q` when given).
audio::AudioSignal read_csv(const std::filesystem::path &path, std::optional<int> forced_q = {});
void write_csv(const std::filesystem::path &path, const audio::AudioSignal &signal);

/// WAV subset: PCM unsigned 8-bit mono. Sample bytes map to amplitudes as
/// r - 128 at q = 8.
audio::AudioSignal read_wav_u8(const std::filesystem::path &path);

/// Reads CSV or WAV by extension.
audio::AudioSignal read_signal(const std::filesystem::path &path, std::optional<int> forced_q = {});

std::string state_to_json(const repr::FrqaState &state);
repr::FrqaState state_from_json(const std::string &text);
void write_state(const std::filesystem::path &path, const repr::FrqaState &state);
repr::FrqaState read_state(const std::filesystem::path &path);

} // namespace frqa::io
