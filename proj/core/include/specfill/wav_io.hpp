#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "specfill/signal.hpp"

namespace specfill {

// Reads a RIFF WAV file: 16-bit PCM or 32-bit IEEE float. Multichannel input
// keeps the first channel and appends a warning. PCM samples are scaled by
// 1/32768.
TimeSignal load_wav(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Writes mono 32-bit float WAV. Samples are stored untouched; the return value
// counts samples outside [-1, 1].
std::size_t save_wav(const std::string& path, const TimeSignal& x);

}  // namespace specfill
