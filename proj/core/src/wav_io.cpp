#include "specfill/wav_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace specfill {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string& s, std::uint32_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>((v >> 16) & 0xff));
  s.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& s, std::uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

TimeSignal load_wav(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io_failure, "cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    fail(ErrorCode::unsupported_format, path + " is not a RIFF/WAVE file");

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;
  bool have_fmt = false;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* hdr = bytes.data() + pos;
    const std::uint32_t chunk_size = read_u32(hdr + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_size > bytes.size())
      fail(ErrorCode::unsupported_format, path + ": truncated chunk");
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_size < 16) fail(ErrorCode::unsupported_format, path + ": short fmt chunk");
      format = read_u16(bytes.data() + body + 0);
      channels = read_u16(bytes.data() + body + 2);
      sample_rate = read_u32(bytes.data() + body + 4);
      bits = read_u16(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = chunk_size;
    }
    pos = body + chunk_size + (chunk_size & 1);
  }

  if (!have_fmt || data == nullptr)
    fail(ErrorCode::unsupported_format, path + ": missing fmt or data chunk");
  if (channels < 1) fail(ErrorCode::unsupported_format, path + ": no channels");
  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool float32 = format == kFormatFloat && bits == 32;
  if (!pcm16 && !float32)
    fail(ErrorCode::unsupported_format,
         path + ": only 16-bit PCM and 32-bit float are supported");
  if (channels > 1 && warnings != nullptr)
    warnings->push_back(path + ": " + std::to_string(channels) +
                        " channels, keeping the first");

  const std::size_t bytes_per_sample = bits / 8u;
  const std::size_t stride = bytes_per_sample * channels;
  const std::size_t n_frames = data_size / stride;
  if (n_frames == 0) fail(ErrorCode::unsupported_format, path + ": no samples");

  TimeSignal out;
  out.sample_rate_hz = static_cast<int>(sample_rate);
  out.samples.resize(n_frames);
  if (pcm16) {
    for (std::size_t i = 0; i < n_frames; ++i) {
      const unsigned char* s = data + i * stride;
      const auto v = static_cast<std::int16_t>(read_u16(s));
      out.samples[i] = static_cast<double>(v) / 32768.0;
    }
  } else {
    for (std::size_t i = 0; i < n_frames; ++i) {
      const std::uint32_t raw = read_u32(data + i * stride);
      float f;
      std::memcpy(&f, &raw, sizeof(f));
      out.samples[i] = static_cast<double>(f);
    }
  }
  validate(out);
  return out;
}

std::size_t save_wav(const std::string& path, const TimeSignal& x) {
  validate(x);
  std::size_t clipped = 0;
  std::string payload;
  payload.reserve(44 + 4 * x.size());
  payload += "RIFF";
  put_u32(payload, static_cast<std::uint32_t>(36 + 4 * x.size()));
  payload += "WAVE";
  payload += "fmt ";
  put_u32(payload, 16);
  put_u16(payload, kFormatFloat);
  put_u16(payload, 1);  // mono
  put_u32(payload, static_cast<std::uint32_t>(x.sample_rate_hz));
  put_u32(payload, static_cast<std::uint32_t>(x.sample_rate_hz) * 4u);  // byte rate
  put_u16(payload, 4);   // block align
  put_u16(payload, 32);  // bits per sample
  payload += "data";
  put_u32(payload, static_cast<std::uint32_t>(4 * x.size()));
  for (double v : x.samples) {
    if (v < -1.0 || v > 1.0) ++clipped;
    const auto f = static_cast<float>(v);
    std::uint32_t raw;
    std::memcpy(&raw, &f, sizeof(raw));
    put_u32(payload, raw);
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io_failure, "cannot open " + path + " for writing");
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) fail(ErrorCode::io_failure, "write failed for " + path);
  return clipped;
}

}  // namespace specfill
