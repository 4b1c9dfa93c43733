// Bitstream file formats and the sidecar metadata object.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "bchsynth/gf2poly.hpp"

namespace bchsynth {

enum class StreamFormat {
    AsciiBits,   // characters '0'/'1', whitespace ignored
    Packed,      // bytes filled least-significant-bit-first in stream order
};

StreamFormat parse_stream_format(std::string_view name);   // "ascii" | "packed"
std::string to_string(StreamFormat format);

// In-memory conversions
BitVec bits_from_ascii(std::string_view text);
std::string bits_to_ascii(const BitVec& bits);
BitVec bits_from_packed(std::span<const std::uint8_t> bytes, std::size_t bit_count);
std::vector<std::uint8_t> bits_to_packed(const BitVec& bits);

// File I/O; `bit_count` trims packed trailing pad bits (ignored for ascii).
void write_stream(const std::filesystem::path& path, const BitVec& bits, StreamFormat format);
BitVec read_stream(const std::filesystem::path& path, StreamFormat format,
                   std::optional<std::size_t> bit_count = std::nullopt);

// Ground-truth metadata written next to generated streams.
struct Sidecar {
    std::string g_octal;
    unsigned m = 0;
    unsigned n = 0;
    unsigned k = 0;
    unsigned t = 0;
    std::uint32_t seed = 0;
    double ber = 0.0;
    std::size_t count = 0;
};

std::filesystem::path sidecar_path_for(const std::filesystem::path& stream_path);
void write_sidecar(const std::filesystem::path& path, const Sidecar& sidecar);
std::optional<Sidecar> read_sidecar(const std::filesystem::path& path);

}  // namespace bchsynth
