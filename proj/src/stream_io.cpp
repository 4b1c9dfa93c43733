#include "bchsynth/stream_io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace bchsynth {

StreamFormat parse_stream_format(std::string_view name)
{
    if (name == "ascii" || name == "ascii-bits")
        return StreamFormat::AsciiBits;
    if (name == "packed")
        return StreamFormat::Packed;
    throw std::invalid_argument("stream: unknown format '" + std::string(name) + "'");
}

std::string to_string(StreamFormat format)
{
    return format == StreamFormat::AsciiBits ? "ascii" : "packed";
}

BitVec bits_from_ascii(std::string_view text)
{
    BitVec bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c == '0')
            bits.push_back(0);
        else if (c == '1')
            bits.push_back(1);
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("stream: unexpected character in ascii bitstream");
    }
    return bits;
}

std::string bits_to_ascii(const BitVec& bits)
{
    std::string text;
    text.reserve(bits.size());
    for (std::uint8_t b : bits)
        text.push_back(b ? '1' : '0');
    return text;
}

BitVec bits_from_packed(std::span<const std::uint8_t> bytes, std::size_t bit_count)
{
    if (bit_count > bytes.size() * 8)
        throw std::invalid_argument("stream: bit count exceeds packed payload");
    BitVec bits(bit_count);
    for (std::size_t i = 0; i < bit_count; ++i)
        bits[i] = (bytes[i / 8] >> (i % 8)) & 1;
    return bits;
}

std::vector<std::uint8_t> bits_to_packed(const BitVec& bits)
{
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i])
            bytes[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    return bytes;
}

void write_stream(const std::filesystem::path& path, const BitVec& bits, StreamFormat format)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("stream: cannot open " + path.string() + " for writing");
    if (format == StreamFormat::AsciiBits) {
        const std::string text = bits_to_ascii(bits);
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.put('\n');
    } else {
        const auto bytes = bits_to_packed(bits);
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
    }
    if (!out)
        throw std::runtime_error("stream: failed writing " + path.string());
}

BitVec read_stream(const std::filesystem::path& path, StreamFormat format,
                   std::optional<std::size_t> bit_count)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("stream: cannot open " + path.string());
    std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (format == StreamFormat::AsciiBits)
        return bits_from_ascii(raw);

    const std::span<const std::uint8_t> bytes(
        reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size());
    return bits_from_packed(bytes, bit_count.value_or(raw.size() * 8));
}

std::filesystem::path sidecar_path_for(const std::filesystem::path& stream_path)
{
    std::filesystem::path p = stream_path;
    p += ".json";
    return p;
}

void write_sidecar(const std::filesystem::path& path, const Sidecar& sidecar)
{
    nlohmann::json j;
    j["g_octal"] = sidecar.g_octal;
    j["m"] = sidecar.m;
    j["n"] = sidecar.n;
    j["k"] = sidecar.k;
    j["t"] = sidecar.t;
    j["seed"] = sidecar.seed;
    j["ber"] = sidecar.ber;
    j["count"] = sidecar.count;

    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("stream: cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
}

std::optional<Sidecar> read_sidecar(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    nlohmann::json j;
    in >> j;

    Sidecar sc;
    sc.g_octal = j.at("g_octal").get<std::string>();
    sc.m = j.at("m").get<unsigned>();
    sc.n = j.at("n").get<unsigned>();
    sc.k = j.at("k").get<unsigned>();
    sc.t = j.at("t").get<unsigned>();
    sc.seed = j.at("seed").get<std::uint32_t>();
    sc.ber = j.at("ber").get<double>();
    sc.count = j.at("count").get<std::size_t>();
    return sc;
}

}  // namespace bchsynth
