// Binary cube-file format.
//
// 16-byte header: magic "HC3D", version u8, depth u8, layout u8, then 9
// reserved bytes (written as zero). Payload: 8^depth values of 8 bytes
// each, little-endian, in the declared layout order.

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

#include "hilbert3/ordering.hpp"

namespace hilbert3 {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::array<char, 4> kCubeMagic = {'H', 'C', '3', 'D'};
inline constexpr std::uint8_t kCubeVersion = 1;
inline constexpr std::size_t kCubeHeaderSize = 16;

inline void write_cube(const std::filesystem::path& path, const CubeArray& a) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");

    std::array<unsigned char, kCubeHeaderSize> header{};
    std::memcpy(header.data(), kCubeMagic.data(), kCubeMagic.size());
    header[4] = kCubeVersion;
    header[5] = static_cast<unsigned char>(a.depth.value());
    header[6] = static_cast<unsigned char>(a.layout);
    out.write(reinterpret_cast<const char*>(header.data()), header.size());

    std::vector<unsigned char> buf;
    buf.reserve(1 << 16);
    for (const std::uint64_t v : a.data) {
        for (int b = 0; b < 8; ++b) buf.push_back(static_cast<unsigned char>(v >> (8 * b)));
        if (buf.size() == buf.capacity()) {
            out.write(reinterpret_cast<const char*>(buf.data()), buf.size());
            buf.clear();
        }
    }
    if (!buf.empty()) out.write(reinterpret_cast<const char*>(buf.data()), buf.size());
    out.flush();
    if (!out) throw io_error("write to " + path.string() + " failed");
}

/// Read and validate a cube file. Files deeper than max_depth are
/// rejected before any payload allocation.
inline CubeArray read_cube(const std::filesystem::path& path, int max_depth = kMaxDepth) {
    std::error_code ec;
    const std::uintmax_t file_size = std::filesystem::file_size(path, ec);
    if (ec) throw io_error("cannot stat " + path.string() + ": " + ec.message());

    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string() + " for reading");

    if (file_size < kCubeHeaderSize)
        throw io_error(path.string() + ": too small for a cube header (" +
                       std::to_string(file_size) + " bytes, need " +
                       std::to_string(kCubeHeaderSize) + ")");

    std::array<unsigned char, kCubeHeaderSize> header{};
    in.read(reinterpret_cast<char*>(header.data()), header.size());
    if (!in) throw io_error(path.string() + ": header read failed");

    if (std::memcmp(header.data(), kCubeMagic.data(), kCubeMagic.size()) != 0)
        throw io_error(path.string() + ": bad magic, not a cube file");
    if (header[4] != kCubeVersion)
        throw io_error(path.string() + ": unsupported version " + std::to_string(header[4]) +
                       " (expected " + std::to_string(kCubeVersion) + ")");
    const int r = header[5];
    if (r < 1 || r > kMaxDepth)
        throw io_error(path.string() + ": invalid depth byte " + std::to_string(r));
    if (r > max_depth)
        throw io_error(path.string() + ": depth " + std::to_string(r) + " exceeds limit " +
                       std::to_string(max_depth));
    if (header[6] > 1)
        throw io_error(path.string() + ": invalid layout byte " + std::to_string(header[6]));

    const Depth depth(r);
    const Layout layout = static_cast<Layout>(header[6]);
    const std::uintmax_t expected = kCubeHeaderSize + 8 * depth.cells();
    if (file_size != expected)
        throw io_error(path.string() + ": payload size mismatch, expected " +
                       std::to_string(expected) + " bytes but file has " +
                       std::to_string(file_size) +
                       (file_size < expected ? " (truncated)" : " (trailing bytes)"));

    std::vector<std::uint64_t> values(depth.cells());
    std::vector<unsigned char> buf(1 << 16);
    std::size_t filled = 0;
    std::size_t pending = 0;  // bytes carried over between reads
    while (filled < values.size()) {
        in.read(reinterpret_cast<char*>(buf.data() + pending),
                static_cast<std::streamsize>(buf.size() - pending));
        const std::size_t got = pending + static_cast<std::size_t>(in.gcount());
        if (got < 8) throw io_error(path.string() + ": payload read failed");
        std::size_t pos = 0;
        for (; pos + 8 <= got && filled < values.size(); pos += 8) {
            std::uint64_t v = 0;
            for (int b = 7; b >= 0; --b) v = (v << 8) | buf[pos + b];
            values[filled++] = v;
        }
        pending = got - pos;
        if (pending > 0) std::memmove(buf.data(), buf.data() + pos, pending);
    }
    return CubeArray(depth, layout, std::move(values));
}

}  // namespace hilbert3
