// Hilbert-order views of flat cube arrays, balanced contiguous curve
// partitions, and locality statistics for partition ranges.

#pragma once

#include <cstdint>
#include <vector>

#include "hilbert3/hilbert.hpp"

namespace hilbert3 {

// Thrown when an operation is applied to data in the wrong layout.
struct usage_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Layout : std::uint8_t { row_major = 0, hilbert = 1 };

/// Flat scalar field over the 2^r cube, 8^r values of 8 opaque bytes.
/// row_major stores x fastest, then y, then z; hilbert stores cells in
/// curve order.
struct CubeArray {
    CubeArray(Depth d, Layout l) : depth(d), layout(l), data(d.cells()) {}

    CubeArray(Depth d, Layout l, std::vector<std::uint64_t> values)
        : depth(d), layout(l), data(std::move(values)) {
        if (data.size() != depth.cells())
            throw domain_error("cube array needs " + std::to_string(depth.cells()) +
                               " values at depth " + std::to_string(depth.value()) + ", got " +
                               std::to_string(data.size()));
    }

    Depth depth;
    Layout layout;
    std::vector<std::uint64_t> data;
};

/// Row-major position of p: x + 2^r * (y + 2^r * z).
inline std::uint64_t linear_index(const Point3& p, Depth depth) {
    const std::uint64_t m = depth.side();
    return p.x + m * (p.y + m * p.z);
}

/// Permute a row-major array into curve order: out[h] = in[decode(h)].
inline CubeArray to_hilbert_order(const CubeArray& a) {
    if (a.layout != Layout::row_major)
        throw usage_error("to_hilbert_order: input must be in row_major layout");
    CubeArray out(a.depth, Layout::hilbert);
    const std::uint64_t n = a.depth.cells();
    for (std::uint64_t h = 0; h < n; ++h)
        out.data[h] = a.data[linear_index(decode(h, a.depth), a.depth)];
    return out;
}

/// Exact inverse of to_hilbert_order: out[p] = in[encode(p)].
inline CubeArray from_hilbert_order(const CubeArray& a) {
    if (a.layout != Layout::hilbert)
        throw usage_error("from_hilbert_order: input must be in hilbert layout");
    CubeArray out(a.depth, Layout::row_major);
    const std::uint32_t side = a.depth.side();
    std::uint64_t i = 0;
    for (std::uint32_t z = 0; z < side; ++z)
        for (std::uint32_t y = 0; y < side; ++y)
            for (std::uint32_t x = 0; x < side; ++x)
                out.data[i++] = a.data[encode({x, y, z}, a.depth)];
    return out;
}

/// Balanced contiguous split of [0, 8^r): part i covers
/// [boundaries[i], boundaries[i+1]), sizes differing by at most one.
struct Partition {
    std::vector<std::uint64_t> boundaries;

    std::size_t parts() const { return boundaries.size() - 1; }
};

inline Partition partition(Depth depth, std::uint64_t parts) {
    const std::uint64_t total = depth.cells();
    if (parts < 1 || parts > total)
        throw domain_error("partition: parts " + std::to_string(parts) + " outside [1, " +
                           std::to_string(total) + "]");
    Partition result;
    result.boundaries.reserve(parts + 1);
    for (std::uint64_t i = 0; i <= parts; ++i)
        result.boundaries.push_back(
            static_cast<std::uint64_t>(static_cast<unsigned __int128>(i) * total / parts));
    return result;
}

struct PartitionStats {
    std::uint64_t cell_count = 0;
    std::uint64_t bbox_volume = 0;   // axis-aligned bounding box of the cell set
    std::uint64_t surface_area = 0;  // unit faces against out-of-part or exterior cells
};

/// Locality statistics of the cells decoded from [begin, end).
inline PartitionStats partition_stats(Depth depth, std::uint64_t begin, std::uint64_t end) {
    if (begin >= end)
        throw domain_error("partition_stats: empty range [" + std::to_string(begin) + ", " +
                           std::to_string(end) + ")");
    if (end > depth.cells())
        throw domain_error("partition_stats: range end " + std::to_string(end) + " > 8^r = " +
                           std::to_string(depth.cells()));

    const std::int64_t side = depth.side();
    const auto in_part = [&](const Point3& p) {
        const HilbertIndex h = encode(p, depth);
        return begin <= h && h < end;
    };

    PartitionStats stats;
    stats.cell_count = end - begin;
    std::uint32_t lo[3] = {~0u, ~0u, ~0u}, hi[3] = {0, 0, 0};
    static constexpr int kFace[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                        {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    for (std::uint64_t h = begin; h < end; ++h) {
        const Point3 p = decode(h, depth);
        const std::uint32_t c[3] = {p.x, p.y, p.z};
        for (int a = 0; a < 3; ++a) {
            lo[a] = std::min(lo[a], c[a]);
            hi[a] = std::max(hi[a], c[a]);
        }
        for (const auto& d : kFace) {
            const std::int64_t nx = std::int64_t{p.x} + d[0];
            const std::int64_t ny = std::int64_t{p.y} + d[1];
            const std::int64_t nz = std::int64_t{p.z} + d[2];
            const bool inside = nx >= 0 && nx < side && ny >= 0 && ny < side && nz >= 0 && nz < side;
            if (!inside || !in_part({static_cast<std::uint32_t>(nx), static_cast<std::uint32_t>(ny),
                                     static_cast<std::uint32_t>(nz)}))
                ++stats.surface_area;
        }
    }
    stats.bbox_volume = std::uint64_t{hi[0] - lo[0] + 1} * (hi[1] - lo[1] + 1) * (hi[2] - lo[2] + 1);
    return stats;
}

}  // namespace hilbert3
