// 3D Hilbert curve encode/decode on integer lattices.
//
// Maps locations (x,y,z) inside a 2^r-sided cube to positions along a
// Hilbert curve and back, one octal digit per refinement level. All
// arithmetic is integer-only; no lookup tables beyond the 8-entry base
// ordering.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hilbert3 {

// Thrown when an argument violates an operation's documented domain.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// 8^kMaxDepth - 1 still fits in a 64-bit index and coordinates fit in 32 bits.
inline constexpr int kMaxDepth = 20;

/// Recursion depth r. The cube has side 2^r and 8^r cells.
class Depth {
  public:
    explicit Depth(int r) : r_(r) {
        if (r < 1 || r > kMaxDepth)
            throw domain_error("depth " + std::to_string(r) + " outside [1, " +
                               std::to_string(kMaxDepth) + "]");
    }

    int value() const { return r_; }
    std::uint32_t side() const { return std::uint32_t{1} << r_; }
    std::uint64_t cells() const { return std::uint64_t{1} << (3 * r_); }

    friend bool operator==(const Depth&, const Depth&) = default;

  private:
    int r_;
};

/// Lattice location. Valid coordinates for depth r are 0 <= x,y,z < 2^r.
struct Point3 {
    std::uint32_t x = 0, y = 0, z = 0;

    friend bool operator==(const Point3&, const Point3&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Point3& p) {
    return os << '(' << p.x << ',' << p.y << ',' << p.z << ')';
}

/// Position along the curve; valid range for depth r is [0, 8^r).
using HilbertIndex = std::uint64_t;

namespace detail {

// Depth-1 path through the corners of the unit cube: octant index ->
// corner bits. Starts at the origin and moves one axis per step.
inline constexpr std::uint8_t kBaseVertex[8][3] = {
    {0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1},
    {0, 1, 1}, {1, 1, 1}, {1, 1, 0}, {0, 1, 0},
};

// corner bits (bx + 2*by + 4*bz) -> octant index; inverse of kBaseVertex.
inline constexpr std::uint8_t kCornerOctant[8] = {0, 1, 7, 6, 3, 2, 4, 5};

inline void require_octant(int o, const char* where) {
    if (o < 0 || o > 7)
        throw domain_error(std::string(where) + ": octant " + std::to_string(o) +
                           " outside [0, 7]");
}

inline void require_half_width(std::uint32_t w, const char* where) {
    if (w == 0 || (w & (w - 1)) != 0)
        throw domain_error(std::string(where) + ": half-width " + std::to_string(w) +
                           " is not a power of two >= 1");
}

inline std::string str(const Point3& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," +
           std::to_string(p.z) + ")";
}

}  // namespace detail

/// Corner of the unit cube visited at position o of the base ordering.
inline Point3 base_vertex(int o) {
    detail::require_octant(o, "base_vertex");
    const auto& v = detail::kBaseVertex[o];
    return {v[0], v[1], v[2]};
}

/// Octant index of p at half-width w (the base-ordering position of the
/// corner (x/w, y/w, z/w)). Exact inverse of base_vertex on corner bits.
inline int octant_of(const Point3& p, std::uint32_t w) {
    detail::require_half_width(w, "octant_of");
    const std::uint64_t limit = 2 * std::uint64_t{w};
    if (p.x >= limit || p.y >= limit || p.z >= limit)
        throw domain_error("octant_of: point " + detail::str(p) + " outside [0, 2w)^3 with w = " +
                           std::to_string(w));
    const int key = int(p.x >= w) | int(p.y >= w) << 1 | int(p.z >= w) << 2;
    return detail::kCornerOctant[key];
}

/// One refinement level of the encoder: maps a point lying in octant o at
/// half-width w onto [0, w)^3, folding the octant-origin shift, centering,
/// and inverse octant rotation into one affine rule.
inline Point3 encode_step(int o, const Point3& p, std::uint32_t w) {
    detail::require_octant(o, "encode_step");
    if (octant_of(p, w) != o)
        throw domain_error("encode_step: point " + detail::str(p) + " is not in octant " +
                           std::to_string(o) + " at half-width " + std::to_string(w));
    const std::uint64_t x = p.x, y = p.y, z = p.z, ww = w;
    std::uint64_t nx = 0, ny = 0, nz = 0;
    switch (o) {
        case 0: nx = z;              ny = x;              nz = y;              break;
        case 1: nx = y;              ny = z;              nz = x - ww;         break;
        case 2: nx = y;              ny = z - ww;         nz = x - ww;         break;
        case 3: nx = ww - x - 1;     ny = y;              nz = 2 * ww - z - 1; break;
        case 4: nx = ww - x - 1;     ny = y - ww;         nz = 2 * ww - z - 1; break;
        case 5: nx = 2 * ww - y - 1; ny = 2 * ww - z - 1; nz = x - ww;         break;
        case 6: nx = 2 * ww - y - 1; ny = ww - z - 1;     nz = x - ww;         break;
        case 7: nx = z;              ny = ww - x - 1;     nz = 2 * ww - y - 1; break;
    }
    return {static_cast<std::uint32_t>(nx), static_cast<std::uint32_t>(ny),
            static_cast<std::uint32_t>(nz)};
}

/// One refinement level of the decoder: maps a point in [0, w)^3 into
/// octant o. Exact inverse of encode_step for the same o and w.
inline Point3 decode_step(int o, const Point3& p, std::uint32_t w) {
    detail::require_octant(o, "decode_step");
    detail::require_half_width(w, "decode_step");
    if (p.x >= w || p.y >= w || p.z >= w)
        throw domain_error("decode_step: point " + detail::str(p) + " has a coordinate >= w = " +
                           std::to_string(w));
    const std::uint64_t x = p.x, y = p.y, z = p.z, ww = w;
    std::uint64_t nx = 0, ny = 0, nz = 0;
    switch (o) {
        case 0: nx = y;          ny = z;              nz = x;              break;
        case 1: nx = z + ww;     ny = x;              nz = y;              break;
        case 2: nx = z + ww;     ny = x;              nz = y + ww;         break;
        case 3: nx = ww - x - 1; ny = y;              nz = 2 * ww - z - 1; break;
        case 4: nx = ww - x - 1; ny = y + ww;         nz = 2 * ww - z - 1; break;
        case 5: nx = z + ww;     ny = 2 * ww - x - 1; nz = 2 * ww - y - 1; break;
        case 6: nx = z + ww;     ny = 2 * ww - x - 1; nz = ww - y - 1;     break;
        case 7: nx = ww - y - 1; ny = 2 * ww - z - 1; nz = x;              break;
    }
    return {static_cast<std::uint32_t>(nx), static_cast<std::uint32_t>(ny),
            static_cast<std::uint32_t>(nz)};
}

/// Smallest depth whose cube contains p: bit length of max(x,y,z), at least 1.
inline int r_min_point(const Point3& p) {
    const std::uint32_t m = std::max({p.x, p.y, p.z});
    return std::max(1, static_cast<int>(std::bit_width(m)));
}

/// Number of significant octal digits of h, at least 1.
inline int r_min_index(HilbertIndex h) {
    return std::max(1, (static_cast<int>(std::bit_width(h)) + 2) / 3);
}

/// Hilbert index of p on the depth-r curve.
///
/// Leading zero digits are skipped: only r_min levels are walked, after
/// rotating the point by the octant-0 rule t = (r - r_min) mod 3 times
/// (that rule applied three times is the identity).
inline HilbertIndex encode(const Point3& p, Depth depth) {
    const std::uint32_t side = depth.side();
    if (p.x >= side || p.y >= side || p.z >= side)
        throw domain_error("encode: point " + detail::str(p) + " outside the depth-" +
                           std::to_string(depth.value()) + " cube (side " +
                           std::to_string(side) + ")");
    Point3 q = p;
    const int r_min = r_min_point(q);
    switch ((depth.value() - r_min) % 3) {
        case 1: q = {q.z, q.x, q.y}; break;
        case 2: q = {q.y, q.z, q.x}; break;
        default: break;
    }
    HilbertIndex h = 0;
    std::uint32_t w = std::uint32_t{1} << (r_min - 1);
    for (int k = r_min; k >= 1; --k) {
        const int o = octant_of(q, w);
        h = 8 * h + static_cast<HilbertIndex>(o);
        q = encode_step(o, q, w);
        w >>= 1;
    }
    return h;
}

/// Location of index h on the depth-r curve. Exact inverse of encode.
///
/// Digits are consumed least significant first; skipped leading zero
/// digits become t applications of the octant-0 decode rule at the end.
inline Point3 decode(HilbertIndex h, Depth depth) {
    if (h >= depth.cells())
        throw domain_error("decode: index " + std::to_string(h) + " >= 8^" +
                           std::to_string(depth.value()) + " = " +
                           std::to_string(depth.cells()));
    Point3 p = base_vertex(static_cast<int>(h & 7));
    std::uint32_t w = 2;
    for (HilbertIndex rest = h >> 3; rest != 0; rest >>= 3) {
        p = decode_step(static_cast<int>(rest & 7), p, w);
        w <<= 1;
    }
    switch ((depth.value() - r_min_index(h)) % 3) {
        case 1: p = {p.y, p.z, p.x}; break;
        case 2: p = {p.z, p.x, p.y}; break;
        default: break;
    }
    return p;
}

}  // namespace hilbert3
