// Quarter-turn rotation algebra behind the octant update rules, plus a
// step-by-step affine route (shift, center, rotate, un-center) that must
// reproduce the fused rules in hilbert.hpp exactly. The step-by-step
// route works on doubled coordinates so the half-integer center offset
// (w-1)/2 never leaves the integers.

#pragma once

#include <array>
#include <cstdint>

#include "hilbert3/hilbert.hpp"

namespace hilbert3 {

/// 3x3 signed permutation matrix with determinant +1, acting on column
/// vectors by left multiplication.
struct RotationMatrix {
    std::array<std::array<int, 3>, 3> m{};

    constexpr int at(int row, int col) const { return m[row][col]; }

    friend constexpr bool operator==(const RotationMatrix&, const RotationMatrix&) = default;

    static constexpr RotationMatrix identity() {
        return {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
    }

    constexpr RotationMatrix transposed() const {
        RotationMatrix t{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.m[j][i] = m[i][j];
        return t;
    }

    friend constexpr RotationMatrix operator*(const RotationMatrix& a, const RotationMatrix& b) {
        RotationMatrix c{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int s = 0;
                for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
                c.m[i][j] = s;
            }
        return c;
    }

    constexpr std::array<std::int64_t, 3> apply(const std::array<std::int64_t, 3>& v) const {
        std::array<std::int64_t, 3> out{};
        for (int i = 0; i < 3; ++i)
            out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
        return out;
    }

    constexpr int determinant() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    // Orthonormal, determinant +1, one nonzero entry per row and column.
    constexpr bool is_proper_rotation() const {
        if (*this * transposed() != identity()) return false;
        if (determinant() != 1) return false;
        for (int i = 0; i < 3; ++i) {
            int row_nonzero = 0, col_nonzero = 0;
            for (int j = 0; j < 3; ++j) {
                if (m[i][j] < -1 || m[i][j] > 1) return false;
                row_nonzero += m[i][j] != 0;
                col_nonzero += m[j][i] != 0;
            }
            if (row_nonzero != 1 || col_nonzero != 1) return false;
        }
        return true;
    }
};

// Counterclockwise quarter turns about the coordinate axes.
inline constexpr RotationMatrix kRotX{{{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}}};
inline constexpr RotationMatrix kRotY{{{{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}}}};
inline constexpr RotationMatrix kRotZ{{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}};

namespace detail {

// Per-octant products: the rotation carrying the base ordering into the
// sub-ordering of each octant.
inline constexpr std::array<RotationMatrix, 8> kOctantRotation = {
    kRotZ.transposed() * kRotY.transposed(),  // 0
    kRotZ * kRotX,                            // 1
    kRotZ * kRotX,                            // 2
    kRotY * kRotY,                            // 3
    kRotY * kRotY,                            // 4
    kRotZ.transposed() * kRotX.transposed(),  // 5
    kRotZ.transposed() * kRotX.transposed(),  // 6
    kRotX * kRotZ,                            // 7
};

}  // namespace detail

/// Rotation applied within octant o (decode direction; encode uses its
/// transpose).
inline const RotationMatrix& octant_rotation(int o) {
    detail::require_octant(o, "octant_rotation");
    return detail::kOctantRotation[o];
}

/// Working coordinates scaled by two, so that centering on an octant
/// (an offset of (w-1)/2 per axis) stays exact. All three components
/// share one parity between centering and un-centering.
struct DoubledPoint {
    std::int64_t u = 0, v = 0, w2 = 0;

    bool parity_uniform() const {
        return ((u ^ v) & 1) == 0 && ((u ^ w2) & 1) == 0;
    }
};

namespace detail {

inline DoubledPoint center_doubled(const Point3& p, std::int64_t shift) {
    DoubledPoint d{2 * std::int64_t{p.x} - shift, 2 * std::int64_t{p.y} - shift,
                   2 * std::int64_t{p.z} - shift};
    if (!d.parity_uniform())
        throw std::logic_error("doubled-coordinate parity drift after centering");
    return d;
}

inline Point3 uncenter_doubled(const std::array<std::int64_t, 3>& v, std::int64_t shift) {
    Point3 p{};
    std::uint32_t* out[3] = {&p.x, &p.y, &p.z};
    for (int i = 0; i < 3; ++i) {
        const std::int64_t c = v[i] + shift;
        if ((c & 1) != 0 || c < 0)
            throw std::logic_error("doubled coordinate not an even non-negative after un-centering");
        *out[i] = static_cast<std::uint32_t>(c / 2);
    }
    return p;
}

}  // namespace detail

/// encode_step computed the long way: octant-origin shift, center on the
/// octant, rotate by the transposed (inverse) octant matrix, un-center.
inline Point3 encode_step_via_matrix(int o, const Point3& p, std::uint32_t w) {
    detail::require_octant(o, "encode_step_via_matrix");
    if (octant_of(p, w) != o)
        throw domain_error("encode_step_via_matrix: point " + detail::str(p) +
                           " is not in octant " + std::to_string(o) + " at half-width " +
                           std::to_string(w));
    const Point3 corner = base_vertex(o);
    const Point3 shifted{p.x - corner.x * w, p.y - corner.y * w, p.z - corner.z * w};
    const std::int64_t off = std::int64_t{w} - 1;  // doubled center offset 2*(w-1)/2
    const DoubledPoint d = detail::center_doubled(shifted, off);
    const auto rotated = octant_rotation(o).transposed().apply({d.u, d.v, d.w2});
    return detail::uncenter_doubled(rotated, off);
}

/// decode_step computed the long way: center, rotate by the (forward)
/// octant matrix, un-center, then shift the result into octant o.
inline Point3 decode_step_via_matrix(int o, const Point3& p, std::uint32_t w) {
    detail::require_octant(o, "decode_step_via_matrix");
    detail::require_half_width(w, "decode_step_via_matrix");
    if (p.x >= w || p.y >= w || p.z >= w)
        throw domain_error("decode_step_via_matrix: point " + detail::str(p) +
                           " has a coordinate >= w = " + std::to_string(w));
    const std::int64_t off = std::int64_t{w} - 1;
    const DoubledPoint d = detail::center_doubled(p, off);
    const auto rotated = octant_rotation(o).apply({d.u, d.v, d.w2});
    const Point3 local = detail::uncenter_doubled(rotated, off);
    const Point3 corner = base_vertex(o);
    return {local.x + corner.x * w, local.y + corner.y * w, local.z + corner.z * w};
}

}  // namespace hilbert3
