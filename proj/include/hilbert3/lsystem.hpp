// Incremental 3D Hilbert path generation from a Lindenmayer rewrite rule,
// interpreted by a turtle that carries an orientation matrix. Fully
// independent of the index math in hilbert.hpp, which makes it usable as
// a cross-checking oracle for encode/decode.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbert3/geometry.hpp"
#include "hilbert3/hilbert.hpp"

namespace hilbert3 {

// Rewrite rule for the 3D curve. 'X' is the nonterminal, 'F' steps the
// turtle one cell along its heading, and the six rotation symbols turn
// the local frame by a quarter turn: yaw '+'/'-', pitch '^'/'v',
// roll '<'/'>'.
inline constexpr std::string_view kRewriteRule = "^<XF^<XFX-F^>>XFXvF+>>XFX-F>X->";

inline constexpr int kMaxWalkDepth = 7;     // 8^7 ~ 2.1M emitted points
inline constexpr int kMaxRewriteDepth = 8;  // expanded string stays under ~100 MB

inline constexpr bool is_rotation_symbol(char c) {
    return c == '+' || c == '-' || c == '^' || c == 'v' || c == '<' || c == '>';
}

inline constexpr bool is_lsymbol(char c) {
    return c == 'X' || c == 'F' || is_rotation_symbol(c);
}

// The rewrite rule pins neither the sign of the quarter turns nor the
// turtle's starting frame, so both are fixed by calibration. The frame is
// a proper signed permutation matrix whose columns are [heading, left, up]
// in world coordinates; a rotation symbol post-multiplies it by the local
// quarter turn below, and 'F' adds the heading column to the position.
//
// Calibration: enumerate the 24 proper initial frames under both sign
// choices per axis (192 combinations), keep those whose depth-1 walk
// equals the base ordering, whose depth-2 walk is a Hamiltonian unit-step
// path on the 4-cube ending at (0,3,0), and whose depth-3 walk is
// Hamiltonian on the 8-cube. The survivors all generate the same curve;
// the constants below are one of them, and the search is re-run in the
// test suite to confirm they stay the unique curve.
namespace detail {

struct SymbolRotation {
    char symbol;
    RotationMatrix rot;
};

// Quarter-turn signs as fixed by the calibration described above.
inline constexpr std::array<SymbolRotation, 6> kSymbolRotations = {{
    {'+', kRotZ},               // yaw +90: about the up column
    {'-', kRotZ.transposed()},  // yaw -90
    {'^', kRotY.transposed()},  // pitch +90: about the left column
    {'v', kRotY},               // pitch -90
    {'<', kRotX.transposed()},  // roll +90: about the heading column
    {'>', kRotX},               // roll -90
}};

}  // namespace detail

// Calibrated starting frame: heading +y, left +z, up +x.
inline constexpr RotationMatrix kInitialFrame{{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}};

/// Local quarter turn applied for one of the six rotation symbols.
inline const RotationMatrix& symbol_rotation(char c) {
    for (const auto& entry : detail::kSymbolRotations)
        if (entry.symbol == c) return entry.rot;
    throw domain_error(std::string("symbol_rotation: '") + c + "' is not a rotation symbol");
}

/// Turtle cursor: a lattice position plus the orientation frame.
struct TurtleState {
    std::array<std::int64_t, 3> position{0, 0, 0};
    RotationMatrix orientation = kInitialFrame;

    /// Interpret one symbol. 'X' is inert; 'F' moves along the heading;
    /// rotation symbols post-multiply the frame.
    void apply(char symbol) {
        if (symbol == 'F') {
            position[0] += orientation.at(0, 0);
            position[1] += orientation.at(1, 0);
            position[2] += orientation.at(2, 0);
        } else if (symbol != 'X') {
            orientation = orientation * symbol_rotation(symbol);
        }
    }

    Point3 point() const {
        for (const std::int64_t c : position)
            if (c < 0 || c > std::int64_t{0xffffffff})
                throw std::logic_error("turtle position left the lattice");
        return {static_cast<std::uint32_t>(position[0]), static_cast<std::uint32_t>(position[1]),
                static_cast<std::uint32_t>(position[2])};
    }
};

/// Result of applying the rewrite rule `depth` times to "X".
inline std::string rewrite(int depth) {
    if (depth < 1)
        throw domain_error("rewrite: depth " + std::to_string(depth) + " must be >= 1");
    if (depth > kMaxRewriteDepth)
        throw domain_error("rewrite: depth " + std::to_string(depth) + " exceeds limit " +
                           std::to_string(kMaxRewriteDepth));
    std::string out;
    auto expand = [&out](auto&& self, int d) -> void {
        for (const char c : kRewriteRule) {
            if (c == 'X') {
                if (d > 1)
                    self(self, d - 1);
                else
                    out += 'X';
            } else {
                out += c;
            }
        }
    };
    expand(expand, depth);
    return out;
}

/// Streaming interpreter. Expands the rule depth-first with O(depth)
/// memory instead of materializing the rewritten string; one instance
/// yields the 8^depth curve points in order.
class CurveWalker {
  public:
    explicit CurveWalker(int depth) : depth_(depth) {
        if (depth < 1 || depth > kMaxWalkDepth)
            throw domain_error("walk: depth " + std::to_string(depth) + " outside [1, " +
                               std::to_string(kMaxWalkDepth) + "]");
    }

    std::uint64_t total_points() const { return std::uint64_t{1} << (3 * depth_); }

    /// Next point on the path, starting with (0,0,0); nullopt when done.
    std::optional<Point3> next() {
        if (!started_) {
            started_ = true;
            frames_.push_back(0);
            return turtle_.point();
        }
        while (!frames_.empty()) {
            if (frames_.back() == kRewriteRule.size()) {
                frames_.pop_back();
                continue;
            }
            const char c = kRewriteRule[frames_.back()++];
            if (c == 'X') {
                if (static_cast<int>(frames_.size()) < depth_) frames_.push_back(0);
            } else if (c == 'F') {
                turtle_.apply('F');
                return turtle_.point();
            } else {
                turtle_.apply(c);
            }
        }
        return std::nullopt;
    }

  private:
    int depth_;
    bool started_ = false;
    TurtleState turtle_;
    std::vector<std::size_t> frames_;
};

/// All 8^depth points of the depth-r curve, in path order.
inline std::vector<Point3> walk(int depth) {
    CurveWalker walker(depth);
    std::vector<Point3> points;
    points.reserve(walker.total_points());
    while (auto p = walker.next()) points.push_back(*p);
    return points;
}

}  // namespace hilbert3
