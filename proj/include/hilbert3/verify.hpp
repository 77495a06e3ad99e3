// Self-check suite: exhaustive invariants over small depths, shared by
// the `verify` CLI command and the tests. The primitives under test are
// replaceable so failure reporting itself can be exercised against
// deliberately broken implementations.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hilbert3/geometry.hpp"
#include "hilbert3/hilbert.hpp"
#include "hilbert3/lsystem.hpp"

namespace hilbert3 {

inline constexpr std::size_t kMaxCounterexamples = 10;

struct CheckResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> counterexamples{};  // first kMaxCounterexamples failures

    bool passed() const { return failed == 0; }

    void fail(const std::string& detail) {
        ++failed;
        if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(detail);
    }
};

/// The primitives a check runs against. Defaults are the library's own.
struct CheckSubjects {
    std::function<HilbertIndex(const Point3&, Depth)> encode_fn =
        [](const Point3& p, Depth r) { return encode(p, r); };
    std::function<Point3(HilbertIndex, Depth)> decode_fn =
        [](HilbertIndex h, Depth r) { return decode(h, r); };
    std::function<Point3(int, const Point3&, std::uint32_t)> encode_step_fn =
        [](int o, const Point3& p, std::uint32_t w) { return encode_step(o, p, w); };
    std::function<Point3(int, const Point3&, std::uint32_t)> decode_step_fn =
        [](int o, const Point3& p, std::uint32_t w) { return decode_step(o, p, w); };
};

namespace detail {

inline std::string show(const Point3& p) { return str(p); }

template <typename Fn>
inline void guarded(CheckResult& res, const std::string& context, Fn&& body) {
    ++res.checked;
    try {
        body();
    } catch (const std::exception& e) {
        res.fail(context + " threw: " + e.what());
    }
}

}  // namespace detail

/// Every point maps to a distinct index inside [0, 8^r).
inline CheckResult check_bijection(Depth depth, const CheckSubjects& s = {}) {
    CheckResult res{.name = "bijection"};
    const std::uint64_t n = depth.cells();
    const std::uint32_t side = depth.side();
    std::vector<std::uint8_t> seen(n, 0);
    for (std::uint32_t z = 0; z < side; ++z)
        for (std::uint32_t y = 0; y < side; ++y)
            for (std::uint32_t x = 0; x < side; ++x) {
                const Point3 p{x, y, z};
                detail::guarded(res, "encode" + detail::show(p), [&] {
                    const HilbertIndex h = s.encode_fn(p, depth);
                    if (h >= n)
                        res.fail("encode" + detail::show(p) + " = " + std::to_string(h) +
                                 " outside [0, " + std::to_string(n) + ")");
                    else if (seen[h])
                        res.fail("encode" + detail::show(p) + " = " + std::to_string(h) +
                                 " already produced by another point");
                    else
                        seen[h] = 1;
                });
            }
    return res;
}

/// decode(encode(p)) == p for all points and encode(decode(h)) == h for
/// all indices.
inline CheckResult check_round_trip(Depth depth, const CheckSubjects& s = {}) {
    CheckResult res{.name = "round_trip"};
    const std::uint64_t n = depth.cells();
    const std::uint32_t side = depth.side();
    for (std::uint32_t z = 0; z < side; ++z)
        for (std::uint32_t y = 0; y < side; ++y)
            for (std::uint32_t x = 0; x < side; ++x) {
                const Point3 p{x, y, z};
                detail::guarded(res, "round trip of " + detail::show(p), [&] {
                    const HilbertIndex h = s.encode_fn(p, depth);
                    const Point3 back = s.decode_fn(h, depth);
                    if (back != p)
                        res.fail("decode(encode" + detail::show(p) + " = " + std::to_string(h) +
                                 ") = " + detail::show(back));
                });
            }
    for (HilbertIndex h = 0; h < n; ++h)
        detail::guarded(res, "round trip of index " + std::to_string(h), [&] {
            const Point3 p = s.decode_fn(h, depth);
            const HilbertIndex back = s.encode_fn(p, depth);
            if (back != h)
                res.fail("encode(decode(" + std::to_string(h) + ") = " + detail::show(p) +
                         ") = " + std::to_string(back));
        });
    return res;
}

/// Consecutive curve points differ by exactly one unit step.
inline CheckResult check_adjacency(Depth depth, const CheckSubjects& s = {}) {
    CheckResult res{.name = "adjacency"};
    const std::uint64_t n = depth.cells();
    Point3 prev{};
    for (HilbertIndex h = 0; h < n; ++h) {
        const Point3 cur = s.decode_fn(h, depth);
        if (h > 0) {
            ++res.checked;
            const std::int64_t l1 = std::abs(std::int64_t{cur.x} - prev.x) +
                                    std::abs(std::int64_t{cur.y} - prev.y) +
                                    std::abs(std::int64_t{cur.z} - prev.z);
            if (l1 != 1)
                res.fail("decode(" + std::to_string(h - 1) + ") = " + detail::show(prev) +
                         " and decode(" + std::to_string(h) + ") = " + detail::show(cur) +
                         " are L1 distance " + std::to_string(l1) + " apart");
        }
        prev = cur;
    }
    return res;
}

/// The L-system walk and decode emit the same sequence.
inline CheckResult check_oracle_equivalence(Depth depth, const CheckSubjects& s = {}) {
    CheckResult res{.name = "oracle_equivalence"};
    CurveWalker walker(depth.value());
    for (HilbertIndex h = 0; h < depth.cells(); ++h) {
        const Point3 expected = *walker.next();
        detail::guarded(res, "decode(" + std::to_string(h) + ")", [&] {
            const Point3 got = s.decode_fn(h, depth);
            if (got != expected)
                res.fail("decode(" + std::to_string(h) + ") = " + detail::show(got) +
                         " but the generator emits " + detail::show(expected));
        });
    }
    return res;
}

/// The fused update rules agree with the step-by-step matrix route, for
/// every octant and every point at half-widths 1, 2, and 4.
inline CheckResult check_table_vs_matrix(const CheckSubjects& s = {}) {
    CheckResult res{.name = "table_vs_matrix"};
    for (const std::uint32_t w : {1u, 2u, 4u})
        for (int o = 0; o < 8; ++o) {
            const Point3 corner = base_vertex(o);
            for (std::uint32_t z = 0; z < w; ++z)
                for (std::uint32_t y = 0; y < w; ++y)
                    for (std::uint32_t x = 0; x < w; ++x) {
                        const Point3 in_octant{corner.x * w + x, corner.y * w + y,
                                               corner.z * w + z};
                        detail::guarded(res, "encode_step(" + std::to_string(o) + ", " +
                                                 detail::show(in_octant) + ", " +
                                                 std::to_string(w) + ")",
                                        [&] {
                                            const Point3 fused = s.encode_step_fn(o, in_octant, w);
                                            const Point3 stepwise =
                                                encode_step_via_matrix(o, in_octant, w);
                                            if (fused != stepwise)
                                                res.fail("encode_step(" + std::to_string(o) + ", " +
                                                         detail::show(in_octant) + ", w=" +
                                                         std::to_string(w) + ") = " +
                                                         detail::show(fused) +
                                                         " but the matrix route gives " +
                                                         detail::show(stepwise));
                                        });
                        const Point3 local{x, y, z};
                        detail::guarded(res, "decode_step(" + std::to_string(o) + ", " +
                                                 detail::show(local) + ", " + std::to_string(w) +
                                                 ")",
                                        [&] {
                                            const Point3 fused = s.decode_step_fn(o, local, w);
                                            const Point3 stepwise =
                                                decode_step_via_matrix(o, local, w);
                                            if (fused != stepwise)
                                                res.fail("decode_step(" + std::to_string(o) + ", " +
                                                         detail::show(local) + ", w=" +
                                                         std::to_string(w) + ") = " +
                                                         detail::show(fused) +
                                                         " but the matrix route gives " +
                                                         detail::show(stepwise));
                                        });
                    }
        }
    return res;
}

inline std::vector<CheckResult> run_all_checks(Depth depth, const CheckSubjects& s = {}) {
    return {check_bijection(depth, s), check_round_trip(depth, s), check_adjacency(depth, s),
            check_oracle_equivalence(depth, s), check_table_vs_matrix(s)};
}

/// Fixture with a deliberately wrong octant-6 encode row (x and y
/// swapped) and an encoder driven by that row. For exercising the
/// failure-reporting path; never use outside tests.
inline CheckSubjects faulty_table_subjects() {
    CheckSubjects s;
    s.encode_step_fn = [](int o, const Point3& p, std::uint32_t w) {
        Point3 q = encode_step(o, p, w);
        if (o == 6) std::swap(q.x, q.y);
        return q;
    };
    s.encode_fn = [step = s.encode_step_fn](const Point3& p, Depth depth) {
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
            q = step(o, q, w);
            w >>= 1;
        }
        return h;
    };
    return s;
}

}  // namespace hilbert3
