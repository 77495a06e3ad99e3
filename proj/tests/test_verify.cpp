#include "hilbert3/verify.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace h3 = hilbert3;

TEST(Checks, AllPassAtSmallDepths) {
    for (int r = 1; r <= 3; ++r) {
        const std::vector<h3::CheckResult> results = h3::run_all_checks(h3::Depth(r));
        ASSERT_EQ(results.size(), 5u);
        for (const auto& res : results) {
            EXPECT_TRUE(res.passed()) << res.name << " at depth " << r;
            EXPECT_GT(res.checked, 0u);
            EXPECT_TRUE(res.counterexamples.empty());
        }
    }
}

TEST(Checks, NamesAndCountsAtDepthTwo) {
    const auto results = h3::run_all_checks(h3::Depth(2));
    ASSERT_EQ(results.size(), 5u);
    EXPECT_EQ(results[0].name, "bijection");
    EXPECT_EQ(results[0].checked, 64u);
    EXPECT_EQ(results[1].name, "round_trip");
    EXPECT_EQ(results[1].checked, 128u);  // 64 points + 64 indices
    EXPECT_EQ(results[2].name, "adjacency");
    EXPECT_EQ(results[2].checked, 63u);
    EXPECT_EQ(results[3].name, "oracle_equivalence");
    EXPECT_EQ(results[3].checked, 64u);
    EXPECT_EQ(results[4].name, "table_vs_matrix");
    // Both step directions over 8 octants at w in {1,2,4}.
    EXPECT_EQ(results[4].checked, 2u * 8 * (1 + 8 + 64));
}

TEST(Mutation, CorruptedTableRowIsCaught) {
    const h3::CheckSubjects faulty = h3::faulty_table_subjects();
    const h3::Depth d(2);

    // The corrupted encoder is still a bijection and decode is untouched,
    // so these keep passing...
    EXPECT_TRUE(h3::check_bijection(d, faulty).passed());
    EXPECT_TRUE(h3::check_adjacency(d, faulty).passed());
    EXPECT_TRUE(h3::check_oracle_equivalence(d, faulty).passed());

    // ...while the cross checks must flag it.
    const h3::CheckResult round_trip = h3::check_round_trip(d, faulty);
    EXPECT_FALSE(round_trip.passed());
    EXPECT_GT(round_trip.failed, 0u);
    ASSERT_FALSE(round_trip.counterexamples.empty());

    const h3::CheckResult tvm = h3::check_table_vs_matrix(faulty);
    EXPECT_FALSE(tvm.passed());
}

TEST(Mutation, DepthOneHidesTheFault) {
    // At depth 1 every octant collapses to a single cell, so the x/y swap
    // in the octant-6 row has nothing to act on. The checks must still be
    // able to pass on the faulty subjects -- this pins down why the
    // exhaustive sweeps run at several depths.
    const h3::CheckSubjects faulty = h3::faulty_table_subjects();
    EXPECT_TRUE(h3::check_round_trip(h3::Depth(1), faulty).passed());
}

TEST(Mutation, CounterexamplesAreCapped) {
    const h3::CheckSubjects faulty = h3::faulty_table_subjects();
    const h3::CheckResult res = h3::check_round_trip(h3::Depth(3), faulty);
    EXPECT_FALSE(res.passed());
    EXPECT_GT(res.failed, h3::kMaxCounterexamples);
    EXPECT_EQ(res.counterexamples.size(), h3::kMaxCounterexamples);
}

TEST(Subjects, DefaultsAreTheLibrary) {
    const h3::CheckSubjects s;
    EXPECT_EQ(s.encode_fn({3, 3, 1}, h3::Depth(2)), 51u);
    EXPECT_EQ(s.decode_fn(37, h3::Depth(2)), (h3::Point3{0, 3, 2}));
    EXPECT_EQ(s.encode_step_fn(0, {1, 2, 3}, 4), h3::encode_step(0, {1, 2, 3}, 4));
    EXPECT_EQ(s.decode_step_fn(5, {1, 2, 3}, 4), h3::decode_step(5, {1, 2, 3}, 4));
}

TEST(Checks, ThrowingSubjectIsAFailureNotACrash) {
    h3::CheckSubjects s;
    s.encode_fn = [](const h3::Point3&, h3::Depth) -> h3::HilbertIndex {
        throw std::runtime_error("boom");
    };
    const h3::CheckResult res = h3::check_bijection(h3::Depth(1), s);
    EXPECT_FALSE(res.passed());
    EXPECT_EQ(res.failed, 8u);
    ASSERT_FALSE(res.counterexamples.empty());
    EXPECT_NE(res.counterexamples.front().find("boom"), std::string::npos);
}
