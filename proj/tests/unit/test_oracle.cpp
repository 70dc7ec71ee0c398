#include <gtest/gtest.h>

#include "tracerec/error.hpp"
#include "tracerec/oracle.hpp"

using namespace tracerec;

TEST(Oracle, BinomialAgreesBetweenReferences) {
    Rng rng(1);
    for (int draw = 0; draw < 200; ++draw) {
        const Seq f = rng.random_bits(rng.engine()() % 13);
        const Seq g = rng.random_bits(rng.engine()() % 6);
        EXPECT_EQ(oracle::binomial_brute(f, g), oracle::binomial_memo(f, g));
    }
    EXPECT_EQ(oracle::binomial_brute(Seq::from_bits("0110"), Seq::from_bits("01")), 2);
    EXPECT_EQ(oracle::binomial_memo(Seq::from_bits("111"), Seq::from_bits("11")), 3);
}

TEST(Oracle, PosteriorBruteUniformMatchesPriorForm) {
    const std::vector<Seq> traces{Seq::from_bits("10"), Seq::from_bits("01")};
    const auto a = oracle::posterior_brute(5, traces);
    const std::vector<double> p(5, 0.5);
    const auto b = oracle::posterior_brute(std::span<const double>(p), traces);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
}

TEST(Oracle, PosteriorBruteSmallCase) {
    // n = 2, y = "1": inputs 01, 10 have one embedding, 11 has two.
    const auto q = oracle::posterior_brute(2, std::vector<Seq>{Seq::from_bits("1")});
    EXPECT_NEAR(q[0], 0.75, 1e-15);
    EXPECT_NEAR(q[1], 0.75, 1e-15);
}

TEST(Oracle, FValueBrute) {
    const std::vector<double> p{1.0, 0.0, 1.0};
    EXPECT_NEAR(static_cast<double>(oracle::f_value_brute(p, Seq::from_bits("1"))), 2.0, 1e-15);
    EXPECT_NEAR(static_cast<double>(oracle::f_value_brute(p, Seq{})), 1.0, 1e-15);
}

TEST(Oracle, PathCountsOfSingleTrace) {
    const Seq y = Seq::from_bits("0110");
    const std::vector<Seq> one{y};
    const auto counts = oracle::path_length_counts_brute(one);
    ASSERT_EQ(counts.size(), 5u);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(counts[k], 0);
    EXPECT_EQ(counts[4], 1);
    EXPECT_EQ(oracle::infiltration_paths_brute(one, y), 1);
    EXPECT_EQ(oracle::infiltration_paths_brute(one, Seq::from_bits("0111")), 0);
}

TEST(Oracle, PathCountsTwoTraces) {
    // "1" and "1": paths 1 (shared edge) and two orders of separate edges.
    const std::vector<Seq> traces{Seq::from_bits("1"), Seq::from_bits("1")};
    const auto counts = oracle::path_length_counts_brute(traces);
    EXPECT_EQ(counts[1], 1);
    EXPECT_EQ(counts[2], 2);
    EXPECT_EQ(oracle::infiltration_paths_brute(traces, Seq::from_bits("11")), 2);
    const auto m = oracle::marked_counts_brute(traces);
    EXPECT_EQ(m[1][1], 1);
    EXPECT_EQ(m[1][2], 2);
    EXPECT_EQ(m[2][2], 2);
}

TEST(Oracle, MlBrute) {
    const auto ml = oracle::ml_brute(3, std::vector<Seq>{Seq::from_bits("11")});
    ASSERT_EQ(ml.size(), 1u);
    EXPECT_EQ(ml[0].to_bits(), "111");
}

TEST(Oracle, ExpectedHammingTrivialEstimators) {
    // Guessing all ones is wrong on half the positions regardless of traces.
    const oracle::Estimator ones = [](std::span<const Seq>) { return Seq::from_bits("111"); };
    EXPECT_EQ(oracle::expected_hamming_errors(3, 2, Rational(1, 3), ones), Rational(3, 2));
    // With no deletions the first trace is x.
    const oracle::Estimator first = [](std::span<const Seq> ys) { return ys[0]; };
    EXPECT_EQ(oracle::expected_hamming_errors(3, 2, Rational(0), first), Rational(0));
}

TEST(Oracle, Guards) {
    EXPECT_THROW(oracle::posterior_brute(15, std::vector<Seq>{Seq::from_bits("1")}), GuardExceeded);
    EXPECT_THROW(oracle::ml_brute(17, std::vector<Seq>{Seq::from_bits("1")}), GuardExceeded);
}
