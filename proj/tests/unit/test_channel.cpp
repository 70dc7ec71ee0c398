#include <cmath>

#include <gtest/gtest.h>

#include "tracerec/channel.hpp"
#include "tracerec/error.hpp"

using namespace tracerec;

namespace {

bool is_subsequence(const Seq& y, const Seq& x) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < x.size() && j < y.size(); ++i) j += x[i] == y[j];
    return j == y.size();
}

Rational total(const JointDistribution& d) {
    Rational s = 0;
    for (const auto& [k, v] : d) s += v;
    return s;
}

} // namespace

TEST(Transmit, NoDeletion) {
    Rng rng(1);
    const Seq x = Seq::from_bits("1011001");
    EXPECT_EQ(transmit(x, 0.0, rng), x);
    EXPECT_EQ(transmit(Seq{}, 0.4, rng), Seq{});
    for (const auto& y : transmit_t(x, ChannelConfig(0.0, 3), rng)) EXPECT_EQ(y, x);
}

TEST(Transmit, OutputIsSubsequence) {
    Rng rng(2);
    for (int k = 0; k < 200; ++k) {
        const Seq x = rng.random_bits(30);
        EXPECT_TRUE(is_subsequence(transmit(x, 0.4, rng), x));
    }
}

TEST(Transmit, LengthConcentration) {
    Rng rng(3);
    const Seq x(std::vector<Symbol>(10000, 1));
    const double len = static_cast<double>(transmit(x, 0.3, rng).size());
    EXPECT_LE(std::abs(len - 7000.0), 3 * std::sqrt(10000 * 0.21));
}

TEST(Transmit, MeanLengthOverTrials) {
    Rng rng(4);
    const Seq x = rng.random_bits(50);
    double sum = 0.0;
    const int trials = 10000;
    for (int k = 0; k < trials; ++k) sum += static_cast<double>(transmit(x, 0.25, rng).size());
    const double sigma = std::sqrt(50 * 0.25 * 0.75 / trials);
    EXPECT_LE(std::abs(sum / trials - 37.5), 4 * sigma);
}

TEST(ChannelConfig, Validation) {
    EXPECT_THROW(ChannelConfig(1.0, 2), InvalidArgument);
    EXPECT_THROW(ChannelConfig(-0.1, 2), InvalidArgument);
    EXPECT_THROW(ChannelConfig(0.1, 0), InvalidArgument);
    EXPECT_NO_THROW(ChannelConfig(0.0, 1));
}

TEST(Remnant, SingleTraceIsIdentity) {
    Rng rng(5);
    const Seq z = rng.random_bits(20);
    const auto out = transmit_remnant(z, ChannelConfig(0.7, 1), rng);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0], z);
}

TEST(Remnant, SubsetLaw) {
    const auto pr = remnant_subset_probabilities(2, 0.5);
    EXPECT_DOUBLE_EQ(pr[0], 0.0);
    EXPECT_NEAR(pr[1], 1.0 / 3, 1e-15);
    EXPECT_NEAR(pr[2], 1.0 / 3, 1e-15);
    EXPECT_NEAR(pr[3], 1.0 / 3, 1e-15);
    for (int t = 1; t <= 6; ++t) {
        for (double d : {0.1, 0.5, 0.9}) {
            double s = 0.0;
            for (double v : remnant_subset_probabilities(t, d)) s += v;
            EXPECT_NEAR(s, 1.0, 1e-12);
        }
    }
}

TEST(Remnant, EverySymbolSurvivesSomewhere) {
    Rng rng(6);
    const Seq z(std::vector<Symbol>(500, 1));
    const auto out = transmit_remnant(z, ChannelConfig(0.8, 3), rng);
    std::size_t total = 0;
    for (const auto& y : out) total += y.size();
    EXPECT_GE(total, 500u);
}

TEST(Cascade, Degenerate) {
    Rng rng(7);
    const Seq x = Seq::from_bits("110100");
    for (const auto& y : transmit_cascade(x, ChannelConfig(0.0, 3), rng)) EXPECT_EQ(y, x);
    for (const auto& y : transmit_cascade(Seq{}, ChannelConfig(0.5, 2), rng)) EXPECT_TRUE(y.empty());
}

TEST(Likelihood, Examples) {
    EXPECT_DOUBLE_EQ(likelihood(Seq::from_bits("01"), Seq::from_bits("0"), 0.5), 0.25);
    const Seq x = Seq::from_bits("10110");
    EXPECT_NEAR(likelihood(x, x, 0.3), std::pow(0.7, 5), 1e-15);
    EXPECT_EQ(likelihood(x, Seq::from_bits("000"), 0.3), 0.0);
    EXPECT_EQ(likelihood_exact(Seq::from_bits("01"), Seq::from_bits("0"), Rational(1, 2)), Rational(1, 4));
}

TEST(Likelihood, SumsToOneOverOutputs) {
    for (std::size_t n = 0; n <= 8; ++n) {
        const Seq x = Seq::from_integer(0b10110101 & ((1u << n) - 1), n);
        Rational s = 0;
        for (std::size_t m = 0; m <= n; ++m) {
            for (std::uint64_t b = 0; b < (1ull << m); ++b) s += likelihood_exact(x, Seq::from_integer(b, m), Rational(3, 10));
        }
        EXPECT_EQ(s, 1);
    }
}

TEST(JointDistribution, TotalsAndSingleTrace) {
    const Seq x = Seq::from_bits("0110");
    const Rational delta(1, 3);
    const auto ind = joint_trace_distribution(x, 1, delta, JointMode::independent);
    EXPECT_EQ(total(ind), 1);
    for (const auto& [tuple, pr] : ind) EXPECT_EQ(pr, likelihood_exact(x, tuple[0], delta));
    EXPECT_EQ(total(joint_trace_distribution(x, 2, delta, JointMode::cascade)), 1);
}

TEST(JointDistribution, TwoSymbolsTwoTraces) {
    const Seq x = Seq::from_bits("01");
    const auto ind = joint_trace_distribution(x, 2, Rational(1, 2), JointMode::independent);
    const auto cas = joint_trace_distribution(x, 2, Rational(1, 2), JointMode::cascade);
    EXPECT_EQ(ind, cas);
    for (const auto& [tuple, pr] : ind) {
        EXPECT_EQ(pr, likelihood_exact(x, tuple[0], Rational(1, 2)) * likelihood_exact(x, tuple[1], Rational(1, 2)));
    }
}

TEST(JointDistribution, MonteCarloAgreesWithExact) {
    const Seq x = Seq::from_bits("01");
    const auto exact = joint_trace_distribution(x, 2, Rational(1, 2), JointMode::independent);
    Rng rng(9);
    std::map<TraceTuple, int> counts;
    const int trials = 40000;
    for (int k = 0; k < trials; ++k) ++counts[transmit_t(x, ChannelConfig(0.5, 2), rng)];
    for (const auto& [tuple, pr] : exact) {
        const double p = pr.get_d();
        const double sigma = std::sqrt(p * (1 - p) / trials);
        EXPECT_LE(std::abs(counts[tuple] / double(trials) - p), 5 * sigma);
    }
}

TEST(JointDistribution, Guard) {
    EXPECT_THROW(joint_trace_distribution(Seq(std::vector<Symbol>(13, 0)), 2, Rational(1, 2), JointMode::independent),
                 GuardExceeded);
}

TEST(Rng, SplitIsDeterministic) {
    const Rng root(42);
    Rng a = root.split(3);
    Rng b = root.split(3);
    Rng c = root.split(4);
    EXPECT_EQ(a.random_bits(64), b.random_bits(64));
    EXPECT_NE(Rng(42).split(3).random_bits(64), c.random_bits(64));
}
