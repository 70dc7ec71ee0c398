#include <cmath>

#include <gtest/gtest.h>

#include "tracerec/channel.hpp"
#include "tracerec/error.hpp"
#include "tracerec/oracle.hpp"
#include "tracerec/relaxed_binomial.hpp"

using namespace tracerec;

namespace {

std::vector<double> random_probs(Rng& rng, std::size_t n) {
    std::vector<double> p(n);
    for (auto& x : p) x = rng.uniform();
    return p;
}

Seq random_trace(Rng& rng, std::size_t max_len) {
    return rng.random_bits(static_cast<std::size_t>(rng.engine()() % (max_len + 1)));
}

} // namespace

TEST(FValue, SmallExamples) {
    EXPECT_DOUBLE_EQ(f_value(Priors({1, 0, 1}), Seq::from_bits("11")), 1.0);
    EXPECT_DOUBLE_EQ(f_value(Priors({0.5, 0.5}), Seq::from_bits("1")), 1.0);
    EXPECT_DOUBLE_EQ(f_value(Priors({0.3, 0.7}), Seq{}), 1.0);
    EXPECT_DOUBLE_EQ(f_value(Priors({0.3}), Seq::from_bits("01")), 0.0);
}

TEST(FValue, LatticePointsCollapseToBinomial) {
    for (std::size_t n = 0; n <= 8; ++n) {
        for (std::uint64_t xb = 0; xb < (1ull << n); ++xb) {
            const Seq x = Seq::from_integer(xb, n);
            for (std::size_t m = 0; m <= std::min<std::size_t>(n, 4); ++m) {
                for (std::uint64_t vb = 0; vb < (1ull << m); ++vb) {
                    const Seq v = Seq::from_integer(vb, m);
                    ASSERT_EQ(f_value(Priors::from_seq(x), v), binomial_coeff(x, v).get_d());
                }
            }
        }
    }
}

TEST(FValue, ExpectationOverLattice) {
    Rng rng(11);
    for (int draw = 0; draw < 100; ++draw) {
        const std::size_t n = 1 + rng.engine()() % 10;
        const auto p = random_probs(rng, n);
        const Seq v = random_trace(rng, n);
        EXPECT_NEAR(f_value(Priors(p), v), static_cast<double>(oracle::f_value_brute(p, v)), 1e-10);
    }
}

TEST(FTables, HandUnrolled) {
    const FTables t = f_tables(Priors({0.5, 0.5}), Seq::from_bits("1"));
    EXPECT_DOUBLE_EQ(t.forward(1, 1), 0.5);
    EXPECT_DOUBLE_EQ(t.forward(2, 1), 1.0);
    EXPECT_DOUBLE_EQ(t.forward(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(f_tables(Priors({1, 1}), Seq::from_bits("11")).reverse(0, 0), 1.0);
}

TEST(FTables, BoundaryInvariants) {
    Rng rng(3);
    const auto p = random_probs(rng, 9);
    const Seq v = Seq::from_bits("10110");
    const FTables t = f_tables(Priors(p), v);
    for (std::size_t k = 0; k <= 9; ++k) {
        EXPECT_DOUBLE_EQ(t.forward(k, 0), 1.0);
        EXPECT_DOUBLE_EQ(t.reverse(k, 5), 1.0);
        for (std::size_t j = 0; j <= 5; ++j) {
            if (k < j) EXPECT_EQ(t.forward(k, j), 0.0);
            if (9 - k < 5 - j) EXPECT_EQ(t.reverse(k, j), 0.0);
            EXPECT_GE(t.forward(k, j), 0.0);
        }
    }
    EXPECT_NEAR(t.value(), f_value(Priors(p), v), 1e-12);
    EXPECT_NEAR(t.reverse(0, 0), t.value(), 1e-12);
}

TEST(FTables, LongInputsStayFinite) {
    const std::size_t n = 3000;
    Rng rng(5);
    const Seq x = rng.random_bits(n);
    Rng ch = rng.split(1);
    const Seq y = transmit(x, 0.3, ch);
    const FTables t = f_tables(Priors::uniform(n), y);
    EXPECT_TRUE(std::isfinite(t.log_value()));
    EXPECT_GT(t.log_value(), 100.0);
}

TEST(FGradient, LinearCases) {
    const auto g1 = f_gradient(Priors({0.5, 0.5}), Seq::from_bits("1"));
    EXPECT_DOUBLE_EQ(g1[0], 1.0);
    EXPECT_DOUBLE_EQ(g1[1], 1.0);
    const auto g0 = f_gradient(Priors({0.5, 0.5}), Seq::from_bits("0"));
    EXPECT_DOUBLE_EQ(g0[0], -1.0);
    EXPECT_DOUBLE_EQ(g0[1], -1.0);
    const auto ge = f_gradient(Priors({0.2, 0.9}), Seq{});
    EXPECT_EQ(ge, (std::vector<double>{0.0, 0.0}));
}

TEST(FGradient, CentralDifferences) {
    Rng rng(17);
    const double h = 1e-6;
    for (int draw = 0; draw < 100; ++draw) {
        const std::size_t n = 2 + rng.engine()() % 19;
        std::vector<double> p(n);
        for (auto& x : p) x = 0.05 + 0.9 * rng.uniform();
        const Seq v = rng.random_bits(1 + rng.engine()() % n);
        const auto grad = f_gradient(Priors(p), v);
        for (std::size_t i = 0; i < n; ++i) {
            const double up = f_value(Priors(substitute(p, i, p[i] + h)), v);
            const double down = f_value(Priors(substitute(p, i, p[i] - h)), v);
            const double fd = (up - down) / (2 * h);
            const double scale = std::max({std::abs(grad[i]), std::abs(fd), 1e-3 * f_value(Priors(p), v)});
            ASSERT_LE(std::abs(grad[i] - fd) / scale, 1e-6) << "n=" << n << " i=" << i;
        }
    }
}

TEST(FGradient, LogGradientIsGradientOverF) {
    const Priors p({0.2, 0.7, 0.4, 0.9});
    const Seq v = Seq::from_bits("10");
    const FTables t = f_tables(p, v);
    const auto g = f_gradient(t, v);
    const auto lg = f_log_gradient(t, v);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(lg[i], g[i] / t.value(), 1e-12);
    EXPECT_THROW(f_log_gradient(f_tables(Priors({0.0, 0.0}), Seq::from_bits("1")), Seq::from_bits("1")), ZeroProbability);
}

TEST(FDecompose, HandExample) {
    const Decomposition d = f_decompose(Priors({0.5, 0.5}), Seq::from_bits("1"), 0);
    EXPECT_DOUBLE_EQ(d.base, 0.5);
    EXPECT_DOUBLE_EQ(d.coef1, 1.0);
    EXPECT_DOUBLE_EQ(d.coef0, 0.0);
    EXPECT_DOUBLE_EQ(d.at(0.5), 1.0);
}

TEST(FDecompose, IdentityAndAffinity) {
    Rng rng(23);
    for (int draw = 0; draw < 100; ++draw) {
        const std::size_t n = 1 + rng.engine()() % 10;
        const auto p = random_probs(rng, n);
        const Seq v = rng.random_bits(1 + rng.engine()() % n);
        for (std::size_t i = 0; i < n; ++i) {
            const Decomposition d = f_decompose(Priors(p), v, i);
            EXPECT_NEAR(d.at(p[i]), f_value(Priors(p), v), 1e-12);
            for (double s : {0.0, 0.37, 1.0}) {
                EXPECT_NEAR(d.at(s), f_value(Priors(substitute(p, i, s)), v), 1e-10);
            }
            // base does not depend on coordinate i
            std::vector<double> rest(p);
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            EXPECT_NEAR(d.base, f_value(Priors(rest), v), 1e-10);
        }
    }
}

TEST(FDecompose, LatticeCollapse) {
    const Seq x = Seq::from_bits("1011001");
    for (std::size_t i = 0; i < x.size(); ++i) {
        EXPECT_NEAR(f_decompose(Priors::from_seq(x), x, i).at(x[i]), binomial_coeff(x, x).get_d(), 1e-12);
    }
}

TEST(FDecompose, Errors) {
    EXPECT_THROW(f_decompose(Priors({0.5}), Seq::from_bits("1"), 1), InvalidArgument);
    EXPECT_THROW(f_decompose(Priors({0.5}), Seq{}, 0), InvalidArgument);
}

TEST(Priors, Validation) {
    EXPECT_THROW(Priors({0.5, 1.5}), InvalidArgument);
    EXPECT_THROW(Priors({std::nan("")}), InvalidArgument);
    EXPECT_EQ(Priors({0.5, 0.49, 1.0}).threshold().to_bits(), "101");
}
