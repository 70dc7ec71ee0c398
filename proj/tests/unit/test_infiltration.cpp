#include <gtest/gtest.h>

#include "tracerec/channel.hpp"
#include "tracerec/error.hpp"
#include "tracerec/infiltration.hpp"
#include "tracerec/oracle.hpp"

using namespace tracerec;

namespace {

InfiltrationPoly letters(std::initializer_list<std::pair<const char*, int>> terms) {
    const auto az = Alphabet::lowercase();
    InfiltrationPoly p;
    for (const auto& [w, c] : terms) p[az.encode(w)] = c;
    return p;
}

} // namespace

TEST(Infiltration, AbWithAb) {
    const auto az = Alphabet::lowercase();
    EXPECT_EQ(infiltration(az.encode("ab"), az.encode("ab")),
              letters({{"ab", 1}, {"aab", 2}, {"abb", 2}, {"aabb", 4}, {"abab", 2}}));
}

TEST(Infiltration, AbWithBa) {
    const auto az = Alphabet::lowercase();
    EXPECT_EQ(infiltration(az.encode("ab"), az.encode("ba")),
              letters({{"aba", 1}, {"bab", 1}, {"abab", 1}, {"abba", 2}, {"baab", 2}, {"baba", 1}}));
}

TEST(Infiltration, BinaryCoefficients) {
    const auto p = infiltration(Seq::from_bits("001"), Seq::from_bits("101"));
    EXPECT_EQ(coefficient(p, Seq::from_bits("101001")), 1);
    EXPECT_EQ(coefficient(p, Seq::from_bits("01001")), 2);
    EXPECT_EQ(coefficient(p, Seq::from_bits("11")), 0);
}

TEST(Infiltration, EmptyIsUnit) {
    const Seq f = Seq::from_bits("0110");
    EXPECT_EQ(infiltration(f, Seq{}), (InfiltrationPoly{{f, 1}}));
    EXPECT_EQ(infiltration(std::span<const Seq>{}), (InfiltrationPoly{{Seq{}, 1}}));
}

TEST(Infiltration, MatchesPathCounts) {
    Rng rng(2);
    for (int draw = 0; draw < 40; ++draw) {
        const std::vector<Seq> fg{rng.random_bits(rng.engine()() % 7), rng.random_bits(rng.engine()() % 7)};
        const auto p = infiltration(fg[0], fg[1]);
        for (const auto& [w, c] : p) ASSERT_EQ(c, oracle::infiltration_paths_brute(fg, w));
        // no path spells a word outside the polynomial
        const std::size_t lo = std::max(fg[0].size(), fg[1].size());
        for (std::size_t len = lo; len <= std::min<std::size_t>(lo + 2, fg[0].size() + fg[1].size()); ++len) {
            for (std::uint64_t b = 0; b < (1ull << len); ++b) {
                const Seq w = Seq::from_integer(b, len);
                ASSERT_EQ(coefficient(p, w), oracle::infiltration_paths_brute(fg, w));
            }
        }
    }
}

TEST(Infiltration, CommutativeAssociativeAndDegreeBounded) {
    Rng rng(3);
    for (int draw = 0; draw < 40; ++draw) {
        const Seq f = rng.random_bits(rng.engine()() % 5);
        const Seq g = rng.random_bits(rng.engine()() % 5);
        const Seq h = rng.random_bits(rng.engine()() % 4);
        const auto fg = infiltration(f, g);
        EXPECT_EQ(fg, infiltration(g, f));
        const auto gh = infiltration(g, h);
        InfiltrationPoly right;
        for (const auto& [w, c] : gh) {
            for (const auto& [u, d] : infiltration(f, w)) right[u] += c * d;
        }
        EXPECT_EQ(infiltration(fg, h), right);
        for (const auto& [w, c] : fg) {
            EXPECT_GE(w.size(), std::max(f.size(), g.size()));
            EXPECT_LE(w.size(), f.size() + g.size());
            EXPECT_GT(c, 0);
        }
    }
}

TEST(Infiltration, ProductOfBinomials) {
    Rng rng(4);
    for (int draw = 0; draw < 200; ++draw) {
        const Seq h = rng.random_bits(rng.engine()() % 9);
        std::vector<Seq> fs;
        for (std::size_t j = 0, m = 1 + rng.engine()() % 3; j < m; ++j) fs.push_back(rng.random_bits(rng.engine()() % 5));
        BigCount lhs = 1;
        for (const auto& f : fs) lhs *= oracle::binomial_memo(h, f);
        BigCount rhs = 0;
        for (const auto& [w, c] : infiltration(fs)) rhs += c * oracle::binomial_memo(h, w);
        ASSERT_EQ(lhs, rhs);
    }
}

TEST(Infiltration, Guard) {
    const Seq long13(std::vector<Symbol>(13, 1));
    EXPECT_THROW(infiltration(long13, long13), GuardExceeded);
}
