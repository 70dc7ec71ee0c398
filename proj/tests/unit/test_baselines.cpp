#include <gtest/gtest.h>

#include "tracerec/baselines.hpp"
#include "tracerec/channel.hpp"

using namespace tracerec;

TEST(Bma, HandStepped) {
    const std::vector<Seq> traces{Seq::from_bits("10"), Seq::from_bits("110")};
    EXPECT_EQ(bma(3, traces).to_bits(), "110");
}

TEST(Bma, SingleTracePadsWithOnes) {
    EXPECT_EQ(bma(6, std::vector<Seq>{Seq::from_bits("0010")}).to_bits(), "001011");
    EXPECT_EQ(bma(2, std::vector<Seq>{Seq::from_bits("0010")}).to_bits(), "00");
}

TEST(Bma, NoiselessTracesReturnInput) {
    Rng rng(1);
    for (int draw = 0; draw < 50; ++draw) {
        const Seq x = rng.random_bits(1 + rng.engine()() % 20);
        for (int t : {1, 3, 5}) {
            const auto traces = transmit_t(x, ChannelConfig(0.0, t), rng);
            EXPECT_EQ(bma(x.size(), traces), x);
        }
    }
}

TEST(Bma, LengthAndDeterminism) {
    Rng rng(2);
    const Seq x = rng.random_bits(40);
    const auto traces = transmit_t(x, ChannelConfig(0.3, 4), rng);
    const Seq a = bma(40, traces);
    EXPECT_EQ(a.size(), 40u);
    EXPECT_EQ(a, bma(40, traces));
    EXPECT_EQ(bma(5, std::vector<Seq>(3)).to_bits(), "11111");
}
