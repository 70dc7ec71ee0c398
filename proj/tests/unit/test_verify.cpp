#include <gtest/gtest.h>

#include "tracerec/error.hpp"
#include "tracerec/verify.hpp"

using namespace tracerec;

TEST(Verify, EverySuitePasses) {
    for (const auto& name : verify_suites()) {
        const auto r = run_suite(name);
        EXPECT_TRUE(r.passed) << name << ": " << r.detail;
        EXPECT_GT(r.cases, 0u) << name;
        EXPECT_LE(r.max_deviation, 1e-9) << name;
    }
}

TEST(Verify, OtherSeed) { EXPECT_TRUE(run_suite("posterior", 77).passed); }

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope"), InvalidArgument); }
