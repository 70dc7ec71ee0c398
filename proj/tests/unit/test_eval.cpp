#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "tracerec/error.hpp"
#include "tracerec/eval.hpp"

using namespace tracerec;

TEST(Metrics, Hamming) {
    EXPECT_DOUBLE_EQ(hamming_error(Seq::from_bits("0110"), Seq::from_bits("0011")), 0.5);
    EXPECT_DOUBLE_EQ(hamming_error(Seq::from_bits("0110"), Seq::from_bits("0110")), 0.0);
    EXPECT_THROW(hamming_error(Seq::from_bits("01"), Seq::from_bits("011")), InvalidArgument);
}

TEST(Metrics, Levenshtein) {
    EXPECT_EQ(levenshtein(Seq::from_bits("0110"), Seq::from_bits("1101")), 2u);
    EXPECT_EQ(levenshtein(Seq{}, Seq::from_bits("101")), 3u);
    EXPECT_EQ(levenshtein(Seq::from_bits("1010"), Seq::from_bits("0101")), 2u);
    EXPECT_DOUBLE_EQ(edit_error(Seq::from_bits("0110"), Seq::from_bits("1101")), 0.5);
    EXPECT_THROW(edit_error(Seq{}, Seq{}), InvalidArgument);
}

TEST(Registry, KnownIds) {
    for (const auto& id : algorithm_ids()) EXPECT_NO_THROW(find_algorithm(id));
    EXPECT_THROW(find_algorithm("nope"), InvalidArgument);
    EXPECT_EQ(find_algorithm("bma")(3, std::vector<Seq>{Seq::from_bits("110")}).to_bits(), "110");
}

TEST(Config, Parse) {
    std::istringstream in("# comment\nn = 20\ndeltas=0.1, 0.2\nts=2,3\ntrials=7\nalgos=bma,smapseq\nseed=9\n");
    const auto cfg = parse_config(in);
    EXPECT_EQ(cfg.n, 20u);
    EXPECT_EQ(cfg.deltas, (std::vector<double>{0.1, 0.2}));
    EXPECT_EQ(cfg.ts, (std::vector<int>{2, 3}));
    EXPECT_EQ(cfg.trials, 7u);
    EXPECT_EQ(cfg.algos, (std::vector<std::string>{"bma", "smapseq"}));
    EXPECT_EQ(cfg.seed, 9u);
}

TEST(Config, Rejects) {
    std::istringstream bad_key("bogus=1\n");
    EXPECT_THROW(parse_config(bad_key), InvalidArgument);
    ExperimentConfig cfg;
    cfg.deltas = {1.0};
    EXPECT_THROW(cfg.validate(), InvalidArgument);
    cfg = {};
    cfg.algos = {"nope"};
    EXPECT_THROW(cfg.validate(), InvalidArgument);
    cfg = {};
    cfg.trials = 0;
    EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(Experiment, NoiselessBmaIsExact) {
    ExperimentConfig cfg;
    cfg.n = 30;
    cfg.deltas = {0.0};
    cfg.ts = {1, 3};
    cfg.trials = 10;
    cfg.algos = {"bma"};
    const auto res = run_experiment(cfg);
    ASSERT_EQ(res.rows.size(), 2u);
    for (const auto& row : res.rows) {
        EXPECT_EQ(row.hamming_error_rate, 0.0);
        EXPECT_EQ(row.edit_error_rate, 0.0);
        EXPECT_EQ(row.trial_hamming.size(), 10u);
    }
}

TEST(Experiment, DeterministicAndShared) {
    ExperimentConfig cfg;
    cfg.n = 25;
    cfg.deltas = {0.2};
    cfg.ts = {2};
    cfg.trials = 12;
    cfg.algos = {"bma", "smapseq"};
    cfg.seed = 3;
    cfg.threads = 1;
    const auto a = run_experiment(cfg);
    cfg.threads = 3;
    const auto b = run_experiment(cfg);
    ASSERT_EQ(a.rows.size(), 2u);
    ASSERT_EQ(b.rows.size(), 2u);
    for (std::size_t r = 0; r < 2; ++r) {
        EXPECT_EQ(a.rows[r].trial_hamming, b.rows[r].trial_hamming);
        EXPECT_EQ(a.rows[r].trace_digest, b.rows[r].trace_digest);
    }
    EXPECT_EQ(a.rows[0].trace_digest, a.rows[1].trace_digest);
}

TEST(Experiment, SkipsLargeSmapExact) {
    ExperimentConfig cfg;
    cfg.n = 50;
    cfg.deltas = {0.1};
    cfg.ts = {2, 4};
    cfg.trials = 2;
    cfg.algos = {"smapexact", "bma"};
    const auto res = run_experiment(cfg);
    EXPECT_EQ(res.rows.size(), 2u);
    EXPECT_EQ(res.skipped.size(), 2u);
}

TEST(Csv, HeaderAndRow) {
    ResultRow row;
    row.algo = "bma";
    row.n = 10;
    row.delta = 0.1;
    row.t = 2;
    row.trials = 5;
    row.hamming_error_rate = 0.25;
    std::ostringstream out;
    write_csv(out, std::vector<ResultRow>{row});
    const std::string s = out.str();
    EXPECT_EQ(s.substr(0, s.find('\n')),
              "algo,n,delta,t,trials,hamming_error_rate,edit_error_rate,stderr_hamming,stderr_edit,seed,wall_time_ms");
    EXPECT_NE(s.find("bma,10,0.1,2,5,0.25,"), std::string::npos);
}

TEST(Stats, MeanSe) {
    const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    const auto m = mean_se(xs);
    EXPECT_DOUBLE_EQ(m.mean, 2.5);
    EXPECT_NEAR(m.se, std::sqrt(5.0 / 3.0) / 2.0, 1e-15);
}

TEST(Experiment, SequentialHammingNotBelowExactMap) {
    ExperimentConfig cfg;
    cfg.n = 100;
    cfg.deltas = {0.1};
    cfg.ts = {2};
    cfg.trials = 500;
    cfg.algos = {"smapexact", "smapseq"};
    cfg.seed = 33;
    cfg.smap_exact_max_n = 100;
    const auto res = run_experiment(cfg);
    ASSERT_EQ(res.rows.size(), 2u);
    const auto& exact = res.rows[0];
    const auto& seq = res.rows[1];
    ASSERT_EQ(exact.algo, "smapexact");
    EXPECT_EQ(seq.failures, 0u);
    EXPECT_LT(seq.hamming_error_rate, 0.35);
    EXPECT_LE(exact.hamming_error_rate, seq.hamming_error_rate);
}
