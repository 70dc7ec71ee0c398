#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracerec/seq.hpp"

namespace tracerec {

/// Fraction of differing positions. Throws InvalidArgument on a length mismatch.
double hamming_error(const Seq& x, const Seq& xhat);

/// Unit-cost insert/delete/substitute distance.
std::size_t levenshtein(const Seq& a, const Seq& b);

/// levenshtein(x, xhat) / |x|. Throws InvalidArgument when x is empty.
double edit_error(const Seq& x, const Seq& xhat);

using Reconstructor = std::function<Seq(std::size_t n, std::span<const Seq> traces)>;

/// Ids accepted by find_algorithm, in a stable order:
/// smapexact smapseq indcomb gradasc bma mlexhaustive smap1 coordswitch.
std::vector<std::string> algorithm_ids();

/// Throws InvalidArgument for an unknown id. smap1 and coordswitch use only the first trace.
Reconstructor find_algorithm(std::string_view id);

struct ExperimentConfig {
    std::size_t n = 100;
    std::vector<double> deltas{0.1};
    std::vector<int> ts{2};
    std::size_t trials = 100;
    std::vector<std::string> algos{"bma"};
    std::uint64_t seed = 1;
    /// smapexact cells outside these limits are skipped.
    std::size_t smap_exact_max_n = 40;
    int smap_exact_max_t = 3;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;

    /// Throws InvalidArgument on an out-of-range field or unknown algorithm.
    void validate() const;
};

/// Flat key=value text: n, deltas, ts, trials, algos, seed, smap_exact_max_n,
/// smap_exact_max_t, threads. Lists are comma separated; '#' starts a comment.
ExperimentConfig parse_config(std::istream& in);

struct ResultRow {
    std::string algo;
    std::size_t n = 0;
    double delta = 0.0;
    int t = 0;
    std::size_t trials = 0;
    double hamming_error_rate = 0.0;
    double edit_error_rate = 0.0;
    double stderr_hamming = 0.0;
    double stderr_edit = 0.0;
    std::uint64_t seed = 0;
    double wall_time_ms = 0.0;

    /// Per-trial rates, indexed by trial; trial k saw the same input and traces for every algorithm.
    std::vector<double> trial_hamming;
    std::vector<double> trial_edit;
    /// Digest of every (input, traces) pair used in the cell.
    std::uint64_t trace_digest = 0;
    /// Trials where the algorithm raised an error and the all-ones fallback was scored.
    std::size_t failures = 0;
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    /// Human-readable reasons for skipped (delta, t, algo) cells.
    std::vector<std::string> skipped;
};

/// Runs every (delta, t, algo) cell. Trial k draws its input and traces from a
/// stream derived from (seed, k), so results do not depend on scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

void write_csv(std::ostream& out, std::span<const ResultRow> rows);

/// Mean and standard error (sample stdev / sqrt(count)).
struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};
MeanSe mean_se(std::span<const double> xs);

} // namespace tracerec
