#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tracerec/channel.hpp"
#include "tracerec/seq.hpp"

// Brute-force references for tests and the verify command. Nothing here is
// used by the estimators themselves.
namespace tracerec::oracle {

/// Counts index subsets S with f_S = g by enumerating every |g|-subset. Guard: C(|f|,|g|) <= 1e7.
BigCount binomial_brute(const Seq& f, const Seq& g);

/// Top-down memoized subsequence count; faster than binomial_brute, independent of the production DP.
BigCount binomial_memo(const Seq& f, const Seq& g);

/// sum_z Pr(Z = z) binomial(z, v) over all z in {0,1}^n. Guard: n <= 14.
long double f_value_brute(std::span<const double> p, const Seq& v);

/// Pr(X_i = 1 | traces) by enumerating all 2^n inputs, uniform prior, exact integer sums. Guard: n <= 14.
std::vector<double> posterior_brute(std::size_t n, std::span<const Seq> traces);

/// Same under independent priors p, in long double. Guard: n <= 14.
std::vector<double> posterior_brute(std::span<const double> p, std::span<const Seq> traces);

/// Number of origin-to-destination edit-graph paths spelling w, by DFS. Guard: prod(|y|+1) <= 1e4.
BigCount infiltration_paths_brute(std::span<const Seq> traces, const Seq& w);

/// Path counts by length, index k = number of edges, by DFS over all paths.
std::vector<BigCount> path_length_counts_brute(std::span<const Seq> traces);

/// m[j][k]: k-edge paths whose j-th edge (1-based) carries `symbol`, by DFS over all paths.
std::vector<std::vector<BigCount>> marked_counts_brute(std::span<const Seq> traces, Symbol symbol = 1);

/// sum over f in {0,1}^n with f_i = a (1-based i) of binomial(f, g), by enumeration. Guard: n <= 16.
BigCount fixed_symbol_sum_brute(std::size_t n, std::size_t i, Symbol a, const Seq& g);

/// All argmax sequences of prod_j binomial(x, y^j) by plain enumeration. Guard: n <= 16.
std::vector<Seq> ml_brute(std::size_t n, std::span<const Seq> traces);

using Estimator = std::function<Seq(std::span<const Seq>)>;

/// E[hamming(X, estimator(Y^1..Y^t))] for X uniform on {0,1}^n and t independent
/// deletion channels, by full enumeration of the trace law. Returns the expected
/// number of wrong positions, exactly.
Rational expected_hamming_errors(std::size_t n, int t, const Rational& delta, const Estimator& estimator);

} // namespace tracerec::oracle
