#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tracerec/edit_graph.hpp"
#include "tracerec/single_trace.hpp"

namespace tracerec {

/// Combinatorial weights of the exact t-trace posterior for input length n.
/// Indices i and j are 1-based, matching positions in x and in a supersequence w.
class SmapWeights {
public:
    explicit SmapWeights(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    /// C(a, b) for 0 <= a <= n; zero outside 0 <= b <= a.
    const BigCount& binom(std::size_t a, std::ptrdiff_t b) const;
    const BigCount& pow2(std::size_t e) const { return pow2_[e]; }

    /// 2^{n-k-1} C(n-1, k); zero for k >= n.
    BigCount w_half(std::size_t k) const;
    /// 2^{n-k} C(i-1, j-1) C(n-i, k-j); zero outside max(1, k+i-n) <= j <= min(i, k).
    BigCount w_pos(std::size_t i, std::size_t j, std::size_t k) const;
    /// 2^{n-k} C(n, k); zero for k > n.
    BigCount w_den(std::size_t k) const;

private:
    std::size_t n_;
    std::vector<BigCount> pow2_;
    std::vector<BigCount> binom_;
    BigCount zero_;
};

/// sum over f in {0,1}^n with f_i = a of binomial(f, g), in closed form (i is 1-based).
BigCount fixed_symbol_sum(std::size_t n, std::size_t i, Symbol a, const Seq& g);

struct SmapResult {
    PosteriorVec q;
    Seq estimate;
};

/// Exact symbolwise MAP from t traces under uniform priors. Numerators and
/// denominators are exact integers; q is rounded only at the end and the
/// estimate thresholds exactly (2 * numerator >= denominator).
SmapResult smap_exact(std::size_t n, std::span<const Seq> traces);

/// Posterior of the remnant channel: share of n-edge covering paths whose i-th edge is '1'.
/// Throws InvalidArgument when no covering sequence of length n exists.
PosteriorVec remnant_posterior(std::size_t n, std::span<const Seq> traces);

/// Single-trace posteriors applied trace by trace, each output becoming the next prior.
Seq smap_sequential(std::size_t n, std::span<const Seq> traces);

/// Per-trace posteriors from uniform priors, combined as prod q >= prod (1 - q).
Seq independent_combination(std::size_t n, std::span<const Seq> traces);

Seq grad_ascent_traces(std::size_t n, std::span<const Seq> traces, const GradAscentConfig& cfg = {},
                       const std::optional<Priors>& p0 = std::nullopt);

inline constexpr std::size_t kMlTracesMaxN = 20;

/// Every x in {0,1}^n maximizing prod_j binomial(x, y^j). Throws GuardExceeded for n > 20.
MlResult ml_exhaustive_traces(std::size_t n, std::span<const Seq> traces);

} // namespace tracerec
