#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tracerec/relaxed_binomial.hpp"
#include "tracerec/seq.hpp"

namespace tracerec {

/// q_i = Pr(X_i = 1 | observations).
using PosteriorVec = std::vector<double>;

/// Hard decision 1 iff q_i >= 0.5.
Seq threshold(std::span<const double> q);

/// Exact symbolwise posteriors from one trace under independent priors, O(n |y|).
/// Throws InvalidArgument if |y| > n and ZeroProbability if F(p, y) = 0.
PosteriorVec posterior_single(const Priors& p, const Seq& y);

struct MlResult {
    /// Every maximizer, in lexicographic order.
    std::vector<Seq> argmax;
    BigCount value;
};

inline constexpr std::size_t kMlExhaustiveMaxN = 24;

/// All x in {0,1}^n maximizing binomial(x, y). Throws GuardExceeded for n > 24.
MlResult ml_exhaustive(std::size_t n, const Seq& y);

struct GradAscentConfig {
    double epsilon = 0.1;
    int max_iters = 100;
    /// Stop once |F_new - F_old| / F_old falls below this.
    double conv_rel_tol = 1e-3;

    /// Throws InvalidArgument unless epsilon > 0, max_iters >= 1, conv_rel_tol >= 0.
    void validate() const;
};

struct GradAscentResult {
    Priors p;
    Seq estimate;
    int iterations = 0;
    bool converged = false;
};

/// Projected ascent over [0,1]^n with step p += epsilon * mean_j grad F(p, y^j) / F(p, y^j),
/// clamped to the cube. Convergence is tested on sum_j F. Traces of length 0
/// contribute nothing. p0 defaults to (0.5, ..., 0.5).
GradAscentResult grad_ascent(std::size_t n, std::span<const Seq> traces, const GradAscentConfig& cfg = {},
                             const std::optional<Priors>& p0 = std::nullopt);

Seq grad_ascent_single(std::size_t n, const Seq& y, const GradAscentConfig& cfg = {},
                       const std::optional<Priors>& p0 = std::nullopt);

struct CoordinateSwitchResult {
    Seq estimate;
    double objective = 0.0;
    int rounds = 0;
    /// F(p, y) after every single-coordinate switch, starting with F(p0, y).
    std::vector<double> history;
};

/// Rounds of greedy per-coordinate switches to the better lattice endpoint,
/// visiting coordinates by decreasing |F(p^(i->1), y) - F(p^(i->0), y)|, until a
/// round ends on an already visited lattice point.
CoordinateSwitchResult coordinate_switch(const Priors& p0, const Seq& y);

} // namespace tracerec
