#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "tracerec/seq.hpp"

namespace tracerec {

/// Seedable RNG stream. Streams derived with split() are independent of the
/// parent's consumption, so parallel workers get schedule-independent draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

    /// A child stream keyed by (this stream's seed, stream_id).
    Rng split(std::uint64_t stream_id) const { return Rng(mix(seed_ ^ mix(stream_id + 0x9e3779b97f4a7c15ULL))); }

    std::uint64_t seed() const noexcept { return seed_; }
    std::mt19937_64& engine() noexcept { return engine_; }

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    bool bernoulli(double p) { return uniform() < p; }
    Seq random_bits(std::size_t n);

private:
    static std::uint64_t mix(std::uint64_t z) noexcept {
        // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Deletion probability, trace count and seed of a t-trace channel.
/// Construction rejects delta outside [0,1) and t < 1.
class ChannelConfig {
public:
    ChannelConfig(double delta, int t, std::uint64_t seed = 0);

    double delta() const noexcept { return delta_; }
    int t() const noexcept { return t_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    double delta_;
    int t_;
    std::uint64_t seed_;
};

/// Per-input-symbol sets of traces (bitmask over [t]) in which the symbol survives.
struct DeletionPattern {
    std::vector<std::uint32_t> kept;
};

/// Traces produced by applying a deletion pattern to x.
std::vector<Seq> apply_pattern(const Seq& x, const DeletionPattern& pattern, int t);

Seq transmit(const Seq& x, double delta, Rng& rng);
std::vector<Seq> transmit_t(const Seq& x, const ChannelConfig& cfg, Rng& rng);

/// Remnant channel: each input symbol appears in a nonempty random subset S of
/// the t outputs with Pr(S) = delta^{t-|S|} (1-delta)^{|S|} / (1 - delta^t).
std::vector<Seq> transmit_remnant(const Seq& z, const ChannelConfig& cfg, Rng& rng);

/// Deletion channel with parameter delta^t followed by the remnant channel.
std::vector<Seq> transmit_cascade(const Seq& x, const ChannelConfig& cfg, Rng& rng);

/// Remnant subset law indexed by bitmask; entry 0 is zero.
std::vector<double> remnant_subset_probabilities(int t, double delta);

/// Pr(Y = y | X = x) = binomial(x, y) delta^{|x|-|y|} (1-delta)^{|y|}.
double likelihood(const Seq& x, const Seq& y, double delta);

/// Exact probability of the same event for rational delta.
Rational likelihood_exact(const Seq& x, const Seq& y, const Rational& delta);

enum class JointMode { independent, cascade };

using TraceTuple = std::vector<Seq>;
using JointDistribution = std::map<TraceTuple, Rational>;

/// Full joint law of the t traces by exhaustive enumeration of deletion
/// patterns (independent) or of (first-stage survivors, remnant pattern)
/// pairs (cascade). Guard: (2^t)^|x| <= 2^24.
JointDistribution joint_trace_distribution(const Seq& x, int t, const Rational& delta, JointMode mode);

} // namespace tracerec
