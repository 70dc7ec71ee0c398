#include "tracerec/channel.hpp"

#include <bit>
#include <cmath>

#include "tracerec/error.hpp"

namespace tracerec {

namespace {

Rational rational_pow(const Rational& base, unsigned long e) {
    Rational out(1);
    for (unsigned long k = 0; k < e; ++k) out *= base;
    return out;
}

// Odometer over `digits` positions each in [0, radix); calls fn(digits) for every combination.
template <class Fn>
void for_each_word(std::size_t positions, std::uint32_t radix, Fn&& fn) {
    std::vector<std::uint32_t> digits(positions, 0);
    while (true) {
        fn(digits);
        std::size_t k = 0;
        while (k < positions && ++digits[k] == radix) {
            digits[k] = 0;
            ++k;
        }
        if (k == positions) return;
    }
}

} // namespace

Seq Rng::random_bits(std::size_t n) {
    std::vector<Symbol> out(n);
    for (auto& s : out) s = static_cast<Symbol>(engine_() >> 63);
    return Seq(std::move(out));
}

ChannelConfig::ChannelConfig(double delta, int t, std::uint64_t seed) : delta_(delta), t_(t), seed_(seed) {
    if (!(delta >= 0.0 && delta < 1.0)) throw InvalidArgument("deletion probability must lie in [0,1)");
    if (t < 1) throw InvalidArgument("trace count must be at least 1");
    if (t > 31) throw InvalidArgument("trace count above 31 is not supported");
}

std::vector<Seq> apply_pattern(const Seq& x, const DeletionPattern& pattern, int t) {
    if (pattern.kept.size() != x.size()) throw InvalidArgument("pattern length differs from input length");
    std::vector<Seq> traces(static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (int l = 0; l < t; ++l) {
            if (pattern.kept[i] >> l & 1u) traces[static_cast<std::size_t>(l)].push_back(x[i]);
        }
    }
    return traces;
}

Seq transmit(const Seq& x, double delta, Rng& rng) {
    if (!(delta >= 0.0 && delta < 1.0)) throw InvalidArgument("deletion probability must lie in [0,1)");
    Seq y;
    for (Symbol s : x) {
        if (!rng.bernoulli(delta)) y.push_back(s);
    }
    return y;
}

std::vector<Seq> transmit_t(const Seq& x, const ChannelConfig& cfg, Rng& rng) {
    std::vector<Seq> traces;
    traces.reserve(static_cast<std::size_t>(cfg.t()));
    for (int l = 0; l < cfg.t(); ++l) traces.push_back(transmit(x, cfg.delta(), rng));
    return traces;
}

std::vector<Seq> transmit_remnant(const Seq& z, const ChannelConfig& cfg, Rng& rng) {
    const int t = cfg.t();
    DeletionPattern pattern;
    pattern.kept.resize(z.size());
    for (auto& mask : pattern.kept) {
        // Independent per-trace survival conditioned on at least one survivor.
        do {
            mask = 0;
            for (int l = 0; l < t; ++l) {
                if (!rng.bernoulli(cfg.delta())) mask |= 1u << l;
            }
        } while (mask == 0);
    }
    return apply_pattern(z, pattern, t);
}

std::vector<Seq> transmit_cascade(const Seq& x, const ChannelConfig& cfg, Rng& rng) {
    const double all_deleted = std::pow(cfg.delta(), cfg.t());
    Seq z = transmit(x, all_deleted, rng);
    return transmit_remnant(z, cfg, rng);
}

std::vector<double> remnant_subset_probabilities(int t, double delta) {
    ChannelConfig cfg(delta, t);
    const std::uint32_t masks = 1u << t;
    const double norm = 1.0 - std::pow(delta, t);
    std::vector<double> out(masks, 0.0);
    for (std::uint32_t s = 1; s < masks; ++s) {
        const int k = std::popcount(s);
        out[s] = std::pow(delta, t - k) * std::pow(1.0 - delta, k) / norm;
    }
    return out;
}

double likelihood(const Seq& x, const Seq& y, double delta) {
    if (!(delta >= 0.0 && delta < 1.0)) throw InvalidArgument("deletion probability must lie in [0,1)");
    if (y.size() > x.size()) return 0.0;
    const double count = binomial_coeff(x, y).get_d();
    if (count == 0.0) return 0.0;
    const auto deleted = static_cast<double>(x.size() - y.size());
    const auto kept = static_cast<double>(y.size());
    return count * std::pow(delta, deleted) * std::pow(1.0 - delta, kept);
}

Rational likelihood_exact(const Seq& x, const Seq& y, const Rational& delta) {
    if (y.size() > x.size()) return Rational(0);
    Rational out(binomial_coeff(x, y));
    out *= rational_pow(delta, x.size() - y.size());
    out *= rational_pow(Rational(1) - delta, y.size());
    return out;
}

JointDistribution joint_trace_distribution(const Seq& x, int t, const Rational& delta, JointMode mode) {
    if (t < 1) throw InvalidArgument("trace count must be at least 1");
    if (delta < 0 || delta >= 1) throw InvalidArgument("deletion probability must lie in [0,1)");
    if (static_cast<std::size_t>(t) * x.size() > 24) {
        throw GuardExceeded("joint_trace_distribution: (2^t)^|x| exceeds 2^24 patterns");
    }
    const Rational keep = Rational(1) - delta;
    const std::uint32_t masks = 1u << t;

    // Pr(symbol survives in exactly the traces of mask s), for both channel laws.
    std::vector<Rational> independent_law(masks);
    for (std::uint32_t s = 0; s < masks; ++s) {
        const auto k = static_cast<unsigned long>(std::popcount(s));
        independent_law[s] = rational_pow(delta, static_cast<unsigned long>(t) - k) * rational_pow(keep, k);
    }
    const Rational all_deleted = rational_pow(delta, static_cast<unsigned long>(t));
    const Rational stage1_keep = Rational(1) - all_deleted;

    JointDistribution out;
    if (mode == JointMode::independent) {
        for_each_word(x.size(), masks, [&](const std::vector<std::uint32_t>& digits) {
            Rational pr(1);
            for (auto s : digits) pr *= independent_law[s];
            if (pr == 0) return;
            DeletionPattern pattern{digits};
            out[apply_pattern(x, pattern, t)] += pr;
        });
        return out;
    }

    // Cascade: first stage erases a symbol from all traces w.p. delta^t; the
    // remnant stage then spreads each survivor over a nonempty subset.
    std::vector<Rational> remnant_law(masks, Rational(0));
    if (stage1_keep != 0) {
        for (std::uint32_t s = 1; s < masks; ++s) remnant_law[s] = independent_law[s] / stage1_keep;
    }
    const std::size_t n = x.size();
    for (std::uint32_t survivors = 0; survivors < (1u << n); ++survivors) {
        Seq z;
        for (std::size_t i = 0; i < n; ++i) {
            if (survivors >> i & 1u) z.push_back(x[i]);
        }
        const auto kept = static_cast<unsigned long>(z.size());
        const Rational stage1 = rational_pow(all_deleted, n - kept) * rational_pow(stage1_keep, kept);
        if (stage1 == 0) continue;
        for_each_word(z.size(), masks - 1, [&](const std::vector<std::uint32_t>& digits) {
            Rational pr = stage1;
            DeletionPattern pattern;
            pattern.kept.reserve(digits.size());
            for (auto d : digits) {
                pattern.kept.push_back(d + 1);
                pr *= remnant_law[d + 1];
            }
            if (pr == 0) return;
            out[apply_pattern(z, pattern, t)] += pr;
        });
    }
    return out;
}

} // namespace tracerec
