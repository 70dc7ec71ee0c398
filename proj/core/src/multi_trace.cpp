#include "tracerec/multi_trace.hpp"

#include <algorithm>
#include <stdexcept>

#include "tracerec/error.hpp"

namespace tracerec {

SmapWeights::SmapWeights(std::size_t n) : n_(n), pow2_(n + 2), binom_((n + 1) * (n + 1), 0), zero_(0) {
    pow2_[0] = 1;
    for (std::size_t e = 1; e < pow2_.size(); ++e) pow2_[e] = pow2_[e - 1] * 2;
    for (std::size_t a = 0; a <= n; ++a) {
        binom_[a * (n + 1)] = 1;
        for (std::size_t b = 1; b <= a; ++b) {
            binom_[a * (n + 1) + b] = binom_[(a - 1) * (n + 1) + b - 1] + (b < a ? binom_[(a - 1) * (n + 1) + b] : 0);
        }
    }
}

const BigCount& SmapWeights::binom(std::size_t a, std::ptrdiff_t b) const {
    if (b < 0 || static_cast<std::size_t>(b) > a || a > n_) return zero_;
    return binom_[a * (n_ + 1) + static_cast<std::size_t>(b)];
}

BigCount SmapWeights::w_half(std::size_t k) const {
    if (k >= n_) return 0;
    return pow2_[n_ - k - 1] * binom(n_ - 1, static_cast<std::ptrdiff_t>(k));
}

BigCount SmapWeights::w_pos(std::size_t i, std::size_t j, std::size_t k) const {
    if (i < 1 || i > n_ || j < 1 || j > k || k > n_) return 0;
    const auto jj = static_cast<std::ptrdiff_t>(j);
    const auto kk = static_cast<std::ptrdiff_t>(k);
    return pow2_[n_ - k] * binom(i - 1, jj - 1) * binom(n_ - i, kk - jj);
}

BigCount SmapWeights::w_den(std::size_t k) const {
    if (k > n_) return 0;
    return pow2_[n_ - k] * binom(n_, static_cast<std::ptrdiff_t>(k));
}

BigCount fixed_symbol_sum(std::size_t n, std::size_t i, Symbol a, const Seq& g) {
    if (i < 1 || i > n) throw InvalidArgument("fixed_symbol_sum: index out of range");
    const std::size_t k = g.size();
    if (k > n) return 0;
    SmapWeights w(n);
    BigCount total = w.w_half(k);
    for (std::size_t j = 1; j <= k; ++j) {
        if (g[j - 1] == a) total += w.w_pos(i, j, k);
    }
    return total;
}

namespace {

constexpr double kPriorFloor = 1e-12;

void check_traces(std::size_t n, std::span<const Seq> traces, const char* who) {
    if (traces.empty()) throw InvalidArgument(std::string(who) + ": at least one trace required");
    for (const auto& y : traces) {
        if (y.size() > n) throw InvalidArgument(std::string(who) + ": trace longer than input");
        if (!y.is_binary()) throw InvalidArgument(std::string(who) + ": traces must be binary");
    }
}

double ratio(const BigCount& num, const BigCount& den) {
    Rational r(num, den);
    r.canonicalize();
    return r.get_d();
}

} // namespace

SmapResult smap_exact(std::size_t n, std::span<const Seq> traces) {
    check_traces(n, traces, "smap_exact");
    SmapResult out;
    if (n == 0) return out;

    const EditGraph g(std::vector<Seq>(traces.begin(), traces.end()));
    const Potentials fwd = forward_potentials(g, n, Trim::to_budget);
    const Potentials rev = reverse_potentials(g, n, Trim::to_budget);
    const MarkedCounts m = marked_path_counts(g, fwd, rev, n, 1);
    const PathPoly& paths = fwd.at(g.destination());
    const SmapWeights w(n);

    BigCount den = 0;
    BigCount half = 0;
    for (std::size_t k = paths.low(); k < paths.end() && k <= n; ++k) {
        const BigCount& pk = paths.stored(k);
        mpz_addmul(den.get_mpz_t(), w.w_den(k).get_mpz_t(), pk.get_mpz_t());
        mpz_addmul(half.get_mpz_t(), w.w_half(k).get_mpz_t(), pk.get_mpz_t());
    }
    if (den == 0) throw std::logic_error("smap_exact: no covering sequence of length <= n");

    // a[j][k] = 2^{n-k} M(j, k); only k in the path-length support matters.
    const std::size_t k_lo = paths.low();
    const std::size_t k_hi = std::min(paths.end(), n + 1);
    std::vector<std::vector<BigCount>> a(n + 1);
    for (std::size_t j = 1; j < k_hi; ++j) {
        a[j].assign(k_hi, BigCount(0));
        for (std::size_t k = std::max(j, k_lo); k < k_hi; ++k) {
            const BigCount& mk = m.at(j, k);
            if (mk != 0) mpz_mul(a[j][k].get_mpz_t(), mk.get_mpz_t(), w.pow2(n - k).get_mpz_t());
        }
    }

    out.q.resize(n);
    std::vector<Symbol> est(n);
    BigCount inner;
    BigCount num;
    for (std::size_t i = 1; i <= n; ++i) {
        num = half;
        for (std::size_t j = 1; j < k_hi && j <= i; ++j) {
            const BigCount& left = w.binom(i - 1, static_cast<std::ptrdiff_t>(j) - 1);
            inner = 0;
            for (std::size_t k = std::max(j, k_lo); k < k_hi; ++k) {
                const BigCount& ajk = a[j][k];
                if (ajk == 0) continue;
                const BigCount& right = w.binom(n - i, static_cast<std::ptrdiff_t>(k - j));
                if (right == 0) continue;
                mpz_addmul(inner.get_mpz_t(), right.get_mpz_t(), ajk.get_mpz_t());
            }
            if (inner != 0) mpz_addmul(num.get_mpz_t(), left.get_mpz_t(), inner.get_mpz_t());
        }
        out.q[i - 1] = ratio(num, den);
        est[i - 1] = 2 * num >= den ? 1 : 0;
    }
    out.estimate = Seq(std::move(est));
    return out;
}

PosteriorVec remnant_posterior(std::size_t n, std::span<const Seq> traces) {
    check_traces(n, traces, "remnant_posterior");
    if (n == 0) return {};
    const EditGraph g(std::vector<Seq>(traces.begin(), traces.end()));
    const Potentials fwd = forward_potentials(g, n, Trim::to_budget);
    const Potentials rev = reverse_potentials(g, n, Trim::to_budget);
    const BigCount total = fwd.at(g.destination()).coefficient(n);
    if (total == 0) throw InvalidArgument("remnant_posterior: no covering sequence of length n");
    const MarkedCounts m = marked_path_counts(g, fwd, rev, n, 1);
    PosteriorVec q(n);
    for (std::size_t i = 1; i <= n; ++i) q[i - 1] = ratio(m.at(i, n), total);
    return q;
}

Seq smap_sequential(std::size_t n, std::span<const Seq> traces) {
    check_traces(n, traces, "smap_sequential");
    Priors p = Priors::uniform(n);
    for (const auto& y : traces) {
        if (y.empty()) continue;
        PosteriorVec q = posterior_single(p, y);
        // Rounding can saturate a posterior at exactly 0 or 1, which would make every later trace impossible.
        for (double& v : q) v = std::clamp(v, kPriorFloor, 1.0 - kPriorFloor);
        p = Priors(std::move(q));
    }
    return p.threshold();
}

Seq independent_combination(std::size_t n, std::span<const Seq> traces) {
    check_traces(n, traces, "independent_combination");
    std::vector<double> ones(n, 1.0);
    std::vector<double> zeros(n, 1.0);
    const Priors uniform = Priors::uniform(n);
    for (const auto& y : traces) {
        const PosteriorVec q = posterior_single(uniform, y);
        for (std::size_t i = 0; i < n; ++i) {
            ones[i] *= q[i];
            zeros[i] *= 1.0 - q[i];
        }
    }
    std::vector<Symbol> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = ones[i] >= zeros[i] ? 1 : 0;
    return Seq(std::move(out));
}

Seq grad_ascent_traces(std::size_t n, std::span<const Seq> traces, const GradAscentConfig& cfg,
                       const std::optional<Priors>& p0) {
    check_traces(n, traces, "grad_ascent_traces");
    return grad_ascent(n, traces, cfg, p0).estimate;
}

MlResult ml_exhaustive_traces(std::size_t n, std::span<const Seq> traces) {
    if (n > kMlTracesMaxN) throw GuardExceeded("ml_exhaustive_traces: n above 20");
    check_traces(n, traces, "ml_exhaustive_traces");
    const std::size_t t = traces.size();
    // rows[d][l] holds binomial(x[0:d), y^l[0:j)) for j = 0..|y^l|.
    std::vector<std::vector<std::vector<std::uint64_t>>> rows(n + 1);
    for (auto& level : rows) {
        level.resize(t);
        for (std::size_t l = 0; l < t; ++l) level[l].assign(traces[l].size() + 1, 0);
    }
    for (std::size_t l = 0; l < t; ++l) rows[0][l][0] = 1;

    std::vector<Symbol> x(n, 0);
    BigCount best = 0;
    BigCount value;
    std::vector<Seq> argmax;
    auto descend = [&](auto&& self, std::size_t d) -> void {
        if (d == n) {
            value = 1;
            for (std::size_t l = 0; l < t; ++l) value *= static_cast<unsigned long>(rows[n][l].back());
            if (value > best) {
                best = value;
                argmax.clear();
            }
            if (value == best && best != 0) argmax.emplace_back(x);
            return;
        }
        for (Symbol s : {Symbol{0}, Symbol{1}}) {
            x[d] = s;
            for (std::size_t l = 0; l < t; ++l) {
                const auto& prev = rows[d][l];
                auto& cur = rows[d + 1][l];
                const Seq& y = traces[l];
                cur[0] = prev[0];
                for (std::size_t j = 1; j < cur.size(); ++j) cur[j] = prev[j] + (y[j - 1] == s ? prev[j - 1] : 0);
            }
            self(self, d + 1);
        }
    };
    descend(descend, 0);
    return {std::move(argmax), best};
}

} // namespace tracerec
