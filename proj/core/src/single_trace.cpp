#include "tracerec/single_trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tracerec/error.hpp"

namespace tracerec {

Seq threshold(std::span<const double> q) {
    std::vector<Symbol> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = q[i] >= 0.5 ? 1 : 0;
    return Seq(std::move(out));
}

PosteriorVec posterior_single(const Priors& p, const Seq& y) {
    const std::size_t n = p.size();
    if (y.size() > n) throw InvalidArgument("posterior_single: trace longer than input");
    if (!y.is_binary()) throw InvalidArgument("posterior_single: trace must be binary");
    PosteriorVec q(p.values().begin(), p.values().end());
    if (y.empty()) return q;

    const FTables t = f_tables(p, y);
    const double log_f = t.log_value();
    if (!std::isfinite(log_f)) throw ZeroProbability("posterior_single: trace impossible under priors");
    for (std::size_t i = 0; i < n; ++i) {
        long double c1 = 0.0L;
        long double c0 = 0.0L;
        for (std::size_t k = 0; k < y.size(); ++k) {
            const long double term = t.forward_scaled(i, k) * t.reverse_scaled(i + 1, k + 1);
            (y[k] ? c1 : c0) += term;
        }
        const long double diff = c1 - c0;
        const double r = diff == 0.0L ? 0.0
                                      : static_cast<double>(diff * std::exp(static_cast<long double>(
                                                                       t.forward_log_scale(i) + t.reverse_log_scale(i + 1) - log_f)));
        // q_i = p_i (F_{-i} + coef1) / F with F_{-i} = F - p_i coef1 - (1 - p_i) coef0.
        const double pi = p[i];
        q[i] = std::clamp(pi * (1.0 + (1.0 - pi) * r), 0.0, 1.0);
    }
    return q;
}

MlResult ml_exhaustive(std::size_t n, const Seq& y) {
    if (n > kMlExhaustiveMaxN) throw GuardExceeded("ml_exhaustive: n above 24");
    if (y.size() > n) throw InvalidArgument("ml_exhaustive: trace longer than input");
    const std::size_t m = y.size();
    // rows[d][j] = binomial(x[0:d), y[0:j)) along the current DFS branch.
    std::vector<std::vector<std::uint64_t>> rows(n + 1, std::vector<std::uint64_t>(m + 1, 0));
    rows[0][0] = 1;
    std::vector<Symbol> x(n, 0);
    std::uint64_t best = 0;
    std::vector<Seq> argmax;

    auto descend = [&](auto&& self, std::size_t d) -> void {
        if (d == n) {
            const std::uint64_t v = rows[n][m];
            if (v > best) {
                best = v;
                argmax.clear();
            }
            if (v == best) argmax.emplace_back(x);
            return;
        }
        // Prefixes that can no longer embed the rest of y cannot score.
        if (m > 0 && rows[d][m] == 0) {
            std::size_t reach = 0;
            for (std::size_t j = 0; j <= m; ++j) {
                if (rows[d][j] != 0) reach = j;
            }
            if (m - reach > n - d) return;
        }
        const auto& prev = rows[d];
        auto& cur = rows[d + 1];
        for (Symbol s : {Symbol{0}, Symbol{1}}) {
            x[d] = s;
            cur[0] = prev[0];
            for (std::size_t j = 1; j <= m; ++j) cur[j] = prev[j] + (y[j - 1] == s ? prev[j - 1] : 0);
            self(self, d + 1);
        }
    };
    descend(descend, 0);
    return {std::move(argmax), BigCount(static_cast<unsigned long>(best))};
}

void GradAscentConfig::validate() const {
    if (!(epsilon > 0.0)) throw InvalidArgument("gradient ascent: epsilon must be positive");
    if (max_iters < 1) throw InvalidArgument("gradient ascent: max_iters must be at least 1");
    if (!(conv_rel_tol >= 0.0)) throw InvalidArgument("gradient ascent: conv_rel_tol must be nonnegative");
}

namespace {

constexpr int kMaxHalvings = 40;

double log_sum_exp(std::span<const double> xs) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double x : xs) mx = std::max(mx, x);
    if (!std::isfinite(mx)) return mx;
    double acc = 0.0;
    for (double x : xs) acc += std::exp(x - mx);
    return mx + std::log(acc);
}

} // namespace

GradAscentResult grad_ascent(std::size_t n, std::span<const Seq> traces, const GradAscentConfig& cfg,
                             const std::optional<Priors>& p0) {
    cfg.validate();
    std::vector<const Seq*> active;
    for (const auto& y : traces) {
        if (y.size() > n) throw InvalidArgument("gradient ascent: trace longer than input");
        if (!y.is_binary()) throw InvalidArgument("gradient ascent: trace must be binary");
        if (!y.empty()) active.push_back(&y);
    }
    Priors p = p0 ? *p0 : Priors::uniform(n);
    if (p.size() != n) throw InvalidArgument("gradient ascent: initial point has wrong length");

    GradAscentResult result{p, p.threshold(), 0, active.empty()};
    if (active.empty()) return result;

    std::vector<double> logs(active.size());
    std::vector<double> step(n);
    std::vector<FTables> tables;
    tables.reserve(active.size());
    for (const Seq* y : active) tables.push_back(f_tables(p, *y));
    for (std::size_t j = 0; j < active.size(); ++j) logs[j] = tables[j].log_value();
    double objective = log_sum_exp(logs);
    if (!std::isfinite(objective)) throw ZeroProbability("gradient ascent: traces impossible under initial point");

    for (int it = 1; it <= cfg.max_iters; ++it) {
        std::fill(step.begin(), step.end(), 0.0);
        for (std::size_t j = 0; j < active.size(); ++j) {
            if (!std::isfinite(logs[j])) continue;
            const auto g = f_log_gradient(tables[j], *active[j]);
            for (std::size_t i = 0; i < n; ++i) step[i] += g[i];
        }
        // Projection can land on a face where some trace has F = 0 and the update is
        // undefined; such a step is halved until every trace stays possible.
        std::optional<Priors> candidate;
        std::vector<FTables> next_tables;
        std::vector<double> next_logs(active.size());
        double scale = cfg.epsilon / static_cast<double>(active.size());
        for (int halving = 0; halving <= kMaxHalvings && !candidate; ++halving, scale *= 0.5) {
            std::vector<double> next(n);
            for (std::size_t i = 0; i < n; ++i) next[i] = std::clamp(p[i] + scale * step[i], 0.0, 1.0);
            Priors trial(std::move(next));
            next_tables.clear();
            bool feasible = true;
            for (std::size_t j = 0; j < active.size() && feasible; ++j) {
                next_tables.push_back(f_tables(trial, *active[j]));
                next_logs[j] = next_tables.back().log_value();
                feasible = std::isfinite(next_logs[j]);
            }
            if (feasible) candidate = std::move(trial);
        }
        result.iterations = it;
        if (!candidate) break;

        const double next_objective = log_sum_exp(next_logs);
        const double rel = std::abs(std::expm1(next_objective - objective));
        p = std::move(*candidate);
        tables = std::move(next_tables);
        logs = std::move(next_logs);
        objective = next_objective;
        if (rel < cfg.conv_rel_tol) {
            result.converged = true;
            break;
        }
    }
    result.p = p;
    result.estimate = p.threshold();
    return result;
}

Seq grad_ascent_single(std::size_t n, const Seq& y, const GradAscentConfig& cfg, const std::optional<Priors>& p0) {
    return grad_ascent(n, std::span<const Seq>(&y, 1), cfg, p0).estimate;
}

CoordinateSwitchResult coordinate_switch(const Priors& p0, const Seq& y) {
    const std::size_t n = p0.size();
    if (y.size() > n) throw InvalidArgument("coordinate_switch: trace longer than input");
    if (!y.is_binary()) throw InvalidArgument("coordinate_switch: trace must be binary");

    CoordinateSwitchResult result;
    std::vector<double> p(p0.values().begin(), p0.values().end());
    double current = f_value(p0, y);
    result.history.push_back(current);
    std::set<std::vector<double>> visited;
    if (p0.is_lattice()) visited.insert(p);

    while (true) {
        ++result.rounds;
        std::vector<double> score(n, 0.0);
        if (!y.empty()) {
            const auto grad = f_gradient(Priors(p), y);
            for (std::size_t i = 0; i < n; ++i) score[i] = std::abs(grad[i]);
        }
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });

        for (std::size_t i : order) {
            double diff = 0.0;
            if (!y.empty()) {
                const Priors cur(p);
                const Decomposition d = f_decompose(cur, y, i);
                diff = d.coef1 - d.coef0;
            }
            p[i] = diff >= 0.0 ? 1.0 : 0.0;
            const double next = y.empty() ? 1.0 : f_value(Priors(p), y);
            if (next < current - 1e-9 * std::max(1.0, std::abs(current))) {
                throw std::logic_error("coordinate_switch: objective decreased");
            }
            current = next;
            result.history.push_back(current);
        }
        if (!visited.insert(p).second) break;
    }
    result.estimate = Priors(p).threshold();
    result.objective = current;
    return result;
}

} // namespace tracerec
