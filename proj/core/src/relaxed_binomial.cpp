#include "tracerec/relaxed_binomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tracerec/error.hpp"

namespace tracerec {

namespace {

constexpr long double kRescaleHigh = 1e150L;
constexpr long double kRescaleLow = 1e-150L;

inline long double emit_weight(double p, Symbol s) noexcept { return s ? p : 1.0L - p; }

void require_binary(const Seq& v) {
    if (!v.is_binary()) throw InvalidArgument("relaxed binomial requires a binary sequence");
}

// Rescales one row in place when its magnitude drifts out of range; returns the log factor removed.
double normalize_row(std::span<long double> row) {
    long double mx = 0.0L;
    for (long double x : row) mx = std::max(mx, x);
    if (mx == 0.0L || (mx <= kRescaleHigh && mx >= kRescaleLow)) return 0.0;
    const long double inv = 1.0L / mx;
    for (long double& x : row) x *= inv;
    return static_cast<double>(std::log(mx));
}

} // namespace

Priors::Priors(std::vector<double> probs) : probs_(std::move(probs)) {
    for (double x : probs_) {
        if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("prior outside [0,1]");
    }
}

Priors Priors::uniform(std::size_t n, double value) { return Priors(std::vector<double>(n, value)); }

Priors Priors::from_seq(const Seq& x) {
    require_binary(x);
    std::vector<double> p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) p[i] = x[i];
    return Priors(std::move(p));
}

Priors Priors::with(std::size_t i, double value) const { return Priors(substitute(probs_, i, value)); }

Priors Priors::complemented() const {
    std::vector<double> out(probs_);
    for (double& x : out) x = 1.0 - x;
    return Priors(std::move(out));
}

bool Priors::is_lattice() const noexcept {
    return std::all_of(probs_.begin(), probs_.end(), [](double x) { return x == 0.0 || x == 1.0; });
}

Seq Priors::threshold() const {
    std::vector<Symbol> out(probs_.size());
    for (std::size_t i = 0; i < probs_.size(); ++i) out[i] = probs_[i] >= 0.5 ? 1 : 0;
    return Seq(std::move(out));
}

FTables::FTables(std::size_t n, std::size_t m)
    : n_(n), m_(m), fwd_((n + 1) * (m + 1), 0.0), rev_((n + 1) * (m + 1), 0.0),
      fwd_scale_(n + 1, 0.0), rev_scale_(n + 1, 0.0) {}

double FTables::forward(std::size_t k, std::size_t j) const {
    const long double s = forward_scaled(k, j);
    return s == 0.0L ? 0.0 : static_cast<double>(s * std::exp(static_cast<long double>(fwd_scale_[k])));
}

double FTables::reverse(std::size_t k, std::size_t j) const {
    const long double s = reverse_scaled(k, j);
    return s == 0.0L ? 0.0 : static_cast<double>(s * std::exp(static_cast<long double>(rev_scale_[k])));
}

double FTables::value() const { return forward(n_, m_); }

double FTables::log_value() const {
    const long double s = forward_scaled(n_, m_);
    if (s <= 0.0L) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(std::log(s)) + fwd_scale_[n_];
}

FTables f_tables(const Priors& p, const Seq& v) {
    require_binary(v);
    const std::size_t n = p.size();
    const std::size_t m = v.size();
    FTables t(n, m);
    const std::size_t w = m + 1;

    // forward: G(k, j) = G(k-1, j) + w(p_k, v_j) G(k-1, j-1), G(k, 0) = 1.
    t.fwd_[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const long double* prev = &t.fwd_[(k - 1) * w];
        long double* cur = &t.fwd_[k * w];
        cur[0] = prev[0];
        const std::size_t hi = std::min(k, m);
        for (std::size_t j = 1; j <= hi; ++j) {
            cur[j] = prev[j] + emit_weight(p[k - 1], v[j - 1]) * prev[j - 1];
        }
        t.fwd_scale_[k] = t.fwd_scale_[k - 1] + normalize_row({cur, w});
    }

    // reverse: G(k, j) = G(k+1, j) + w(p_{k+1}, v_{j+1}) G(k+1, j+1), G(k, m) = 1.
    t.rev_[n * w + m] = 1.0;
    for (std::size_t k = n; k-- > 0;) {
        const long double* next = &t.rev_[(k + 1) * w];
        long double* cur = &t.rev_[k * w];
        cur[m] = next[m];
        const std::size_t remaining = n - k;
        const std::size_t lo = m > remaining ? m - remaining : 0;
        for (std::size_t j = lo; j < m; ++j) {
            cur[j] = next[j] + emit_weight(p[k], v[j]) * next[j + 1];
        }
        t.rev_scale_[k] = t.rev_scale_[k + 1] + normalize_row({cur, w});
    }
    return t;
}

double f_value(const Priors& p, const Seq& v) {
    require_binary(v);
    const std::size_t n = p.size();
    const std::size_t m = v.size();
    if (m == 0) return 1.0;
    if (m > n) return 0.0;
    std::vector<long double> row(m + 1, 0.0L);
    row[0] = 1.0L;
    double log_scale = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t hi = std::min(m, k + 1);
        for (std::size_t j = hi; j >= 1; --j) row[j] += emit_weight(p[k], v[j - 1]) * row[j - 1];
        log_scale += normalize_row(row);
    }
    return static_cast<double>(log_scale == 0.0 ? row[m] : row[m] * std::exp(static_cast<long double>(log_scale)));
}

Decomposition f_decompose(const FTables& t, const Priors& p, const Seq& v, std::size_t i) {
    if (i >= t.n()) throw InvalidArgument("f_decompose: index out of range");
    if (v.empty()) throw InvalidArgument("f_decompose: requires |v| >= 1");
    long double c1 = 0.0L;
    long double c0 = 0.0L;
    for (std::size_t k = 0; k < t.m(); ++k) {
        const long double term = t.forward_scaled(i, k) * t.reverse_scaled(i + 1, k + 1);
        (v[k] ? c1 : c0) += term;
    }
    const long double scale = std::exp(static_cast<long double>(t.forward_log_scale(i) + t.reverse_log_scale(i + 1)));
    Decomposition d;
    d.coef1 = static_cast<double>(c1 * scale);
    d.coef0 = static_cast<double>(c0 * scale);
    d.base = t.value() - p[i] * d.coef1 - (1.0 - p[i]) * d.coef0;
    return d;
}

Decomposition f_decompose(const Priors& p, const Seq& v, std::size_t i) {
    if (i >= p.size()) throw InvalidArgument("f_decompose: index out of range");
    return f_decompose(f_tables(p, v), p, v, i);
}

std::vector<double> f_gradient(const FTables& t, const Seq& v) {
    std::vector<double> grad(t.n(), 0.0);
    if (v.empty()) return grad;
    for (std::size_t i = 0; i < t.n(); ++i) {
        long double acc = 0.0L;
        for (std::size_t k = 0; k < t.m(); ++k) {
            const long double term = t.forward_scaled(i, k) * t.reverse_scaled(i + 1, k + 1);
            acc += v[k] ? term : -term;
        }
        grad[i] = acc == 0.0L ? 0.0
                              : static_cast<double>(
                                    acc * std::exp(static_cast<long double>(t.forward_log_scale(i) + t.reverse_log_scale(i + 1))));
    }
    return grad;
}

std::vector<double> f_gradient(const Priors& p, const Seq& v) { return f_gradient(f_tables(p, v), v); }

std::vector<double> f_log_gradient(const FTables& t, const Seq& v) {
    std::vector<double> grad(t.n(), 0.0);
    if (v.empty()) return grad;
    const double log_f = t.log_value();
    if (!std::isfinite(log_f)) throw ZeroProbability("F(p, v) = 0: trace impossible under priors");
    for (std::size_t i = 0; i < t.n(); ++i) {
        long double acc = 0.0L;
        for (std::size_t k = 0; k < t.m(); ++k) {
            const long double term = t.forward_scaled(i, k) * t.reverse_scaled(i + 1, k + 1);
            acc += v[k] ? term : -term;
        }
        grad[i] = acc == 0.0L ? 0.0
                              : static_cast<double>(acc * std::exp(static_cast<long double>(
                                                              t.forward_log_scale(i) + t.reverse_log_scale(i + 1) - log_f)));
    }
    return grad;
}

} // namespace tracerec
