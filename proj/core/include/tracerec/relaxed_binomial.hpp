#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tracerec/seq.hpp"

namespace tracerec {

/// Per-position Bernoulli parameters p in [0,1]^n.
class Priors {
public:
    Priors() = default;
    /// Throws InvalidArgument if any entry is outside [0,1] or NaN.
    explicit Priors(std::vector<double> probs);

    static Priors uniform(std::size_t n, double value = 0.5);
    /// The lattice point equal to a binary sequence.
    static Priors from_seq(const Seq& x);

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const noexcept { return probs_[i]; }
    std::span<const double> values() const noexcept { return probs_; }

    Priors with(std::size_t i, double value) const;
    Priors complemented() const;
    bool is_lattice() const noexcept;
    /// Hard decision x_i = 1 iff p_i >= 0.5.
    Seq threshold() const;

private:
    std::vector<double> probs_;
};

/// Prefix and suffix tables of the relaxed binomial coefficient.
///
///   forward(k, j) = F(p[0:k), v[0:j))
///   reverse(k, j) = F(p[k:n), v[j:m))
///
/// Rows are stored in long double, rescaled with a per-row natural-log scale
/// so that long inputs do not overflow or underflow; rows that stay within
/// [1e-150, 1e150] are never rescaled, so small instances hold the plain DP values.
class FTables {
public:
    FTables(std::size_t n, std::size_t m);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }

    /// Unscaled table values (may overflow to inf or underflow to 0 for very long inputs).
    double forward(std::size_t k, std::size_t j) const;
    double reverse(std::size_t k, std::size_t j) const;

    long double forward_scaled(std::size_t k, std::size_t j) const noexcept { return fwd_[k * (m_ + 1) + j]; }
    long double reverse_scaled(std::size_t k, std::size_t j) const noexcept { return rev_[k * (m_ + 1) + j]; }
    double forward_log_scale(std::size_t k) const noexcept { return fwd_scale_[k]; }
    double reverse_log_scale(std::size_t k) const noexcept { return rev_scale_[k]; }

    /// F(p, v); equal to forward(n, m) and reverse(0, 0).
    double value() const;
    /// log F(p, v); -inf when F = 0.
    double log_value() const;

private:
    friend FTables f_tables(const Priors& p, const Seq& v);

    std::size_t n_;
    std::size_t m_;
    std::vector<long double> fwd_;
    std::vector<long double> rev_;
    std::vector<double> fwd_scale_;
    std::vector<double> rev_scale_;
};

/// F(p, v) = E_{Z~p} binomial(Z, v), in O(nm).
double f_value(const Priors& p, const Seq& v);

FTables f_tables(const Priors& p, const Seq& v);

/// dF/dp_i for every i, from the tables. A zero vector when |v| = 0.
std::vector<double> f_gradient(const Priors& p, const Seq& v);
std::vector<double> f_gradient(const FTables& tables, const Seq& v);

/// d log F / dp_i = (dF/dp_i) / F, evaluated in scaled arithmetic.
/// Throws ZeroProbability when F = 0.
std::vector<double> f_log_gradient(const FTables& tables, const Seq& v);

/// F(p, v) as an affine function of one coordinate:
///   F = base + p_i * coef1 + (1 - p_i) * coef0
/// where base = F(p without coordinate i, v).
struct Decomposition {
    double base = 0.0;
    double coef1 = 0.0;
    double coef0 = 0.0;

    double at(double pi) const noexcept { return base + pi * coef1 + (1.0 - pi) * coef0; }
};

Decomposition f_decompose(const Priors& p, const Seq& v, std::size_t i);
Decomposition f_decompose(const FTables& tables, const Priors& p, const Seq& v, std::size_t i);

} // namespace tracerec
