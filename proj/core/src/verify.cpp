#include "tracerec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tracerec/channel.hpp"
#include "tracerec/edit_graph.hpp"
#include "tracerec/error.hpp"
#include "tracerec/infiltration.hpp"
#include "tracerec/multi_trace.hpp"
#include "tracerec/oracle.hpp"
#include "tracerec/relaxed_binomial.hpp"
#include "tracerec/single_trace.hpp"

namespace tracerec {

namespace {

Seq random_seq(Rng& rng, std::size_t max_len) {
    const auto len = static_cast<std::size_t>(rng.engine()() % (max_len + 1));
    return rng.random_bits(len);
}

std::vector<double> random_priors(Rng& rng, std::size_t n) {
    std::vector<double> p(n);
    for (auto& x : p) x = 0.05 + 0.9 * rng.uniform();
    return p;
}

void fail(SuiteReport& r, const std::string& what) {
    if (r.passed) r.detail = what;
    r.passed = false;
}

SuiteReport binomial_suite(Rng& rng) {
    SuiteReport r;
    r.name = "binomial";
    for (std::size_t len = 0; len <= 8; ++len) {
        for (std::uint64_t fb = 0; fb < (1ull << len); ++fb) {
            const Seq f = Seq::from_integer(fb, len);
            for (int draw = 0; draw < 4; ++draw) {
                const Seq g = random_seq(rng, len);
                ++r.cases;
                if (binomial_coeff(f, g) != oracle::binomial_brute(f, g)) fail(r, "binomial_coeff(" + f.to_bits() + ", " + g.to_bits() + ")");
            }
        }
    }
    for (int draw = 0; draw < 200; ++draw) {
        const std::size_t n = 1 + rng.engine()() % 10;
        const auto p = random_priors(rng, n);
        const Seq v = random_seq(rng, n);
        const double got = f_value(Priors(p), v);
        const double want = static_cast<double>(oracle::f_value_brute(p, v));
        const double dev = std::abs(got - want);
        r.max_deviation = std::max(r.max_deviation, dev);
        ++r.cases;
        if (dev > 1e-10 * std::max(1.0, want)) fail(r, "f_value deviates for v=" + v.to_bits());
    }
    return r;
}

SuiteReport posterior_suite(Rng& rng) {
    SuiteReport r;
    r.name = "posterior";
    for (int draw = 0; draw < 60; ++draw) {
        const std::size_t n = 1 + rng.engine()() % 10;
        const auto p = random_priors(rng, n);
        const Seq y = random_seq(rng, n);
        const auto got = posterior_single(Priors(p), y);
        const auto want = oracle::posterior_brute(p, std::span<const Seq>(&y, 1));
        ++r.cases;
        for (std::size_t i = 0; i < n; ++i) r.max_deviation = std::max(r.max_deviation, std::abs(got[i] - want[i]));
    }
    for (int draw = 0; draw < 60; ++draw) {
        const std::size_t n = 1 + rng.engine()() % 8;
        const int t = 2 + static_cast<int>(rng.engine()() % 2);
        const Seq x = rng.random_bits(n);
        Rng channel = rng.split(static_cast<std::uint64_t>(draw));
        const auto traces = transmit_t(x, ChannelConfig(0.3, t), channel);
        const auto got = smap_exact(n, traces).q;
        const auto want = oracle::posterior_brute(n, traces);
        ++r.cases;
        for (std::size_t i = 0; i < n; ++i) r.max_deviation = std::max(r.max_deviation, std::abs(got[i] - want[i]));
    }
    if (r.max_deviation > 1e-9) fail(r, "posterior deviates from enumeration");
    return r;
}

SuiteReport infiltration_suite(Rng& rng) {
    SuiteReport r;
    r.name = "infiltration";
    for (int draw = 0; draw < 60; ++draw) {
        const Seq f = random_seq(rng, 5);
        const Seq g = random_seq(rng, 5);
        const std::vector<Seq> pair{f, g};
        const InfiltrationPoly poly = infiltration(f, g);
        ++r.cases;
        if (poly != infiltration(g, f)) fail(r, "infiltration not commutative");
        for (const auto& [w, c] : poly) {
            if (c != oracle::infiltration_paths_brute(pair, w)) fail(r, "infiltration coefficient differs from path count");
        }
        const EditGraph graph(pair);
        const auto fwd = forward_potentials(graph, f.size() + g.size());
        const auto brute = oracle::path_length_counts_brute(pair);
        for (std::size_t k = 0; k < brute.size(); ++k) {
            if (fwd.at(graph.destination()).coefficient(k) != brute[k]) fail(r, "path-length counts differ");
        }
    }
    for (int draw = 0; draw < 60; ++draw) {
        const Seq h = random_seq(rng, 8);
        const std::size_t m = 1 + rng.engine()() % 3;
        std::vector<Seq> fs;
        for (std::size_t j = 0; j < m; ++j) fs.push_back(random_seq(rng, 4));
        BigCount lhs = 1;
        for (const auto& f : fs) lhs *= binomial_coeff(h, f);
        BigCount rhs = 0;
        for (const auto& [w, c] : infiltration(fs)) rhs += c * binomial_coeff(h, w);
        ++r.cases;
        if (lhs != rhs) fail(r, "product of binomials differs from infiltration expansion");
    }
    return r;
}

SuiteReport equivalence_suite() {
    SuiteReport r;
    r.name = "equivalence";
    const Rational deltas[] = {Rational(1, 10), Rational(1, 2), Rational(9, 10)};
    for (const auto& delta : deltas) {
        for (std::size_t len = 0; len <= 4; ++len) {
            for (std::uint64_t b = 0; b < (1ull << len); ++b) {
                const Seq x = Seq::from_integer(b, len);
                ++r.cases;
                if (joint_trace_distribution(x, 2, delta, JointMode::independent) !=
                    joint_trace_distribution(x, 2, delta, JointMode::cascade)) {
                    fail(r, "channel laws differ for x=" + x.to_bits());
                }
            }
        }
    }
    return r;
}

} // namespace

std::vector<std::string> verify_suites() { return {"binomial", "posterior", "infiltration", "equivalence"}; }

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
    Rng rng(seed);
    if (name == "binomial") return binomial_suite(rng);
    if (name == "posterior") return posterior_suite(rng);
    if (name == "infiltration") return infiltration_suite(rng);
    if (name == "equivalence") return equivalence_suite();
    throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

} // namespace tracerec
