#include "tracerec/oracle.hpp"

#include <cmath>
#include <map>

#include "tracerec/error.hpp"

namespace tracerec::oracle {

namespace {

void require_small_n(std::size_t n, std::size_t cap, const char* who) {
    if (n > cap) throw GuardExceeded(std::string(who) + ": input too long for enumeration");
}

struct PathWalker {
    std::span<const Seq> traces;
    std::vector<std::size_t> pos;
    std::vector<Symbol> spelled;

    bool at_end() const {
        for (std::size_t l = 0; l < traces.size(); ++l) {
            if (pos[l] != traces[l].size()) return false;
        }
        return true;
    }

    // Calls visit(spelled) at every complete path.
    template <class Visit>
    void walk(Visit&& visit) {
        if (at_end()) {
            visit(spelled);
            return;
        }
        const std::size_t t = traces.size();
        for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
            int symbol = -1;
            bool ok = true;
            for (std::size_t l = 0; l < t && ok; ++l) {
                if (!(mask >> l & 1u)) continue;
                if (pos[l] >= traces[l].size()) {
                    ok = false;
                } else if (symbol < 0) {
                    symbol = traces[l][pos[l]];
                } else if (traces[l][pos[l]] != symbol) {
                    ok = false;
                }
            }
            if (!ok) continue;
            for (std::size_t l = 0; l < t; ++l) pos[l] += mask >> l & 1u;
            spelled.push_back(static_cast<Symbol>(symbol));
            walk(visit);
            spelled.pop_back();
            for (std::size_t l = 0; l < t; ++l) pos[l] -= mask >> l & 1u;
        }
    }
};

void require_small_graph(std::span<const Seq> traces) {
    double vertices = 1.0;
    for (const auto& y : traces) vertices *= static_cast<double>(y.size() + 1);
    if (vertices > 1e4) throw GuardExceeded("edit-graph DFS: more than 1e4 vertices");
}

} // namespace

BigCount binomial_brute(const Seq& f, const Seq& g) {
    const std::size_t n = f.size();
    const std::size_t k = g.size();
    if (k > n) return 0;
    if (k == 0) return 1;
    double combos = 1.0;
    for (std::size_t r = 0; r < k; ++r) combos = combos * static_cast<double>(n - r) / static_cast<double>(r + 1);
    if (combos > 1e7) throw GuardExceeded("binomial_brute: more than 1e7 subsets");

    std::vector<std::size_t> idx(k);
    for (std::size_t r = 0; r < k; ++r) idx[r] = r;
    BigCount count = 0;
    while (true) {
        bool match = true;
        for (std::size_t r = 0; r < k && match; ++r) match = f[idx[r]] == g[r];
        if (match) ++count;
        std::size_t r = k;
        while (r > 0 && idx[r - 1] == n - k + r - 1) --r;
        if (r == 0) break;
        ++idx[r - 1];
        for (std::size_t s = r; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
    return count;
}

BigCount binomial_memo(const Seq& f, const Seq& g) {
    std::map<std::pair<std::size_t, std::size_t>, BigCount> memo;
    auto count = [&](auto&& self, std::size_t i, std::size_t j) -> BigCount {
        if (j == g.size()) return 1;
        if (f.size() - i < g.size() - j) return 0;
        auto it = memo.find({i, j});
        if (it != memo.end()) return it->second;
        BigCount c = self(self, i + 1, j);
        if (f[i] == g[j]) c += self(self, i + 1, j + 1);
        memo.emplace(std::make_pair(i, j), c);
        return c;
    };
    return count(count, 0, 0);
}

long double f_value_brute(std::span<const double> p, const Seq& v) {
    const std::size_t n = p.size();
    require_small_n(n, 14, "f_value_brute");
    long double total = 0.0L;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        const Seq z = Seq::from_integer(bits, n);
        long double pr = 1.0L;
        for (std::size_t i = 0; i < n; ++i) pr *= z[i] ? p[i] : 1.0L - p[i];
        if (pr == 0.0L) continue;
        total += pr * binomial_memo(z, v).get_d();
    }
    return total;
}

std::vector<double> posterior_brute(std::size_t n, std::span<const Seq> traces) {
    require_small_n(n, 14, "posterior_brute");
    std::vector<BigCount> ones(n, 0);
    BigCount total = 0;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        const Seq x = Seq::from_integer(bits, n);
        BigCount weight = 1;
        for (const auto& y : traces) {
            weight *= binomial_memo(x, y);
            if (weight == 0) break;
        }
        if (weight == 0) continue;
        total += weight;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i]) ones[i] += weight;
        }
    }
    if (total == 0) throw ZeroProbability("posterior_brute: traces impossible");
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational r(ones[i], total);
        r.canonicalize();
        q[i] = r.get_d();
    }
    return q;
}

std::vector<double> posterior_brute(std::span<const double> p, std::span<const Seq> traces) {
    const std::size_t n = p.size();
    require_small_n(n, 14, "posterior_brute");
    std::vector<long double> ones(n, 0.0L);
    long double total = 0.0L;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        const Seq x = Seq::from_integer(bits, n);
        long double weight = 1.0L;
        for (std::size_t i = 0; i < n; ++i) weight *= x[i] ? p[i] : 1.0L - p[i];
        for (const auto& y : traces) {
            if (weight == 0.0L) break;
            weight *= binomial_memo(x, y).get_d();
        }
        if (weight == 0.0L) continue;
        total += weight;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i]) ones[i] += weight;
        }
    }
    if (total == 0.0L) throw ZeroProbability("posterior_brute: traces impossible");
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = static_cast<double>(ones[i] / total);
    return q;
}

BigCount infiltration_paths_brute(std::span<const Seq> traces, const Seq& w) {
    require_small_graph(traces);
    PathWalker walker{traces, std::vector<std::size_t>(traces.size(), 0), {}};
    const std::vector<Symbol> target(w.begin(), w.end());
    BigCount count = 0;
    walker.walk([&](const std::vector<Symbol>& spelled) {
        if (spelled == target) ++count;
    });
    return count;
}

std::vector<BigCount> path_length_counts_brute(std::span<const Seq> traces) {
    require_small_graph(traces);
    std::size_t longest = 0;
    for (const auto& y : traces) longest += y.size();
    std::vector<BigCount> counts(longest + 1, 0);
    PathWalker walker{traces, std::vector<std::size_t>(traces.size(), 0), {}};
    walker.walk([&](const std::vector<Symbol>& spelled) { ++counts[spelled.size()]; });
    return counts;
}

std::vector<std::vector<BigCount>> marked_counts_brute(std::span<const Seq> traces, Symbol symbol) {
    require_small_graph(traces);
    std::size_t longest = 0;
    for (const auto& y : traces) longest += y.size();
    std::vector<std::vector<BigCount>> m(longest + 1, std::vector<BigCount>(longest + 1, 0));
    PathWalker walker{traces, std::vector<std::size_t>(traces.size(), 0), {}};
    walker.walk([&](const std::vector<Symbol>& spelled) {
        const std::size_t k = spelled.size();
        for (std::size_t j = 1; j <= k; ++j) {
            if (spelled[j - 1] == symbol) ++m[j][k];
        }
    });
    return m;
}

BigCount fixed_symbol_sum_brute(std::size_t n, std::size_t i, Symbol a, const Seq& g) {
    require_small_n(n, 16, "fixed_symbol_sum_brute");
    if (i < 1 || i > n) throw InvalidArgument("fixed_symbol_sum_brute: index out of range");
    BigCount total = 0;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        const Seq f = Seq::from_integer(bits, n);
        if (f[i - 1] == a) total += binomial_memo(f, g);
    }
    return total;
}

std::vector<Seq> ml_brute(std::size_t n, std::span<const Seq> traces) {
    require_small_n(n, 16, "ml_brute");
    BigCount best = -1;
    std::vector<Seq> argmax;
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        const Seq x = Seq::from_integer(bits, n);
        BigCount v = 1;
        for (const auto& y : traces) v *= binomial_memo(x, y);
        if (v > best) {
            best = v;
            argmax.clear();
        }
        if (v == best) argmax.push_back(x);
    }
    return argmax;
}

Rational expected_hamming_errors(std::size_t n, int t, const Rational& delta, const Estimator& estimator) {
    require_small_n(n, 12, "expected_hamming_errors");
    std::map<TraceTuple, Seq> cache;
    Rational total = 0;
    const Rational prior(1, BigCount(1) << static_cast<mp_bitcnt_t>(n));
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        const Seq x = Seq::from_integer(bits, n);
        for (const auto& [tuple, pr] : joint_trace_distribution(x, t, delta, JointMode::independent)) {
            auto it = cache.find(tuple);
            if (it == cache.end()) it = cache.emplace(tuple, estimator(tuple)).first;
            const Seq& est = it->second;
            if (est.size() != n) throw InvalidArgument("expected_hamming_errors: estimate has wrong length");
            std::size_t wrong = 0;
            for (std::size_t i = 0; i < n; ++i) wrong += est[i] != x[i];
            if (wrong) total += prior * pr * static_cast<unsigned long>(wrong);
        }
    }
    return total;
}

} // namespace tracerec::oracle
