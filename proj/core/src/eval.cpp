#include "tracerec/eval.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "tracerec/baselines.hpp"
#include "tracerec/channel.hpp"
#include "tracerec/error.hpp"
#include "tracerec/multi_trace.hpp"
#include "tracerec/single_trace.hpp"

namespace tracerec {

double hamming_error(const Seq& x, const Seq& xhat) {
    if (x.size() != xhat.size()) throw InvalidArgument("hamming_error: length mismatch");
    if (x.empty()) return 0.0;
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < x.size(); ++i) wrong += x[i] != xhat[i];
    return static_cast<double>(wrong) / static_cast<double>(x.size());
}

std::size_t levenshtein(const Seq& a, const Seq& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] != b[j - 1])});
            diag = up;
        }
    }
    return row[b.size()];
}

double edit_error(const Seq& x, const Seq& xhat) {
    if (x.empty()) throw InvalidArgument("edit_error: empty reference");
    return static_cast<double>(levenshtein(x, xhat)) / static_cast<double>(x.size());
}

std::vector<std::string> algorithm_ids() {
    return {"smapexact", "smapseq", "indcomb", "gradasc", "bma", "mlexhaustive", "smap1", "coordswitch"};
}

Reconstructor find_algorithm(std::string_view id) {
    if (id == "smapexact") return [](std::size_t n, std::span<const Seq> y) { return smap_exact(n, y).estimate; };
    if (id == "smapseq") return [](std::size_t n, std::span<const Seq> y) { return smap_sequential(n, y); };
    if (id == "indcomb") return [](std::size_t n, std::span<const Seq> y) { return independent_combination(n, y); };
    if (id == "gradasc") return [](std::size_t n, std::span<const Seq> y) { return grad_ascent_traces(n, y); };
    if (id == "bma") return [](std::size_t n, std::span<const Seq> y) { return bma(n, y); };
    if (id == "mlexhaustive") {
        return [](std::size_t n, std::span<const Seq> y) { return ml_exhaustive_traces(n, y).argmax.front(); };
    }
    if (id == "smap1") {
        return [](std::size_t n, std::span<const Seq> y) {
            if (y.empty()) throw InvalidArgument("smap1: no trace");
            return threshold(posterior_single(Priors::uniform(n), y.front()));
        };
    }
    if (id == "coordswitch") {
        return [](std::size_t n, std::span<const Seq> y) {
            if (y.empty()) throw InvalidArgument("coordswitch: no trace");
            return coordinate_switch(Priors::uniform(n), y.front()).estimate;
        };
    }
    throw InvalidArgument("unknown algorithm '" + std::string(id) + "'");
}

void ExperimentConfig::validate() const {
    if (trials < 1) throw InvalidArgument("config: trials must be at least 1");
    if (n < 1) throw InvalidArgument("config: n must be at least 1");
    if (deltas.empty() || ts.empty() || algos.empty()) throw InvalidArgument("config: deltas, ts and algos must be nonempty");
    for (double d : deltas) {
        if (!(d >= 0.0 && d < 1.0)) throw InvalidArgument("config: delta outside [0,1)");
    }
    for (int t : ts) {
        if (t < 1 || t > 31) throw InvalidArgument("config: t outside [1,31]");
    }
    for (const auto& a : algos) find_algorithm(a);
}

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    std::istringstream in(text);
    T value{};
    in >> value;
    if (in.fail() || !in.eof()) throw InvalidArgument("config: bad value for " + key + ": '" + text + "'");
    return value;
}

std::uint64_t fnv1a(std::uint64_t h, std::span<const Symbol> data) {
    for (Symbol s : data) {
        h ^= s;
        h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
    return h;
}

} // namespace

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key == "n") {
            cfg.n = parse_number<std::size_t>(key, value);
        } else if (key == "deltas" || key == "delta") {
            cfg.deltas.clear();
            for (const auto& v : split_list(value)) cfg.deltas.push_back(parse_number<double>(key, v));
        } else if (key == "ts" || key == "t") {
            cfg.ts.clear();
            for (const auto& v : split_list(value)) cfg.ts.push_back(parse_number<int>(key, v));
        } else if (key == "trials") {
            cfg.trials = parse_number<std::size_t>(key, value);
        } else if (key == "algos") {
            cfg.algos = split_list(value);
        } else if (key == "seed") {
            cfg.seed = parse_number<std::uint64_t>(key, value);
        } else if (key == "smap_exact_max_n") {
            cfg.smap_exact_max_n = parse_number<std::size_t>(key, value);
        } else if (key == "smap_exact_max_t") {
            cfg.smap_exact_max_t = parse_number<int>(key, value);
        } else if (key == "threads") {
            cfg.threads = parse_number<unsigned>(key, value);
        } else {
            throw InvalidArgument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

MeanSe mean_se(std::span<const double> xs) {
    MeanSe r;
    if (xs.empty()) return r;
    double sum = 0.0;
    for (double x : xs) sum += x;
    r.mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) return r;
    double ss = 0.0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    r.se = std::sqrt(var / static_cast<double>(xs.size()));
    return r;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentResult result;

    struct Cell {
        double delta;
        int t;
        std::vector<std::size_t> algos;
    };
    std::vector<Reconstructor> recon;
    for (const auto& a : cfg.algos) recon.push_back(find_algorithm(a));

    std::vector<Cell> cells;
    for (double delta : cfg.deltas) {
        for (int t : cfg.ts) {
            Cell cell{delta, t, {}};
            for (std::size_t a = 0; a < cfg.algos.size(); ++a) {
                const std::string& id = cfg.algos[a];
                std::ostringstream why;
                if (id == "smapexact" && (t > cfg.smap_exact_max_t || cfg.n > cfg.smap_exact_max_n)) {
                    why << "smapexact skipped at n=" << cfg.n << " t=" << t << ": limits are n<=" << cfg.smap_exact_max_n
                        << ", t<=" << cfg.smap_exact_max_t;
                } else if (id == "mlexhaustive" && cfg.n > kMlTracesMaxN) {
                    why << "mlexhaustive skipped at n=" << cfg.n << ": limit is n<=" << kMlTracesMaxN;
                }
                if (!why.str().empty()) {
                    std::clog << "[benchmark] " << why.str() << " (delta=" << delta << ")\n";
                    result.skipped.push_back(why.str());
                    continue;
                }
                cell.algos.push_back(a);
            }
            cells.push_back(std::move(cell));
        }
    }

    const std::size_t trials = cfg.trials;
    const std::size_t na = cfg.algos.size();
    // [cell][algo][trial]
    auto slot = [&](std::size_t c, std::size_t a, std::size_t k) { return (c * na + a) * trials + k; };
    std::vector<double> ham(cells.size() * na * trials, 0.0);
    std::vector<double> edit(ham.size(), 0.0);
    std::vector<double> millis(ham.size(), 0.0);
    std::vector<unsigned char> failed(ham.size(), 0);
    std::vector<std::uint64_t> digests(cells.size() * trials, 0);

    const Rng root(cfg.seed);
    const std::size_t units = cells.size() * trials;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t u = next++; u < units; u = next++) {
            const std::size_t c = u / trials;
            const std::size_t k = u % trials;
            const Cell& cell = cells[c];
            Rng trial_rng = root.split(k);
            const Seq x = trial_rng.random_bits(cfg.n);
            Rng channel_rng = trial_rng.split(1000 + c);
            const auto traces = transmit_t(x, ChannelConfig(cell.delta, cell.t), channel_rng);

            std::uint64_t h = fnv1a(0xcbf29ce484222325ULL, x.symbols());
            for (const auto& y : traces) h = fnv1a(h, y.symbols());
            digests[c * trials + k] = h;

            for (std::size_t a : cell.algos) {
                const auto start = std::chrono::steady_clock::now();
                Seq est;
                try {
                    est = recon[a](cfg.n, traces);
                } catch (const Error&) {
                    failed[slot(c, a, k)] = 1;
                    est = Seq(std::vector<Symbol>(cfg.n, 1));
                }
                const auto stop = std::chrono::steady_clock::now();
                millis[slot(c, a, k)] = std::chrono::duration<double, std::milli>(stop - start).count();
                ham[slot(c, a, k)] = hamming_error(x, est);
                edit[slot(c, a, k)] = edit_error(x, est);
            }
        }
    };

    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, units));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t c = 0; c < cells.size(); ++c) {
        std::uint64_t digest = 0xcbf29ce484222325ULL;
        for (std::size_t k = 0; k < trials; ++k) {
            digest ^= digests[c * trials + k];
            digest *= 0x100000001b3ULL;
        }
        for (std::size_t a : cells[c].algos) {
            ResultRow row;
            row.algo = cfg.algos[a];
            row.n = cfg.n;
            row.delta = cells[c].delta;
            row.t = cells[c].t;
            row.trials = trials;
            row.seed = cfg.seed;
            row.trace_digest = digest;
            row.trial_hamming.assign(ham.begin() + static_cast<std::ptrdiff_t>(slot(c, a, 0)),
                                     ham.begin() + static_cast<std::ptrdiff_t>(slot(c, a, 0) + trials));
            row.trial_edit.assign(edit.begin() + static_cast<std::ptrdiff_t>(slot(c, a, 0)),
                                  edit.begin() + static_cast<std::ptrdiff_t>(slot(c, a, 0) + trials));
            for (std::size_t k = 0; k < trials; ++k) {
                row.wall_time_ms += millis[slot(c, a, k)];
                row.failures += failed[slot(c, a, k)];
            }
            const MeanSe h = mean_se(row.trial_hamming);
            const MeanSe e = mean_se(row.trial_edit);
            row.hamming_error_rate = h.mean;
            row.stderr_hamming = h.se;
            row.edit_error_rate = e.mean;
            row.stderr_edit = e.se;
            if (row.failures) {
                std::clog << "[benchmark] " << row.algo << " failed on " << row.failures << " of " << trials
                          << " trials at delta=" << row.delta << " t=" << row.t << "\n";
            }
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

void write_csv(std::ostream& out, std::span<const ResultRow> rows) {
    out << "algo,n,delta,t,trials,hamming_error_rate,edit_error_rate,stderr_hamming,stderr_edit,seed,wall_time_ms\n";
    const auto old_flags = out.flags();
    const auto old_prec = out.precision();
    out << std::setprecision(6);
    out.unsetf(std::ios::floatfield);
    for (const auto& r : rows) {
        out << r.algo << ',' << r.n << ',' << r.delta << ',' << r.t << ',' << r.trials << ',' << r.hamming_error_rate << ','
            << r.edit_error_rate << ',' << r.stderr_hamming << ',' << r.stderr_edit << ',' << r.seed << ','
            << r.wall_time_ms << '\n';
    }
    out.flags(old_flags);
    out.precision(old_prec);
}

} // namespace tracerec
