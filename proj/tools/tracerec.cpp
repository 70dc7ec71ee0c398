#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tracerec/baselines.hpp"
#include "tracerec/channel.hpp"
#include "tracerec/error.hpp"
#include "tracerec/eval.hpp"
#include "tracerec/multi_trace.hpp"
#include "tracerec/single_trace.hpp"
#include "tracerec/verify.hpp"

using namespace tracerec;

namespace {

constexpr int kUsageError = 1;
constexpr int kVerifyFailed = 2;

std::vector<Seq> read_file_sequences(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    return read_sequences(in, Alphabet::binary());
}

std::vector<double> read_priors(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::vector<double> p;
    double v = 0.0;
    while (in >> v) p.push_back(v);
    if (!in.eof()) throw InvalidArgument("priors file holds a non-numeric token");
    if (p.size() != n) throw InvalidArgument("priors file has " + std::to_string(p.size()) + " values, expected " + std::to_string(n));
    return p;
}

struct SimulateArgs {
    std::size_t n = 0;
    double delta = 0.1;
    int t = 1;
    std::uint64_t seed = 1;
    std::string input;
    std::size_t trials = 1;
};

int run_simulate(const SimulateArgs& a) {
    const ChannelConfig cfg(a.delta, a.t, a.seed);
    std::vector<Seq> inputs;
    if (!a.input.empty()) {
        inputs = read_file_sequences(a.input);
        if (inputs.empty()) throw InvalidArgument("input file holds no sequence");
        for (const auto& x : inputs) {
            if (a.n != 0 && x.size() != a.n) {
                std::cerr << "warning: input length " << x.size() << " differs from --n " << a.n << "; using the input\n";
            }
        }
    } else if (a.n == 0) {
        throw InvalidArgument("simulate needs --n or --input");
    }
    const Rng root(a.seed);
    const std::size_t trials = inputs.empty() ? a.trials : inputs.size() * a.trials;
    for (std::size_t k = 0; k < trials; ++k) {
        Rng rng = root.split(k);
        const Seq x = inputs.empty() ? rng.random_bits(a.n) : inputs[k % inputs.size()];
        const auto traces = transmit_t(x, cfg, rng);
        if (k > 0) std::cout << '\n';
        write_sequences(std::cout, traces, Alphabet::binary());
    }
    return 0;
}

int run_posterior(const std::string& trace, std::size_t n, const std::string& priors_path) {
    const Seq y = Seq::from_bits(trace);
    const Priors p = priors_path.empty() ? Priors::uniform(n) : Priors(read_priors(priors_path, n));
    const auto q = posterior_single(p, y);
    std::cout << std::setprecision(12);
    for (double v : q) std::cout << v << '\n';
    return 0;
}

int run_reconstruct(const std::string& algo, std::size_t n, const std::vector<std::string>& inline_traces,
                    const std::string& traces_path) {
    std::vector<Seq> traces;
    if (!inline_traces.empty()) {
        if (!traces_path.empty()) std::cerr << "warning: --trace given, ignoring --traces " << traces_path << '\n';
        for (const auto& s : inline_traces) traces.push_back(Seq::from_bits(s));
    } else if (!traces_path.empty()) {
        traces = read_file_sequences(traces_path);
    }
    if (traces.empty()) throw InvalidArgument("reconstruct needs --trace or --traces");

    if (algo == "mlexhaustive") {
        const MlResult ml = traces.size() == 1 ? ml_exhaustive(n, traces.front()) : ml_exhaustive_traces(n, traces);
        for (const auto& x : ml.argmax) std::cout << x << '\n';
        return 0;
    }
    std::cout << find_algorithm(algo)(n, traces) << '\n';
    return 0;
}

int run_benchmark(const std::string& config_path, const std::string& out_path) {
    std::ifstream in(config_path);
    if (!in) throw InvalidArgument("cannot open " + config_path);
    const ExperimentConfig cfg = parse_config(in);
    const ExperimentResult result = run_experiment(cfg);
    std::ofstream out(out_path);
    if (!out) throw InvalidArgument("cannot write " + out_path);
    write_csv(out, result.rows);
    std::cerr << "wrote " << result.rows.size() << " rows to " << out_path;
    if (!result.skipped.empty()) std::cerr << " (" << result.skipped.size() << " cells skipped)";
    std::cerr << '\n';
    return 0;
}

int run_verify(const std::string& suite) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = verify_suites();
    } else {
        names.push_back(suite);
    }
    bool ok = true;
    for (const auto& name : names) {
        const SuiteReport r = run_suite(name);
        std::cout << std::left << std::setw(14) << r.name << (r.passed ? "PASS" : "FAIL") << "  cases=" << r.cases
                  << "  max_deviation=" << std::setprecision(3) << r.max_deviation;
        if (!r.passed) std::cout << "  " << r.detail;
        std::cout << '\n';
        ok = ok && r.passed;
    }
    return ok ? 0 : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trace reconstruction for deletion channels"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Sample traces of random or given inputs");
    simulate->add_option("--n", sim.n, "Input length");
    simulate->add_option("--delta", sim.delta, "Deletion probability")->required();
    simulate->add_option("--t", sim.t, "Traces per input")->required();
    simulate->add_option("--seed", sim.seed, "RNG seed");
    simulate->add_option("--input", sim.input, "File of input sequences, one per line");
    simulate->add_option("--trials", sim.trials, "Inputs to draw (or passes over --input)")->check(CLI::PositiveNumber);

    std::string trace;
    std::size_t n = 0;
    std::string priors_path;
    auto* posterior = app.add_subcommand("posterior", "Single-trace symbolwise posteriors");
    posterior->add_option("--trace", trace, "Trace as a 0/1 string")->required();
    posterior->add_option("--n", n, "Input length")->required();
    posterior->add_option("--priors", priors_path, "File of n prior probabilities");

    std::string algo;
    std::vector<std::string> inline_traces;
    std::string traces_path;
    auto* reconstruct = app.add_subcommand("reconstruct", "Estimate the input from traces");
    reconstruct->add_option("--algo", algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"smap1", "gradasc", "coordswitch", "mlexhaustive", "smapexact", "smapseq", "indcomb", "bma"}));
    reconstruct->add_option("--n", n, "Input length")->required();
    reconstruct->add_option("--trace", inline_traces, "Trace as a 0/1 string (repeatable)")->allow_extra_args(false);
    reconstruct->add_option("--traces", traces_path, "File of traces, one per line");

    std::string config_path;
    std::string out_path = "results.csv";
    auto* benchmark = app.add_subcommand("benchmark", "Monte-Carlo error-rate experiment");
    benchmark->add_option("--config", config_path, "key=value experiment file")->required();
    benchmark->add_option("--out", out_path, "CSV output path");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Compare against brute-force oracles");
    verify->add_option("--suite", suite, "Suite to run")
        ->check(CLI::IsMember({"binomial", "posterior", "infiltration", "equivalence", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*simulate) return run_simulate(sim);
        if (*posterior) return run_posterior(trace, n, priors_path);
        if (*reconstruct) return run_reconstruct(algo, n, inline_traces, traces_path);
        if (*benchmark) return run_benchmark(config_path, out_path);
        if (*verify) return run_verify(suite);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
