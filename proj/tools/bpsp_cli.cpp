#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpsp/bpsp.hpp"

namespace {

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

// Distinguishes bad arguments (exit 2) from failures while running (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::vector<bpsp::BpspInstance> load_instances(const std::string& source) {
    if (source == "-") {
        return bpsp::read_instances(std::cin);
    }
    std::ifstream in(source);
    if (!in) {
        throw std::runtime_error("cannot open '" + source + "'");
    }
    return bpsp::read_instances(in);
}

/// Writes to `path`, or stdout when the path is empty or "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    fn(out);
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

struct GenArgs {
    int n = 0;
    int count = 1;
    std::uint64_t seed = 0;
    std::string out;
};

struct SolveArgs {
    std::string source = "-";
    std::string algorithm;
    int restarts = 100;
    int cutoff = bpsp::rqaoa_default_cutoff;
    std::uint64_t seed = 0;
    std::string mixer = "x=y";
    std::size_t shots = 1024;
    bool trace = false;
};

struct ReduceArgs {
    std::string source = "-";
    std::string format = "graph";
    std::string out;
};

struct ValidateArgs {
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    bool inject_fault = false;
};

struct BenchArgs {
    std::string config;
    unsigned threads = 0;
};

int run_gen(const GenArgs& a) {
    std::vector<bpsp::BpspInstance> xs;
    for (int i = 0; i < a.count; ++i) {
        xs.push_back(bpsp::generate_instance(a.n, bpsp::instance_seed(bpsp::Seed{a.seed}, a.n, static_cast<std::size_t>(i))));
    }
    with_output(a.out, [&](std::ostream& os) { bpsp::write_instances(os, xs); });
    return 0;
}

int run_solve(const SolveArgs& a) {
    bpsp::SolveOptions opt;
    opt.restarts = a.restarts;
    opt.cutoff = a.cutoff;
    opt.seed = bpsp::Seed{a.seed};
    opt.mixer = bpsp::parse_mixer(a.mixer);
    opt.shots = a.shots;
    for (const auto& x : load_instances(a.source)) {
        const bpsp::SolveReport r = bpsp::solve(x, a.algorithm, opt);
        if (a.trace) {
            bpsp::write_trace(std::cerr, r.trace);
        }
        std::cout << x.n() << ' ' << r.solution.cost << ' ' << shortest(static_cast<double>(r.solution.cost) / x.n())
                  << ' ' << r.solution.coloring.str() << '\n';
    }
    return 0;
}

int run_reduce(const ReduceArgs& a) {
    const auto xs = load_instances(a.source);
    with_output(a.out, [&](std::ostream& os) {
        for (const auto& x : xs) {
            if (a.format == "graph") {
                bpsp::write_graph(os, bpsp::build_graph(x));
            } else {
                bpsp::write_ising(os, bpsp::build_ising(x));
            }
        }
    });
    return 0;
}

int run_validate(const ValidateArgs& a) {
    const auto report = bpsp::run_validation(bpsp::Seed{a.seed}, a.trials, a.inject_fault, &std::cerr);
    std::cout << "checks " << report.checks << " failures " << report.failures << '\n';
    return report.ok() ? 0 : exit_failure;
}

int run_bench(const BenchArgs& a) {
    std::ifstream in(a.config);
    if (!in) {
        throw UsageError("cannot open config '" + a.config + "'");
    }
    bpsp::BenchConfig config;
    try {
        config = bpsp::parse_bench_config(in);
        if (a.threads != 0) {
            config.threads = a.threads;
        }
        bpsp::validate_config(config);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const bpsp::BenchResult result = bpsp::run_benchmark(config);
    with_output(config.records, [&](std::ostream& os) { bpsp::write_records_csv(os, result.records); });
    with_output(config.summary, [&](std::ostream& os) { bpsp::write_summary_csv(os, result.summary); });
    if (!config.restart_records.empty()) {
        with_output(config.restart_records,
                    [&](std::ostream& os) { bpsp::write_restart_records_csv(os, result.restart_records); });
    }
    if (!config.instances_out.empty()) {
        with_output(config.instances_out, [&](std::ostream& os) { bpsp::write_instances(os, result.instances); });
    }
    std::cerr << "wrote " << result.records.size() << " records to " << config.records << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary paint shop workbench"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate random instances");
    gen_cmd->add_option("-n", gen.n, "Number of cars")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("-c,--count", gen.count, "Number of instances")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen.seed, "Master seed");
    gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

    SolveArgs solve;
    std::vector<std::string> names(bpsp::algorithm_names.begin(), bpsp::algorithm_names.end());
    auto* solve_cmd = app.add_subcommand("solve", "Solve instances, one report line each");
    solve_cmd->add_option("source", solve.source, "Instance file, or - for stdin");
    solve_cmd->add_option("-a,--algorithm", solve.algorithm, "Solver")->required()->check(CLI::IsMember(names));
    solve_cmd->add_option("--restarts", solve.restarts, "xqaoa restarts")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--cutoff", solve.cutoff, "rqaoa brute-force cutoff")
        ->check(CLI::Range(1, bpsp::brute_force_limit));
    solve_cmd->add_option("--seed", solve.seed, "Seed for randomized solvers");
    solve_cmd->add_option("--mixer", solve.mixer, "xqaoa mixer")->check(CLI::IsMember({"x=y", "x", "y", "xy"}));
    solve_cmd->add_option("--shots", solve.shots, "qaoa1 samples")->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--trace", solve.trace, "Print rqaoa contraction steps to stderr");

    ReduceArgs reduce;
    auto* reduce_cmd = app.add_subcommand("reduce", "Export the MaxCut graph or Ising Hamiltonian");
    reduce_cmd->add_option("source", reduce.source, "Instance file, or - for stdin");
    reduce_cmd->add_option("-f,--format", reduce.format, "graph or ising")->check(CLI::IsMember({"graph", "ising"}));
    reduce_cmd->add_option("-o,--out", reduce.out, "Output file (default stdout)");

    ValidateArgs validate;
    auto* validate_cmd = app.add_subcommand("validate", "Run the randomized invariant suite");
    validate_cmd->add_option("--seed", validate.seed, "Seed");
    validate_cmd->add_option("--trials", validate.trials, "Random instances to check");
    validate_cmd->add_flag("--inject-fault", validate.inject_fault)->group("");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark described by a config file");
    bench_cmd->add_option("config", bench.config, "Config file")->required();
    bench_cmd->add_option("--threads", bench.threads, "Worker count (default: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_usage;
    }

    try {
        if (*gen_cmd) {
            return run_gen(gen);
        }
        if (*solve_cmd) {
            return run_solve(solve);
        }
        if (*reduce_cmd) {
            return run_reduce(reduce);
        }
        if (*validate_cmd) {
            return run_validate(validate);
        }
        if (*bench_cmd) {
            return run_bench(bench);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const bpsp::UnknownAlgorithm& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
