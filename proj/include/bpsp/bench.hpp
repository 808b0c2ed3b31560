#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bpsp/instance.hpp"
#include "bpsp/rng.hpp"
#include "bpsp/solvers.hpp"

namespace bpsp {

struct BenchConfig {
    std::vector<int> sizes;
    int instances = 1;
    std::vector<std::string> algorithms;
    int restarts = 100;
    int cutoff = rqaoa_default_cutoff;
    Seed seed{0};
    std::string records = "records.csv";
    std::string summary = "summary.csv";
    std::string instances_out;    // empty: do not persist
    std::string restart_records;  // empty: no per-restart xqaoa rows
    unsigned threads = 0;         // 0: hardware concurrency
};

struct BenchRecord {
    int n = 0;
    std::size_t instance = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    int swaps = 0;
    double ratio = 0.0;
    double time_ms = 0.0;
    int restarts = 1;
};

/// One optimized-and-rounded xqaoa restart.
struct RestartRecord {
    int n = 0;
    std::size_t instance = 0;
    std::uint64_t seed = 0;
    int restart = 0;
    int swaps = 0;
    double ratio = 0.0;
};

struct SummaryRow {
    std::string algorithm;
    int n = 0;
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct BenchResult {
    std::vector<BenchRecord> records;
    std::vector<RestartRecord> restart_records;
    std::vector<SummaryRow> summary;
    std::vector<BpspInstance> instances;  // in (size, index) order
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

inline long long parse_integer(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + text + "'");
    }
    return v;
}

}  // namespace detail

/// Reads `key = value` lines; '#' starts a comment, lists are comma-separated.
inline BenchConfig parse_bench_config(std::istream& in) {
    BenchConfig c;
    bool have_sizes = false;
    bool have_algorithms = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = detail::trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key == "sizes") {
            c.sizes.clear();
            for (const auto& s : detail::split_list(value)) {
                c.sizes.push_back(static_cast<int>(detail::parse_integer(key, s)));
            }
            have_sizes = true;
        } else if (key == "instances") {
            c.instances = static_cast<int>(detail::parse_integer(key, value));
        } else if (key == "algorithms") {
            c.algorithms = detail::split_list(value);
            have_algorithms = true;
        } else if (key == "restarts") {
            c.restarts = static_cast<int>(detail::parse_integer(key, value));
        } else if (key == "cutoff") {
            c.cutoff = static_cast<int>(detail::parse_integer(key, value));
        } else if (key == "seed") {
            c.seed = Seed{static_cast<std::uint64_t>(detail::parse_integer(key, value))};
        } else if (key == "records") {
            c.records = value;
        } else if (key == "summary") {
            c.summary = value;
        } else if (key == "instances_out") {
            c.instances_out = value;
        } else if (key == "restart_records") {
            c.restart_records = value;
        } else if (key == "threads") {
            c.threads = static_cast<unsigned>(detail::parse_integer(key, value));
        } else {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    if (!have_sizes || !have_algorithms) {
        throw std::invalid_argument("config: 'sizes' and 'algorithms' are required");
    }
    return c;
}

inline void validate_config(const BenchConfig& c) {
    if (c.sizes.empty() || c.algorithms.empty()) {
        throw std::invalid_argument("config: sizes and algorithms must be non-empty");
    }
    for (int n : c.sizes) {
        if (n < 1) {
            throw std::invalid_argument("config: sizes must be positive");
        }
    }
    if (c.instances < 1) {
        throw std::invalid_argument("config: instances must be at least 1");
    }
    if (c.restarts < 1) {
        throw std::invalid_argument("config: restarts must be at least 1");
    }
    if (c.cutoff < 1 || c.cutoff > brute_force_limit) {
        throw std::invalid_argument("config: cutoff out of range");
    }
    for (const auto& a : c.algorithms) {
        if (!is_algorithm(a)) {
            throw UnknownAlgorithm(a);
        }
    }
}

/// Groups by (algorithm, n): algorithms in order of first appearance, sizes
/// ascending. The standard deviation uses n - 1 and is 0 for one record.
inline std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
    std::vector<std::string> order;
    std::map<std::pair<std::string, int>, std::vector<double>> groups;
    for (const auto& r : records) {
        if (std::find(order.begin(), order.end(), r.algorithm) == order.end()) {
            order.push_back(r.algorithm);
        }
        groups[{r.algorithm, r.n}].push_back(r.ratio);
    }
    std::vector<SummaryRow> out;
    for (const auto& alg : order) {
        for (const auto& [key, ratios] : groups) {
            if (key.first != alg || ratios.empty()) {
                continue;
            }
            SummaryRow row;
            row.algorithm = alg;
            row.n = key.second;
            row.count = ratios.size();
            double sum = 0.0;
            for (double v : ratios) {
                sum += v;
            }
            row.mean = sum / static_cast<double>(ratios.size());
            double ss = 0.0;
            for (double v : ratios) {
                ss += (v - row.mean) * (v - row.mean);
            }
            row.stddev = ratios.size() > 1 ? std::sqrt(ss / static_cast<double>(ratios.size() - 1)) : 0.0;
            row.min = *std::min_element(ratios.begin(), ratios.end());
            row.max = *std::max_element(ratios.begin(), ratios.end());
            out.push_back(row);
        }
    }
    return out;
}

/// Runs every (size, instance, algorithm) task on a worker pool. Results are
/// stored by task index, so output order and content (except timings) do not
/// depend on the number of workers.
inline BenchResult run_benchmark(const BenchConfig& config) {
    validate_config(config);
    BenchResult result;
    struct Slot {
        int n;
        std::size_t instance;
        Seed seed;
        std::size_t instance_slot;
    };
    std::vector<Slot> slots;
    for (int n : config.sizes) {
        for (std::size_t i = 0; i < static_cast<std::size_t>(config.instances); ++i) {
            const Seed s = instance_seed(config.seed, n, i);
            slots.push_back({n, i, s, result.instances.size()});
            result.instances.push_back(generate_instance(n, s));
        }
    }

    const std::size_t algs = config.algorithms.size();
    const std::size_t tasks = slots.size() * algs;
    std::vector<BenchRecord> records(tasks);
    std::vector<std::vector<RestartRecord>> restarts(tasks);
    std::vector<std::string> errors(tasks);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) {
            const Slot& slot = slots[t / algs];
            const std::string& alg = config.algorithms[t % algs];
            const BpspInstance& x = result.instances[slot.instance_slot];
            SolveOptions opt;
            opt.restarts = config.restarts;
            opt.cutoff = config.cutoff;
            opt.seed = slot.seed;
            try {
                const auto t0 = std::chrono::steady_clock::now();
                const SolveReport rep = solve(x, alg, opt);
                const auto t1 = std::chrono::steady_clock::now();
                BenchRecord& r = records[t];
                r.n = slot.n;
                r.instance = slot.instance;
                r.seed = slot.seed.value;
                r.algorithm = alg;
                r.swaps = rep.solution.cost;
                r.ratio = static_cast<double>(rep.solution.cost) / static_cast<double>(slot.n);
                r.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                r.restarts = rep.restarts;
                for (std::size_t k = 0; k < rep.restart_costs.size(); ++k) {
                    restarts[t].push_back({slot.n, slot.instance, slot.seed.value, static_cast<int>(k),
                                           rep.restart_costs[k],
                                           static_cast<double>(rep.restart_costs[k]) / static_cast<double>(slot.n)});
                }
            } catch (const std::exception& e) {
                errors[t] = alg + " on n=" + std::to_string(slot.n) + " instance " + std::to_string(slot.instance) +
                            ": " + e.what();
            }
        }
    };

    unsigned workers = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks, 1)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& e : errors) {
        if (!e.empty()) {
            throw std::runtime_error(e);
        }
    }

    result.records = std::move(records);
    for (auto& rs : restarts) {
        result.restart_records.insert(result.restart_records.end(), rs.begin(), rs.end());
    }
    result.summary = summarize(result.records);
    return result;
}

namespace detail {

inline std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

inline void write_records_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "n,instance,seed,algorithm,swaps,ratio,time_ms,restarts\n";
    char time_buf[64];
    for (const auto& r : records) {
        std::snprintf(time_buf, sizeof time_buf, "%.3f", r.time_ms);
        out << r.n << ',' << r.instance << ',' << r.seed << ',' << r.algorithm << ',' << r.swaps << ','
            << detail::format_g17(r.ratio) << ',' << time_buf << ',' << r.restarts << '\n';
    }
}

inline void write_restart_records_csv(std::ostream& out, const std::vector<RestartRecord>& records) {
    out << "n,instance,seed,restart,swaps,ratio\n";
    for (const auto& r : records) {
        out << r.n << ',' << r.instance << ',' << r.seed << ',' << r.restart << ',' << r.swaps << ','
            << detail::format_g17(r.ratio) << '\n';
    }
}

inline void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << "algorithm,n,count,mean,std,min,max\n";
    for (const auto& r : rows) {
        out << r.algorithm << ',' << r.n << ',' << r.count << ',' << detail::format_g17(r.mean) << ','
            << detail::format_g17(r.stddev) << ',' << detail::format_g17(r.min) << ',' << detail::format_g17(r.max)
            << '\n';
    }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

}  // namespace detail

/// Parses a records CSV written by write_records_csv.
inline std::vector<BenchRecord> read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "n,instance,seed,algorithm,swaps,ratio,time_ms,restarts") {
        throw std::invalid_argument("records csv: unexpected header");
    }
    std::vector<BenchRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto cells = detail::split_csv_line(line);
        if (cells.size() != 8) {
            throw std::invalid_argument("records csv: expected 8 columns in '" + line + "'");
        }
        BenchRecord r;
        r.n = std::stoi(cells[0]);
        r.instance = std::stoull(cells[1]);
        r.seed = std::stoull(cells[2]);
        r.algorithm = cells[3];
        r.swaps = std::stoi(cells[4]);
        r.ratio = std::stod(cells[5]);
        r.time_ms = std::stod(cells[6]);
        r.restarts = std::stoi(cells[7]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace bpsp
