#include <sstream>

#include <gtest/gtest.h>

#include "bpsp/bench.hpp"

using namespace bpsp;

namespace {

BenchRecord record(const std::string& alg, int n, double ratio) {
    BenchRecord r;
    r.algorithm = alg;
    r.n = n;
    r.ratio = ratio;
    r.swaps = static_cast<int>(ratio * n);
    return r;
}

std::string records_without_time(const std::vector<BenchRecord>& rs) {
    std::vector<BenchRecord> copy = rs;
    for (auto& r : copy) {
        r.time_ms = 0.0;
    }
    std::ostringstream out;
    write_records_csv(out, copy);
    return out.str();
}

}  // namespace

TEST(Summary, MeanAndSampleStd) {
    const auto rows = summarize({record("rf", 10, 0.3), record("rf", 10, 0.4), record("rf", 10, 0.5)});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].count, 3u);
    EXPECT_NEAR(rows[0].mean, 0.4, 1e-15);
    EXPECT_NEAR(rows[0].stddev, 0.1, 1e-15);
    EXPECT_EQ(rows[0].min, 0.3);
    EXPECT_EQ(rows[0].max, 0.5);
}

TEST(Summary, SingleRecordHasZeroStd) {
    const auto rows = summarize({record("rsg", 4, 0.25)});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].stddev, 0.0);
}

TEST(Summary, GroupOrder) {
    const auto rows = summarize({record("rsg", 20, 0.3), record("rf", 10, 0.6), record("rsg", 10, 0.4)});
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].algorithm, "rsg");
    EXPECT_EQ(rows[0].n, 10);
    EXPECT_EQ(rows[1].n, 20);
    EXPECT_EQ(rows[2].algorithm, "rf");
}

TEST(Config, ParsesKeysAndComments) {
    std::istringstream in(
        "# smoke run\n"
        "sizes = 8, 16\n"
        "instances = 3\n"
        "algorithms = rf, rsg  # two classical\n"
        "restarts = 5\n"
        "cutoff = 4\n"
        "seed = 123\n"
        "records = out.csv\n");
    const BenchConfig c = parse_bench_config(in);
    EXPECT_EQ(c.sizes, (std::vector<int>{8, 16}));
    EXPECT_EQ(c.instances, 3);
    EXPECT_EQ(c.algorithms, (std::vector<std::string>{"rf", "rsg"}));
    EXPECT_EQ(c.restarts, 5);
    EXPECT_EQ(c.cutoff, 4);
    EXPECT_EQ(c.seed.value, 123u);
    EXPECT_EQ(c.records, "out.csv");
    EXPECT_EQ(c.summary, "summary.csv");
}

TEST(Config, Errors) {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_bench_config(in);
    };
    EXPECT_THROW(parse("sizes = 8\n"), std::invalid_argument);
    EXPECT_THROW(parse("sizes = 8\nalgorithms = rf\ncolour = red\n"), std::invalid_argument);
    EXPECT_THROW(parse("sizes = 8\nalgorithms = rf\ninstances = many\n"), std::invalid_argument);
    EXPECT_THROW(parse("sizes 8\n"), std::invalid_argument);
    EXPECT_THROW(validate_config(parse("sizes = 0\nalgorithms = rf\n")), std::invalid_argument);
    EXPECT_THROW(validate_config(parse("sizes = 8\nalgorithms = magic\n")), UnknownAlgorithm);
    EXPECT_THROW(validate_config(parse("sizes = 8\nalgorithms = rqaoa\ncutoff = 99\n")), std::invalid_argument);
}

TEST(Benchmark, SingleCarIsForced) {
    BenchConfig c;
    c.sizes = {1};
    c.algorithms = {"rf", "greedy", "rg", "rsg"};
    const BenchResult r = run_benchmark(c);
    ASSERT_EQ(r.records.size(), 4u);
    for (const auto& rec : r.records) {
        EXPECT_EQ(rec.swaps, 1);
        EXPECT_EQ(rec.ratio, 1.0);
    }
}

TEST(Benchmark, RedFirstRatio) {
    BenchConfig c;
    c.sizes = {128};
    c.instances = 50;
    c.algorithms = {"rf"};
    c.seed = Seed{1};
    const BenchResult r = run_benchmark(c);
    ASSERT_EQ(r.records.size(), 50u);
    ASSERT_EQ(r.summary.size(), 1u);
    EXPECT_GE(r.summary[0].mean, 0.60);
    EXPECT_LE(r.summary[0].mean, 0.73);
}

TEST(Benchmark, DeterministicAcrossThreadCounts) {
    BenchConfig c;
    c.sizes = {6, 12};
    c.instances = 3;
    c.algorithms = {"rf", "rsg", "xqaoa", "rqaoa", "brute"};
    c.restarts = 2;
    c.cutoff = 3;
    c.seed = Seed{5};
    c.threads = 1;
    const BenchResult a = run_benchmark(c);
    c.threads = 3;
    const BenchResult b = run_benchmark(c);
    EXPECT_EQ(records_without_time(a.records), records_without_time(b.records));
    EXPECT_EQ(a.instances, b.instances);
    ASSERT_EQ(a.restart_records.size(), 2u * 3u * 2u);
    std::ostringstream ra;
    std::ostringstream rb;
    write_restart_records_csv(ra, a.restart_records);
    write_restart_records_csv(rb, b.restart_records);
    EXPECT_EQ(ra.str(), rb.str());
}

TEST(Benchmark, InstancesComeFromDerivedSeeds) {
    BenchConfig c;
    c.sizes = {9};
    c.instances = 2;
    c.algorithms = {"rf"};
    c.seed = Seed{17};
    const BenchResult r = run_benchmark(c);
    EXPECT_EQ(r.instances[1], generate_instance(9, instance_seed(Seed{17}, 9, 1)));
    EXPECT_EQ(r.records[1].seed, instance_seed(Seed{17}, 9, 1).value);
}

TEST(Csv, RecordsRoundTrip) {
    BenchRecord r = record("xqaoa", 128, 45.0 / 128.0);
    r.instance = 7;
    r.seed = 18446744073709551615ULL;
    r.swaps = 45;
    r.time_ms = 12.5;
    r.restarts = 25;
    std::ostringstream out;
    write_records_csv(out, {r});
    EXPECT_EQ(out.str(), "n,instance,seed,algorithm,swaps,ratio,time_ms,restarts\n"
                         "128,7,18446744073709551615,xqaoa,45,0.3515625,12.500,25\n");
    std::istringstream in(out.str());
    const auto back = read_records_csv(in);
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(back[0].ratio, r.ratio);
    EXPECT_EQ(back[0].seed, r.seed);
    EXPECT_EQ(back[0].algorithm, "xqaoa");
}

TEST(Csv, SummaryAndRestartHeaders) {
    std::ostringstream s;
    write_summary_csv(s, summarize({record("rf", 2, 0.5)}));
    EXPECT_EQ(s.str(), "algorithm,n,count,mean,std,min,max\nrf,2,1,0.5,0,0.5,0.5\n");
    std::ostringstream r;
    write_restart_records_csv(r, {RestartRecord{4, 0, 9, 1, 2, 0.5}});
    EXPECT_EQ(r.str(), "n,instance,seed,restart,swaps,ratio\n4,0,9,1,2,0.5\n");
    std::istringstream bad("n,swaps\n");
    EXPECT_THROW(read_records_csv(bad), std::invalid_argument);
}
