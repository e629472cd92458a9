#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tagcloud/exec.hpp"
#include "tagcloud/inline_layout.hpp"
#include "tagcloud/json_io.hpp"

namespace tagcloud {

struct BenchInput {
    std::string name;
    CloudDocument doc;
};

struct BenchConfig {
    std::uint64_t seed = 1;
    Aggregate dp_aggregate = Aggregate::Sum;
    int shuffles = 10;
    int shape_variants = 3;
    std::size_t ingest_k = 50;
    Exec exec = Exec::Parallel;
};

struct BenchRow {
    std::string cloud;
    std::string method;
    std::size_t tags = 0;
    std::optional<std::int64_t> badness_l1;
    std::optional<std::int64_t> badness_l2;
    double area_kpx = 0.0;
    std::optional<double> weighted_distance;
    double time_ms = 0.0;
    std::optional<int> iterations;
};

/// Method names in report order.
const std::vector<std::string>& bench_methods();

/// *.json clouds and *.txt corpora (ingested with config.ingest_k) in
/// filename order. Throws InvalidInput for unreadable or malformed files.
std::vector<BenchInput> load_bench_inputs(const std::filesystem::path& dir, const BenchConfig& config);

/// Every method on every cloud. Clouds may run concurrently; rows come back
/// in input order, then method order.
std::vector<BenchRow> run_benchmark(const std::vector<BenchInput>& inputs, const BenchConfig& config);

/// Fixed columns:
/// cloud,method,tags,badness_l1,badness_l2,area_kpx,weighted_distance,time_ms,iters
/// preceded by a "# seed=... rng=..." comment line.
std::string bench_csv(const std::vector<BenchRow>& rows, const BenchConfig& config);
std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace tagcloud
