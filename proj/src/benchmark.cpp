#include "tagcloud/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "tagcloud/corpus.hpp"
#include "tagcloud/error.hpp"
#include "tagcloud/metrics.hpp"
#include "tagcloud/mincut_layout.hpp"
#include "tagcloud/reorder.hpp"
#include "tagcloud/rng.hpp"

namespace tagcloud {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BenchRow inline_row(const BenchInput& in, const std::string& method, const LineLayout& layout, double ms) {
    const Cloud& cloud = in.doc.cloud;
    const PlacedCloud placed = layout_to_placement(layout, cloud);
    BenchRow row;
    row.cloud = in.name;
    row.method = method;
    row.tags = cloud.size();
    const auto b = line_badnesses(layout, cloud);
    row.badness_l1 = aggregate(b, Aggregate::Sum);
    row.badness_l2 = aggregate(b, Aggregate::SumOfSquares);
    row.area_kpx = bbox_area(placed);
    if (!in.doc.graph.empty()) row.weighted_distance = weighted_distance(placed, in.doc.graph);
    row.time_ms = ms;
    return row;
}

std::vector<BenchRow> bench_one(const BenchInput& in, const BenchConfig& config, std::uint64_t seed) {
    const Cloud& cloud = in.doc.cloud;
    std::vector<BenchRow> rows;
    const auto timed = [&](const std::string& method, auto&& make) {
        const auto start = Clock::now();
        const LineLayout layout = make();
        rows.push_back(inline_row(in, method, layout, ms_since(start)));
    };
    const Exec inner = Exec::Serial;  // clouds already run in parallel

    timed("greedy-alpha", [&] { return greedy_break(cloud, alphabetical_order(cloud)); });
    timed("greedy-weight", [&] { return greedy_break(cloud, weight_order(cloud)); });
    timed("dp-alpha", [&] { return dp_break(cloud, alphabetical_order(cloud), config.dp_aggregate); });
    timed("dp-weight", [&] { return dp_break(cloud, weight_order(cloud), config.dp_aggregate); });
    timed("shuffle" + std::to_string(config.shuffles),
          [&] { return shuffle_best(cloud, config.shuffles, config.dp_aggregate, seed, inner).layout; });
    timed("nfdh", [&] { return nfdh(cloud); });
    timed("ffdh", [&] { return ffdh(cloud); });
    timed("ffdhw", [&] { return ffdhw(cloud); });

    const auto start = Clock::now();
    MincutOptions options;
    options.shape_variants = config.shape_variants;
    options.exec = inner;
    const MincutResult result = layout_mincut(cloud, in.doc.graph, seed, options);
    BenchRow row;
    row.cloud = in.name;
    row.method = "mincut";
    row.tags = cloud.size();
    row.time_ms = ms_since(start);
    row.area_kpx = bbox_area(result.placed);
    if (!in.doc.graph.empty()) row.weighted_distance = weighted_distance(result.placed, in.doc.graph);
    row.iterations = result.iterations;
    rows.push_back(std::move(row));
    return rows;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fixed(double v, int digits) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << v;
    return out.str();
}

template <typename T>
std::string opt(const std::optional<T>& v, int digits = 3) {
    if (!v) return "";
    if constexpr (std::is_floating_point_v<T>)
        return fixed(*v, digits);
    else
        return std::to_string(*v);
}

}  // namespace

const std::vector<std::string>& bench_methods() {
    static const std::vector<std::string> methods{"greedy-alpha", "greedy-weight", "dp-alpha", "dp-weight", "shuffle10",
                                                  "nfdh",         "ffdh",          "ffdhw",    "mincut"};
    return methods;
}

std::vector<BenchInput> load_bench_inputs(const std::filesystem::path& dir, const BenchConfig& config) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) throw InvalidInput("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension();
        if (ext == ".json" || ext == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<BenchInput> inputs;
    for (const auto& path : files) {
        BenchInput in;
        in.name = path.filename().string();
        if (path.extension() == ".json") {
            in.doc = read_cloud_file(path);
        } else {
            IngestOptions options;
            options.k = config.ingest_k;
            in.doc = ingest_text(read_text(path), options);
        }
        inputs.push_back(std::move(in));
    }
    return inputs;
}

std::vector<BenchRow> run_benchmark(const std::vector<BenchInput>& inputs, const BenchConfig& config) {
    std::vector<std::vector<BenchRow>> per_cloud(inputs.size());
    std::vector<std::exception_ptr> errors(inputs.size());
    const auto n = static_cast<std::int64_t>(inputs.size());
    const auto one = [&](std::int64_t i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            per_cloud[k] = bench_one(inputs[k], config, derive_seed(config.seed, k));
        } catch (...) {
            errors[k] = std::current_exception();
        }
    };
    if (config.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i) one(i);
    } else {
        for (std::int64_t i = 0; i < n; ++i) one(i);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<BenchRow> rows;
    for (auto& block : per_cloud)
        for (auto& row : block) rows.push_back(std::move(row));
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, const BenchConfig& config) {
    std::ostringstream out;
    out << "# seed=" << config.seed << " rng=" << kRngName << " dp_aggregate=" << aggregate_name(config.dp_aggregate)
        << " shapes=" << config.shape_variants << "\n";
    out << "cloud,method,tags,badness_l1,badness_l2,area_kpx,weighted_distance,time_ms,iters\n";
    for (const BenchRow& r : rows) {
        out << r.cloud << ',' << r.method << ',' << r.tags << ',' << opt(r.badness_l1) << ',' << opt(r.badness_l2)
            << ',' << fixed(r.area_kpx, 3) << ',' << opt(r.weighted_distance) << ',' << fixed(r.time_ms, 3) << ','
            << opt(r.iterations) << '\n';
    }
    return out.str();
}

std::string bench_table(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    const auto cell = [&](const std::string& s, int width) { out << std::setw(width) << s; };
    out << std::left;
    cell("cloud", 24);
    cell("method", 15);
    out << std::right;
    cell("tags", 6);
    cell("l1", 14);
    cell("l2", 18);
    cell("area_kpx", 11);
    cell("wdist", 14);
    cell("ms", 10);
    cell("iters", 7);
    out << '\n';
    for (const BenchRow& r : rows) {
        out << std::left;
        cell(r.cloud.size() > 23 ? r.cloud.substr(0, 23) : r.cloud, 24);
        cell(r.method, 15);
        out << std::right;
        cell(std::to_string(r.tags), 6);
        cell(opt(r.badness_l1), 14);
        cell(opt(r.badness_l2), 18);
        cell(fixed(r.area_kpx, 1), 11);
        cell(opt(r.weighted_distance, 1), 14);
        cell(fixed(r.time_ms, 2), 10);
        cell(opt(r.iterations), 7);
        out << '\n';
    }
    return out.str();
}

}  // namespace tagcloud
