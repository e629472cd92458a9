// tagcloud: command-line front end for the layout engine.
//
//   tagcloud layout-inline --input cloud.json --order alpha --algo dp --agg l2 --html out.html
//   tagcloud layout-mincut --input cloud.json --width 550 --shapes 3 --html out.html
//   tagcloud ingest --text book.txt --k 100 --out cloud.json
//   tagcloud bench --inputs dir/ --csv out.csv --seed 1
//
// Exit status: 0 success, 1 invalid input, 2 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tagcloud/benchmark.hpp"
#include "tagcloud/corpus.hpp"
#include "tagcloud/error.hpp"
#include "tagcloud/html.hpp"
#include "tagcloud/inline_layout.hpp"
#include "tagcloud/json_io.hpp"
#include "tagcloud/metrics.hpp"
#include "tagcloud/mincut_layout.hpp"
#include "tagcloud/reorder.hpp"
#include "tagcloud/synth.hpp"

namespace tc = tagcloud;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tc::InvalidInput("cannot write " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tc::InvalidInput("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct InlineArgs {
    std::string input;
    std::string order = "given";
    std::string algo = "dp";
    std::string agg = "l2";
    std::uint64_t seed = 1;
    int shuffles = 10;
    std::string html;
};

int run_inline(const InlineArgs& a) {
    const tc::CloudDocument doc = tc::read_cloud_file(a.input);
    const tc::Cloud& cloud = doc.cloud;
    const tc::Aggregate agg = tc::parse_aggregate(a.agg);

    std::vector<int> order;
    if (a.order == "alpha")
        order = tc::alphabetical_order(cloud);
    else if (a.order == "weight")
        order = tc::weight_order(cloud);
    else
        order = tc::identity_order(cloud.size());

    tc::LineLayout layout;
    if (a.algo == "greedy")
        layout = tc::greedy_break(cloud, order);
    else if (a.algo == "dp")
        layout = tc::dp_break(cloud, order, agg);
    else if (a.algo == "nfdh")
        layout = tc::nfdh(cloud);
    else if (a.algo == "ffdh")
        layout = tc::ffdh(cloud);
    else if (a.algo == "ffdhw")
        layout = tc::ffdhw(cloud);
    else
        layout = tc::shuffle_best(cloud, a.shuffles, agg, a.seed).layout;

    const auto badness = tc::line_badnesses(layout, cloud);
    const tc::PlacedCloud placed = tc::layout_to_placement(layout, cloud);
    std::cout << "lines " << layout.line_count() << "\n"
              << "badness_l1 " << tc::aggregate(badness, tc::Aggregate::Sum) << "\n"
              << "badness_l2 " << tc::aggregate(badness, tc::Aggregate::SumOfSquares) << "\n"
              << "badness_linf " << tc::aggregate(badness, tc::Aggregate::Max) << "\n"
              << "bbox " << placed.bbox.width << "x" << placed.bbox.height << "\n"
              << "area_kpx " << tc::bbox_area(placed) << "\n";
    if (!doc.graph.empty()) std::cout << "weighted_distance " << tc::weighted_distance(placed, doc.graph) << "\n";
    if (!a.html.empty()) write_file(a.html, tc::emit_inline(layout, cloud));
    return 0;
}

struct MincutArgs {
    std::string input;
    int width = 0;
    std::uint64_t seed = 1;
    int shapes = 3;
    std::string html;
    std::string json;
};

int run_mincut(const MincutArgs& a) {
    tc::CloudDocument doc = tc::read_cloud_file(a.input);
    if (a.width > 0) doc.cloud.target_width = a.width;
    tc::MincutOptions options;
    options.shape_variants = a.shapes;
    const tc::MincutResult result = tc::layout_mincut(doc.cloud, doc.graph, a.seed, options);
    std::cout << "iterations " << result.iterations << "\n"
              << "width_bias " << result.width_bias << "\n"
              << "bbox " << result.placed.bbox.width << "x" << result.placed.bbox.height << "\n"
              << "area_kpx " << tc::bbox_area(result.placed) << "\n"
              << "weighted_distance " << tc::weighted_distance(result.placed, doc.graph) << "\n";
    if (!a.html.empty()) write_file(a.html, tc::emit_nested_tables(result.tree, result.placed, doc.cloud));
    if (!a.json.empty()) write_file(a.json, tc::placement_to_json(result.placed, doc.cloud));
    return 0;
}

struct IngestArgs {
    std::string text;
    std::size_t k = 100;
    int width = 550;
    std::string adjacency = "filtered";
    std::string out;
};

int run_ingest(const IngestArgs& a) {
    tc::IngestOptions options;
    options.k = a.k;
    options.target_width = a.width;
    options.adjacency = a.adjacency == "raw" ? tc::Adjacency::Raw : tc::Adjacency::Filtered;
    const tc::CloudDocument doc = tc::ingest_text(read_file(a.text), options);
    const std::string json = tc::cloud_to_json(doc.cloud, doc.graph);
    if (a.out.empty() || a.out == "-")
        std::cout << json;
    else
        write_file(a.out, json);
    std::cerr << doc.cloud.size() << " tags, " << doc.graph.edges().size() << " edges\n";
    return 0;
}

struct BenchArgs {
    std::string inputs;
    std::string csv;
    std::uint64_t seed = 1;
    std::string agg = "l1";
    std::size_t k = 50;
    int shapes = 3;
};

int run_bench(const BenchArgs& a) {
    tc::BenchConfig config;
    config.seed = a.seed;
    config.dp_aggregate = tc::parse_aggregate(a.agg);
    config.ingest_k = a.k;
    config.shape_variants = a.shapes;
    const auto inputs = tc::load_bench_inputs(a.inputs, config);
    if (inputs.empty()) throw tc::InvalidInput("no .json or .txt inputs in " + a.inputs);
    const auto rows = tc::run_benchmark(inputs, config);
    std::cout << tc::bench_table(rows);
    if (!a.csv.empty()) write_file(a.csv, tc::bench_csv(rows, config));
    return 0;
}

struct SynthArgs {
    std::string out;
    int corpora = 10;
    std::uint64_t seed = 1;
};

int run_synth(const SynthArgs& a) {
    std::filesystem::create_directories(a.out);
    for (int i = 0; i < a.corpora; ++i) {
        const auto path = std::filesystem::path(a.out) / ("corpus" + std::to_string(i) + ".txt");
        write_file(path.string(), tc::synthetic_corpus({}, a.seed + static_cast<std::uint64_t>(i)));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tag-cloud layout: line breaking, strip-packing reorders and min-cut placement"};
    app.require_subcommand(1);

    InlineArgs inline_args;
    auto* inl = app.add_subcommand("layout-inline", "Break an ordered cloud into lines");
    inl->add_option("--input", inline_args.input, "Cloud JSON")->required()->check(CLI::ExistingFile);
    inl->add_option("--order", inline_args.order, "Tag order")->check(CLI::IsMember({"alpha", "weight", "given"}));
    inl->add_option("--algo", inline_args.algo, "Algorithm")
        ->check(CLI::IsMember({"greedy", "dp", "nfdh", "ffdh", "ffdhw", "shuffle"}));
    inl->add_option("--agg", inline_args.agg, "Badness aggregate")->check(CLI::IsMember({"l1", "l2", "linf"}));
    inl->add_option("--seed", inline_args.seed, "Shuffle seed");
    inl->add_option("--shuffles", inline_args.shuffles, "Shuffles for --algo shuffle")->check(CLI::PositiveNumber);
    inl->add_option("--html", inline_args.html, "Write an HTML document");

    MincutArgs mincut_args;
    auto* mc = app.add_subcommand("layout-mincut", "Place tags by recursive min-cut with floorplan sizing");
    mc->add_option("--input", mincut_args.input, "Cloud JSON")->required()->check(CLI::ExistingFile);
    mc->add_option("--width", mincut_args.width, "Width bound in pixels (default: the cloud's)")
        ->check(CLI::PositiveNumber);
    mc->add_option("--seed", mincut_args.seed, "Partitioning seed");
    mc->add_option("--shapes", mincut_args.shapes, "Shape options per tag")->check(CLI::IsMember({1, 3}));
    mc->add_option("--html", mincut_args.html, "Write nested-table HTML");
    mc->add_option("--json", mincut_args.json, "Write placement JSON");

    IngestArgs ingest_args;
    auto* ing = app.add_subcommand("ingest", "Build a cloud and co-occurrence graph from plain text");
    ing->add_option("--text", ingest_args.text, "UTF-8 text file")->required()->check(CLI::ExistingFile);
    ing->add_option("--k", ingest_args.k, "Tags to keep")->check(CLI::PositiveNumber);
    ing->add_option("--width", ingest_args.width, "Target width")->check(CLI::PositiveNumber);
    ing->add_option("--adjacency", ingest_args.adjacency, "Co-occurrence stream")
        ->check(CLI::IsMember({"filtered", "raw"}));
    ing->add_option("--out", ingest_args.out, "Output cloud JSON (default stdout)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Compare every method on a directory of clouds/corpora");
    bench->add_option("--inputs", bench_args.inputs, "Directory of .json clouds and .txt corpora")
        ->required()
        ->check(CLI::ExistingDirectory);
    bench->add_option("--csv", bench_args.csv, "Write CSV report");
    bench->add_option("--seed", bench_args.seed, "Master seed");
    bench->add_option("--agg", bench_args.agg, "DP aggregate")->check(CLI::IsMember({"l1", "l2", "linf"}));
    bench->add_option("--k", bench_args.k, "Tags kept when ingesting .txt")->check(CLI::PositiveNumber);
    bench->add_option("--shapes", bench_args.shapes, "Shape options per tag")->check(CLI::IsMember({1, 3}));

    SynthArgs synth_args;
    auto* syn = app.add_subcommand("synth", "Write synthetic topic-clustered corpora");
    syn->add_option("--out", synth_args.out, "Output directory")->required();
    syn->add_option("--corpora", synth_args.corpora, "Number of corpora")->check(CLI::PositiveNumber);
    syn->add_option("--seed", synth_args.seed, "First seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*inl) return run_inline(inline_args);
        if (*mc) return run_mincut(mincut_args);
        if (*ing) return run_ingest(ingest_args);
        if (*bench) return run_bench(bench_args);
        if (*syn) return run_synth(synth_args);
    } catch (const tc::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
