#include <doctest.h>

#include <cmath>
#include <map>
#include <regex>

#include "support/generators.hpp"
#include "tagcloud/benchmark.hpp"
#include "tagcloud/error.hpp"
#include "tagcloud/inline_layout.hpp"
#include "tagcloud/metrics.hpp"
#include "tagcloud/reorder.hpp"

using namespace tagcloud;

namespace {

PlacedCloud random_placement(int n, Rng& rng) {
    PlacedCloud p;
    for (int i = 0; i < n; ++i)
        p.placements.push_back({i, uniform_int(rng, 0, 500), uniform_int(rng, 0, 500), uniform_int(rng, 1, 90),
                                uniform_int(rng, 1, 40)});
    p.bbox = {600, 600};
    return p;
}

RelationGraph random_graph(int n, Rng& rng) {
    std::vector<Edge> edges;
    for (int k = 0; k < 2 * n; ++k) {
        const int a = uniform_int(rng, 0, n - 1);
        const int b = uniform_int(rng, 0, n - 1);
        if (a != b) edges.push_back({a, b, 1.0 + 9.0 * uniform_unit(rng)});
    }
    return RelationGraph(static_cast<std::size_t>(n), edges);
}

}  // namespace

TEST_CASE("bounding box area") {
    CHECK(bbox_area({{}, {550, 200}}) == 110.0);
    CHECK(bbox_area({{{0, 0, 0, 100, 20}}, {100, 20}}) == 2.0);

    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = uniform_int(rng, 1, 40);
        const Cloud c = random_box_cloud(n, 10, 150, 12, 60, 300, 4, rng);
        const LineLayout l = dp_break(c, identity_order(c.size()), Aggregate::Sum);
        std::int64_t total = 0;
        for (const auto& t : c.tags) total += t.area();
        CHECK(bbox_area(layout_to_placement(l, c)) >= static_cast<double>(total) / 1000.0);
    }
}

TEST_CASE("weighted distance") {
    const PlacedCloud p{{{0, 0, 0, 10, 0}, {1, 3, 4, 5, 0}}, {20, 20}};
    CHECK(weighted_distance(p, RelationGraph(2, {{0, 1, 2.0}})) == doctest::Approx(10.0));
    // lower-left corners: heights shift the y coordinate
    const PlacedCloud q{{{0, 0, 0, 10, 4}, {1, 3, 0, 5, 8}}, {20, 20}};
    CHECK(weighted_distance(q, RelationGraph(2, {{0, 1, 2.0}})) == doctest::Approx(10.0));
    CHECK(weighted_distance(p, RelationGraph(2, {})) == 0.0);
    CHECK_THROWS_AS(weighted_distance(p, RelationGraph(3, {{0, 2, 1.0}})), InvalidInput);

    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 10;
        PlacedCloud r = random_placement(n, rng);
        const RelationGraph g = random_graph(n, rng);
        const double value = weighted_distance(r, g);

        double reverse = 0.0;
        const auto& edges = g.edges();
        for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
            const Placement& a = r.placements[static_cast<std::size_t>(it->b)];
            const Placement& b = r.placements[static_cast<std::size_t>(it->a)];
            reverse += it->strength * std::sqrt(std::pow(a.x - b.x, 2) + std::pow(a.bottom() - b.bottom(), 2));
        }
        CHECK(value == doctest::Approx(reverse).epsilon(1e-9));

        const int dx = uniform_int(rng, -50, 50), dy = uniform_int(rng, -50, 50);
        for (auto& pl : r.placements) {
            pl.x += dx;
            pl.y += dy;
        }
        CHECK(weighted_distance(r, g) == doctest::Approx(value).epsilon(1e-9));
    }
}

TEST_CASE("layout to placement") {
    Cloud c;
    c.target_width = 128;
    c.tags = {{"a", 0, 32, 14, {}}, {"b", 0, 45, 16, {}}, {"c", 0, 24, 12, {}}};
    const PlacedCloud p = layout_to_placement({{{0, 1, 2}}}, c);
    CHECK(p.placements[0] == Placement{0, 0, 0, 32, 14});
    CHECK(p.placements[1] == Placement{1, 36, 0, 45, 16});
    CHECK(p.placements[2] == Placement{2, 85, 0, 24, 12});
    CHECK(p.bbox == Size{128, 16});

    const PlacedCloud solo = layout_to_placement({{{1}}}, c);
    CHECK(solo.placements[0] == Placement{1, 0, 0, 45, 16});

    Cloud wide = c;
    wide.tags[0].width = 200;
    CHECK(layout_to_placement({{{0}, {1, 2}}}, wide).bbox == Size{200, 30});
}

TEST_CASE("geometry and badness agree") {
    Rng rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = uniform_int(rng, 1, 30);
        const Cloud c = random_box_cloud(n, 10, 150, 12, 60, 300, 4, rng);
        std::vector<int> order = identity_order(c.size());
        shuffle_in_place(std::span<int>(order), rng);
        const LineLayout layout = greedy_break(c, order);
        const PlacedCloud p = layout_to_placement(layout, c);
        CHECK(placement_violations(p, c, {c.space_width, c.target_width}).empty());

        std::map<int, std::vector<Placement>> rows;
        int heights = 0;
        for (const auto& pl : p.placements) rows[pl.y].push_back(pl);
        std::vector<std::int64_t> from_geometry;
        for (auto& [y, row] : rows) {
            int h = 0, right = 0;
            for (const auto& pl : row) {
                h = std::max(h, pl.height);
                right = std::max(right, pl.right());
            }
            heights += h;
            std::int64_t b = std::int64_t{h} * std::abs(c.target_width - right);
            for (const auto& pl : row) b += std::int64_t{h - pl.height} * pl.width;
            from_geometry.push_back(b);
        }
        CHECK(heights == p.bbox.height);
        CHECK(from_geometry == line_badnesses(layout, c));
    }
}

TEST_CASE("benchmark report") {
    BenchConfig config;
    config.seed = 7;
    const Cloud c = synthetic_web_cloud(20, 3);
    std::vector<Edge> edges{{0, 1, 2.0}, {2, 5, 3.0}, {4, 19, 2.0}};
    const std::vector<BenchInput> inputs{{"web20", {c, RelationGraph(20, edges)}}};
    const auto rows = run_benchmark(inputs, config);
    REQUIRE(rows.size() == 9);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].method == bench_methods()[i]);
        CHECK(rows[i].tags == 20);
        CHECK(rows[i].weighted_distance.has_value());
        CHECK(rows[i].area_kpx > 0.0);
    }
    CHECK(rows.back().method == "mincut");
    REQUIRE(rows.back().iterations.has_value());
    CHECK(*rows.back().iterations >= 1);
    CHECK_FALSE(rows.back().badness_l1.has_value());
    CHECK(rows.front().badness_l1.has_value());

    const std::regex timing(",[0-9.]+,([0-9]*)\n");
    const auto strip = [&](const std::string& csv) { return std::regex_replace(csv, timing, ",T,$1\n"); };
    const std::string csv = bench_csv(rows, config);
    CHECK(csv.rfind("# seed=7 rng=mt19937_64", 0) == 0);
    CHECK(csv.find("cloud,method,tags,badness_l1,badness_l2,area_kpx,weighted_distance,time_ms,iters\n") !=
          std::string::npos);
    CHECK(strip(csv) == strip(bench_csv(run_benchmark(inputs, config), config)));
    CHECK(bench_table(rows).find("mincut") != std::string::npos);
}
