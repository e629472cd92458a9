#include <doctest.h>

#include "support/oracles.hpp"
#include "tagcloud/error.hpp"
#include "tagcloud/inline_layout.hpp"
#include "tagcloud/metrics.hpp"
#include "tagcloud/synth.hpp"

using namespace tagcloud;

namespace {

Cloud cloud_of(std::vector<Size> sizes, int target, int space = 4) {
    Cloud c;
    c.target_width = target;
    c.space_width = space;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        c.tags.push_back({"t" + std::to_string(i), 0, sizes[i].width, sizes[i].height, {}});
    return c;
}

oracle::Norm norm_for(Aggregate agg) {
    switch (agg) {
        case Aggregate::Sum: return oracle::Norm::L1;
        case Aggregate::SumOfSquares: return oracle::Norm::L2Squared;
        case Aggregate::Max: return oracle::Norm::LInf;
    }
    return oracle::Norm::L1;
}

}  // namespace

TEST_CASE("line badness reproduces the worked example") {
    const std::vector<Size> line{{32, 14}, {45, 16}, {24, 12}};
    CHECK(line_badness(line, 128, 4) == 464);
    const std::vector<Size> wide{{130, 16}};
    CHECK(line_badness(wide, 128, 4) == 32);
    const std::vector<Size> exact{{128, 16}};
    CHECK(line_badness(exact, 128, 4) == 0);
}

TEST_CASE("line badness rejects overfull multi-tag lines and empty lines") {
    const std::vector<Size> line{{100, 10}, {30, 10}};
    CHECK_THROWS_AS(line_badness(line, 128, 4), InfeasibleLine);
    CHECK_THROWS_AS(line_badness({}, 128, 4), InvalidInput);
    // 100 + 4 + 24 = 128 fits exactly
    const std::vector<Size> tight{{100, 10}, {24, 10}};
    CHECK(line_badness(tight, 128, 4) == 0);
}

TEST_CASE("aggregates") {
    const std::vector<std::int64_t> example{304, 64, 96};
    CHECK(aggregate(example, Aggregate::Sum) == 464);
    const std::vector<std::int64_t> b{3, 4};
    CHECK(aggregate(b, Aggregate::SumOfSquares) == 25);
    CHECK(aggregate(b, Aggregate::Max) == 4);
    CHECK_THROWS_AS(aggregate(std::vector<std::int64_t>{}, Aggregate::Sum), InvalidInput);
    CHECK(parse_aggregate("linf") == Aggregate::Max);
    CHECK_THROWS_AS(parse_aggregate("l3"), InvalidInput);
}

TEST_CASE("greedy fill") {
    const Cloud three = cloud_of({{60, 16}, {60, 16}, {60, 16}}, 128);
    const std::vector<int> order{0, 1, 2};
    CHECK(greedy_break(three, order).lines == std::vector<std::vector<int>>{{0, 1}, {2}});

    const Cloud wide = cloud_of({{300, 20}}, 128);
    CHECK(greedy_break(wide, std::vector<int>{0}).lines == std::vector<std::vector<int>>{{0}});

    const Cloud two = cloud_of({{50, 10}, {50, 10}}, 200);
    CHECK(greedy_break(two, std::vector<int>{0, 1}).lines == std::vector<std::vector<int>>{{0, 1}});

    // An overfull tag in the middle sits alone.
    const Cloud mixed = cloud_of({{20, 10}, {300, 10}, {20, 10}}, 128);
    CHECK(greedy_break(mixed, std::vector<int>{0, 1, 2}).lines == std::vector<std::vector<int>>{{0}, {1}, {2}});

    CHECK_THROWS_AS(greedy_break(two, std::vector<int>{0, 0}), InvalidInput);
}

TEST_CASE("dp puts everything on one line when it fits exactly") {
    const Cloud c = cloud_of({{40, 10}, {40, 10}, {40, 10}}, 128);
    const auto layout = dp_break(c, std::vector<int>{0, 1, 2}, Aggregate::SumOfSquares);
    CHECK(layout.line_count() == 1);
    CHECK(layout_badness(layout, c, Aggregate::SumOfSquares) == 0);
}

TEST_CASE("dp matches the exhaustive optimum, tie-breaking included") {
    Rng rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = uniform_int(rng, 1, 9);
        const Cloud c = random_box_cloud(n, 10, 150, 12, 60, 300, 4, rng);
        std::vector<int> order = identity_order(c.size());
        shuffle_in_place(std::span<int>(order), rng);
        for (Aggregate agg : {Aggregate::Sum, Aggregate::SumOfSquares, Aggregate::Max}) {
            const auto expected = oracle::best_breaks(c, order, norm_for(agg));
            const auto layout = dp_break(c, order, agg);
            CHECK(static_cast<double>(layout_badness(layout, c, agg)) == expected.value);
            CHECK(layout.lines == expected.lines);
        }
    }
}

TEST_CASE("sum of squares picks the same breaks as the l2 norm") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Cloud c = random_box_cloud(uniform_int(rng, 2, 9), 10, 150, 12, 60, 300, 4, rng);
        const auto order = identity_order(c.size());
        CHECK(dp_break(c, order, Aggregate::SumOfSquares).lines ==
              oracle::best_breaks(c, order, oracle::Norm::L2).lines);
    }
}

TEST_CASE("dp never loses to greedy and never permutes") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Cloud c = random_box_cloud(uniform_int(rng, 1, 40), 10, 350, 12, 60, 300, 4, rng);
        std::vector<int> order = identity_order(c.size());
        shuffle_in_place(std::span<int>(order), rng);
        const auto greedy = greedy_break(c, order);
        for (Aggregate agg : {Aggregate::Sum, Aggregate::SumOfSquares, Aggregate::Max}) {
            const auto dp = dp_break(c, order, agg);
            CHECK(layout_badness(dp, c, agg) <= layout_badness(greedy, c, agg));
            CHECK(layout_violations(dp, c).empty());
            std::vector<int> flat;
            for (const auto& line : dp.lines) flat.insert(flat.end(), line.begin(), line.end());
            CHECK(flat == order);
        }
        CHECK(layout_violations(greedy, c).empty());
    }
}

TEST_CASE("break table shape") {
    const Cloud c = cloud_of({{60, 16}, {60, 12}, {60, 16}, {200, 20}}, 128);
    const auto order = identity_order(c.size());
    const BreakTable t = compute_break_table(c, order, Aggregate::Sum);
    REQUIRE(t.cost.size() == 5);
    CHECK(t.cost[4] == 0);
    for (int k = 0; k < 4; ++k) CHECK(t.next[k] > k);
    // The 200-wide tag is overfull and alone.
    const auto layout = layout_from_table(t, order);
    CHECK(layout.lines.back() == std::vector<int>{3});
    CHECK(line_badnesses(layout, c).back() == 20 * 72);
}
