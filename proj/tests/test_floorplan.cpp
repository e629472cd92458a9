#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tagcloud/error.hpp"
#include "tagcloud/floorplan.hpp"
#include "tagcloud/metrics.hpp"
#include "tagcloud/mincut_layout.hpp"

using namespace tagcloud;

namespace {

std::vector<Size> sizes(const ShapeList& list) {
    std::vector<Size> out;
    for (const auto& s : list) out.push_back(s.size());
    return out;
}

ShapeList list_of(std::initializer_list<Size> items) {
    ShapeList out;
    for (const Size& s : items) out.push_back({s.width, s.height, -1, -1});
    return out;
}

SlicingTree two_leaf_tree(Axis cut) {
    SlicingTree t;
    t.nodes = {{-1, cut, 1, 2}, {0, Axis::Horizontal, -1, -1}, {1, Axis::Horizontal, -1, -1}};
    return t;
}

}  // namespace

TEST_CASE("shape generation") {
    const TagBox wide{"x", 0, 100, 20, {}};
    CHECK(sizes(gen_shape_options(wide)) == std::vector<Size>{{85, 24}, {100, 20}, {115, 17}});
    for (const auto& s : gen_shape_options(wide)) {
        CHECK(s.size().area() >= 1700);
        CHECK(s.size().area() <= 2300);
    }
    CHECK(sizes(gen_shape_options({"x", 0, 1, 1, {}})) == std::vector<Size>{{1, 1}});
    CHECK(sizes(gen_shape_options(wide, 1)) == std::vector<Size>{{100, 20}});
    CHECK(sizes(leaf_shape_options(wide, 1)) == std::vector<Size>{{100, 20}});
    CHECK(is_shape_list(gen_shape_options(wide, 7)));

    const TagBox custom{"y", 0, 40, 10, {{20, 20}}};
    CHECK(sizes(leaf_shape_options(custom, 3)) == std::vector<Size>{{20, 20}, {40, 10}});
}

TEST_CASE("dominance pruning") {
    const ShapeList pruned = prune_dominated({{10, 10, -1, -1}, {12, 10, -1, -1}, {5, 20, -1, -1}, {5, 25, -1, -1},
                                              {10, 10, -1, -1}});
    CHECK(sizes(pruned) == std::vector<Size>{{5, 20}, {10, 10}});
    CHECK(is_shape_list(pruned));
    CHECK_FALSE(is_shape_list({}));
    CHECK_FALSE(is_shape_list(list_of({{10, 10}, {12, 10}})));
}

TEST_CASE("combine examples") {
    const ShapeList a = list_of({{5, 20}, {10, 10}});
    const ShapeList b = list_of({{10, 10}, {20, 5}});
    CHECK(sizes(combine_vertical(a, b)) == std::vector<Size>{{17, 20}, {22, 10}});
    CHECK(sizes(combine_horizontal(list_of({{10, 10}}), list_of({{10, 10}}))) == std::vector<Size>{{10, 20}});

    const SlicingTree t = two_leaf_tree(Axis::Vertical);
    const auto nodes = combine_shapes(t, {a, b});
    CHECK(sizes(nodes[1]) == sizes(a));
    CHECK(sizes(nodes[2]) == sizes(b));
    CHECK(sizes(nodes[0]) == std::vector<Size>{{17, 20}, {22, 10}});
}

TEST_CASE("combine matches brute force pairing") {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const ShapeList a = gen::random_shapes(4, rng);
        const ShapeList b = gen::random_shapes(4, rng);
        std::vector<ShapeOption> v, h;
        for (const auto& x : a)
            for (const auto& y : b) {
                v.push_back({x.width + kTagGap + y.width, std::max(x.height, y.height), -1, -1});
                h.push_back({std::max(x.width, y.width), x.height + y.height, -1, -1});
            }
        CHECK(sizes(combine_vertical(a, b)) == sizes(prune_dominated(v)));
        CHECK(sizes(combine_horizontal(a, b)) == sizes(prune_dominated(h)));
        CHECK(is_shape_list(combine_vertical(a, b)));
        CHECK(is_shape_list(combine_horizontal(a, b)));
    }
}

TEST_CASE("select and place") {
    Cloud c;
    c.tags = {{"a", 0, 10, 10, {}}, {"b", 0, 20, 8, {}}};
    const SlicingTree t = two_leaf_tree(Axis::Vertical);
    const auto nodes = combine_shapes(t, {leaf_shape_options(c.tags[0], 1), leaf_shape_options(c.tags[1], 1)});
    const PlacedCloud p = select_and_place(t, nodes, 550);
    CHECK(p.placements[0] == Placement{0, 0, 0, 10, 10});
    CHECK(p.placements[1] == Placement{1, 12, 0, 20, 8});
    CHECK(p.bbox == Size{32, 10});

    const SlicingTree h = two_leaf_tree(Axis::Horizontal);
    const PlacedCloud ph = select_and_place(h, combine_shapes(h, {list_of({{10, 10}}), list_of({{20, 8}})}), 550);
    CHECK(ph.placements[1] == Placement{1, 0, 10, 20, 8});
    CHECK(ph.bbox == Size{20, 18});

    SlicingTree leaf;
    leaf.nodes = {{0, Axis::Horizontal, -1, -1}};
    const PlacedCloud pl = select_and_place(leaf, combine_shapes(leaf, {list_of({{7, 3}})}), 550);
    CHECK(pl.placements[0] == Placement{0, 0, 0, 7, 3});
    CHECK(pl.bbox == Size{7, 3});
}

TEST_CASE("root selection") {
    const ShapeList root = list_of({{10, 100}, {20, 30}, {30, 20}, {60, 9}});
    CHECK(select_root_shape(root, 100) == 3);  // 540
    CHECK(select_root_shape(root, 50) == 2);   // tie at 600: lower height
    CHECK(select_root_shape(root, 5) == 0);    // nothing fits: narrowest
    CHECK(select_root_shape(list_of({{20, 30}, {30, 20}}), 40) == 1);  // equal area: lower height
}

TEST_CASE("broken provenance is an internal error") {
    const SlicingTree t = two_leaf_tree(Axis::Vertical);
    auto nodes = combine_shapes(t, {list_of({{10, 10}}), list_of({{10, 10}})});
    nodes[0][0].width += 1;
    CHECK_THROWS_AS(select_and_place(t, nodes, 550), InternalError);
}

TEST_CASE("sizing agrees with exhaustive assignment") {
    Rng rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = uniform_int(rng, 1, 6);
        const SlicingTree t = gen::random_tree(n, rng);
        std::vector<ShapeList> leaves;
        for (int i = 0; i < n; ++i) leaves.push_back(gen::random_shapes(3, rng));
        const int bound = uniform_int(rng, 40, 400);
        const auto nodes = combine_shapes(t, leaves);
        for (const auto& list : nodes) CHECK(is_shape_list(list));
        const PlacedCloud p = select_and_place(t, nodes, bound);
        const Size expected = oracle::best_assignment(t, gen::as_sizes(leaves), bound);
        CHECK(p.bbox.area() == expected.area());
        CHECK(p.bbox == expected);
    }
}

TEST_CASE("layout_mincut") {
    Cloud one;
    one.tags = {{"solo", 5, 60, 20, {}}};
    const MincutResult single = layout_mincut(one, RelationGraph(1, {}), 1, {1, 8, Exec::Serial});
    CHECK(single.iterations == 1);
    CHECK(single.placed.placements[0] == Placement{0, 0, 0, 60, 20});

    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = uniform_int(rng, 2, 80);
        const Cloud c = random_box_cloud(n, 20, 150, 12, 50, 550, 4, rng);
        std::vector<Edge> edges;
        for (int k = 0; k < n; ++k) {
            const int a = uniform_int(rng, 0, n - 1);
            const int b = uniform_int(rng, 0, n - 1);
            if (a != b) edges.push_back({a, b, 2.0});
        }
        const RelationGraph g(c.size(), edges);
        const MincutResult r = layout_mincut(c, g, 42);
        CHECK(r.iterations >= 1);
        CHECK(r.iterations <= 8);
        CHECK(placement_violations(r.placed, c, {kTagGap, 0}).empty());
        if (n >= 20) CHECK(r.placed.bbox.width <= 550);
        const MincutResult again = layout_mincut(c, g, 42);
        CHECK(again.placed == r.placed);
        for (const auto& pl : r.placed.placements) {
            bool known = false;
            for (const auto& s : leaf_shape_options(c.tags[static_cast<std::size_t>(pl.tag)], 3))
                known = known || (s.width == pl.width && s.height == pl.height);
            CHECK(known);
        }
    }
}
