#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "tagcloud/error.hpp"
#include "tagcloud/mincut.hpp"
#include "tagcloud/rng.hpp"

namespace tagcloud {

std::vector<int> SlicingTree::leaves() const {
    std::vector<int> out;
    if (nodes.empty()) return out;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        const int id = stack.back();
        stack.pop_back();
        const SlicingNode& node = nodes.at(static_cast<std::size_t>(id));
        if (node.is_leaf()) {
            out.push_back(node.tag);
        } else {
            stack.push_back(node.second);
            stack.push_back(node.first);
        }
    }
    return out;
}

std::size_t SlicingTree::internal_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [](const SlicingNode& n) { return !n.is_leaf(); }));
}

namespace {

struct Rect {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    double cx() const { return x + w / 2.0; }
    double cy() const { return y + h / 2.0; }
};

struct Region {
    int node;
    std::vector<int> tags;
    Rect rect;
};

// Side of `other` as seen from `self`; the two regions are disjoint, so the
// dominant normalized center offset names the separating direction.
Side side_of(const Rect& self, const Rect& other) {
    const double dx = (other.cx() - self.cx()) / std::max((self.w + other.w) / 2.0, 1e-9);
    const double dy = (other.cy() - self.cy()) / std::max((self.h + other.h) / 2.0, 1e-9);
    if (std::abs(dx) >= std::abs(dy)) return dx < 0 ? Side::Left : Side::Right;
    return dy < 0 ? Side::Top : Side::Bottom;
}

std::int64_t area_of(const Cloud& cloud, const std::vector<int>& tags) {
    std::int64_t a = 0;
    for (int t : tags) a += cloud.tags[static_cast<std::size_t>(t)].area();
    return a;
}

int widest(const Cloud& cloud, const std::vector<int>& tags) {
    int w = 0;
    for (int t : tags) w = std::max(w, cloud.tags[static_cast<std::size_t>(t)].width);
    return w;
}

}  // namespace

SlicingTree build_slicing_tree(const Cloud& cloud, const RelationGraph& graph, std::uint64_t seed,
                               double width_bias, Exec exec, TreeBuildStats* stats) {
    require_valid(cloud);
    if (graph.tag_count() != cloud.size()) throw InvalidInput("graph and cloud disagree on tag count");
    if (!(width_bias > 0.0)) throw InvalidInput("width_bias must be positive");

    TreeBuildStats local_stats;
    SlicingTree tree;
    tree.nodes.emplace_back();

    const double total_area = static_cast<double>(area_of(cloud, identity_order(cloud.size())));
    Rect root_rect;
    root_rect.w = cloud.target_width * width_bias;
    root_rect.h = total_area / root_rect.w;

    std::vector<Rect> region_of(cloud.size(), root_rect);
    std::deque<Region> queue;
    queue.push_back({0, identity_order(cloud.size()), root_rect});

    // Breadth-first, so sibling regions are already refined when pulls are
    // computed for a group.
    while (!queue.empty()) {
        Region region = std::move(queue.front());
        queue.pop_front();
        if (region.tags.size() == 1) {
            tree.nodes[static_cast<std::size_t>(region.node)].tag = region.tags.front();
            continue;
        }

        std::vector<bool> inside(cloud.size(), false);
        for (int t : region.tags) inside[static_cast<std::size_t>(t)] = true;
        std::unordered_map<int, Side> placed;
        for (int t : region.tags)
            for (const auto& nb : graph.neighbors(t))
                if (!inside[static_cast<std::size_t>(nb.tag)] && !placed.contains(nb.tag))
                    placed.emplace(nb.tag, side_of(region.rect, region_of[static_cast<std::size_t>(nb.tag)]));
        const std::vector<Pull> pulls = compute_pulls(region.tags, graph, placed);
        const std::uint64_t node_seed = derive_seed(seed, static_cast<std::uint64_t>(region.node));

        const double area = static_cast<double>(area_of(cloud, region.tags));
        Axis axis = Axis::Horizontal;
        Bipartition split;
        bool decided = false;
        if (region.rect.w > region.rect.h) {
            split = bipartition(region.tags, cloud, graph, pulls, Axis::Vertical, node_seed, exec);
            const double share_a = region.rect.w * static_cast<double>(area_of(cloud, split.part_a)) / area;
            const double share_b = region.rect.w - share_a;
            if (share_a >= widest(cloud, split.part_a) && share_b >= widest(cloud, split.part_b)) {
                axis = Axis::Vertical;
                decided = true;
            }
        }
        if (!decided) split = bipartition(region.tags, cloud, graph, pulls, Axis::Horizontal, node_seed, exec);
        if (split.part_a.empty() || split.part_b.empty()) throw InternalError("bipartition left a part empty");

        const double fraction = static_cast<double>(area_of(cloud, split.part_a)) / area;
        Rect rect_a = region.rect;
        Rect rect_b = region.rect;
        if (axis == Axis::Vertical) {
            rect_a.w = region.rect.w * fraction;
            rect_b.x = region.rect.x + rect_a.w;
            rect_b.w = region.rect.w - rect_a.w;
            ++local_stats.vertical_cuts;
        } else {
            rect_a.h = region.rect.h * fraction;
            rect_b.y = region.rect.y + rect_a.h;
            rect_b.h = region.rect.h - rect_a.h;
            ++local_stats.horizontal_cuts;
        }
        if (split.relaxed) ++local_stats.relaxed_splits;

        const int first = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        tree.nodes.emplace_back();
        SlicingNode& node = tree.nodes[static_cast<std::size_t>(region.node)];
        node.cut = axis;
        node.first = first;
        node.second = first + 1;

        for (int t : split.part_a) region_of[static_cast<std::size_t>(t)] = rect_a;
        for (int t : split.part_b) region_of[static_cast<std::size_t>(t)] = rect_b;
        queue.push_back({first, std::move(split.part_a), rect_a});
        queue.push_back({first + 1, std::move(split.part_b), rect_b});
    }

    if (stats) *stats = local_stats;
    return tree;
}

}  // namespace tagcloud
