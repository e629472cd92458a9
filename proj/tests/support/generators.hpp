#pragma once

// Random instances shared by the unit tests and the acceptance driver.

#include <algorithm>
#include <map>
#include <vector>

#include "tagcloud/floorplan.hpp"
#include "tagcloud/mincut.hpp"
#include "tagcloud/rng.hpp"
#include "tagcloud/synth.hpp"

namespace gen {

using namespace tagcloud;

// Random binary slicing tree over tags 0..n-1 with random cut axes. Children
// get larger indices than their parent.
inline SlicingTree random_tree(int n, Rng& rng) {
    std::vector<int> tags(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) tags[static_cast<std::size_t>(i)] = i;
    shuffle_in_place(std::span<int>(tags), rng);

    SlicingTree tree;
    struct Job {
        int node;
        std::vector<int> tags;
    };
    tree.nodes.emplace_back();
    std::vector<Job> queue{{0, tags}};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const Job job = queue[q];
        if (job.tags.size() == 1) {
            tree.nodes[static_cast<std::size_t>(job.node)].tag = job.tags[0];
            continue;
        }
        const auto cut = 1 + static_cast<std::ptrdiff_t>(uniform_below(rng, job.tags.size() - 1));
        const int first = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        tree.nodes.emplace_back();
        auto& node = tree.nodes[static_cast<std::size_t>(job.node)];
        node.first = first;
        node.second = first + 1;
        node.cut = uniform_below(rng, 2) ? Axis::Vertical : Axis::Horizontal;
        queue.push_back({first, {job.tags.begin(), job.tags.begin() + cut}});
        queue.push_back({first + 1, {job.tags.begin() + cut, job.tags.end()}});
    }
    return tree;
}

// Up to `max_shapes` random non-dominated shapes for one leaf.
inline ShapeList random_shapes(int max_shapes, Rng& rng) {
    std::vector<ShapeOption> raw;
    const int count = uniform_int(rng, 1, max_shapes);
    for (int i = 0; i < count; ++i) raw.push_back({uniform_int(rng, 5, 120), uniform_int(rng, 5, 60), -1, -1});
    return prune_dominated(raw);
}

inline std::map<int, std::vector<Size>> as_sizes(const std::vector<ShapeList>& leaf_shapes) {
    std::map<int, std::vector<Size>> out;
    for (std::size_t t = 0; t < leaf_shapes.size(); ++t)
        for (const auto& s : leaf_shapes[t]) out[static_cast<int>(t)].push_back(s.size());
    return out;
}

// Random line layout: a random permutation cut into random contiguous lines.
inline std::vector<std::vector<int>> random_lines(std::size_t n, Rng& rng) {
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    shuffle_in_place(std::span<int>(order), rng);
    std::vector<std::vector<int>> lines;
    for (int t : order) {
        if (lines.empty() || uniform_below(rng, 3) == 0) lines.emplace_back();
        lines.back().push_back(t);
    }
    return lines;
}

}  // namespace gen
