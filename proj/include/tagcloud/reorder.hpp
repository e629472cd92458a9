#pragma once

#include <cstdint>
#include <vector>

#include "tagcloud/exec.hpp"
#include "tagcloud/inline_layout.hpp"

namespace tagcloud {

/// Non-increasing height, ties by original index.
std::vector<int> height_order(const Cloud& cloud);
/// Non-increasing height, then non-increasing width, then original index.
std::vector<int> height_width_order(const Cloud& cloud);

/// Next Fit Decreasing Height: greedy fill on the height-sorted order.
LineLayout nfdh(const Cloud& cloud);

/// First Fit Decreasing Height: each tag joins the first line with room for
/// it plus one space; tags wider than the target are alone on a line.
LineLayout ffdh(const Cloud& cloud);

/// FFDH with ties in height broken by non-increasing width.
LineLayout ffdhw(const Cloud& cloud);

/// First-fit placement for an explicit order (used by ffdh and ffdhw).
LineLayout first_fit(const Cloud& cloud, const std::vector<int>& order);

struct ShuffleResult {
    LineLayout layout;
    std::int64_t badness = 0;
    int best_index = 0;
};

/// The k orders shuffle_best evaluates, drawn sequentially from `seed`.
std::vector<std::vector<int>> shuffle_orders(std::size_t tag_count, int k, std::uint64_t seed);

/// Best of k seeded shuffles, each line-broken by dp_break. Ties go to the
/// lowest shuffle index. Throws InvalidInput when k < 1.
ShuffleResult shuffle_best(const Cloud& cloud, int k, Aggregate agg, std::uint64_t seed,
                           Exec exec = Exec::Parallel);

}  // namespace tagcloud

namespace tagcloud {

/// By label, ties by index.
std::vector<int> alphabetical_order(const Cloud& cloud);
/// Heaviest first, ties by label then index.
std::vector<int> weight_order(const Cloud& cloud);

}  // namespace tagcloud
