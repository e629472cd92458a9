#include "tagcloud/reorder.hpp"

#include <algorithm>
#include <limits>

#include "tagcloud/error.hpp"
#include "tagcloud/rng.hpp"

namespace tagcloud {

std::vector<int> height_order(const Cloud& cloud) {
    std::vector<int> order = identity_order(cloud.size());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return cloud.tags[static_cast<std::size_t>(a)].height > cloud.tags[static_cast<std::size_t>(b)].height;
    });
    return order;
}

std::vector<int> height_width_order(const Cloud& cloud) {
    std::vector<int> order = identity_order(cloud.size());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const TagBox& ta = cloud.tags[static_cast<std::size_t>(a)];
        const TagBox& tb = cloud.tags[static_cast<std::size_t>(b)];
        if (ta.height != tb.height) return ta.height > tb.height;
        return ta.width > tb.width;
    });
    return order;
}

LineLayout nfdh(const Cloud& cloud) {
    const auto order = height_order(cloud);
    return greedy_break(cloud, order);
}

LineLayout first_fit(const Cloud& cloud, const std::vector<int>& order) {
    require_permutation(order, cloud.size());
    LineLayout layout;
    std::vector<std::int64_t> used;  // occupied width per line; max() marks a closed solo line
    constexpr auto kClosed = std::numeric_limits<std::int64_t>::max();

    for (int idx : order) {
        const int w = cloud.tags[static_cast<std::size_t>(idx)].width;
        if (w > cloud.target_width) {
            layout.lines.push_back({idx});
            used.push_back(kClosed);
            continue;
        }
        bool placed = false;
        for (std::size_t line = 0; line < used.size(); ++line) {
            if (used[line] == kClosed) continue;
            if (used[line] + cloud.space_width + w <= cloud.target_width) {
                layout.lines[line].push_back(idx);
                used[line] += cloud.space_width + w;
                placed = true;
                break;
            }
        }
        if (!placed) {
            layout.lines.push_back({idx});
            used.push_back(w);
        }
    }
    return layout;
}

LineLayout ffdh(const Cloud& cloud) { return first_fit(cloud, height_order(cloud)); }

LineLayout ffdhw(const Cloud& cloud) { return first_fit(cloud, height_width_order(cloud)); }

std::vector<std::vector<int>> shuffle_orders(std::size_t tag_count, int k, std::uint64_t seed) {
    if (k < 1) throw InvalidInput("shuffle_best: k must be at least 1");
    Rng rng(seed);
    std::vector<std::vector<int>> orders;
    orders.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::vector<int> order = identity_order(tag_count);
        shuffle_in_place(std::span<int>(order), rng);
        orders.push_back(std::move(order));
    }
    return orders;
}

ShuffleResult shuffle_best(const Cloud& cloud, int k, Aggregate agg, std::uint64_t seed, Exec exec) {
    const auto orders = shuffle_orders(cloud.size(), k, seed);
    std::vector<BreakTable> tables(orders.size());

    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < k; ++i) tables[static_cast<std::size_t>(i)] = compute_break_table(cloud, orders[static_cast<std::size_t>(i)], agg);
    } else {
        for (int i = 0; i < k; ++i) tables[static_cast<std::size_t>(i)] = compute_break_table(cloud, orders[static_cast<std::size_t>(i)], agg);
    }

    int best = 0;
    for (int i = 1; i < k; ++i)
        if (tables[static_cast<std::size_t>(i)].cost[0] < tables[static_cast<std::size_t>(best)].cost[0]) best = i;

    ShuffleResult result;
    result.best_index = best;
    result.badness = tables[static_cast<std::size_t>(best)].cost[0];
    result.layout = layout_from_table(tables[static_cast<std::size_t>(best)], orders[static_cast<std::size_t>(best)]);
    return result;
}

}  // namespace tagcloud

namespace tagcloud {

std::vector<int> alphabetical_order(const Cloud& cloud) {
    std::vector<int> order = identity_order(cloud.size());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return cloud.tags[static_cast<std::size_t>(a)].label < cloud.tags[static_cast<std::size_t>(b)].label;
    });
    return order;
}

std::vector<int> weight_order(const Cloud& cloud) {
    std::vector<int> order = identity_order(cloud.size());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const TagBox& ta = cloud.tags[static_cast<std::size_t>(a)];
        const TagBox& tb = cloud.tags[static_cast<std::size_t>(b)];
        if (ta.weight != tb.weight) return ta.weight > tb.weight;
        return ta.label < tb.label;
    });
    return order;
}

}  // namespace tagcloud
