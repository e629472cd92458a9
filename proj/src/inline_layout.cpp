#include "tagcloud/inline_layout.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tagcloud/error.hpp"

namespace tagcloud {

namespace {

constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();

std::int64_t combine(std::int64_t acc, std::int64_t badness, Aggregate agg) {
    switch (agg) {
        case Aggregate::Sum: return acc + badness;
        case Aggregate::SumOfSquares: return acc + badness * badness;
        case Aggregate::Max: return std::max(acc, badness);
    }
    throw InternalError("unknown aggregate");
}

// Running sums for the line order[k..j) while k walks leftward.
struct LineAccumulator {
    std::int64_t sum_width = 0;
    std::int64_t sum_area = 0;  // sum of h_i * w_i
    std::int64_t max_height = 0;
    int count = 0;

    void add(const TagBox& t) {
        sum_width += t.width;
        sum_area += t.area();
        max_height = std::max<std::int64_t>(max_height, t.height);
        ++count;
    }

    // kInfinite for a multi-tag overfull line.
    std::int64_t badness(int target_width, int space_width) const {
        const std::int64_t slack = target_width - sum_width - std::int64_t{count - 1} * space_width;
        if (slack < 0 && count > 1) return kInfinite;
        return max_height * (slack < 0 ? -slack : slack) + max_height * sum_width - sum_area;
    }
};

}  // namespace

Aggregate parse_aggregate(std::string_view name) {
    if (name == "l1") return Aggregate::Sum;
    if (name == "l2") return Aggregate::SumOfSquares;
    if (name == "linf") return Aggregate::Max;
    throw InvalidInput("unknown aggregate '" + std::string(name) + "' (expected l1, l2 or linf)");
}

std::string_view aggregate_name(Aggregate agg) {
    switch (agg) {
        case Aggregate::Sum: return "l1";
        case Aggregate::SumOfSquares: return "l2";
        case Aggregate::Max: return "linf";
    }
    return "?";
}

std::int64_t line_badness(std::span<const Size> line, int target_width, int space_width) {
    if (line.empty()) throw InvalidInput("line_badness: empty line");
    std::int64_t sum_width = 0;
    std::int64_t height = 0;
    for (const Size& s : line) {
        sum_width += s.width;
        height = std::max<std::int64_t>(height, s.height);
    }
    const auto k = static_cast<std::int64_t>(line.size());
    const std::int64_t slack = target_width - sum_width - (k - 1) * space_width;
    if (slack < 0 && k > 1)
        throw InfeasibleLine("line of " + std::to_string(k) + " tags overflows the target width by " +
                             std::to_string(-slack) + " px");
    std::int64_t badness = height * (slack < 0 ? -slack : slack);
    for (const Size& s : line) badness += (height - s.height) * s.width;
    return badness;
}

std::int64_t aggregate(std::span<const std::int64_t> line_badnesses, Aggregate agg) {
    if (line_badnesses.empty()) throw InvalidInput("aggregate: no lines");
    std::int64_t acc = 0;
    for (std::int64_t b : line_badnesses) acc = combine(acc, b, agg);
    return acc;
}

std::vector<std::int64_t> line_badnesses(const LineLayout& layout, const Cloud& cloud) {
    std::vector<std::int64_t> out;
    out.reserve(layout.lines.size());
    std::vector<Size> sizes;
    for (const auto& line : layout.lines) {
        sizes.clear();
        for (int idx : line) sizes.push_back(cloud.tags.at(static_cast<std::size_t>(idx)).size());
        out.push_back(line_badness(sizes, cloud.target_width, cloud.space_width));
    }
    return out;
}

std::int64_t layout_badness(const LineLayout& layout, const Cloud& cloud, Aggregate agg) {
    const auto b = line_badnesses(layout, cloud);
    return aggregate(b, agg);
}

LineLayout greedy_break(const Cloud& cloud, std::span<const int> order) {
    require_permutation({order.begin(), order.end()}, cloud.size());
    LineLayout layout;
    std::vector<int> current;
    std::int64_t used = 0;
    const auto flush = [&] {
        if (!current.empty()) layout.lines.push_back(std::move(current));
        current.clear();
        used = 0;
    };
    for (int idx : order) {
        const int w = cloud.tags[static_cast<std::size_t>(idx)].width;
        if (!current.empty() && used + cloud.space_width + w > cloud.target_width) flush();
        if (current.empty()) {
            current.push_back(idx);
            used = w;
            if (w > cloud.target_width) flush();
        } else {
            current.push_back(idx);
            used += cloud.space_width + w;
        }
    }
    flush();
    return layout;
}

BreakTable compute_break_table(const Cloud& cloud, std::span<const int> order, Aggregate agg) {
    require_permutation({order.begin(), order.end()}, cloud.size());
    const int n = static_cast<int>(order.size());
    BreakTable table;
    table.cost.assign(static_cast<std::size_t>(n) + 1, kInfinite);
    table.lines.assign(static_cast<std::size_t>(n) + 1, std::numeric_limits<int>::max());
    table.next.assign(static_cast<std::size_t>(n) + 1, n);
    table.cost[n] = 0;
    table.lines[n] = 0;

    const auto tag_at = [&](int pos) -> const TagBox& { return cloud.tags[static_cast<std::size_t>(order[pos])]; };

    // Optimal aggregate per suffix. For Sum/SumOfSquares the (cost, lines)
    // pair is minimized lexicographically with the smallest break winning ties,
    // which yields the lexicographically smallest break sequence overall.
    for (int k = n - 1; k >= 0; --k) {
        LineAccumulator line;
        for (int j = k + 1; j <= n; ++j) {
            line.add(tag_at(j - 1));
            const std::int64_t b = line.badness(cloud.target_width, cloud.space_width);
            if (b == kInfinite) break;
            const std::int64_t cost = combine(table.cost[j], b, agg);
            const int lines = table.lines[j] + 1;
            if (cost < table.cost[k] || (cost == table.cost[k] && lines < table.lines[k])) {
                table.cost[k] = cost;
                table.lines[k] = lines;
                table.next[k] = j;
            }
        }
    }

    if (agg != Aggregate::Max || n == 0) return table;

    // Under Max a suffix need not be optimal inside a globally optimal
    // solution, so fewest lines is found separately: every line may use
    // badness up to the optimum, and the line count is minimized.
    const std::int64_t bound = table.cost[0];
    std::vector<int> lines(static_cast<std::size_t>(n) + 1, std::numeric_limits<int>::max());
    std::vector<int> next(static_cast<std::size_t>(n) + 1, n);
    lines[n] = 0;
    for (int k = n - 1; k >= 0; --k) {
        LineAccumulator line;
        for (int j = k + 1; j <= n; ++j) {
            line.add(tag_at(j - 1));
            const std::int64_t b = line.badness(cloud.target_width, cloud.space_width);
            if (b == kInfinite) break;
            if (b > bound || lines[j] == std::numeric_limits<int>::max()) continue;
            if (lines[j] + 1 < lines[k]) {
                lines[k] = lines[j] + 1;
                next[k] = j;
            }
        }
    }
    table.lines = std::move(lines);
    table.next = std::move(next);
    return table;
}

LineLayout layout_from_table(const BreakTable& table, std::span<const int> order) {
    LineLayout layout;
    const int n = static_cast<int>(order.size());
    for (int k = 0; k < n;) {
        const int j = table.next[k];
        if (j <= k || j > n) throw InternalError("break table chain is broken");
        layout.lines.emplace_back(order.begin() + k, order.begin() + j);
        k = j;
    }
    return layout;
}

LineLayout dp_break(const Cloud& cloud, std::span<const int> order, Aggregate agg) {
    const BreakTable table = compute_break_table(cloud, order, agg);
    return layout_from_table(table, order);
}

}  // namespace tagcloud
