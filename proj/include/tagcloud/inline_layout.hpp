#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tagcloud/model.hpp"

namespace tagcloud {

/// How per-line badnesses combine: l1 (sum), l2 (sum of squares, same argmin
/// as the l2 norm), l-infinity (maximum).
enum class Aggregate { Sum, SumOfSquares, Max };

Aggregate parse_aggregate(std::string_view name);  // "l1" | "l2" | "linf"
std::string_view aggregate_name(Aggregate agg);

/// Badness h*|slack| + sum((h - h_i) * w_i), with h the tallest tag and slack
/// the unused width after (k-1) spaces. Negative slack is only legal for a
/// single tag; a multi-tag overfull line throws InfeasibleLine.
std::int64_t line_badness(std::span<const Size> line, int target_width, int space_width);

std::int64_t aggregate(std::span<const std::int64_t> line_badnesses, Aggregate agg);

std::vector<std::int64_t> line_badnesses(const LineLayout& layout, const Cloud& cloud);
std::int64_t layout_badness(const LineLayout& layout, const Cloud& cloud, Aggregate agg);

/// Browser-style fill: a tag moves to a new line when it plus one space no
/// longer fits. A tag wider than the target gets a line to itself.
LineLayout greedy_break(const Cloud& cloud, std::span<const int> order);

/// Suffix form of the total-fit table. cost[k] is the optimal aggregate for
/// order[k..n); next[k] is the position where the first line of that optimum
/// ends; lines[k] its line count. cost[n] == 0, next[n] == n.
struct BreakTable {
    std::vector<std::int64_t> cost;
    std::vector<int> lines;
    std::vector<int> next;
};

BreakTable compute_break_table(const Cloud& cloud, std::span<const int> order, Aggregate agg);

/// Optimal line breaking for a fixed order. The last line is penalized like
/// any other and only solo lines may overflow. Among equal aggregates, fewer
/// lines win, then the lexicographically smallest break sequence.
/// O(n^2) time, O(n) space.
LineLayout dp_break(const Cloud& cloud, std::span<const int> order, Aggregate agg);

/// Lines implied by a break table.
LineLayout layout_from_table(const BreakTable& table, std::span<const int> order);

}  // namespace tagcloud
