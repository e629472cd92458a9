#include "tagcloud/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "tagcloud/error.hpp"

namespace tagcloud {

namespace {

std::size_t utf8_length(std::string_view text) {
    return static_cast<std::size_t>(std::count_if(text.begin(), text.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0u) != 0x80u;
    }));
}

}  // namespace

int font_size_pt(int weight) { return 8 + 4 * weight; }

TagBox estimate_box(std::string_view label, int weight) {
    if (label.empty()) throw InvalidInput("estimate_box: empty label");
    if (weight < kMinWeight || weight > kMaxWeight)
        throw InvalidInput("estimate_box: weight " + std::to_string(weight) + " outside 0..9");

    // height = ceil(1.25 * pt * 96/72) = ceil(5 * pt / 3)
    // width  = ceil(0.55 * pt * 96/72 * chars) = ceil(11 * pt * chars / 15)
    const std::int64_t pt = font_size_pt(weight);
    const auto chars = static_cast<std::int64_t>(utf8_length(label));
    TagBox box;
    box.label = std::string(label);
    box.weight = weight;
    box.height = static_cast<int>((5 * pt + 2) / 3);
    box.width = static_cast<int>((11 * pt * chars + 14) / 15);
    return box;
}

RelationGraph::RelationGraph(std::size_t tag_count, const std::vector<Edge>& edges)
    : adjacency_(tag_count) {
    std::map<std::pair<int, int>, double> merged;
    const auto n = static_cast<int>(tag_count);
    for (const Edge& e : edges) {
        if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n)
            throw InvalidInput("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") index out of range");
        if (e.a == e.b) throw InvalidInput("self edge on tag " + std::to_string(e.a));
        if (!(e.strength > 0.0) || !std::isfinite(e.strength))
            throw InvalidInput("edge strength must be positive and finite");
        merged[std::minmax(e.a, e.b)] += e.strength;
    }
    edges_.reserve(merged.size());
    for (const auto& [pair, strength] : merged) {
        edges_.push_back({pair.first, pair.second, strength});
        adjacency_[static_cast<std::size_t>(pair.first)].push_back({pair.second, strength});
        adjacency_[static_cast<std::size_t>(pair.second)].push_back({pair.first, strength});
    }
}

bool RelationGraph::integral() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.strength == std::floor(e.strength); });
}

std::vector<std::string> validate_cloud(const Cloud& cloud) {
    std::vector<std::string> violations;
    if (cloud.tags.empty()) violations.emplace_back("tags non-empty: cloud has no tags");
    if (cloud.target_width < 1)
        violations.push_back("target width: " + std::to_string(cloud.target_width) + " < 1");
    if (cloud.space_width < 0)
        violations.push_back("space width: " + std::to_string(cloud.space_width) + " < 0");

    for (std::size_t i = 0; i < cloud.tags.size(); ++i) {
        const TagBox& tag = cloud.tags[i];
        const std::string where = "tag " + std::to_string(i) + " '" + tag.label + "'";
        if (tag.weight < kMinWeight || tag.weight > kMaxWeight)
            violations.push_back("weight range: " + where + " has weight " + std::to_string(tag.weight));
        if (tag.width < 1 || tag.height < 1)
            violations.push_back("positive size: " + where + " is " + std::to_string(tag.width) + "x" +
                                 std::to_string(tag.height));
        const double area = static_cast<double>(tag.area());
        for (const Size& s : tag.shapes) {
            if (s.width < 1 || s.height < 1) {
                violations.push_back("positive size: " + where + " has a non-positive alternative shape");
                continue;
            }
            if (area > 0 && std::abs(static_cast<double>(s.area()) - area) > kShapeAreaTolerance * area)
                violations.push_back("shape area: " + where + " alternative " + std::to_string(s.width) + "x" +
                                     std::to_string(s.height) + " deviates more than 15% in area");
        }
    }
    return violations;
}

void require_valid(const Cloud& cloud) {
    const auto violations = validate_cloud(cloud);
    if (violations.empty()) return;
    std::ostringstream out;
    out << "invalid cloud:";
    for (const auto& v : violations) out << "\n  " << v;
    throw InvalidInput(out.str());
}

void require_permutation(const std::vector<int>& order, std::size_t n) {
    if (order.size() != n) throw InvalidInput("order length does not match tag count");
    std::vector<bool> seen(n, false);
    for (int idx : order) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= n || seen[static_cast<std::size_t>(idx)])
            throw InvalidInput("order is not a permutation of the tag indices");
        seen[static_cast<std::size_t>(idx)] = true;
    }
}

std::vector<int> identity_order(std::size_t n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

}  // namespace tagcloud
