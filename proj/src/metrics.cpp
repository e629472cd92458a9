#include "tagcloud/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "tagcloud/error.hpp"

namespace tagcloud {

double bbox_area(const PlacedCloud& placed) {
    return static_cast<double>(placed.bbox.area()) / 1000.0;
}

double weighted_distance(const PlacedCloud& placed, const RelationGraph& graph) {
    std::vector<const Placement*> by_tag(graph.tag_count(), nullptr);
    for (const Placement& p : placed.placements)
        if (p.tag >= 0 && static_cast<std::size_t>(p.tag) < by_tag.size()) by_tag[static_cast<std::size_t>(p.tag)] = &p;
    double total = 0.0;
    for (const Edge& e : graph.edges()) {
        const Placement* a = by_tag[static_cast<std::size_t>(e.a)];
        const Placement* b = by_tag[static_cast<std::size_t>(e.b)];
        if (a == nullptr || b == nullptr)
            throw InvalidInput("weighted_distance: edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                               ") has an unplaced endpoint");
        const double dx = a->x - b->x;
        const double dy = a->bottom() - b->bottom();
        total += e.strength * std::hypot(dx, dy);
    }
    return total;
}

PlacedCloud layout_to_placement(const LineLayout& layout, const Cloud& cloud) {
    PlacedCloud placed;
    int y = 0;
    int width = cloud.target_width;
    for (const auto& line : layout.lines) {
        int x = 0;
        int height = 0;
        for (int idx : line) {
            const TagBox& t = cloud.tags.at(static_cast<std::size_t>(idx));
            placed.placements.push_back({idx, x, y, t.width, t.height});
            x += t.width + cloud.space_width;
            height = std::max(height, t.height);
        }
        width = std::max(width, x - cloud.space_width);
        y += height;
    }
    placed.bbox = {width, y};
    std::sort(placed.placements.begin(), placed.placements.end(),
              [](const Placement& l, const Placement& r) { return l.tag < r.tag; });
    return placed;
}

namespace {

bool overlaps(const Placement& a, const Placement& b) {
    return a.x < b.right() && b.x < a.right() && a.y < b.bottom() && b.y < a.bottom();
}

}  // namespace

std::vector<std::string> placement_violations(const PlacedCloud& placed, const Cloud& cloud,
                                              const PlacementCheck& check) {
    std::vector<std::string> out;
    std::vector<int> seen(cloud.size(), 0);
    for (const Placement& p : placed.placements) {
        if (p.tag < 0 || static_cast<std::size_t>(p.tag) >= cloud.size()) {
            out.push_back("placement for unknown tag " + std::to_string(p.tag));
            continue;
        }
        ++seen[static_cast<std::size_t>(p.tag)];
        if (p.x < 0 || p.y < 0 || p.right() > placed.bbox.width || p.bottom() > placed.bbox.height)
            out.push_back("tag " + std::to_string(p.tag) + " lies outside the bounding box");
        if (p.width < 1 || p.height < 1) out.push_back("tag " + std::to_string(p.tag) + " has an empty box");
    }
    for (std::size_t t = 0; t < seen.size(); ++t)
        if (seen[t] != 1) out.push_back("tag " + std::to_string(t) + " placed " + std::to_string(seen[t]) + " times");

    const auto& ps = placed.placements;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (overlaps(ps[i], ps[j]))
                out.push_back("tags " + std::to_string(ps[i].tag) + " and " + std::to_string(ps[j].tag) + " overlap");
        if (check.left_gap > 0 && ps[i].x > 0) {
            const Placement strip{ps[i].tag, ps[i].x - check.left_gap, ps[i].y, check.left_gap, ps[i].height};
            for (std::size_t j = 0; j < ps.size(); ++j)
                if (j != i && overlaps(strip, ps[j]))
                    out.push_back("tag " + std::to_string(ps[i].tag) + " lacks its left gap");
        }
        if (check.max_width > 0 && ps[i].right() > check.max_width) {
            const bool alone = std::none_of(ps.begin(), ps.end(), [&](const Placement& o) {
                return o.tag != ps[i].tag && o.y < ps[i].bottom() && ps[i].y < o.bottom();
            });
            if (!alone) out.push_back("tag " + std::to_string(ps[i].tag) + " exceeds the width bound");
        }
    }
    return out;
}

std::vector<std::string> layout_violations(const LineLayout& layout, const Cloud& cloud) {
    std::vector<std::string> out;
    std::vector<int> seen(cloud.size(), 0);
    for (std::size_t l = 0; l < layout.lines.size(); ++l) {
        const auto& line = layout.lines[l];
        if (line.empty()) out.push_back("line " + std::to_string(l) + " is empty");
        std::int64_t width = 0;
        for (int idx : line) {
            if (idx < 0 || static_cast<std::size_t>(idx) >= cloud.size()) {
                out.push_back("unknown tag " + std::to_string(idx));
                continue;
            }
            ++seen[static_cast<std::size_t>(idx)];
            width += cloud.tags[static_cast<std::size_t>(idx)].width;
        }
        if (line.size() > 1) {
            width += static_cast<std::int64_t>(line.size() - 1) * cloud.space_width;
            if (width > cloud.target_width) out.push_back("line " + std::to_string(l) + " overflows");
        }
    }
    for (std::size_t t = 0; t < seen.size(); ++t)
        if (seen[t] != 1) out.push_back("tag " + std::to_string(t) + " appears " + std::to_string(seen[t]) + " times");
    return out;
}

}  // namespace tagcloud
