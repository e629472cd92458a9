#include "tagcloud/floorplan.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tagcloud/error.hpp"

namespace tagcloud {

ShapeList prune_dominated(std::vector<ShapeOption> shapes) {
    std::stable_sort(shapes.begin(), shapes.end(), [](const ShapeOption& a, const ShapeOption& b) {
        if (a.width != b.width) return a.width < b.width;
        return a.height < b.height;
    });
    ShapeList out;
    for (const ShapeOption& s : shapes)
        if (out.empty() || s.height < out.back().height) out.push_back(s);
    return out;
}

bool is_shape_list(const ShapeList& shapes) {
    if (shapes.empty()) return false;
    for (std::size_t i = 1; i < shapes.size(); ++i)
        if (shapes[i].width <= shapes[i - 1].width || shapes[i].height >= shapes[i - 1].height) return false;
    return true;
}

ShapeList gen_shape_options(const TagBox& tag, int variants) {
    if (variants < 1) throw InvalidInput("gen_shape_options: variants must be at least 1");
    const double area = static_cast<double>(tag.area());
    std::vector<ShapeOption> options{{tag.width, tag.height}};
    for (int i = 0; i < variants; ++i) {
        if (variants == 1) break;
        const double factor = 0.85 + 0.30 * i / (variants - 1);
        const int w = std::max(1, static_cast<int>(std::lround(tag.width * factor)));
        const int h = std::max(1, static_cast<int>(std::lround(area / w)));
        const double deviation = std::abs(static_cast<double>(w) * h - area);
        if (deviation <= kShapeAreaTolerance * area) options.push_back({w, h});
    }
    return prune_dominated(std::move(options));
}

ShapeList leaf_shape_options(const TagBox& tag, int variants) {
    if (variants == 1) return {{tag.width, tag.height}};
    if (tag.shapes.empty()) return gen_shape_options(tag, variants);
    std::vector<ShapeOption> options{{tag.width, tag.height}};
    for (const Size& s : tag.shapes) options.push_back({s.width, s.height});
    return prune_dominated(std::move(options));
}

// Stockmeyer merge: walk both width-sorted lists from the narrow (tall) end,
// advancing whichever side currently sets the height.
ShapeList combine_vertical(const ShapeList& left, const ShapeList& right) {
    std::vector<ShapeOption> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < left.size() && j < right.size()) {
        out.push_back({left[i].width + kTagGap + right[j].width, std::max(left[i].height, right[j].height),
                       static_cast<int>(i), static_cast<int>(j)});
        if (left[i].height > right[j].height) {
            ++i;
        } else if (right[j].height > left[i].height) {
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return prune_dominated(std::move(out));
}

// Same walk from the wide end, advancing whichever side sets the width.
ShapeList combine_horizontal(const ShapeList& top, const ShapeList& bottom) {
    std::vector<ShapeOption> out;
    auto i = static_cast<std::ptrdiff_t>(top.size()) - 1;
    auto j = static_cast<std::ptrdiff_t>(bottom.size()) - 1;
    while (i >= 0 && j >= 0) {
        const ShapeOption& a = top[static_cast<std::size_t>(i)];
        const ShapeOption& b = bottom[static_cast<std::size_t>(j)];
        out.push_back({std::max(a.width, b.width), a.height + b.height, static_cast<int>(i), static_cast<int>(j)});
        if (a.width > b.width) {
            --i;
        } else if (b.width > a.width) {
            --j;
        } else {
            --i;
            --j;
        }
    }
    return prune_dominated(std::move(out));
}

std::vector<ShapeList> combine_shapes(const SlicingTree& tree, const std::vector<ShapeList>& leaf_shapes) {
    std::vector<ShapeList> node_shapes(tree.nodes.size());
    // Children always follow their parent, so a reverse sweep is post-order.
    for (std::size_t k = tree.nodes.size(); k-- > 0;) {
        const SlicingNode& node = tree.nodes[k];
        if (node.is_leaf()) {
            const ShapeList& own = leaf_shapes.at(static_cast<std::size_t>(node.tag));
            if (!is_shape_list(own)) throw InvalidInput("leaf shape list for tag " + std::to_string(node.tag) + " is invalid");
            node_shapes[k] = own;
            continue;
        }
        const ShapeList& a = node_shapes.at(static_cast<std::size_t>(node.first));
        const ShapeList& b = node_shapes.at(static_cast<std::size_t>(node.second));
        node_shapes[k] = node.cut == Axis::Vertical ? combine_vertical(a, b) : combine_horizontal(a, b);
    }
    return node_shapes;
}

std::size_t select_root_shape(const ShapeList& root, int target_width) {
    if (root.empty()) throw InternalError("empty root shape list");
    std::size_t best = root.size();
    for (std::size_t i = 0; i < root.size(); ++i) {
        if (root[i].width > target_width) break;
        if (best == root.size() || root[i].size().area() < root[best].size().area() ||
            (root[i].size().area() == root[best].size().area() && root[i].height < root[best].height))
            best = i;
    }
    return best == root.size() ? 0 : best;
}

PlacedCloud select_and_place(const SlicingTree& tree, const std::vector<ShapeList>& node_shapes, int target_width) {
    if (tree.nodes.empty() || node_shapes.size() != tree.nodes.size())
        throw InvalidInput("select_and_place: shapes do not match the tree");
    const ShapeList& root_list = node_shapes[static_cast<std::size_t>(tree.root)];
    const std::size_t chosen = select_root_shape(root_list, target_width);

    PlacedCloud placed;
    placed.bbox = root_list[chosen].size();

    struct Frame {
        int node;
        std::size_t shape;
        int x;
        int y;
    };
    std::vector<Frame> stack{{tree.root, chosen, 0, 0}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        const SlicingNode& node = tree.nodes[static_cast<std::size_t>(f.node)];
        const ShapeOption& shape = node_shapes[static_cast<std::size_t>(f.node)].at(f.shape);
        if (node.is_leaf()) {
            placed.placements.push_back({node.tag, f.x, f.y, shape.width, shape.height});
            continue;
        }
        const ShapeList& first_list = node_shapes[static_cast<std::size_t>(node.first)];
        const ShapeList& second_list = node_shapes[static_cast<std::size_t>(node.second)];
        if (shape.first < 0 || shape.second < 0 || static_cast<std::size_t>(shape.first) >= first_list.size() ||
            static_cast<std::size_t>(shape.second) >= second_list.size())
            throw InternalError("shape provenance out of range at node " + std::to_string(f.node));
        const ShapeOption& a = first_list[static_cast<std::size_t>(shape.first)];
        const ShapeOption& b = second_list[static_cast<std::size_t>(shape.second)];
        const bool vertical = node.cut == Axis::Vertical;
        const Size expected = vertical ? Size{a.width + kTagGap + b.width, std::max(a.height, b.height)}
                                       : Size{std::max(a.width, b.width), a.height + b.height};
        if (!(expected == shape.size()))
            throw InternalError("shape provenance does not reproduce node " + std::to_string(f.node));
        stack.push_back({node.first, static_cast<std::size_t>(shape.first), f.x, f.y});
        if (vertical)
            stack.push_back({node.second, static_cast<std::size_t>(shape.second), f.x + a.width + kTagGap, f.y});
        else
            stack.push_back({node.second, static_cast<std::size_t>(shape.second), f.x, f.y + a.height});
    }
    std::sort(placed.placements.begin(), placed.placements.end(),
              [](const Placement& l, const Placement& r) { return l.tag < r.tag; });
    return placed;
}

}  // namespace tagcloud
