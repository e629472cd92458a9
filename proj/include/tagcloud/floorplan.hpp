#pragma once

#include <vector>

#include "tagcloud/mincut.hpp"
#include "tagcloud/model.hpp"

namespace tagcloud {

/// Horizontal white space required on the left of a tag not on the left edge.
inline constexpr int kTagGap = 2;

/// One realizable (width, height) of a node; `first`/`second` index the
/// child shapes that produced it (-1 at leaves).
struct ShapeOption {
    int width = 0;
    int height = 0;
    int first = -1;
    int second = -1;

    Size size() const { return {width, height}; }
};

/// Sorted by strictly increasing width and strictly decreasing height.
using ShapeList = std::vector<ShapeOption>;

/// Keeps the non-dominated entries, ordered by width.
ShapeList prune_dominated(std::vector<ShapeOption> shapes);

bool is_shape_list(const ShapeList& shapes);

/// The default shape plus stretched and squashed variants of near-equal
/// area: widths round(w*f) for factors spread over [0.85, 1.15], heights
/// round(w*h / width). Variants outside +-15% area or dominated are dropped.
ShapeList gen_shape_options(const TagBox& tag, int variants = 3);

/// Shapes a leaf may take: its default shape when variants == 1, the default
/// plus the tag's own alternatives when it carries any, otherwise generated.
ShapeList leaf_shape_options(const TagBox& tag, int variants);

/// Side-by-side composition with the 2-pixel gap (vertical cut).
ShapeList combine_vertical(const ShapeList& left, const ShapeList& right);
/// Stacked composition, no gap (horizontal cut).
ShapeList combine_horizontal(const ShapeList& top, const ShapeList& bottom);

/// Bottom-up shape-function merge. `leaf_shapes` is indexed by tag; the
/// result by tree node.
std::vector<ShapeList> combine_shapes(const SlicingTree& tree, const std::vector<ShapeList>& leaf_shapes);

/// Index of the root shape to realize: minimum area among widths within
/// `target_width` (ties: lower height), else the narrowest.
std::size_t select_root_shape(const ShapeList& root, int target_width);

/// Chooses the root shape, follows provenance down the tree and places every
/// tag flush to the top-left of its region. Throws InternalError when a
/// recorded provenance does not reproduce its shape.
PlacedCloud select_and_place(const SlicingTree& tree, const std::vector<ShapeList>& node_shapes, int target_width);

}  // namespace tagcloud
