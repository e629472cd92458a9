#pragma once

#include <string>
#include <vector>

#include "tagcloud/model.hpp"

namespace tagcloud {

/// Bounding-box area in kilopixels.
double bbox_area(const PlacedCloud& placed);

/// Sum over edges of strength times the Euclidean distance between the two
/// tags' lower-left corners, (x, y + height) in screen coordinates.
/// Throws InvalidInput when an edge endpoint is not placed.
double weighted_distance(const PlacedCloud& placed, const RelationGraph& graph);

/// Lines stacked top to bottom, each as tall as its tallest tag; tags
/// left-aligned, space_width apart and top-aligned. The box is target_width
/// wide unless a solo overfull line is wider.
PlacedCloud layout_to_placement(const LineLayout& layout, const Cloud& cloud);

struct PlacementCheck {
    /// Require `gap` free pixels left of every tag with x > 0.
    int left_gap = 0;
    /// Optional width bound; tags placed alone in their row may exceed it.
    int max_width = 0;
};

/// Structural problems with a placement: overlaps, tags missing or repeated,
/// tags outside the box, gap violations. Empty means sound.
std::vector<std::string> placement_violations(const PlacedCloud& placed, const Cloud& cloud,
                                              const PlacementCheck& check = {});

/// Problems with a line layout: tags missing or repeated, empty lines, or
/// multi-tag lines over the target width.
std::vector<std::string> layout_violations(const LineLayout& layout, const Cloud& cloud);

}  // namespace tagcloud
