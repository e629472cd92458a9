#pragma once

#include <cstdint>

#include "tagcloud/exec.hpp"
#include "tagcloud/floorplan.hpp"
#include "tagcloud/mincut.hpp"

namespace tagcloud {

struct MincutOptions {
    int shape_variants = 3;  // 1: default shapes only
    int max_iterations = 8;
    Exec exec = Exec::Parallel;
};

struct MincutResult {
    SlicingTree tree;
    PlacedCloud placed;
    int iterations = 0;
    double width_bias = 1.0;  // bias of the returned attempt
};

/// Min-cut placement with floorplan sizing. Rebuilds the slicing tree with a
/// smaller width bias (x0.85) when the result overflows the target width and
/// a larger one (x1.15) when it is under 75% of it, up to max_iterations.
/// Returns the widest attempt within the target, or the narrowest if none fits.
MincutResult layout_mincut(const Cloud& cloud, const RelationGraph& graph, std::uint64_t seed,
                           const MincutOptions& options = {});

}  // namespace tagcloud
