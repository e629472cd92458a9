#include "tagcloud/mincut_layout.hpp"

#include "tagcloud/error.hpp"

namespace tagcloud {

namespace {

constexpr double kShrink = 0.85;
constexpr double kGrow = 1.15;
constexpr double kLowerBand = 0.75;

bool better_attempt(const MincutResult& candidate, const MincutResult& incumbent, int target) {
    const int cw = candidate.placed.bbox.width;
    const int iw = incumbent.placed.bbox.width;
    const bool cfit = cw <= target;
    const bool ifit = iw <= target;
    if (cfit != ifit) return cfit;
    return cfit ? cw > iw : cw < iw;
}

}  // namespace

MincutResult layout_mincut(const Cloud& cloud, const RelationGraph& graph, std::uint64_t seed,
                           const MincutOptions& options) {
    require_valid(cloud);
    if (options.max_iterations < 1) throw InvalidInput("layout_mincut: max_iterations must be at least 1");

    std::vector<ShapeList> leaf_shapes;
    leaf_shapes.reserve(cloud.size());
    std::int64_t single_row = 0;
    for (const TagBox& tag : cloud.tags) {
        leaf_shapes.push_back(leaf_shape_options(tag, options.shape_variants));
        single_row += leaf_shapes.back().back().width + kTagGap;
    }
    single_row -= kTagGap;
    // Widening cannot help when even one row of the widest shapes is narrow.
    const bool can_widen = single_row >= kLowerBand * cloud.target_width;

    MincutResult best;
    bool have_best = false;
    double bias = 1.0;
    int iteration = 0;
    while (iteration < options.max_iterations) {
        ++iteration;
        MincutResult attempt;
        attempt.width_bias = bias;
        attempt.tree = build_slicing_tree(cloud, graph, seed, bias, options.exec);
        attempt.placed = select_and_place(attempt.tree, combine_shapes(attempt.tree, leaf_shapes), cloud.target_width);
        const int width = attempt.placed.bbox.width;
        const bool too_wide = width > cloud.target_width;
        const bool too_narrow = can_widen && width < kLowerBand * cloud.target_width;

        if (!have_best || better_attempt(attempt, best, cloud.target_width)) {
            best = std::move(attempt);
            have_best = true;
        }
        if (too_wide)
            bias *= kShrink;
        else if (too_narrow)
            bias *= kGrow;
        else
            break;
    }
    best.iterations = iteration;
    return best;
}

}  // namespace tagcloud
