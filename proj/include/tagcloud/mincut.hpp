#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "tagcloud/exec.hpp"
#include "tagcloud/model.hpp"

namespace tagcloud {

/// Each hyperedge is one resource's tag set.
struct Hypergraph {
    std::size_t tag_count = 0;
    std::vector<std::vector<int>> hyperedges;
};

/// Clique expansion: a hyperedge of size s contributes C(s,2) unit edges;
/// parallel contributions are summed by RelationGraph.
RelationGraph expand_hyperedges(const Hypergraph& h);

/// Number of pairwise edges before merging, sum of C(s,2).
std::size_t clique_edge_count(const Hypergraph& h);

/// Cut orientation. A vertical cut puts part A left of part B; a horizontal
/// cut puts part A above part B.
enum class Axis { Horizontal, Vertical };

enum class Side { Left, Right, Top, Bottom };

/// External attraction of one tag toward already-placed tags on each side.
struct Pull {
    double left = 0.0;
    double right = 0.0;
    double top = 0.0;
    double bottom = 0.0;

    friend bool operator==(const Pull&, const Pull&) = default;
};

struct Bipartition {
    std::vector<int> part_a;
    std::vector<int> part_b;
    double cut = 0.0;        // strength of edges crossing the split
    double objective = 0.0;  // cut plus pull penalty
    bool relaxed = false;    // no split met the balance rule
};

inline constexpr std::size_t kExhaustiveLimit = 12;

/// Penalty of tag `pull` landing in part A (false) or B (true) of a cut.
double pull_penalty(const Pull& pull, Axis axis, bool in_b);

/// Optimal split of at most 12 tags whose larger part's area is at most twice
/// the smaller's. Minimizes cut plus pull penalty; ties go to the
/// lexicographically smallest membership vector (tags[i] in B counts as 1).
/// When no split is balanced, the least-imbalanced split is returned with
/// `relaxed` set. `pulls` is empty or aligned with `tags`.
Bipartition bipartition_exhaustive(std::span<const int> tags, const Cloud& cloud, const RelationGraph& graph,
                                   std::span<const Pull> pulls, Axis axis, Exec exec = Exec::Parallel);

struct FmRun {
    double initial_objective = 0.0;
    double final_objective = 0.0;
    int passes = 0;
};

struct FmResult {
    Bipartition best;
    int best_run = 0;
    std::vector<FmRun> runs;
};

/// Fiduccia-Mattheyses with gain buckets, locking and best-prefix rollback,
/// best of `runs` random area-balanced starts. The returned split keeps the
/// area difference within the largest tag's area.
FmResult bipartition_fm(std::span<const int> tags, const Cloud& cloud, const RelationGraph& graph,
                        std::span<const Pull> pulls, Axis axis, int runs, std::uint64_t seed,
                        Exec exec = Exec::Parallel);

/// Routes to exhaustive search for up to 12 tags and to FM (10 runs) beyond.
Bipartition bipartition(std::span<const int> tags, const Cloud& cloud, const RelationGraph& graph,
                        std::span<const Pull> pulls, Axis axis, std::uint64_t seed, Exec exec = Exec::Parallel);

/// Sum of edge strengths from each group tag to external tags on each side.
/// Every external neighbor of the group must appear in `placed`; throws
/// InvalidInput otherwise.
std::vector<Pull> compute_pulls(std::span<const int> group, const RelationGraph& graph,
                                const std::unordered_map<int, Side>& placed);

struct SlicingNode {
    int tag = -1;  // leaf payload
    Axis cut = Axis::Horizontal;
    int first = -1;   // left or top child
    int second = -1;  // right or bottom child

    bool is_leaf() const { return first < 0; }
};

/// Binary slicing tree stored by node index; children always have larger
/// indices than their parent.
struct SlicingTree {
    std::vector<SlicingNode> nodes;
    int root = 0;

    std::vector<int> leaves() const;  // left-to-right / top-to-bottom
    std::size_t internal_count() const;
};

struct TreeBuildStats {
    int relaxed_splits = 0;
    int vertical_cuts = 0;
    int horizontal_cuts = 0;
};

/// Recursive min-cut decomposition. Each region carries an estimated size
/// (root: target_width * width_bias wide, total tag area / width tall). A
/// region is cut vertically when it is wider than tall and each part's
/// area-proportional width share still holds that part's widest tag;
/// otherwise horizontally.
SlicingTree build_slicing_tree(const Cloud& cloud, const RelationGraph& graph, std::uint64_t seed,
                               double width_bias, Exec exec = Exec::Parallel, TreeBuildStats* stats = nullptr);

}  // namespace tagcloud
