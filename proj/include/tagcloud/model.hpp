#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tagcloud {

inline constexpr int kMinWeight = 0;
inline constexpr int kMaxWeight = 9;

/// Relative area tolerance for alternative tag shapes.
inline constexpr double kShapeAreaTolerance = 0.15;

struct Size {
    int width = 0;
    int height = 0;

    std::int64_t area() const { return std::int64_t{width} * height; }
    friend bool operator==(const Size&, const Size&) = default;
};

struct TagBox {
    std::string label;
    int weight = 0;
    int width = 1;
    int height = 1;
    /// Alternative renderings (stretched or squashed); may be empty.
    std::vector<Size> shapes;

    Size size() const { return {width, height}; }
    std::int64_t area() const { return std::int64_t{width} * height; }
};

struct Cloud {
    std::vector<TagBox> tags;
    int target_width = 550;
    int space_width = 4;

    std::size_t size() const { return tags.size(); }
};

struct Edge {
    int a = 0;
    int b = 0;
    double strength = 1.0;
};

/// Undirected weighted graph over tag indices. Construction merges parallel
/// edges by summing their strengths, so each unordered pair appears once.
class RelationGraph {
public:
    struct Neighbor {
        int tag;
        double strength;
    };

    RelationGraph() = default;
    RelationGraph(std::size_t tag_count, const std::vector<Edge>& edges);

    std::size_t tag_count() const { return adjacency_.size(); }
    /// Edges with a < b, sorted by (a, b).
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Neighbor>& neighbors(int tag) const { return adjacency_[static_cast<std::size_t>(tag)]; }
    bool empty() const { return edges_.empty(); }
    /// True when every strength is a whole number.
    bool integral() const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

/// Tag indices per line, in display order.
struct LineLayout {
    std::vector<std::vector<int>> lines;

    std::size_t line_count() const { return lines.size(); }
    friend bool operator==(const LineLayout&, const LineLayout&) = default;
};

struct Placement {
    int tag = 0;
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;

    int right() const { return x + width; }
    int bottom() const { return y + height; }
    friend bool operator==(const Placement&, const Placement&) = default;
};

/// Absolute positions, origin top-left, y growing downward.
/// Placements are ordered by tag index.
struct PlacedCloud {
    std::vector<Placement> placements;
    Size bbox;

    friend bool operator==(const PlacedCloud&, const PlacedCloud&) = default;
};

/// Deterministic text metrics used in place of browser measurement.
/// Font size for level v is 8 + 4v points, rendered at 96 DPI.
TagBox estimate_box(std::string_view label, int weight);

int font_size_pt(int weight);

/// Every violated TagBox/Cloud invariant, one message each; empty means valid.
std::vector<std::string> validate_cloud(const Cloud& cloud);

/// Throws InvalidInput listing the violations when the cloud is invalid.
void require_valid(const Cloud& cloud);

/// Throws InvalidInput unless `order` is a permutation of 0..n-1.
void require_permutation(const std::vector<int>& order, std::size_t n);

std::vector<int> identity_order(std::size_t n);

}  // namespace tagcloud
