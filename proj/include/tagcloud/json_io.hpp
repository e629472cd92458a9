#pragma once

#include <filesystem>
#include <string>

#include "tagcloud/model.hpp"

namespace tagcloud {

struct CloudDocument {
    Cloud cloud;
    RelationGraph graph;
};

/// Parses the JSON cloud format:
///   {"target_width": int, "space_width": int,
///    "tags": [{"label": str, "weight": int, "width": int, "height": int}],
///    "edges": [{"a": int, "b": int, "strength": number}]}
/// "edges" and "space_width" (default 4) are optional; a tag may carry an
/// optional "shapes": [[w, h], ...] list. Throws InvalidInput.
CloudDocument parse_cloud_json(const std::string& text);
CloudDocument read_cloud_file(const std::filesystem::path& path);

std::string cloud_to_json(const Cloud& cloud, const RelationGraph& graph);
std::string placement_to_json(const PlacedCloud& placed, const Cloud& cloud);

}  // namespace tagcloud
