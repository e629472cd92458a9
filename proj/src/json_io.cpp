#include "tagcloud/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tagcloud/error.hpp"

namespace tagcloud {

using nlohmann::json;

namespace {

int int_field(const json& obj, const char* key) {
    if (!obj.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw InvalidInput(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

CloudDocument parse_cloud_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidInput("cloud JSON must be an object");

    try {
        CloudDocument out;
        out.cloud.target_width = int_field(doc, "target_width");
        if (doc.contains("space_width")) out.cloud.space_width = int_field(doc, "space_width");
        if (!doc.contains("tags") || !doc.at("tags").is_array()) throw InvalidInput("'tags' must be an array");
        for (const json& t : doc.at("tags")) {
            TagBox tag;
            tag.label = t.at("label").get<std::string>();
            tag.weight = int_field(t, "weight");
            tag.width = int_field(t, "width");
            tag.height = int_field(t, "height");
            if (t.contains("shapes")) {
                for (const json& s : t.at("shapes")) tag.shapes.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
            }
            out.cloud.tags.push_back(std::move(tag));
        }
        std::vector<Edge> edges;
        if (doc.contains("edges")) {
            for (const json& e : doc.at("edges"))
                edges.push_back({int_field(e, "a"), int_field(e, "b"), e.at("strength").get<double>()});
        }
        require_valid(out.cloud);
        out.graph = RelationGraph(out.cloud.size(), edges);
        return out;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad cloud JSON: ") + e.what());
    }
}

CloudDocument read_cloud_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cloud_json(buf.str());
}

std::string cloud_to_json(const Cloud& cloud, const RelationGraph& graph) {
    json doc;
    doc["target_width"] = cloud.target_width;
    doc["space_width"] = cloud.space_width;
    json tags = json::array();
    for (const TagBox& t : cloud.tags) {
        json tag = {{"label", t.label}, {"weight", t.weight}, {"width", t.width}, {"height", t.height}};
        if (!t.shapes.empty()) {
            json shapes = json::array();
            for (const Size& s : t.shapes) shapes.push_back({s.width, s.height});
            tag["shapes"] = shapes;
        }
        tags.push_back(std::move(tag));
    }
    doc["tags"] = std::move(tags);
    json edges = json::array();
    for (const Edge& e : graph.edges()) edges.push_back({{"a", e.a}, {"b", e.b}, {"strength", e.strength}});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

std::string placement_to_json(const PlacedCloud& placed, const Cloud& cloud) {
    json doc;
    doc["bbox"] = {{"width", placed.bbox.width}, {"height", placed.bbox.height}};
    json items = json::array();
    for (const Placement& p : placed.placements) {
        items.push_back({{"tag", p.tag},
                         {"label", cloud.tags.at(static_cast<std::size_t>(p.tag)).label},
                         {"x", p.x},
                         {"y", p.y},
                         {"width", p.width},
                         {"height", p.height}});
    }
    doc["placements"] = std::move(items);
    return doc.dump(2) + "\n";
}

}  // namespace tagcloud
