#include "tagcloud/html.hpp"

#include <sstream>

#include "tagcloud/error.hpp"

namespace tagcloud {

namespace {

std::string shape_class(const TagBox& tag, const Placement* placement) {
    if (placement == nullptr || placement->width == tag.width) return "shape-default";
    return placement->width < tag.width ? "shape-narrow" : "shape-wide";
}

std::string tag_element(const TagBox& tag, const std::string& extra_class, const HtmlOptions& options) {
    std::string span = "<span class=\"tag" + std::to_string(tag.weight);
    if (!extra_class.empty()) span += " " + extra_class;
    span += "\">" + html_escape(tag.label) + "</span>";
    if (options.href_template.empty()) return span;
    std::string href = options.href_template;
    const std::string key = "{label}";
    for (auto pos = href.find(key); pos != std::string::npos; pos = href.find(key, pos + tag.label.size()))
        href.replace(pos, key.size(), tag.label);
    return "<a href=\"" + html_escape(href) + "\">" + span + "</a>";
}

std::string document(const std::string& body, const Cloud& cloud, const std::string& layout_class,
                     const HtmlOptions& options) {
    std::ostringstream out;
    out << "<!DOCTYPE html>\n"
        << "<html>\n"
        << "<head>\n"
        << "<meta charset=\"utf-8\"/>\n"
        << "<title>" << html_escape(options.title) << "</title>\n"
        << "<style>\n"
        << emit_css() << "</style>\n"
        << "</head>\n"
        << "<body>\n"
        << "<div class=\"tagcloud " << layout_class << "\" style=\"width:" << cloud.target_width << "px\">\n"
        << body << "</div>\n"
        << "</body>\n"
        << "</html>\n";
    return out.str();
}

}  // namespace

std::string html_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&#39;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string emit_css() {
    std::ostringstream css;
    css << ".tagcloud { font-family: Arial, sans-serif; line-height: 1.25; }\n";
    for (int v = kMinWeight; v <= kMaxWeight; ++v) css << ".tag" << v << " { font-size: " << font_size_pt(v) << "pt; }\n";
    css << "table.slicing { border-collapse: separate; border-spacing: 0px; margin: 0; }\n"
        << "table.slicing td { padding: 0; vertical-align: top; text-align: left; white-space: nowrap; }\n"
        << "table.slicing td + td { padding-left: 2px; }\n"
        // Stand-ins for font-stretch: narrow = about 15% narrower and taller,
        // wide = about 15% wider and shorter.
        << ".shape-default { }\n"
        << ".shape-narrow { font-stretch: condensed; letter-spacing: -0.05em; font-weight: bold; }\n"
        << ".shape-wide { font-stretch: expanded; letter-spacing: 0.08em; font-weight: lighter; }\n";
    return css.str();
}

std::string inline_fragment(const LineLayout& layout, const Cloud& cloud, const HtmlOptions& options) {
    std::string out;
    for (std::size_t l = 0; l < layout.lines.size(); ++l) {
        const auto& line = layout.lines[l];
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i > 0) out += ' ';
            out += tag_element(cloud.tags.at(static_cast<std::size_t>(line[i])), "", options);
        }
        if (l + 1 < layout.lines.size()) out += "<br/>";
        out += '\n';
    }
    return out;
}

std::string nested_table_fragment(const SlicingTree& tree, const PlacedCloud& placed, const Cloud& cloud,
                                  const HtmlOptions& options) {
    std::vector<const Placement*> by_tag(cloud.size(), nullptr);
    for (const Placement& p : placed.placements) by_tag.at(static_cast<std::size_t>(p.tag)) = &p;

    std::string out;
    const auto emit = [&](const auto& self, int id) -> void {
        const SlicingNode& node = tree.nodes.at(static_cast<std::size_t>(id));
        if (node.is_leaf()) {
            const TagBox& tag = cloud.tags.at(static_cast<std::size_t>(node.tag));
            out += tag_element(tag, shape_class(tag, by_tag[static_cast<std::size_t>(node.tag)]), options);
            out += '\n';
            return;
        }
        out += "<table class=\"slicing\">\n";
        if (node.cut == Axis::Vertical) {
            out += "<tr>\n<td>\n";
            self(self, node.first);
            out += "</td>\n<td>\n";
            self(self, node.second);
            out += "</td>\n</tr>\n";
        } else {
            out += "<tr>\n<td>\n";
            self(self, node.first);
            out += "</td>\n</tr>\n<tr>\n<td>\n";
            self(self, node.second);
            out += "</td>\n</tr>\n";
        }
        out += "</table>\n";
    };
    if (tree.nodes.empty()) throw InvalidInput("nested_table_fragment: empty tree");
    emit(emit, tree.root);
    return out;
}

std::string emit_inline(const LineLayout& layout, const Cloud& cloud, const HtmlOptions& options) {
    return document(inline_fragment(layout, cloud, options), cloud, "inline", options);
}

std::string emit_nested_tables(const SlicingTree& tree, const PlacedCloud& placed, const Cloud& cloud,
                               const HtmlOptions& options) {
    return document(nested_table_fragment(tree, placed, cloud, options), cloud, "floorplan", options);
}

}  // namespace tagcloud
