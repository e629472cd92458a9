#pragma once

#include <string>
#include <string_view>

#include "tagcloud/mincut.hpp"
#include "tagcloud/model.hpp"

namespace tagcloud {

struct HtmlOptions {
    std::string title = "Tag cloud";
    /// When non-empty, each tag links to this URL with "{label}" replaced.
    std::string href_template;
};

std::string html_escape(std::string_view text);

/// Classes tag0..tag9 (8 + 4v pt), the zero-spacing table reset and the
/// shape-variant classes.
std::string emit_css();

/// Inline markup only: spans separated by single spaces, <br/> between lines.
std::string inline_fragment(const LineLayout& layout, const Cloud& cloud, const HtmlOptions& options = {});

/// Nested 2-cell tables: vertical cut = one row of two cells, horizontal cut
/// = two rows of one cell. A lone leaf is a bare span.
std::string nested_table_fragment(const SlicingTree& tree, const PlacedCloud& placed, const Cloud& cloud,
                                  const HtmlOptions& options = {});

/// Standalone HTML5 documents with the style sheet embedded.
std::string emit_inline(const LineLayout& layout, const Cloud& cloud, const HtmlOptions& options = {});
std::string emit_nested_tables(const SlicingTree& tree, const PlacedCloud& placed, const Cloud& cloud,
                               const HtmlOptions& options = {});

}  // namespace tagcloud
