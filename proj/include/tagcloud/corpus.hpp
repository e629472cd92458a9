#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tagcloud/json_io.hpp"
#include "tagcloud/model.hpp"

namespace tagcloud {

/// Lowercase ASCII words, each at least six letters long.
using TokenStream = std::vector<std::string>;

inline constexpr std::size_t kMinWordLength = 6;

/// Maximal runs of ASCII letters, lowercased, with no length filter. Every
/// other byte (digits, punctuation, non-ASCII) separates words.
TokenStream tokenize_words(std::string_view text);

/// tokenize_words without words of five letters or fewer.
TokenStream tokenize_filter(std::string_view text);

/// floor(10 (t - r) / (f - r + 1)) for max frequency f, least retained
/// frequency r and tag frequency t. Requires f >= t >= r >= 1.
int importance(std::int64_t f, std::int64_t r, std::int64_t t);

struct WordCount {
    std::string word;
    std::int64_t count = 0;
};

struct TagCloudBuild {
    Cloud cloud;
    std::vector<WordCount> retained;  // aligned with cloud.tags
    bool fewer_than_k = false;
};

/// Keeps the k most frequent words (ties: lexicographic), weights them with
/// importance() and sizes them with estimate_box(). Tags appear in rank order.
TagCloudBuild build_tag_cloud(const TokenStream& stream, std::size_t k, int target_width = 550,
                              int space_width = 4);

/// Distance-0 co-occurrences: adjacent stream words that are both retained
/// and differ. Pairs seen at least twice become edges of that strength.
/// `retained[i]` is the label of tag i.
RelationGraph cooccurrence_graph(const TokenStream& stream, const std::vector<std::string>& retained);

/// Which stream adjacency co-occurrence is measured on.
enum class Adjacency {
    Filtered,  // after short-word removal
    Raw,       // in the unfiltered word sequence
};

struct IngestOptions {
    std::size_t k = 100;
    int target_width = 550;
    int space_width = 4;
    Adjacency adjacency = Adjacency::Filtered;
};

/// Text to cloud plus relation graph.
CloudDocument ingest_text(std::string_view text, const IngestOptions& options);

}  // namespace tagcloud
