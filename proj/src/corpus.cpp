#include "tagcloud/corpus.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "tagcloud/error.hpp"

namespace tagcloud {

namespace {

bool ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

TokenStream tokenize_words(std::string_view text) {
    TokenStream words;
    std::string current;
    for (char c : text) {
        if (ascii_alpha(c)) {
            current.push_back(ascii_lower(c));
        } else if (!current.empty()) {
            words.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

TokenStream tokenize_filter(std::string_view text) {
    TokenStream words = tokenize_words(text);
    std::erase_if(words, [](const std::string& w) { return w.size() < kMinWordLength; });
    return words;
}

int importance(std::int64_t f, std::int64_t r, std::int64_t t) {
    if (!(r >= 1 && r <= t && t <= f))
        throw InvalidInput("importance: requires f >= t >= r >= 1 (f=" + std::to_string(f) +
                           ", r=" + std::to_string(r) + ", t=" + std::to_string(t) + ")");
    return static_cast<int>((10 * (t - r)) / (f - r + 1));
}

TagCloudBuild build_tag_cloud(const TokenStream& stream, std::size_t k, int target_width, int space_width) {
    if (k < 1) throw InvalidInput("build_tag_cloud: k must be at least 1");
    std::unordered_map<std::string, std::int64_t> counts;
    for (const auto& word : stream) ++counts[word];

    std::vector<WordCount> ranked;
    ranked.reserve(counts.size());
    for (auto& [word, count] : counts) ranked.push_back({word, count});
    std::sort(ranked.begin(), ranked.end(), [](const WordCount& a, const WordCount& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.word < b.word;
    });

    TagCloudBuild out;
    out.fewer_than_k = ranked.size() < k;
    if (ranked.size() > k) ranked.resize(k);
    out.retained = ranked;
    out.cloud.target_width = target_width;
    out.cloud.space_width = space_width;
    if (ranked.empty()) return out;

    const std::int64_t f = ranked.front().count;
    const std::int64_t r = ranked.back().count;
    for (const WordCount& wc : ranked) out.cloud.tags.push_back(estimate_box(wc.word, importance(f, r, wc.count)));
    return out;
}

RelationGraph cooccurrence_graph(const TokenStream& stream, const std::vector<std::string>& retained) {
    std::unordered_map<std::string_view, int> index;
    for (std::size_t i = 0; i < retained.size(); ++i) index.emplace(retained[i], static_cast<int>(i));

    std::map<std::pair<int, int>, std::int64_t> pairs;
    for (std::size_t i = 1; i < stream.size(); ++i) {
        const auto a = index.find(stream[i - 1]);
        const auto b = index.find(stream[i]);
        if (a == index.end() || b == index.end() || a->second == b->second) continue;
        ++pairs[std::minmax(a->second, b->second)];
    }
    std::vector<Edge> edges;
    for (const auto& [pair, count] : pairs)
        if (count >= 2) edges.push_back({pair.first, pair.second, static_cast<double>(count)});
    return RelationGraph(retained.size(), edges);
}

CloudDocument ingest_text(std::string_view text, const IngestOptions& options) {
    const TokenStream filtered = tokenize_filter(text);
    TagCloudBuild built = build_tag_cloud(filtered, options.k, options.target_width, options.space_width);
    if (built.cloud.tags.empty()) throw InvalidInput("ingest: text contains no words of six letters or more");

    std::vector<std::string> labels;
    labels.reserve(built.retained.size());
    for (const auto& wc : built.retained) labels.push_back(wc.word);

    CloudDocument doc;
    doc.graph = options.adjacency == Adjacency::Filtered ? cooccurrence_graph(filtered, labels)
                                                         : cooccurrence_graph(tokenize_words(text), labels);
    doc.cloud = std::move(built.cloud);
    return doc;
}

}  // namespace tagcloud
