#include "tagcloud/synth.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "tagcloud/error.hpp"

namespace tagcloud {

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int uniform_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

namespace {

std::string random_word(Rng& rng, int min_len, int max_len) {
    const int len = uniform_int(rng, min_len, max_len);
    std::string w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<char>('a' + uniform_below(rng, 26)));
    return w;
}

std::size_t sample_cdf(const std::vector<double>& cdf, Rng& rng) {
    const double u = uniform_unit(rng) * cdf.back();
    return static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
}

}  // namespace

std::string synthetic_corpus(const CorpusSpec& spec, std::uint64_t seed) {
    if (spec.topics < 1 || spec.words_per_topic < 1 || spec.min_sentence < 1 || spec.max_sentence < spec.min_sentence)
        throw InvalidInput("synthetic_corpus: bad spec");
    Rng rng(seed);
    std::set<std::string> used;
    std::vector<std::vector<std::string>> vocab(static_cast<std::size_t>(spec.topics));
    for (auto& topic : vocab) {
        while (static_cast<int>(topic.size()) < spec.words_per_topic) {
            std::string w = random_word(rng, 6, 11);
            if (used.insert(w).second) topic.push_back(std::move(w));
        }
    }
    std::vector<double> cdf;
    double acc = 0.0;
    for (int r = 0; r < spec.words_per_topic; ++r) {
        acc += 1.0 / std::pow(r + 1.0, spec.zipf_exponent);
        cdf.push_back(acc);
    }
    static const char* const kFiller[] = {"the", "and", "of", "to", "a", "in", "was", "his", "that", "it"};

    std::string text;
    for (int s = 0; s < spec.sentences; ++s) {
        const auto& topic = vocab[uniform_below(rng, vocab.size())];
        const int len = uniform_int(rng, spec.min_sentence, spec.max_sentence);
        for (int i = 0; i < len; ++i) {
            if (uniform_below(rng, 4) == 0) {
                text += kFiller[uniform_below(rng, std::size(kFiller))];
                text += ' ';
            }
            text += topic[sample_cdf(cdf, rng)];
            text += ' ';
        }
        text += ".\n";
    }
    return text;
}

Cloud synthetic_web_cloud(int n, std::uint64_t seed, int target_width) {
    if (n < 1) throw InvalidInput("synthetic_web_cloud: n must be positive");
    Rng rng(seed);
    Cloud cloud;
    cloud.target_width = target_width;
    cloud.space_width = 4;
    for (int i = 0; i < n; ++i) {
        // Most tags are light: weight = floor(10 * u^2).
        const double u = uniform_unit(rng);
        const int weight = std::min(kMaxWeight, static_cast<int>(10.0 * u * u));
        cloud.tags.push_back(estimate_box(random_word(rng, 3, 12), weight));
    }
    return cloud;
}

Cloud random_box_cloud(int n, int min_w, int max_w, int min_h, int max_h, int target_width, int space_width,
                       Rng& rng) {
    Cloud cloud;
    cloud.target_width = target_width;
    cloud.space_width = space_width;
    for (int i = 0; i < n; ++i) {
        TagBox t;
        t.label = "t" + std::to_string(i);
        t.weight = uniform_int(rng, 0, kMaxWeight);
        t.width = uniform_int(rng, min_w, max_w);
        t.height = uniform_int(rng, min_h, max_h);
        cloud.tags.push_back(std::move(t));
    }
    return cloud;
}

}  // namespace tagcloud
