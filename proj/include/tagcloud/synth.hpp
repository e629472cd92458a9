#pragma once

#include <cstdint>
#include <string>

#include "tagcloud/model.hpp"
#include "tagcloud/rng.hpp"

namespace tagcloud {

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(Rng& rng);

/// Integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

struct CorpusSpec {
    int topics = 4;
    int words_per_topic = 40;
    int sentences = 3000;
    int min_sentence = 4;
    int max_sentence = 12;
    double zipf_exponent = 1.1;
};

/// Plain text whose sentences each draw Zipf-ranked words from one planted
/// topic, interleaved with short filler words and punctuation.
std::string synthetic_corpus(const CorpusSpec& spec, std::uint64_t seed);

/// Cloud shaped like a scraped web tag cloud: `n` random labels with skewed
/// weights, sized by estimate_box.
Cloud synthetic_web_cloud(int n, std::uint64_t seed, int target_width = 550);

/// Tags with uniformly random boxes; labels are "t<index>".
Cloud random_box_cloud(int n, int min_w, int max_w, int min_h, int max_h, int target_width, int space_width,
                       Rng& rng);

}  // namespace tagcloud
