#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "tagcloud/error.hpp"
#include "tagcloud/mincut.hpp"
#include "tagcloud/rng.hpp"

namespace tagcloud {

namespace {

struct LocalEdge {
    int u;
    int v;
    double strength;
};

// The group re-indexed 0..n-1 with only internal edges kept.
struct LocalGroup {
    int n = 0;
    std::vector<std::int64_t> area;
    std::vector<LocalEdge> edges;
    std::vector<std::vector<std::pair<int, double>>> adjacency;
    std::array<std::vector<double>, 2> penalty;  // [0]: cost when in A, [1]: when in B
    std::int64_t total_area = 0;
    std::int64_t max_area = 0;
};

LocalGroup make_local(std::span<const int> tags, const Cloud& cloud, const RelationGraph& graph,
                      std::span<const Pull> pulls, Axis axis) {
    if (!pulls.empty() && pulls.size() != tags.size())
        throw InvalidInput("bipartition: pulls must be empty or aligned with tags");
    LocalGroup g;
    g.n = static_cast<int>(tags.size());
    g.adjacency.resize(tags.size());
    g.penalty[0].assign(tags.size(), 0.0);
    g.penalty[1].assign(tags.size(), 0.0);
    std::vector<int> local(cloud.size(), -1);
    for (int i = 0; i < g.n; ++i) {
        const int tag = tags[static_cast<std::size_t>(i)];
        if (tag < 0 || static_cast<std::size_t>(tag) >= cloud.size() || local[static_cast<std::size_t>(tag)] >= 0)
            throw InvalidInput("bipartition: tag set has an invalid or repeated index");
        local[static_cast<std::size_t>(tag)] = i;
        const std::int64_t a = cloud.tags[static_cast<std::size_t>(tag)].area();
        g.area.push_back(a);
        g.total_area += a;
        g.max_area = std::max(g.max_area, a);
        if (!pulls.empty()) {
            g.penalty[0][static_cast<std::size_t>(i)] = pull_penalty(pulls[static_cast<std::size_t>(i)], axis, false);
            g.penalty[1][static_cast<std::size_t>(i)] = pull_penalty(pulls[static_cast<std::size_t>(i)], axis, true);
        }
    }
    for (const Edge& e : graph.edges()) {
        const int u = local[static_cast<std::size_t>(e.a)];
        const int v = local[static_cast<std::size_t>(e.b)];
        if (u < 0 || v < 0) continue;
        g.edges.push_back({u, v, e.strength});
        g.adjacency[static_cast<std::size_t>(u)].push_back({v, e.strength});
        g.adjacency[static_cast<std::size_t>(v)].push_back({u, e.strength});
    }
    return g;
}

double cut_of(const LocalGroup& g, const std::vector<std::uint8_t>& side) {
    double cut = 0.0;
    for (const LocalEdge& e : g.edges)
        if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) cut += e.strength;
    return cut;
}

double penalty_of(const LocalGroup& g, const std::vector<std::uint8_t>& side) {
    double p = 0.0;
    for (int i = 0; i < g.n; ++i) p += g.penalty[side[static_cast<std::size_t>(i)]][static_cast<std::size_t>(i)];
    return p;
}

Bipartition make_result(std::span<const int> tags, const LocalGroup& g, const std::vector<std::uint8_t>& side,
                        bool relaxed) {
    Bipartition out;
    for (int i = 0; i < g.n; ++i)
        (side[static_cast<std::size_t>(i)] ? out.part_b : out.part_a).push_back(tags[static_cast<std::size_t>(i)]);
    out.cut = cut_of(g, side);
    out.objective = out.cut + penalty_of(g, side);
    out.relaxed = relaxed;
    return out;
}

// ---- exhaustive ----

struct Candidate {
    bool found = false;
    bool balanced = false;
    std::int64_t imbalance = 0;
    double objective = 0.0;
    std::uint32_t key = 0;

    bool better_than(const Candidate& o) const {
        if (!o.found) return found;
        if (!found) return false;
        if (balanced != o.balanced) return balanced;
        if (!balanced && imbalance != o.imbalance) return imbalance < o.imbalance;
        if (objective != o.objective) return objective < o.objective;
        return key < o.key;
    }
};

Candidate evaluate_key(const LocalGroup& g, std::uint32_t key) {
    const int n = g.n;
    const auto in_b = [&](int i) { return ((key >> (n - 1 - i)) & 1u) != 0; };
    std::int64_t area_b = 0;
    double penalty = 0.0;
    for (int i = 0; i < n; ++i) {
        const bool b = in_b(i);
        if (b) area_b += g.area[static_cast<std::size_t>(i)];
        penalty += g.penalty[b ? 1 : 0][static_cast<std::size_t>(i)];
    }
    double cut = 0.0;
    for (const LocalEdge& e : g.edges)
        if (in_b(e.u) != in_b(e.v)) cut += e.strength;
    const std::int64_t area_a = g.total_area - area_b;
    Candidate c;
    c.found = true;
    c.balanced = std::max(area_a, area_b) <= 2 * std::min(area_a, area_b);
    c.imbalance = std::llabs(area_a - area_b);
    c.objective = cut + penalty;
    c.key = key;
    return c;
}

// ---- FM ----

class FmPass {
public:
    FmPass(const LocalGroup& g, std::vector<std::uint8_t> side) : g_(g), side_(std::move(side)) {
        bool integral = true;
        for (const LocalEdge& e : g_.edges) integral = integral && e.strength == std::floor(e.strength);
        for (int s = 0; s < 2; ++s)
            for (double p : g_.penalty[static_cast<std::size_t>(s)]) integral = integral && p == std::floor(p);
        scale_ = integral ? 1.0 : 1000.0;

        weights_.resize(static_cast<std::size_t>(g_.n));
        for (int v = 0; v < g_.n; ++v)
            for (const auto& [u, w] : g_.adjacency[static_cast<std::size_t>(v)])
                weights_[static_cast<std::size_t>(v)].push_back({u, scaled(w)});
        for (int s = 0; s < 2; ++s) {
            penalty_[static_cast<std::size_t>(s)].resize(static_cast<std::size_t>(g_.n));
            for (int v = 0; v < g_.n; ++v)
                penalty_[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] =
                    scaled(g_.penalty[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)]);
        }
        area_ = {0, 0};
        count_ = {0, 0};
        for (int v = 0; v < g_.n; ++v) {
            area_[side_[static_cast<std::size_t>(v)]] += g_.area[static_cast<std::size_t>(v)];
            ++count_[side_[static_cast<std::size_t>(v)]];
        }
    }

    // One pass; returns the (scaled) gain kept after rollback.
    std::int64_t run_pass() {
        const auto n = static_cast<std::size_t>(g_.n);
        gain_.assign(n, 0);
        locked_.assign(n, false);
        buckets_[0].clear();
        buckets_[1].clear();
        for (int v = 0; v < g_.n; ++v) {
            gain_[static_cast<std::size_t>(v)] = initial_gain(v);
            bucket_insert(v);
        }

        std::vector<int> moves;
        std::int64_t cumulative = 0;
        std::int64_t best_gain = 0;
        std::size_t best_len = 0;
        for (;;) {
            const int v = pick_move();
            if (v < 0) break;
            cumulative += gain_[static_cast<std::size_t>(v)];
            apply_move(v);
            moves.push_back(v);
            if (std::llabs(area_[0] - area_[1]) <= g_.max_area && cumulative > best_gain) {
                best_gain = cumulative;
                best_len = moves.size();
            }
        }
        for (std::size_t i = moves.size(); i > best_len; --i) flip(moves[i - 1]);
        return best_gain;
    }

    const std::vector<std::uint8_t>& side() const { return side_; }

private:
    std::int64_t scaled(double w) const { return static_cast<std::int64_t>(std::llround(w * scale_)); }

    std::int64_t initial_gain(int v) const {
        const auto s = side_[static_cast<std::size_t>(v)];
        std::int64_t gain = penalty_[s][static_cast<std::size_t>(v)] - penalty_[1 - s][static_cast<std::size_t>(v)];
        for (const auto& [u, w] : weights_[static_cast<std::size_t>(v)])
            gain += side_[static_cast<std::size_t>(u)] == s ? -w : w;
        return gain;
    }

    void bucket_insert(int v) {
        buckets_[side_[static_cast<std::size_t>(v)]][gain_[static_cast<std::size_t>(v)]].insert(v);
    }

    void bucket_erase(int v) {
        auto& bucket = buckets_[side_[static_cast<std::size_t>(v)]];
        auto it = bucket.find(gain_[static_cast<std::size_t>(v)]);
        it->second.erase(v);
        if (it->second.empty()) bucket.erase(it);
    }

    bool move_allowed(int v) const {
        const auto s = side_[static_cast<std::size_t>(v)];
        if (count_[s] <= 1) return false;
        const std::int64_t a = g_.area[static_cast<std::size_t>(v)];
        const std::int64_t from = area_[s] - a;
        const std::int64_t to = area_[1 - s] + a;
        return std::llabs(from - to) <= 2 * g_.max_area;
    }

    // Highest-gain legal move over both sides; ties go to the lower index.
    int pick_move() const {
        int best = -1;
        std::int64_t best_gain = 0;
        for (int s = 0; s < 2; ++s) {
            for (const auto& [gain, cells] : buckets_[static_cast<std::size_t>(s)]) {
                if (best >= 0 && gain < best_gain) break;
                int found = -1;
                for (int v : cells)
                    if (move_allowed(v)) {
                        found = v;
                        break;
                    }
                if (found < 0) continue;
                if (best < 0 || gain > best_gain || (gain == best_gain && found < best)) {
                    best = found;
                    best_gain = gain;
                }
                break;
            }
        }
        return best;
    }

    void flip(int v) {
        const auto s = side_[static_cast<std::size_t>(v)];
        const std::int64_t a = g_.area[static_cast<std::size_t>(v)];
        area_[s] -= a;
        area_[1 - s] += a;
        --count_[s];
        ++count_[1 - s];
        side_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(1 - s);
    }

    void apply_move(int v) {
        bucket_erase(v);
        locked_[static_cast<std::size_t>(v)] = true;
        const auto from = side_[static_cast<std::size_t>(v)];
        flip(v);
        for (const auto& [u, w] : weights_[static_cast<std::size_t>(v)]) {
            if (locked_[static_cast<std::size_t>(u)]) continue;
            bucket_erase(u);
            gain_[static_cast<std::size_t>(u)] += side_[static_cast<std::size_t>(u)] == from ? 2 * w : -2 * w;
            bucket_insert(u);
        }
    }

    const LocalGroup& g_;
    std::vector<std::uint8_t> side_;
    double scale_ = 1.0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> weights_;
    std::array<std::vector<std::int64_t>, 2> penalty_;
    std::array<std::int64_t, 2> area_{};
    std::array<int, 2> count_{};
    std::vector<std::int64_t> gain_;
    std::vector<bool> locked_;
    std::array<std::map<std::int64_t, std::set<int>, std::greater<>>, 2> buckets_;
};

// Random order, each tag to the lighter side: the difference never exceeds the largest area.
std::vector<std::uint8_t> balanced_start(const LocalGroup& g, Rng& rng) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) order[static_cast<std::size_t>(i)] = i;
    shuffle_in_place(std::span<int>(order), rng);
    std::vector<std::uint8_t> side(static_cast<std::size_t>(g.n), 0);
    std::int64_t area_a = 0;
    std::int64_t area_b = 0;
    for (int v : order) {
        if (area_b < area_a) {
            side[static_cast<std::size_t>(v)] = 1;
            area_b += g.area[static_cast<std::size_t>(v)];
        } else {
            area_a += g.area[static_cast<std::size_t>(v)];
        }
    }
    return side;
}

struct RunOutcome {
    std::vector<std::uint8_t> side;
    FmRun stats;
};

RunOutcome run_fm(const LocalGroup& g, std::vector<std::uint8_t> start) {
    RunOutcome out;
    out.stats.initial_objective = cut_of(g, start) + penalty_of(g, start);
    FmPass pass(g, std::move(start));
    while (pass.run_pass() > 0) ++out.stats.passes;
    ++out.stats.passes;
    out.side = pass.side();
    out.stats.final_objective = cut_of(g, out.side) + penalty_of(g, out.side);
    return out;
}

}  // namespace

double pull_penalty(const Pull& pull, Axis axis, bool in_b) {
    if (axis == Axis::Vertical) return in_b ? pull.left : pull.right;
    return in_b ? pull.top : pull.bottom;
}

Bipartition bipartition_exhaustive(std::span<const int> tags, const Cloud& cloud, const RelationGraph& graph,
                                   std::span<const Pull> pulls, Axis axis, Exec exec) {
    if (tags.size() < 2 || tags.size() > kExhaustiveLimit)
        throw InvalidInput("bipartition_exhaustive: needs 2..12 tags, got " + std::to_string(tags.size()));
    const LocalGroup g = make_local(tags, cloud, graph, pulls, axis);
    const auto last = static_cast<std::int64_t>((1u << g.n) - 1);  // exclusive: all tags in B

    Candidate best;
    if (exec == Exec::Parallel) {
#pragma omp parallel
        {
            Candidate local;
#pragma omp for schedule(static)
            for (std::int64_t key = 1; key < last; ++key) {
                const Candidate c = evaluate_key(g, static_cast<std::uint32_t>(key));
                if (c.better_than(local)) local = c;
            }
#pragma omp critical(tagcloud_exhaustive_merge)
            if (local.better_than(best)) best = local;
        }
    } else {
        for (std::int64_t key = 1; key < last; ++key) {
            const Candidate c = evaluate_key(g, static_cast<std::uint32_t>(key));
            if (c.better_than(best)) best = c;
        }
    }

    std::vector<std::uint8_t> side(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) side[static_cast<std::size_t>(i)] = (best.key >> (g.n - 1 - i)) & 1u;
    return make_result(tags, g, side, !best.balanced);
}

FmResult bipartition_fm(std::span<const int> tags, const Cloud& cloud, const RelationGraph& graph,
                        std::span<const Pull> pulls, Axis axis, int runs, std::uint64_t seed, Exec exec) {
    if (tags.size() < 2) throw InvalidInput("bipartition_fm: needs at least 2 tags");
    if (runs < 1) throw InvalidInput("bipartition_fm: runs must be at least 1");
    const LocalGroup g = make_local(tags, cloud, graph, pulls, axis);

    Rng rng(seed);
    std::vector<std::vector<std::uint8_t>> starts;
    starts.reserve(static_cast<std::size_t>(runs));
    for (int r = 0; r < runs; ++r) starts.push_back(balanced_start(g, rng));

    std::vector<RunOutcome> outcomes(static_cast<std::size_t>(runs));
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < runs; ++r)
            outcomes[static_cast<std::size_t>(r)] = run_fm(g, starts[static_cast<std::size_t>(r)]);
    } else {
        for (int r = 0; r < runs; ++r)
            outcomes[static_cast<std::size_t>(r)] = run_fm(g, starts[static_cast<std::size_t>(r)]);
    }

    FmResult result;
    for (int r = 0; r < runs; ++r) {
        result.runs.push_back(outcomes[static_cast<std::size_t>(r)].stats);
        if (outcomes[static_cast<std::size_t>(r)].stats.final_objective <
            outcomes[static_cast<std::size_t>(result.best_run)].stats.final_objective)
            result.best_run = r;
    }
    result.best = make_result(tags, g, outcomes[static_cast<std::size_t>(result.best_run)].side, false);
    return result;
}

Bipartition bipartition(std::span<const int> tags, const Cloud& cloud, const RelationGraph& graph,
                        std::span<const Pull> pulls, Axis axis, std::uint64_t seed, Exec exec) {
    if (tags.size() <= kExhaustiveLimit) return bipartition_exhaustive(tags, cloud, graph, pulls, axis, exec);
    return bipartition_fm(tags, cloud, graph, pulls, axis, 10, seed, exec).best;
}

std::vector<Pull> compute_pulls(std::span<const int> group, const RelationGraph& graph,
                                const std::unordered_map<int, Side>& placed) {
    std::vector<bool> inside(graph.tag_count(), false);
    for (int t : group) inside.at(static_cast<std::size_t>(t)) = true;
    std::vector<Pull> pulls(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) {
        for (const auto& nb : graph.neighbors(group[i])) {
            if (inside[static_cast<std::size_t>(nb.tag)]) continue;
            const auto it = placed.find(nb.tag);
            if (it == placed.end())
                throw InvalidInput("compute_pulls: external tag " + std::to_string(nb.tag) + " has no side");
            switch (it->second) {
                case Side::Left: pulls[i].left += nb.strength; break;
                case Side::Right: pulls[i].right += nb.strength; break;
                case Side::Top: pulls[i].top += nb.strength; break;
                case Side::Bottom: pulls[i].bottom += nb.strength; break;
            }
        }
    }
    return pulls;
}

}  // namespace tagcloud
