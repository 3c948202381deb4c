#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "errgraph/exact.hpp"
#include "errgraph/graph.hpp"
#include "errgraph/spaces.hpp"

namespace errgraph {

/// Distinct vertices claimed to lie in some B_r(x). Consistency is
/// checked by the reconstructors, never assumed.
template <GraphView G>
struct ObservationSet {
    std::vector<vertex_t<G>> vertices;
    int claimed_radius;
};

struct InconsistentObservations : std::runtime_error {
    InconsistentObservations() : std::runtime_error("no vertex covers all observations") {}
};

/// Draws `count` distinct vertices uniformly without replacement from
/// B_r(center); deterministic for a fixed seed (partial Fisher-Yates over
/// the ball in BFS enumeration order).
template <GraphView G>
ObservationSet<G> sample_observations(const G& g, const vertex_t<G>& center, int r,
                                      std::size_t count, std::uint64_t seed) {
    auto b = ball(g, center, r);
    if (count > b.size())
        throw std::invalid_argument("requested " + std::to_string(count) +
                                    " observations but |B_r| = " + std::to_string(b.size()));
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, b.size() - 1);
        std::swap(b[i], b[pick(rng)]);
    }
    b.resize(count);
    return {std::move(b), r};
}

/// Generic reconstructor: every vertex within distance r of all
/// observations, found by enumerating B_r of one observation and
/// filtering. The full candidate set is returned; a singleton means the
/// center is determined, which is guaranteed at N(Gamma,r)+1 observations.
template <GraphView G>
std::vector<vertex_t<G>> reconstruct_intersection(const G& g, const ObservationSet<G>& obs) {
    if (obs.vertices.empty()) throw std::invalid_argument("empty observation set");
    int r = obs.claimed_radius;
    std::vector<vertex_t<G>> candidates;
    for (const auto& v : ball(g, obs.vertices.front(), r)) {
        auto bv = ball_set(g, v, r);
        bool all = true;
        for (const auto& o : obs.vertices)
            if (!bv.count(o)) { all = false; break; }
        if (all) candidates.push_back(v);
    }
    if (candidates.empty()) throw InconsistentObservations();
    return candidates;
}

template <typename V>
struct DecodeResult {
    V value{};
    bool ambiguous = false;
};

/// Coordinatewise plurality over the observation matrix. A tied
/// coordinate falls back to intersection reconstruction restricted to the
/// tied symbols; the result is flagged ambiguous only if that still leaves
/// more than one candidate.
inline DecodeResult<std::uint64_t> reconstruct_majority_hamming(
    const HammingView& g, const ObservationSet<HammingView>& obs) {
    if (obs.vertices.empty()) throw std::invalid_argument("empty observation set");
    std::vector<std::vector<int>> words;
    for (auto v : obs.vertices) words.push_back(g.decode(v));
    std::vector<int> best(g.n);
    std::vector<std::vector<int>> tied(g.n);
    bool any_tie = false;
    for (int j = 0; j < g.n; ++j) {
        std::vector<int> freq(g.q, 0);
        for (auto& w : words) ++freq[w[j]];
        int top = *std::max_element(freq.begin(), freq.end());
        for (int a = 0; a < g.q; ++a)
            if (freq[a] == top) tied[j].push_back(a);
        best[j] = tied[j].front();
        if (tied[j].size() > 1) any_tie = true;
    }
    if (!any_tie) return {g.encode(best), false};
    auto candidates = reconstruct_intersection(g, obs);
    std::vector<std::uint64_t> compatible;
    for (auto c : candidates) {
        auto w = g.decode(c);
        bool ok = true;
        for (int j = 0; j < g.n && ok; ++j)
            ok = std::find(tied[j].begin(), tied[j].end(), w[j]) != tied[j].end();
        if (ok) compatible.push_back(c);
    }
    if (compatible.size() == 1) return {compatible.front(), false};
    if (compatible.empty()) {
        if (candidates.empty()) throw InconsistentObservations();
        return {candidates.front(), candidates.size() > 1};
    }
    return {compatible.front(), true};
}

/// Threshold rule on the Johnson graph: count occurrences of each element
/// across the observed w-subsets and output the w most frequent. A tie
/// crossing the cut falls back to intersection reconstruction, flagged
/// ambiguous only if that leaves several candidates.
inline DecodeResult<std::uint64_t> reconstruct_threshold_johnson(
    const JohnsonView& g, const ObservationSet<JohnsonView>& obs) {
    if (obs.vertices.empty()) throw std::invalid_argument("empty observation set");
    std::vector<std::pair<int, int>> freq(g.n);  // (-count, element): sort ascending
    for (int e = 0; e < g.n; ++e) freq[e] = {0, e};
    for (auto v : obs.vertices)
        for (int e = 0; e < g.n; ++e)
            if (v >> e & 1) --freq[e].first;
    std::stable_sort(freq.begin(), freq.end());
    bool cut_tie = freq[g.w - 1].first == freq[g.w].first;
    if (!cut_tie) {
        std::uint64_t out = 0;
        for (int i = 0; i < g.w; ++i) out |= std::uint64_t(1) << freq[i].second;
        return {out, false};
    }
    auto candidates = reconstruct_intersection(g, obs);
    if (candidates.size() == 1) return {candidates.front(), false};
    return {candidates.front(), true};
}

// ---------------------------------------------------------------------------
// Alphabet transposition channel (words over a finite alphabet; a single
// error swaps two coordinates).

using Word = std::vector<int>;

/// Least number of coordinate swaps transforming a into b, by BFS over
/// the orbit component. Words over different symbol multisets are
/// unreachable from each other.
inline int word_channel_distance(const Word& a, const Word& b, std::size_t budget = 1u << 20) {
    if (a.size() != b.size()) throw UnreachableError("different word lengths");
    {
        Word sa = a, sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) throw UnreachableError("different symbol multisets");
    }
    if (a == b) return 0;
    struct WordHash {
        std::size_t operator()(const Word& w) const {
            std::size_t h = 0xcbf29ce484222325ull;
            for (int v : w) {
                h ^= static_cast<std::size_t>(v);
                h *= 0x100000001b3ull;
            }
            return h;
        }
    };
    std::unordered_set<Word, WordHash> visited{a};
    std::vector<Word> frontier{a};
    int n = static_cast<int>(a.size());
    for (int d = 1; !frontier.empty(); ++d) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (w[i] == w[j]) continue;
                    Word u = w;
                    std::swap(u[i], u[j]);
                    if (u == b) return d;
                    if (visited.insert(u).second) {
                        if (visited.size() > budget)
                            throw InfeasibleError("word orbit exceeds budget");
                        next.push_back(std::move(u));
                    }
                }
        frontier = std::move(next);
    }
    throw UnreachableError("exhausted orbit without reaching target");
}

/// Coordinate action a^g: position j of the result holds the symbol of a
/// at position g(j).
inline Word apply_word_permutation(const Word& a, const std::vector<int>& g_images) {
    Word out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[g_images[j]];
    return out;
}

}  // namespace errgraph
