#pragma once

// Brute-force reference implementations used only by the tests. These stay
// deliberately naive and independent of the library's optimized code paths.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "errgraph/errgraph.hpp"

namespace oracle {

using errgraph::ExactInt;
using errgraph::Permutation;

// Every permutation of degree n, by filtering all image vectors.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// Plain BFS distances from a source over an adjacency list.
inline std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

inline std::vector<std::vector<int>> adjacency_of(const errgraph::ExplicitGraph& g) {
    std::vector<std::vector<int>> adj(g.size());
    for (int v = 0; v < g.size(); ++v)
        for (int w : g.neighbors(v)) adj[v].push_back(w);
    return adj;
}

// max over all unordered pairs x != y of |B_r(x) n B_r(y)|, straight from
// an all-pairs BFS distance matrix.
struct BruteN {
    ExactInt value;
    std::map<int, ExactInt> per_distance;
};

inline BruteN brute_n(const errgraph::ExplicitGraph& g, int r) {
    auto adj = adjacency_of(g);
    int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) dist[v] = bfs(adj, v);
    BruteN res{0, {}};
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (dist[x][y] < 0 || dist[x][y] > 2 * r) continue;
            ExactInt c = 0;
            for (int z = 0; z < n; ++z)
                if (dist[x][z] >= 0 && dist[x][z] <= r && dist[y][z] >= 0 && dist[y][z] <= r)
                    ++c;
            int s = dist[x][y];
            auto it = res.per_distance.find(s);
            if (it == res.per_distance.end())
                res.per_distance[s] = c;
            else if (c > it->second)
                it->second = c;
            if (c > res.value) res.value = c;
        }
    return res;
}

// True iff the graph is complete multipartite with equal part sizes
// (isomorphic to some O^t_m): non-adjacency must be an equivalence
// relation whose classes all have one size.
inline bool is_complete_multipartite(const errgraph::ExplicitGraph& g) {
    int n = g.size();
    std::vector<int> part(n, -1);
    std::vector<int> sizes;
    for (int v = 0; v < n; ++v) {
        if (part[v] >= 0) continue;
        int id = static_cast<int>(sizes.size());
        int size = 0;
        for (int w = 0; w < n; ++w)
            if (w == v || (!g.adjacent(v, w))) {
                if (part[w] >= 0) return false;
                part[w] = id;
                ++size;
            }
        sizes.push_back(size);
    }
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if ((part[v] == part[w]) == g.adjacent(v, w)) return false;
    for (int s : sizes)
        if (s != sizes[0]) return false;
    return sizes.size() >= 2 && sizes[0] >= 2;
}

// Number of ordered i-tuples of transpositions multiplying to p.
inline long long count_transposition_words(const Permutation& p, int i) {
    int n = p.n();
    std::vector<Permutation> gens;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto t = Permutation::identity(n);
            gens.push_back(errgraph::apply_transposition(t, {a, b}));
        }
    // counts of products of exactly j generators
    std::map<Permutation, long long> cur{{Permutation::identity(n), 1}};
    for (int j = 0; j < i; ++j) {
        std::map<Permutation, long long> next;
        for (const auto& [q, c] : cur)
            for (const auto& t : gens) next[q * t] += c;
        cur = std::move(next);
    }
    auto it = cur.find(p);
    return it == cur.end() ? 0 : it->second;
}

}  // namespace oracle
