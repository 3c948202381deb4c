#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errgraph/exact.hpp"

namespace errgraph {

/// A graph is implicit: a vertex type plus a neighbor oracle. Vertices
/// must be equality-comparable and hashable through the graph's hasher.
/// The neighbor relation is symmetric, loop-free and connected on the
/// universe the caller explores.
template <typename G>
concept GraphView = requires(const G& g, const typename G::vertex_type& v) {
    typename G::vertex_type;
    typename G::vertex_hash;
    { g.neighbors(v) } -> std::convertible_to<std::vector<typename G::vertex_type>>;
};

template <GraphView G>
using vertex_t = typename G::vertex_type;

template <GraphView G>
using vertex_set_t =
    std::unordered_set<vertex_t<G>, typename G::vertex_hash>;

/// Spheres S_0(x)..S_r(x) by breadth-first search. S_0 = {x}, spheres are
/// pairwise disjoint, their union is B_r(x).
template <GraphView G>
std::vector<std::vector<vertex_t<G>>> spheres_up_to(const G& g, const vertex_t<G>& x, int r) {
    if (r < 0) throw std::invalid_argument("need r >= 0");
    std::vector<std::vector<vertex_t<G>>> spheres{{x}};
    vertex_set_t<G> visited{x};
    for (int i = 0; i < r; ++i) {
        std::vector<vertex_t<G>> next;
        for (const auto& v : spheres.back())
            for (const auto& w : g.neighbors(v))
                if (visited.insert(w).second) next.push_back(w);
        if (next.empty()) break;  // ball saturated the component
        spheres.push_back(std::move(next));
    }
    return spheres;
}

template <GraphView G>
std::vector<vertex_t<G>> ball(const G& g, const vertex_t<G>& x, int r) {
    std::vector<vertex_t<G>> b;
    for (auto& s : spheres_up_to(g, x, r))
        for (auto& v : s) b.push_back(std::move(v));
    return b;
}

template <GraphView G>
vertex_set_t<G> ball_set(const G& g, const vertex_t<G>& x, int r) {
    vertex_set_t<G> out;
    for (const auto& v : ball(g, x, r)) out.insert(v);
    return out;
}

/// BFS distance from x to y; throws UnreachableError past the cap (or in a
/// different component).
template <GraphView G>
int distance(const G& g, const vertex_t<G>& x, const vertex_t<G>& y,
             int cap = std::numeric_limits<int>::max()) {
    if (x == y) return 0;
    vertex_set_t<G> visited{x};
    std::vector<vertex_t<G>> frontier{x};
    for (int d = 1; d <= cap && !frontier.empty(); ++d) {
        std::vector<vertex_t<G>> next;
        for (const auto& v : frontier)
            for (const auto& w : g.neighbors(v)) {
                if (w == y) return d;
                if (visited.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    throw UnreachableError("no path within the distance cap");
}

/// |B_r(x) cap B_r(y)|: enumerates the smaller ball and tests membership
/// against the other; the two balls are never both materialized as sets.
template <GraphView G>
ExactInt intersection_size(const G& g, const vertex_t<G>& x, const vertex_t<G>& y, int r) {
    if (x == y) throw std::invalid_argument("intersection_size needs x != y");
    auto bx = ball(g, x, r);
    auto by_set = ball_set(g, y, r);
    ExactInt count = 0;
    for (const auto& v : bx)
        if (by_set.count(v)) ++count;
    return count;
}

/// Checks the ball-decomposition identity at (x,y,r) verbatim as a set
/// identity: for s = d(x,y),
///   r >= s:  B_r(x) cap B_r(y) = B_{r-s}(x) u [(B_r(x) \ B_{r-s}(x)) cap B_r(y)]
///   r <  s:  B_r(x) cap B_r(y) = B_r(y) cap [B_r(x) \ B_{s-r-1}(x)]
template <GraphView G>
bool ball_decomposition_check(const G& g, const vertex_t<G>& x, const vertex_t<G>& y, int r) {
    if (x == y) throw std::invalid_argument("need x != y");
    int s = distance(g, x, y);
    auto bx = ball_set(g, x, r);
    auto by = ball_set(g, y, r);
    vertex_set_t<G> lhs;
    for (const auto& v : bx)
        if (by.count(v)) lhs.insert(v);
    vertex_set_t<G> rhs;
    if (r >= s) {
        auto inner = ball_set(g, x, r - s);
        rhs = inner;
        for (const auto& v : bx)
            if (!inner.count(v) && by.count(v)) rhs.insert(v);
    } else {
        auto inner = s - r - 1 >= 0 ? ball_set(g, x, s - r - 1) : vertex_set_t<G>{};
        for (const auto& v : by)
            if (bx.count(v) && !inner.count(v)) rhs.insert(v);
    }
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Explicit graphs: small graphs materialized with integer vertex ids.

struct ExplicitGraph {
    using vertex_type = int;
    using vertex_hash = std::hash<int>;

    std::vector<std::vector<int>> adj;

    int size() const { return static_cast<int>(adj.size()); }
    std::vector<int> vertices() const {
        std::vector<int> v(adj.size());
        for (int i = 0; i < size(); ++i) v[i] = i;
        return v;
    }
    std::vector<int> neighbors(int v) const { return adj[v]; }
    bool adjacent(int u, int v) const {
        return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
    }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    static ExplicitGraph empty(int n) {
        ExplicitGraph g;
        g.adj.resize(n);
        return g;
    }

    /// Adjacency-list text format, one vertex per line: "id: n1 n2 ...".
    std::string to_adjacency_text() const {
        std::ostringstream os;
        for (int v = 0; v < size(); ++v) {
            os << v << ':';
            auto ns = adj[v];
            std::sort(ns.begin(), ns.end());
            for (int w : ns) os << ' ' << w;
            os << '\n';
        }
        return os.str();
    }

    static ExplicitGraph from_adjacency_text(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        std::vector<std::pair<int, std::vector<int>>> rows;
        int maxv = -1;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("adjacency line missing ':'");
            int v = std::stoi(line.substr(0, colon));
            std::istringstream rest(line.substr(colon + 1));
            std::vector<int> ns;
            int w;
            while (rest >> w) ns.push_back(w);
            maxv = std::max(maxv, v);
            for (int u : ns) maxv = std::max(maxv, u);
            rows.emplace_back(v, std::move(ns));
        }
        ExplicitGraph g = ExplicitGraph::empty(maxv + 1);
        for (auto& [v, ns] : rows)
            for (int w : ns)
                if (v < w) g.add_edge(v, w);  // each undirected edge listed from both ends
        return g;
    }
};

/// Materializes the component of `start` of any implicit graph as an
/// ExplicitGraph, up to `cap` vertices.
template <GraphView G>
ExplicitGraph materialize(const G& g, const vertex_t<G>& start,
                          std::size_t cap = 1u << 20) {
    std::unordered_map<vertex_t<G>, int, typename G::vertex_hash> id;
    std::vector<vertex_t<G>> order{start};
    id.emplace(start, 0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (const auto& w : g.neighbors(order[head])) {
            if (id.emplace(w, static_cast<int>(order.size())).second) {
                order.push_back(w);
                if (order.size() > cap)
                    throw InfeasibleError("materialize: vertex cap " + std::to_string(cap) +
                                          " exceeded");
            }
        }
    }
    ExplicitGraph out = ExplicitGraph::empty(static_cast<int>(order.size()));
    for (std::size_t v = 0; v < order.size(); ++v)
        for (const auto& w : g.neighbors(order[v])) {
            int u = id.at(w);
            if (static_cast<int>(v) < u) out.add_edge(static_cast<int>(v), u);
        }
    return out;
}

/// All BFS distances from x in an explicit graph; -1 marks unreachable.
inline std::vector<int> bfs_distances(const ExplicitGraph& g, int x) {
    std::vector<int> dist(g.size(), -1);
    dist[x] = 0;
    std::deque<int> q{x};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

/// lambda = max triangles over an edge, mu = max common neighbors over a
/// distance-2 pair. Throws if the graph has diameter < 2 (mu undefined).
inline std::pair<ExactInt, ExactInt> lambda_mu(const ExplicitGraph& g) {
    ExactInt lambda = 0;
    std::optional<ExactInt> mu;
    for (int x = 0; x < g.size(); ++x) {
        auto dist = bfs_distances(g, x);
        std::unordered_set<int> nx(g.adj[x].begin(), g.adj[x].end());
        for (int y = x + 1; y < g.size(); ++y) {
            if (dist[y] != 1 && dist[y] != 2) continue;
            ExactInt common = 0;
            for (int w : g.adj[y])
                if (nx.count(w)) ++common;
            if (dist[y] == 1)
                lambda = std::max(lambda, common);
            else
                mu = mu ? std::max(*mu, common) : common;
        }
    }
    if (!mu) throw std::invalid_argument("mu undefined: graph has diameter < 2");
    return {lambda, *mu};
}

/// N(Gamma,r) with its per-distance table and a witness pair.
struct NResult {
    ExactInt value;
    std::map<int, ExactInt> per_distance;   // s -> N_s(Gamma,r), 1 <= s <= 2r
    std::pair<int, int> witness;            // (x,y) with |B_r(x) cap B_r(y)| = value
    int witness_distance = 0;
};

/// Exact N(Gamma,r) = max_{x != y} |B_r(x) cap B_r(y)| on an explicit
/// graph. With `vertex_transitive` the base point is fixed at vertex 0 and
/// y ranges over B_{2r}(0)\{0}.
inline NResult n_of_gamma(const ExplicitGraph& g, int r, bool vertex_transitive = false) {
    if (r < 1) throw std::invalid_argument("need r >= 1");
    NResult res;
    res.value = -1;
    int xmax = vertex_transitive ? 1 : g.size();
    for (int x = 0; x < xmax; ++x) {
        auto dx = bfs_distances(g, x);
        for (int y = vertex_transitive ? 0 : x + 1; y < g.size(); ++y) {
            if (y == x || dx[y] < 0 || dx[y] > 2 * r) continue;
            auto dy = bfs_distances(g, y);
            ExactInt inter = 0;
            for (int v = 0; v < g.size(); ++v)
                if (dx[v] >= 0 && dx[v] <= r && dy[v] >= 0 && dy[v] <= r) ++inter;
            auto it = res.per_distance.find(dx[y]);
            if (it == res.per_distance.end() || it->second < inter)
                res.per_distance[dx[y]] = inter;
            if (inter > res.value) {
                res.value = inter;
                res.witness = {x, y};
                res.witness_distance = dx[y];
            }
        }
    }
    if (res.value < 0) throw std::invalid_argument("no vertex pair within distance 2r");
    return res;
}

/// Theorem bound for r = 2 on regular graphs:
/// mu(k - 1 - (mu-1)(n1-2)/2) + 2, with n1 = N(Gamma,1). Returned both as
/// the exact rational and floored (the value can be half-integral; it
/// bounds an integer, so callers compare the floor).
struct LpBound {
    Rational exact;
    ExactInt floored;
};

inline LpBound lp_lower_bound(const ExactInt& k, const ExactInt& mu, const ExactInt& n1) {
    if (k < 2 || mu < 1 || n1 < 2) throw std::invalid_argument("lp_lower_bound preconditions");
    Rational v = Rational(mu) * (Rational(k - 1) - Rational((mu - 1) * (n1 - 2), 2)) + 2;
    ExactInt fl = boost::multiprecision::numerator(v) / boost::multiprecision::denominator(v);
    if (v < 0 && Rational(fl) != v) --fl;
    return {v, fl};
}

/// Theorem bound N(Gamma,1) <= (v+lambda)/2 for k-regular graphs with
/// k <= v-2, with equality exactly for the complete multipartite graphs
/// O^t_m (m = k - lambda, t = v/m).
struct RegularUpperBound {
    Rational bound;
    struct Multipartite { ExactInt m, t; };
    std::optional<Multipartite> equality_class;
};

inline RegularUpperBound regular_upper_bound(const ExactInt& v, const ExactInt& lambda,
                                             const ExactInt& k) {
    if (k > v - 2) throw std::invalid_argument("complete graph out of scope (need k <= v-2)");
    RegularUpperBound out;
    out.bound = Rational(v + lambda, 2);
    if (k - lambda == v - k && v % (v - k) == 0)
        out.equality_class = RegularUpperBound::Multipartite{k - lambda, v / (k - lambda)};
    return out;
}

/// Exact automorphism group order by backtracking over bijections, pruned
/// by degree and by distances to the already-mapped prefix. Intended for
/// graphs of a few dozen vertices.
inline ExactInt brute_automorphism_count(const ExplicitGraph& g, int cap = 40) {
    int n = g.size();
    if (n > cap)
        throw InfeasibleError("brute_automorphism_count: " + std::to_string(n) +
                              " vertices exceeds cap " + std::to_string(cap));
    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) dist[v] = bfs_distances(g, v);
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    ExactInt count = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            ++count;
            return;
        }
        for (int u = 0; u < n; ++u) {
            if (used[u] || g.degree(u) != g.degree(v)) continue;
            bool ok = true;
            for (int w = 0; w < v; ++w)
                if (dist[v][w] != dist[u][image[w]]) { ok = false; break; }
            if (!ok) continue;
            image[v] = u;
            used[u] = 1;
            rec(v + 1);
            used[u] = 0;
            image[v] = -1;
        }
    };
    rec(0);
    return count;
}

}  // namespace errgraph
