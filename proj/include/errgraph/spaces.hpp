#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errgraph/exact.hpp"
#include "errgraph/graph.hpp"

namespace errgraph {

/// Hamming graph F_q^n: words of length n over {0..q-1}, adjacent iff they
/// differ in one coordinate. Vertices are encoded canonically as base-q
/// integers. n(q-1)-regular, diameter n.
struct HammingView {
    using vertex_type = std::uint64_t;
    using vertex_hash = std::hash<std::uint64_t>;

    int n, q;
    HammingView(int n_, int q_) : n(n_), q(q_) {
        if (n < 1 || q < 2) throw std::invalid_argument("need n >= 1, q >= 2");
        double bits = n * std::log2(static_cast<double>(q));
        if (bits > 62) throw std::invalid_argument("word space does not fit the encoding");
    }

    std::uint64_t encode(const std::vector<int>& word) const {
        std::uint64_t v = 0;
        for (int j = n - 1; j >= 0; --j) v = v * q + word[j];
        return v;
    }
    std::vector<int> decode(std::uint64_t v) const {
        std::vector<int> w(n);
        for (int j = 0; j < n; ++j) {
            w[j] = static_cast<int>(v % q);
            v /= q;
        }
        return w;
    }

    std::uint64_t vertex_count() const {
        std::uint64_t c = 1;
        for (int j = 0; j < n; ++j) c *= q;
        return c;
    }

    std::vector<std::uint64_t> neighbors(std::uint64_t v) const {
        std::vector<int> w = decode(v);
        std::vector<std::uint64_t> out;
        out.reserve(static_cast<std::size_t>(n) * (q - 1));
        for (int j = 0; j < n; ++j) {
            int orig = w[j];
            for (int a = 0; a < q; ++a) {
                if (a == orig) continue;
                w[j] = a;
                out.push_back(encode(w));
            }
            w[j] = orig;
        }
        return out;
    }
};

/// Johnson graph J_w^n: w-subsets of {1..n} encoded as bitmasks, adjacent
/// iff they differ by one swap. w(n-w)-regular, diameter min(w, n-w).
struct JohnsonView {
    using vertex_type = std::uint64_t;
    using vertex_hash = std::hash<std::uint64_t>;

    int n, w;
    JohnsonView(int n_, int w_) : n(n_), w(w_) {
        if (w < 1 || w > n - 1 || n > 62) throw std::invalid_argument("need 1 <= w <= n-1, n <= 62");
    }

    std::uint64_t base_vertex() const { return (std::uint64_t(1) << w) - 1; }

    std::vector<std::uint64_t> neighbors(std::uint64_t v) const {
        std::vector<std::uint64_t> out;
        for (int i = 0; i < n; ++i) {
            if (!(v >> i & 1)) continue;
            for (int j = 0; j < n; ++j) {
                if (v >> j & 1) continue;
                out.push_back((v & ~(std::uint64_t(1) << i)) | (std::uint64_t(1) << j));
            }
        }
        return out;
    }
};

/// Eq. N(F_q^n,r) = q sum_{i<r} C(n-1,i)(q-1)^i.
inline ExactInt hamming_closed(int n, int q, int r) {
    if (n < 1 || q < 2 || r < 1 || r > n) throw std::invalid_argument("hamming_closed domain");
    ExactInt s = 0;
    for (int i = 0; i < r; ++i) s += binomial(n - 1, i) * pow_exact(q - 1, i);
    return q * s;
}

/// Eq. N(J_w^n,r) = n sum_{i<r} C(w-1,i) C(n-w-1,i) / (i+1); the rational
/// sum must come out integral.
inline ExactInt johnson_closed(int n, int w, int r) {
    if (w < 1 || w > n - 1 || r < 1) throw std::invalid_argument("johnson_closed domain");
    Rational s = 0;
    for (int i = 0; i < r; ++i)
        s += Rational(binomial(w - 1, i) * binomial(n - w - 1, i), i + 1);
    return require_integral(Rational(n) * s, "johnson_closed");
}

// ---------------------------------------------------------------------------
// Strongly regular families of the catalogue.

struct SrgParams {
    ExactInt v, k, lambda, mu;
    ExactInt n1;  // catalogue N(Gamma,1)
};

struct SrgInstance {
    std::string name;
    ExplicitGraph graph;
    SrgParams expected;
    bool connected = true;
};

inline bool is_connected(const ExplicitGraph& g) {
    if (g.size() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

/// Triangle graph T(m): vertices are the 2-subsets of {1..m}, adjacent iff
/// they intersect. (v,k,lambda,mu) = (m(m-1)/2, 2(m-2), m-2, 4), N1 = m.
inline SrgInstance triangle_graph(int m) {
    if (m < 4) throw std::invalid_argument("T(m) needs m >= 4");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    ExplicitGraph g = ExplicitGraph::empty(static_cast<int>(pairs.size()));
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            auto [i, j] = pairs[a];
            auto [k, l] = pairs[b];
            if (i == k || i == l || j == k || j == l) g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return {"T(" + std::to_string(m) + ")", std::move(g),
            {ExactInt(m) * (m - 1) / 2, 2 * (ExactInt(m) - 2), ExactInt(m) - 2, 4, m}};
}

/// Lattice graph L2(m): the m x m rook's graph.
/// (v,k,lambda,mu) = (m^2, 2(m-1), m-2, 2), N1 = m.
inline SrgInstance lattice_graph(int m) {
    if (m < 3) throw std::invalid_argument("L2(m) needs m >= 3");
    ExplicitGraph g = ExplicitGraph::empty(m * m);
    auto id = [m](int r, int c) { return r * m + c; };
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            for (int c2 = c + 1; c2 < m; ++c2) g.add_edge(id(r, c), id(r, c2));
            for (int r2 = r + 1; r2 < m; ++r2) g.add_edge(id(r, c), id(r2, c));
        }
    return {"L2(" + std::to_string(m) + ")", std::move(g),
            {ExactInt(m) * m, 2 * (ExactInt(m) - 1), ExactInt(m) - 2, 2, m}};
}

/// Paley graph P(q), q prime with q = 1 mod 4: vertices Z_q, adjacent iff
/// the difference is a nonzero quadratic residue.
/// (v,k,lambda,mu) = (q, (q-1)/2, (q-5)/4, (q-1)/4), N1 = (q+3)/4.
inline SrgInstance paley_graph(int q) {
    auto is_prime = [](int p) {
        if (p < 2) return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    };
    if (!is_prime(q) || q % 4 != 1)
        throw std::invalid_argument("P(q) needs q prime with q = 1 mod 4");
    std::vector<char> residue(q, 0);
    for (int x = 1; x < q; ++x) residue[static_cast<int>(std::int64_t(x) * x % q)] = 1;
    ExplicitGraph g = ExplicitGraph::empty(q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (residue[(b - a) % q]) g.add_edge(a, b);
    return {"P(" + std::to_string(q) + ")", std::move(g),
            {q, (ExactInt(q) - 1) / 2, (ExactInt(q) - 5) / 4, (ExactInt(q) - 1) / 4,
             (ExactInt(q) + 3) / 4}};
}

/// Complete multipartite graph O^t_m: t parts of size m, all cross edges.
/// (v,k,lambda,mu) = (tm, v-m, v-2m, v-m), N1 = v-m. The unique equality
/// case of the (v+lambda)/2 bound.
inline SrgInstance multipartite_graph(int t, int m) {
    if (t < 2 || m < 1) throw std::invalid_argument("O^t_m needs t >= 2, m >= 1");
    if (m == 1) throw std::invalid_argument("O^t_1 is complete: out of scope");
    int v = t * m;
    ExplicitGraph g = ExplicitGraph::empty(v);
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (a / m != b / m) g.add_edge(a, b);
    ExactInt V = v;
    return {"O^" + std::to_string(t) + "_" + std::to_string(m), std::move(g),
            {V, V - m, V - 2 * m, V - m, V - m}};
}

/// Complement, with the complement parameter laws
/// (v, v-k-1, v-2k-2+mu, v-2k+lambda); flagged if disconnected (excluded
/// from N(Gamma,1) checks).
inline SrgInstance complement_graph(const SrgInstance& src) {
    const ExplicitGraph& g = src.graph;
    ExplicitGraph c = ExplicitGraph::empty(g.size());
    for (int a = 0; a < g.size(); ++a)
        for (int b = a + 1; b < g.size(); ++b)
            if (!g.adjacent(a, b)) c.add_edge(a, b);
    const SrgParams& p = src.expected;
    SrgParams cp{p.v, p.v - p.k - 1, p.v - 2 * p.k - 2 + p.mu, p.v - 2 * p.k + p.lambda,
                 p.v - 2 * p.k + std::max(p.mu, p.lambda)};
    SrgInstance out{"complement(" + src.name + ")", std::move(c), cp};
    out.connected = is_connected(out.graph);
    return out;
}

/// Computes (v,k,lambda,mu,N1) on the generated graph and compares with
/// the expected catalogue tuple.
struct SrgReport {
    SrgParams computed;
    bool params_match;
    bool n1_match;   // skipped (true) when the graph is disconnected
};

inline SrgReport srg_verify(const SrgInstance& inst) {
    const ExplicitGraph& g = inst.graph;
    SrgReport rep;
    rep.computed.v = g.size();
    rep.computed.k = g.size() ? g.degree(0) : 0;
    rep.params_match = rep.computed.v == inst.expected.v && rep.computed.k == inst.expected.k;
    if (inst.connected) {
        auto [lambda, mu] = lambda_mu(g);
        rep.computed.lambda = lambda;
        rep.computed.mu = mu;
        rep.params_match = rep.params_match && lambda == inst.expected.lambda &&
                           mu == inst.expected.mu;
        rep.computed.n1 = n_of_gamma(g, 1).value;
        rep.n1_match = rep.computed.n1 == inst.expected.n1;
    } else {
        // mu and N(Gamma,1) are undefined on a disconnected complement;
        // only the degree law is checked
        rep.computed.lambda = -1;
        rep.computed.mu = -1;
        rep.computed.n1 = -1;
        rep.n1_match = true;
    }
    return rep;
}

}  // namespace errgraph
