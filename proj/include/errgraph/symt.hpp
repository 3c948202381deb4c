#pragma once

#include <algorithm>
#include <future>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "errgraph/exact.hpp"
#include "errgraph/graph.hpp"
#include "errgraph/numbers.hpp"
#include "errgraph/permutation.hpp"

namespace errgraph {

/// The transposition Cayley graph Sym_n(T): vertices are the permutations
/// of {1..n}, neighbors of p are p*(i,j) for all C(n,2) transpositions.
/// C(n,2)-regular, order n!, diameter n-1.
struct SymnTView {
    using vertex_type = Permutation;
    using vertex_hash = PermutationHash;

    int n;
    explicit SymnTView(int n_) : n(n_) {
        if (n < 2) throw std::invalid_argument("need n >= 2");
    }

    std::vector<Permutation> neighbors(const Permutation& p) const {
        std::vector<Permutation> out;
        out.reserve(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                out.push_back(apply_transposition(p, Transposition(i, j)));
        return out;
    }

    Permutation identity() const { return Permutation::identity(n); }
};

/// Local profile of y relative to a fixed base vertex: neighbor counts in
/// the spheres below, at and above y.
struct LocalProfile {
    ExactInt c, a, b;  // c + a + b = degree
};

/// Sphere-local parameters of any y in S_i from its cycle type alone:
/// c = (sum j^2 h_j - n)/2, a = 0, b = C(n,2) - c. Only b depends on n
/// once the type is padded with fixed points.
inline LocalProfile local_params_formula(const CycleType& ct, int n) {
    ExactInt sq = 0;
    for (auto& [j, h] : ct.multiplicities()) sq += ExactInt(j) * j * h;
    sq += ExactInt(n - ct.n());  // pad with 1-cycles up to n
    LocalProfile lp;
    lp.c = require_integral(Rational(sq - n, 2), "local_params_formula");
    lp.a = 0;
    lp.b = require_integral(Rational(ExactInt(n) * n - sq, 2), "local_params_formula");
    return lp;
}

/// |E_{r-1,r}(y)| for a fixed transposition label y:
/// |S_{r-1}| - |S_{r-2}| + ... +- |S_0|. Independent of which transposition
/// labels the edges.
inline ExactInt labeled_edge_count(int n, int r) {
    if (r < 1 || r > n - 1) throw std::invalid_argument("need 1 <= r <= n-1");
    ExactInt v = 0;
    for (int i = r - 1, sign = 1; i >= 0; --i, sign = -sign)
        v += sign * sphere_size(n, i);
    return v;
}

/// Total |E_{r-1,r}| = C(n,2) * labeled_edge_count(n,r).
inline ExactInt total_edge_count(int n, int r) {
    return binomial(n, 2) * labeled_edge_count(n, r);
}

/// N(Sym_n(T),r) result with the per-distance table and the argmax
/// classes (all of them, in case of ties).
struct SymNResult {
    ExactInt value;
    std::map<int, ExactInt> per_distance;         // s -> N_s
    std::vector<CycleType> witness_classes;       // classes of x^{-1}y at the argmax
    int witness_distance = 0;
};

/// N(Sym_n(T),r) by class-representative brute force: x is fixed at the
/// identity and y ranges over one representative per cycle type of S_s,
/// s <= min(2r, n-1); ball intersections are invariant on conjugacy
/// classes. The ball B_r(e) is streamed once through the support-bounded
/// sphere enumeration; each intersection test is one O(n) cycle count.
inline SymNResult n_sym_brute(int n, int r, ExactInt budget = ExactInt(100000000),
                              int threads = 1) {
    if (r < 1) throw std::invalid_argument("need r >= 1");
    int rr = std::min(r, n - 1);
    int smax = std::min(2 * r, n - 1);

    ExactInt reps = 0;
    for (int s = 1; s <= smax; ++s) reps += static_cast<int>(class_reps(n, s).size());
    if (ball_size(n, rr) * reps > budget)
        throw InfeasibleError("n_sym_brute: stream budget " + budget.str() +
                              " exceeded (need " + (ball_size(n, rr) * reps).str() + ")");

    std::vector<Permutation> ball_e;
    for (int i = 0; i <= rr; ++i)
        for_each_in_sphere(n, i, [&](const Permutation& p) { ball_e.push_back(p); });

    auto intersect_with = [&](const Permutation& y) {
        // |B_r(e) cap B_r(y)| = #{z in B_r(e) : d(z,y) <= r}
        ExactInt cnt = 0;
        for (const Permutation& z : ball_e)
            if (cayley_distance(z, y) <= r) ++cnt;
        return cnt;
    };

    SymNResult res;
    res.value = -1;
    for (int s = 1; s <= smax; ++s) {
        auto classes = class_reps(n, s);
        std::vector<ExactInt> counts(classes.size());
        if (threads > 1 && classes.size() > 1) {
            std::vector<std::future<ExactInt>> futs;
            for (auto& ct : classes)
                futs.push_back(std::async(std::launch::async,
                                          [&, y = ct.representative()] { return intersect_with(y); }));
            for (std::size_t k = 0; k < futs.size(); ++k) counts[k] = futs[k].get();
        } else {
            for (std::size_t k = 0; k < classes.size(); ++k)
                counts[k] = intersect_with(classes[k].representative());
        }
        ExactInt ns = -1;
        for (auto& c : counts) ns = std::max(ns, c);
        res.per_distance[s] = ns;
        if (ns > res.value) {
            res.value = ns;
            res.witness_distance = s;
            res.witness_classes.clear();
        }
        if (ns == res.value && s == res.witness_distance)
            for (std::size_t k = 0; k < classes.size(); ++k)
                if (counts[k] == ns) res.witness_classes.push_back(classes[k]);
    }
    return res;
}

enum class Validity { Proven, Asymptotic };

/// Closed forms for N(Sym_n(T),r):
///   r = 1: 3                          (n >= 3)
///   r = 2: (3/2)(n+1)(n-2)            (n >= 5)
///   r = 3: |B_2| + c_{3^1}(n,n-3) + c_{3^1}(n,n-4)   (n >= 16)
///   general: b(n,r-1) + c_{3^1}(n,n-r) + c_{3^1}(n,n-r-1),
/// tagged Asymptotic outside the proven ranges.
inline std::pair<ExactInt, Validity> n_sym_closed(int n, int r) {
    if (r < 1) throw std::invalid_argument("need r >= 1");
    if (r == 1) return {3, n >= 3 ? Validity::Proven : Validity::Asymptotic};
    if (r == 2) {
        ExactInt v = require_integral(Rational(ExactInt(3) * (n + 1) * (n - 2), 2), "n_sym_closed");
        return {v, n >= 5 ? Validity::Proven : Validity::Asymptotic};
    }
    ExactInt v = ball_size(n, std::min(r - 1, n - 1));
    if (r <= n - 1) v += restricted_stirling(RestrictedKind::ThreeCycle, n, r);
    if (r + 1 <= n - 1) v += restricted_stirling(RestrictedKind::ThreeCycle, n, r + 1);
    return {v, (r == 3 && n >= 16) ? Validity::Proven : Validity::Asymptotic};
}

/// N_1(Sym_n(T),r) = 2(|S_{r-1}| + |S_{r-3}| + ...), valid for 2 <= r <= n-1.
inline ExactInt n1_sym_closed(int n, int r) {
    if (r < 2 || r > n - 1) throw std::invalid_argument("need 2 <= r <= n-1");
    ExactInt v = 0;
    for (int i = r - 1; i >= 0; i -= 2) v += sphere_size(n, i);
    return 2 * v;
}

/// |Z_1| + |Z_2| of the N_2 decomposition for a fixed choice of y* (a
/// 3-cycle or a double transposition):
/// restricted(kind, n, r) + restricted(kind, n, r+1).
inline ExactInt z_decomposition(int n, int r, RestrictedKind kind) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    ExactInt v = 0;
    if (r <= n - 1) v += restricted_stirling(kind, n, r);
    if (r + 1 <= n - 1) v += restricted_stirling(kind, n, r + 1);
    return v;
}

/// N_2(Sym_n(T),r) = b(n,r-1) + max over the two choices of y*.
inline ExactInt n2_sym_closed(int n, int r) {
    ExactInt z3 = z_decomposition(n, r, RestrictedKind::ThreeCycle);
    ExactInt z2 = z_decomposition(n, r, RestrictedKind::TwoTwo);
    return ball_size(n, std::min(r - 1, n - 1)) + std::max(z3, z2);
}

// ---------------------------------------------------------------------------
// Table of N(y) contributions for r = 2: rows are the classes of
// S_1..S_4, columns the classes inside B_2; the entry counts the vertices
// of the column class at distance <= 2 from a row-class representative.

struct Table1 {
    struct Row {
        std::vector<int> shape;       // non-trivial cycle lengths of the row class
        std::string name;             // e.g. "1^{n-5} 5^1"
        bool present;                 // the class is nonempty at this n
        std::vector<ExactInt> entries;  // columns: 3^1, 2^2, 2^1, identity
    };
    int n;
    std::vector<Row> rows;

    static const std::vector<std::string>& column_names() {
        static const std::vector<std::string> names{"3^1", "2^2", "2^1", "1^n"};
        return names;
    }
};

namespace detail {

/// Reduced (fixed-point-free) cycle shapes of the Table 1 rows, top to
/// bottom: S_4, S_3, S_2, S_1.
inline const std::vector<std::vector<int>>& table1_row_shapes() {
    static const std::vector<std::vector<int>> shapes{
        {5}, {4, 2}, {3, 3}, {3, 2, 2}, {2, 2, 2, 2},
        {4}, {3, 2}, {2, 2, 2},
        {3}, {2, 2},
        {2}};
    return shapes;
}

inline std::optional<CycleType> padded_type(const std::vector<int>& shape, int n) {
    int support = 0;
    std::map<int, int> h;
    for (int len : shape) {
        ++h[len];
        support += len;
    }
    if (support > n) return std::nullopt;
    if (n - support > 0) h[1] = n - support;
    return CycleType(n, std::move(h));
}

}  // namespace detail

/// Closed-form Table 1 entry for a row shape and column index. The two
/// column entries marked (*) differ from the source table; they follow the
/// direct counts (see the tests):
///   (2^1 4^1, 2^2) = 8 and (2^2, 2^2) = 2 C(n-2,2) + 1.
inline ExactInt table1_formula_entry(const std::vector<int>& shape, int col, int n) {
    ExactInt N = n;
    auto is = [&](std::initializer_list<int> s) {
        return shape == std::vector<int>(s);
    };
    static const ExactInt Z = 0;
    if (is({5})) return std::vector<ExactInt>{10, 10, Z, Z}[col];
    if (is({4, 2})) return std::vector<ExactInt>{4, 8, Z, Z}[col];  // (*)
    if (is({3, 3})) return std::vector<ExactInt>{2, 9, Z, Z}[col];
    if (is({3, 2, 2})) return std::vector<ExactInt>{1, 7, Z, Z}[col];
    if (is({2, 2, 2, 2})) return std::vector<ExactInt>{Z, 6, Z, Z}[col];
    if (is({4})) return std::vector<ExactInt>{4, 2, 6, Z}[col];
    if (is({3, 2})) return std::vector<ExactInt>{1, 3, 4, Z}[col];
    if (is({2, 2, 2})) return std::vector<ExactInt>{Z, 3, 3, Z}[col];
    if (is({3}))
        return std::vector<ExactInt>{6 * (N - 3) + 2, 3 * binomial(n - 2, 2), 3, 1}[col];
    if (is({2, 2}))
        return std::vector<ExactInt>{4 * (N - 2), 2 * binomial(n - 2, 2) + 1, 2, 1}[col];  // (*)
    if (is({2}))
        return std::vector<ExactInt>{2 * (N - 2), binomial(n - 2, 2), binomial(n, 2), 1}[col];
    throw std::invalid_argument("unknown Table 1 row shape");
}

inline Table1 table1(int n) {
    if (n < 5) throw std::invalid_argument("table1 needs n >= 5");
    Table1 t;
    t.n = n;
    for (const auto& shape : detail::table1_row_shapes()) {
        int support = 0;
        std::ostringstream name;
        std::map<int, int> mult;
        for (int len : shape) {
            support += len;
            ++mult[len];
        }
        name << "1^{n-" << support << "}";
        for (auto& [len, m] : mult) name << ' ' << len << '^' << m;
        Table1::Row row{shape, name.str(), support <= n, {}};
        if (row.present)
            for (int col = 0; col < 4; ++col)
                row.entries.push_back(table1_formula_entry(shape, col, n));
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// Direct-count Table 1 entry: |{z in column class : d(z,y) <= 2}| for a
/// representative y of the row class. Column classes live inside B_2, so
/// this streams S_0..S_2.
inline ExactInt table1_direct_entry(const CycleType& row, int col, int n) {
    Permutation y = row.representative();
    static const std::vector<std::vector<int>> col_shapes{{3}, {2, 2}, {2}, {}};
    auto colct = detail::padded_type(col_shapes[col], n);
    if (!colct) return 0;
    ExactInt count = 0;
    for_each_in_sphere(n, colct->sphere_index(), [&](const Permutation& z) {
        if (cycle_type(z) == *colct && cayley_distance(z, y) <= 2) ++count;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Automorphism action checks.

/// Samples the automorphism action on Sym_n(T): x -> a x b^{-1} and the
/// inversion x -> x^{-1} must carry edges to edges, and conjugation must
/// preserve every sphere S_i setwise. For n = 3 with trials = 0 the check
/// is exhaustive over all 36 pairs (a,b) and all edges.
inline bool aut_action_check(int n, long trials, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("need n >= 3");
    auto edge_preserved = [&](const Permutation& x, const Permutation& y) {
        return cayley_distance(x, y) == 1;
    };
    if (trials == 0) {
        // exhaustive mode, meant for tiny n
        std::vector<Permutation> all;
        for (int i = 0; i <= n - 1; ++i)
            for_each_in_sphere(n, i, [&](const Permutation& p) { all.push_back(p); });
        for (const auto& x : all)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Permutation y = apply_transposition(x, Transposition(i, j));
                    if (!edge_preserved(x.inverse(), y.inverse())) return false;
                    for (const auto& a : all)
                        for (const auto& b : all) {
                            Permutation binv = b.inverse();
                            if (!edge_preserved(a * x * binv, a * y * binv)) return false;
                        }
                }
        for (const auto& x : all)
            for (const auto& b : all)
                if (cayley_distance_from_identity(b * x * b.inverse()) !=
                    cayley_distance_from_identity(x))
                    return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    auto random_perm = [&] {
        std::vector<int> img(n);
        for (int j = 0; j < n; ++j) img[j] = j;
        std::shuffle(img.begin(), img.end(), rng);
        return Permutation::from_images(std::move(img));
    };
    std::uniform_int_distribution<int> pt(0, n - 1);
    for (long t = 0; t < trials; ++t) {
        Permutation x = random_perm(), a = random_perm(), b = random_perm();
        int i = pt(rng), j = pt(rng);
        while (j == i) j = pt(rng);
        Permutation y = apply_transposition(x, Transposition(i, j));
        Permutation binv = b.inverse();
        if (!edge_preserved(a * x * binv, a * y * binv)) return false;
        if (!edge_preserved(x.inverse(), y.inverse())) return false;
        if (cayley_distance_from_identity(b * x * binv) != cayley_distance_from_identity(x))
            return false;
        if (cayley_distance_from_identity(x.inverse()) != cayley_distance_from_identity(x))
            return false;
    }
    return true;
}

}  // namespace errgraph
