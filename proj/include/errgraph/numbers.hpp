#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "errgraph/exact.hpp"
#include "errgraph/permutation.hpp"

namespace errgraph {

namespace detail {

/// Triangular memo table for the signless Stirling numbers of the first
/// kind, c(n,k) = c(n-1,k-1) + (n-1)c(n-1,k), c(1,1) = 1. Built once and
/// grown on demand; reads after construction are concurrent-safe.
class StirlingTable {
public:
    static const StirlingTable& instance(int n_min = 64) {
        static StirlingTable table;
        static std::mutex m;
        std::lock_guard<std::mutex> lock(m);
        table.ensure(n_min);
        return table;
    }

    const ExactInt& get(int n, int k) const { return rows_[n][k]; }

private:
    void ensure(int n) {
        while (static_cast<int>(rows_.size()) <= n) {
            int m = static_cast<int>(rows_.size());
            std::vector<ExactInt> row(m + 1, ExactInt(0));
            if (m == 0) {
                row[0] = 1;  // c(0,0) = 1, empty permutation
            } else {
                for (int k = 1; k <= m; ++k) {
                    row[k] = rows_[m - 1][k - 1];
                    if (k < m) row[k] += ExactInt(m - 1) * rows_[m - 1][k];
                }
            }
            rows_.push_back(std::move(row));
        }
    }
    std::vector<std::vector<ExactInt>> rows_;
};

}  // namespace detail

/// c(n,k): number of permutations of n elements with exactly k cycles.
inline ExactInt stirling_first_signless(int n, int k) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (k < 1 || k > n) return 0;
    return detail::StirlingTable::instance(n).get(n, k);
}

/// Sphere size |S_i| in Sym_n(T).
inline ExactInt sphere_size(int n, int i) { return stirling_first_signless(n, n - i); }

/// (1+t)(1+2t)...(1+(n-1)t); the coefficient of t^i is c(n,n-i), the size
/// of the sphere S_i in Sym_n(T).
inline IntPolynomial poincare_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    IntPolynomial p = IntPolynomial::one();
    for (int j = 1; j <= n - 1; ++j)
        p = p * IntPolynomial({ExactInt(1), ExactInt(j)});
    return p;
}

/// b(n,r) = sum_{i<=r} c(n,n-i), the ball size in Sym_n(T).
inline ExactInt ball_size(int n, int r) {
    if (r < 0 || r > n - 1) throw std::invalid_argument("need 0 <= r <= n-1");
    ExactInt b = 0;
    for (int i = 0; i <= r; ++i) b += sphere_size(n, i);
    return b;
}

/// Number of ways to write a permutation of the given cycle type as an
/// ordered product of i transpositions, where i = n - (cycle count) is the
/// minimum length: i! prod_j (j^{j-2}/(j-1)!)^{h_j}. Fewer than i
/// transpositions are impossible and other lengths of equal parity are not
/// counted, so the count is 0 unless i is minimal.
inline ExactInt denes_count(const CycleType& ct, int i) {
    if (i != ct.sphere_index()) return 0;
    Rational v = factorial(i);
    for (auto& [j, h] : ct.multiplicities()) {
        if (j == 1) continue;  // 1^{-1}/0! = 1
        Rational f = Rational(pow_exact(j, j - 2), factorial(j - 1));
        for (int k = 0; k < h; ++k) v *= f;
    }
    return require_integral(v, "denes_count");
}

enum class RestrictedKind { ThreeCycle, TwoTwo };  // 3^1: {1,2,3} co-cyclic; 2^2: {1,2} and {3,4}

namespace detail {

inline bool restricted_condition(const Permutation& p, RestrictedKind kind) {
    auto same_cycle = [&](int a, int b) {
        for (int k = p(a); ; k = p(k)) {
            if (k == b) return true;
            if (k == a) return false;
        }
    };
    if (kind == RestrictedKind::ThreeCycle)
        return same_cycle(0, 1) && same_cycle(0, 2);
    return same_cycle(0, 1) && same_cycle(2, 3);
}

}  // namespace detail

/// Brute count over the support-bounded sphere stream.
inline ExactInt restricted_stirling_brute(RestrictedKind kind, int n, int i) {
    int need = kind == RestrictedKind::ThreeCycle ? 3 : 4;
    if (n < need) throw std::invalid_argument("too few points for the restriction");
    ExactInt count = 0;
    for_each_in_sphere(n, i, [&](const Permutation& p) {
        if (detail::restricted_condition(p, kind)) ++count;
    });
    return count;
}

/// Closed forms for i <= 4. The i = 4 double-transposition count uses the
/// per-cycle-type expansion
///   4(n-4)(n-5) + 4(n-4)C(n-5,2) + 2C(n-4,3) + 24(n-4) + 18C(n-4,2)
///   + C(n-4,2)C(n-6,2)/2,
/// which matches brute enumeration for all n (see the tests).
inline ExactInt restricted_stirling_closed(RestrictedKind kind, int n, int i) {
    if (i < 0 || i > 4) throw std::invalid_argument("closed forms only for 0 <= i <= 4");
    ExactInt N = n;
    if (kind == RestrictedKind::ThreeCycle) {
        switch (i) {
            case 0:
            case 1: return 0;
            case 2: return n >= 3 ? 2 : 0;
            case 3: return n >= 3 ? ExactInt((N + 2) * (N - 3)) : ExactInt(0);
            default:
                return 24 * binomial(n - 3, 2) + 22 * binomial(n - 3, 3) + 6 * binomial(n - 3, 4);
        }
    }
    switch (i) {
        case 0:
        case 1: return 0;
        case 2: return n >= 4 ? 1 : 0;
        case 3: return n >= 4 ? binomial(n, 2) : 0;
        default: {
            ExactInt v = 4 * (N - 4) * (N - 5);
            v += 4 * (N - 4) * binomial(n - 5, 2) + 2 * binomial(n - 4, 3);
            v += 24 * (N - 4);
            v += 18 * binomial(n - 4, 2);
            v += require_integral(Rational(binomial(n - 4, 2) * binomial(n - 6, 2), 2),
                                  "restricted_stirling_closed");
            return v;
        }
    }
}

/// Exact count summed over cycle types: within a conjugacy class the point
/// labels are exchangeable, so the members putting {1,2,3} in one cycle
/// (resp. {1,2} and {3,4} each in one cycle) are a fixed fraction of the
/// class. For the 3-point condition the fraction is
/// sum_j h_j j(j-1)(j-2) / (n(n-1)(n-2)); for the pair condition the pairs
/// sit in two distinct cycles or all four points share one.
inline ExactInt restricted_stirling_by_class(RestrictedKind kind, int n, int i) {
    int need = kind == RestrictedKind::ThreeCycle ? 3 : 4;
    if (n < need) throw std::invalid_argument("too few points for the restriction");
    ExactInt total = 0;
    for (const CycleType& ct : class_reps(n, i)) {
        ExactInt w = 0;
        const auto& mult = ct.multiplicities();
        if (kind == RestrictedKind::ThreeCycle) {
            for (auto& [j, h] : mult) w += ExactInt(h) * j * (j - 1) * (j - 2);
        } else {
            for (auto& [j, hj] : mult)
                for (auto& [k, hk] : mult) {
                    ExactInt pairs = ExactInt(hj) * hk - (j == k ? hj : 0);
                    w += pairs * j * (j - 1) * k * (k - 1);
                }
            for (auto& [j, h] : mult) w += ExactInt(h) * j * (j - 1) * (j - 2) * (j - 3);
        }
        ExactInt denom = 1;
        for (int d = 0; d < need; ++d) denom *= n - d;
        total += require_integral(Rational(class_size(ct) * w, denom),
                                  "restricted_stirling_by_class");
    }
    return total;
}

/// c_{3^1}(n,n-i) or c_{2^2}(n,n-i): permutations with n-i cycles whose
/// cycles tie together {1,2,3}, respectively {1,2} and {3,4}. Closed form
/// for i <= 4, per-class summation beyond.
inline ExactInt restricted_stirling(RestrictedKind kind, int n, int i) {
    if (i < 0 || i > n - 1) throw std::invalid_argument("need 0 <= i <= n-1");
    if (i <= 4) return restricted_stirling_closed(kind, n, i);
    return restricted_stirling_by_class(kind, n, i);
}

}  // namespace errgraph
