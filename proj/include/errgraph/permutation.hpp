#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "errgraph/exact.hpp"

namespace errgraph {

/// Permutation of {1..n}, stored as the image sequence (0-based internally,
/// 1-based in all textual formats). Products compose right-to-left:
/// (x*y)(j) = x(y(j)).
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n) {
        Permutation p;
        p.img_.resize(n);
        for (int j = 0; j < n; ++j) p.img_[j] = j;
        return p;
    }

    static Permutation from_images(std::vector<int> images) {
        Permutation p;
        p.img_ = std::move(images);
        std::vector<char> seen(p.img_.size(), 0);
        for (int v : p.img_) {
            if (v < 0 || v >= static_cast<int>(p.img_.size()) || seen[v])
                throw std::invalid_argument("image sequence is not a bijection");
            seen[v] = 1;
        }
        return p;
    }

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_[j]; }
    const std::vector<int>& images() const { return img_; }

    Permutation operator*(const Permutation& y) const {
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t j = 0; j < img_.size(); ++j) r.img_[j] = img_[y.img_[j]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t j = 0; j < img_.size(); ++j) r.img_[img_[j]] = static_cast<int>(j);
        return r;
    }

    bool is_identity() const {
        for (std::size_t j = 0; j < img_.size(); ++j)
            if (img_[j] != static_cast<int>(j)) return false;
        return true;
    }

    int cycle_count() const {
        std::vector<char> seen(img_.size(), 0);
        int c = 0;
        for (std::size_t j = 0; j < img_.size(); ++j) {
            if (seen[j]) continue;
            ++c;
            for (int k = static_cast<int>(j); !seen[k]; k = img_[k]) seen[k] = 1;
        }
        return c;
    }

    /// Cycles listed smallest-element-first, sorted by smallest element;
    /// 1-cycles included.
    std::vector<std::vector<int>> cycles() const {
        std::vector<char> seen(img_.size(), 0);
        std::vector<std::vector<int>> cs;
        for (std::size_t j = 0; j < img_.size(); ++j) {
            if (seen[j]) continue;
            std::vector<int> c;
            for (int k = static_cast<int>(j); !seen[k]; k = img_[k]) {
                seen[k] = 1;
                c.push_back(k);
            }
            cs.push_back(std::move(c));
        }
        return cs;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int v : p.images()) {
            h ^= static_cast<std::size_t>(v);
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

/// Transposition (a,b), 0-based internally.
struct Transposition {
    int a, b;
    Transposition(int a_, int b_) : a(a_), b(b_) {
        if (a == b) throw std::invalid_argument("transposition needs distinct points");
    }
};

/// Right product p*(a,b): swaps the images at positions a and b.
/// Joins two cycles of p if a, b lie in different cycles, splits one
/// cycle otherwise.
inline Permutation apply_transposition(const Permutation& p, const Transposition& t) {
    std::vector<int> img = p.images();
    std::swap(img[t.a], img[t.b]);
    return Permutation::from_images(std::move(img));
}

/// Conjugacy class label: multiset of cycle lengths, 1-cycles included,
/// so the lengths always sum to n.
class CycleType {
public:
    CycleType(int n, std::map<int, int> mult) : n_(n), h_(std::move(mult)) {
        ExactInt sum = 0;
        for (auto& [len, m] : h_) {
            if (len < 1 || m < 1) throw std::invalid_argument("bad cycle type entry");
            sum += ExactInt(len) * m;
        }
        if (sum != n) throw std::invalid_argument("cycle lengths must sum to n");
    }

    int n() const { return n_; }
    const std::map<int, int>& multiplicities() const { return h_; }

    int multiplicity(int len) const {
        auto it = h_.find(len);
        return it == h_.end() ? 0 : it->second;
    }

    int cycle_count() const {
        int c = 0;
        for (auto& [len, m] : h_) c += m;
        return c;
    }

    /// Distance from the identity of any permutation in this class.
    int sphere_index() const { return n_ - cycle_count(); }

    /// Canonical class representative: cycles laid out on consecutive
    /// points, longest cycles first.
    Permutation representative() const {
        std::vector<int> img(n_);
        int pos = 0;
        for (auto it = h_.rbegin(); it != h_.rend(); ++it) {
            for (int rep = 0; rep < it->second; ++rep) {
                int len = it->first;
                for (int j = 0; j < len; ++j) img[pos + j] = pos + (j + 1) % len;
                pos += len;
            }
        }
        return Permutation::from_images(std::move(img));
    }

    std::string to_string() const {
        std::ostringstream os;
        for (auto& [len, m] : h_) os << len << "^" << m << " ";
        std::string s = os.str();
        if (!s.empty()) s.pop_back();
        return s;
    }

    bool operator==(const CycleType& o) const { return n_ == o.n_ && h_ == o.h_; }
    bool operator<(const CycleType& o) const {
        return std::tie(n_, h_) < std::tie(o.n_, o.h_);
    }

private:
    int n_;
    std::map<int, int> h_;  // length -> multiplicity
};

inline CycleType cycle_type(const Permutation& p) {
    std::map<int, int> h;
    for (auto& c : p.cycles()) ++h[static_cast<int>(c.size())];
    return CycleType(p.n(), std::move(h));
}

/// n!/(1^{h_1} h_1! 2^{h_2} h_2! ... n^{h_n} h_n!).
inline ExactInt class_size(const CycleType& ct) {
    ExactInt denom = 1;
    for (auto& [len, m] : ct.multiplicities())
        denom *= pow_exact(len, m) * factorial(m);
    return factorial(ct.n()) / denom;
}

/// d(p,q) = n - (number of cycles of p^{-1} q); equals the BFS distance in
/// the transposition Cayley graph.
inline int cayley_distance(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n()) throw std::invalid_argument("mismatched degrees");
    const auto& pi = p.images();
    const auto& qi = q.images();
    int n = p.n();
    std::vector<int> pinv(n);
    for (int j = 0; j < n; ++j) pinv[pi[j]] = j;
    std::vector<char> seen(n, 0);
    int c = 0;
    for (int j = 0; j < n; ++j) {
        if (seen[j]) continue;
        ++c;
        for (int k = j; !seen[k]; k = pinv[qi[k]]) seen[k] = 1;
    }
    return n - c;
}

inline int cayley_distance_from_identity(const Permutation& p) {
    return p.n() - p.cycle_count();
}

/// All cycle types with exactly n-i cycles. These are in bijection with
/// the partitions of i whose part count k satisfies i + k <= n: a part p
/// stands for a (p+1)-cycle, everything else is a fixed point.
inline std::vector<CycleType> class_reps(int n, int i) {
    if (i < 0 || i > n - 1) throw std::invalid_argument("need 0 <= i <= n-1");
    std::vector<CycleType> out;
    std::vector<int> part;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            int support = i + static_cast<int>(part.size());
            if (support <= n) {
                std::map<int, int> h;
                for (int p : part) ++h[p + 1];
                if (n - support > 0) h[1] = n - support;
                out.emplace_back(n, std::move(h));
            }
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            part.push_back(p);
            rec(rem - p, p);
            part.pop_back();
        }
    };
    rec(i, i);
    return out;
}

namespace detail {

/// Emits every permutation whose non-trivial cycle lengths form the given
/// multiset (descending), with support drawn from `avail` (ascending).
/// Each cycle starts at the smallest element it contains and the cycle
/// containing the smallest remaining element is generated first, so each
/// permutation appears exactly once.
template <typename Fn>
void arrange_cycles(std::vector<int>& img, std::vector<int> avail,
                    std::multiset<int, std::greater<int>>& lens, int needed, const Fn& fn) {
    if (lens.empty()) {
        fn(Permutation::from_images(img));
        return;
    }
    if (static_cast<int>(avail.size()) < needed) return;
    int start = avail.front();
    std::vector<int> rest(avail.begin() + 1, avail.end());
    // start may stay fixed only if enough elements remain for all cycles
    if (static_cast<int>(rest.size()) >= needed)
        arrange_cycles(img, rest, lens, needed, fn);
    int prev_len = 0;
    for (auto it = lens.begin(); it != lens.end();) {
        int len = *it;
        if (len == prev_len) { ++it; continue; }
        prev_len = len;
        it = lens.erase(it);
        // ordered choice of the remaining len-1 cycle elements
        std::vector<int> cyc{start};
        std::vector<char> used(rest.size(), 0);
        std::function<void()> pick = [&]() {
            if (static_cast<int>(cyc.size()) == len) {
                for (int j = 0; j + 1 < len; ++j) img[cyc[j]] = cyc[j + 1];
                img[cyc[len - 1]] = cyc[0];
                std::vector<int> nxt;
                for (std::size_t k = 0; k < rest.size(); ++k)
                    if (!used[k]) nxt.push_back(rest[k]);
                arrange_cycles(img, std::move(nxt), lens, needed - len, fn);
                for (int v : cyc) img[v] = v;
                return;
            }
            for (std::size_t k = 0; k < rest.size(); ++k) {
                if (used[k]) continue;
                used[k] = 1;
                cyc.push_back(rest[k]);
                pick();
                cyc.pop_back();
                used[k] = 0;
            }
        };
        pick();
        it = lens.insert(len);
        ++it;
    }
}

}  // namespace detail

/// Streams the sphere S_i of Sym_n(T): all permutations with exactly n-i
/// cycles, each emitted once. Enumeration is support-bounded (elements of
/// S_i move at most 2i points), never a filter over all n! permutations.
template <typename Fn>
void for_each_in_sphere(int n, int i, const Fn& fn) {
    if (i < 0 || i > n - 1) throw std::invalid_argument("need 0 <= i <= n-1");
    if (i == 0) {
        fn(Permutation::identity(n));
        return;
    }
    for (const CycleType& ct : class_reps(n, i)) {
        std::multiset<int, std::greater<int>> lens;
        int support = 0;
        for (auto& [len, m] : ct.multiplicities())
            if (len > 1)
                for (int k = 0; k < m; ++k) {
                    lens.insert(len);
                    support += len;
                }
        std::vector<int> img(n), avail(n);
        for (int j = 0; j < n; ++j) img[j] = avail[j] = j;
        detail::arrange_cycles(img, std::move(avail), lens, support, fn);
    }
}

inline std::vector<Permutation> enumerate_sphere(int n, int i) {
    std::vector<Permutation> out;
    for_each_in_sphere(n, i, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

// ---------------------------------------------------------------------------
// Textual formats: cycle notation "(1 2 3)(4 5)" and image notation
// "2 3 1 5 4", both 1-based and bit-exact under round-trip.

inline std::string format_images(const Permutation& p) {
    std::ostringstream os;
    for (int j = 0; j < p.n(); ++j) {
        if (j) os << ' ';
        os << p(j) + 1;
    }
    return os.str();
}

inline std::string format_cycles(const Permutation& p) {
    std::ostringstream os;
    bool any = false;
    for (auto& c : p.cycles()) {
        if (c.size() < 2) continue;
        any = true;
        os << '(';
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j) os << ' ';
            os << c[j] + 1;
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

inline Permutation parse_images(const std::string& s) {
    std::istringstream is(s);
    std::vector<int> img;
    int v;
    while (is >> v) img.push_back(v - 1);
    if (img.empty()) throw std::invalid_argument("empty image sequence");
    return Permutation::from_images(std::move(img));
}

inline Permutation parse_cycles(const std::string& s, int n) {
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) img[j] = j;
    std::vector<char> moved(n, 0);
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
    skip_ws();
    while (pos < s.size()) {
        if (s[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == ')') { ++pos; break; }
            std::size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) ++pos;
            if (pos == start) throw std::invalid_argument("expected number in cycle notation");
            int v = std::stoi(s.substr(start, pos - start)) - 1;
            if (v < 0 || v >= n) throw std::invalid_argument("cycle entry out of range");
            if (moved[v]) throw std::invalid_argument("repeated entry in cycle notation");
            moved[v] = 1;
            cyc.push_back(v);
            skip_ws();
            if (pos < s.size() && s[pos] == ',') ++pos;
        }
        for (std::size_t j = 0; j + 1 < cyc.size(); ++j) img[cyc[j]] = cyc[j + 1];
        if (cyc.size() >= 2) img[cyc.back()] = cyc.front();
        skip_ws();
    }
    return Permutation::from_images(std::move(img));
}

}  // namespace errgraph
