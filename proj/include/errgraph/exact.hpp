#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace errgraph {

// All counts in this library are exact. Even modest parameters overflow
// 64 bits: c(n,1) = (n-1)! exceeds 2^63 from n = 22 on.
using ExactInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline ExactInt factorial(int n) {
    ExactInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline ExactInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    ExactInt b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

inline ExactInt pow_exact(ExactInt base, int exp) {
    ExactInt r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

/// Requires the rational to be an integer; anything else is a logic error
/// on the caller's side.
inline ExactInt require_integral(const Rational& q, const char* what) {
    if (boost::multiprecision::denominator(q) != 1)
        throw std::logic_error(std::string("non-integral value in ") + what);
    return boost::multiprecision::numerator(q);
}

/// Polynomial with exact integer coefficients, ascending degree,
/// no trailing zero coefficient.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<ExactInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial one() { return IntPolynomial({ExactInt(1)}); }

    const std::vector<ExactInt>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    ExactInt coefficient(std::size_t i) const {
        return i < c_.size() ? c_[i] : ExactInt(0);
    }

    ExactInt operator()(const ExactInt& t) const {
        ExactInt v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
        return v;
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (c_.empty() || o.c_.empty()) return IntPolynomial();
        std::vector<ExactInt> r(c_.size() + o.c_.size() - 1, ExactInt(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return IntPolynomial(std::move(r));
    }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<ExactInt> c_;
};

/// A computation refused its resource budget.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two vertices lie in different components (or word orbits).
struct UnreachableError : std::runtime_error {
    explicit UnreachableError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace errgraph
