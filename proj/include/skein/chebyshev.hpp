#pragma once

// Chebyshev polynomials of the first kind, normalized T_0 = 2, T_1 = X,
// T_n = X T_{n-1} - T_{n-2}, and the inverse change of basis X^n -> T_k.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Integer polynomial in X, coefficient index = power. Zero is the empty vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

    IntPoly times_x() const {
        if (is_zero()) return {};
        std::vector<BigInt> c(coeffs_.size() + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& x, const IntPoly& y) {
        std::vector<BigInt> c(std::max(x.coeffs_.size(), y.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeff(i) - y.coeff(i);
        return IntPoly(std::move(c));
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Horner evaluation at a Laurent polynomial.
    LaurentPoly evaluate(const LaurentPoly& x) const {
        LaurentPoly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x;
            acc.add_term(0, *it);
        }
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// n-th Chebyshev polynomial of the first kind (monic for n >= 1, T_0 = 2).
inline IntPoly cheb_T(unsigned n) {
    IntPoly prev({BigInt(2)});
    if (n == 0) return prev;
    IntPoly cur({BigInt(0), BigInt(1)});
    for (unsigned k = 2; k <= n; ++k) {
        IntPoly next = cur.times_x() - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Coefficients c_k with X^n = sum_{k>=1} c_k T_k + c_0 * 1. The constant is
/// taken against the unit 1, not T_0 = 2, so everything stays integral.
inline std::map<unsigned, BigInt> power_in_T(unsigned n) {
    std::map<unsigned, BigInt> out;
    for (unsigned k = n % 2; k <= n; k += 2) out.emplace(k, binomial(n, (n - k) / 2));
    return out;
}

}  // namespace skein
