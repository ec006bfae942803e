#ifndef SEXTIC_ELIMINATION_HPP
#define SEXTIC_ELIMINATION_HPP

// Determinants, Sylvester resultants and discriminants over an arbitrary
// commutative integral domain R. R needs +, -, *, unary -, and the free
// functions is_zero(R) and exact_div(R, R).
//
// Coefficient vectors are ordered low to high degree and may not carry a
// zero leading entry (callers trim them).

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "sextic/bigint.hpp"

namespace sextic {

template <class R>
using Matrix = std::vector<std::vector<R>>;

enum class DetMethod { Bareiss, Minors };

/// Fraction-free Gaussian elimination. `one` supplies the ring identity.
template <class R>
R det_bareiss(Matrix<R> m, const R& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    bool negate = false;
    R prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return one - one;
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        }
        prev = m[k][k];
    }
    R result = m[n - 1][n - 1];
    if (negate) result = -result;
    return result;
}

/// Division-free Laplace expansion along rows, memoized over column subsets.
template <class R>
R det_minors(const Matrix<R>& m, const R& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    const R zero = one - one;
    // minors[mask] = det of the bottom |mask| rows restricted to columns in mask.
    std::vector<R> minors(std::size_t{1} << n, zero);
    minors[0] = one;
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        std::size_t bits = static_cast<std::size_t>(__builtin_popcountll(mask));
        std::size_t row = n - bits;
        R acc = zero;
        std::size_t position = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if (!(mask & (std::size_t{1} << col))) continue;
            if (!is_zero(m[row][col])) {
                R term = m[row][col] * minors[mask & ~(std::size_t{1} << col)];
                if (position % 2 == 0) acc = acc + term;
                else acc = acc - term;
            }
            ++position;
        }
        minors[mask] = acc;
    }
    return minors.back();
}

template <class R>
R determinant(const Matrix<R>& m, const R& one, DetMethod method = DetMethod::Bareiss) {
    return method == DetMethod::Bareiss ? det_bareiss(m, one) : det_minors(m, one);
}

/// Sylvester matrix of p (degree m) and q (degree n), size (m+n) x (m+n).
template <class R>
Matrix<R> sylvester_matrix(std::span<const R> p, std::span<const R> q, const R& zero) {
    const std::size_t m = p.size() - 1, n = q.size() - 1, size = m + n;
    Matrix<R> s(size, std::vector<R>(size, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = p[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = q[n - j];
    return s;
}

template <class R>
R resultant(std::span<const R> p, std::span<const R> q, const R& one,
            DetMethod method = DetMethod::Bareiss) {
    if (p.empty() || q.empty()) return R(one - one);
    return determinant(sylvester_matrix(p, q, R(one - one)), one, method);
}

template <class R>
std::vector<R> derivative(std::span<const R> p) {
    std::vector<R> r;
    for (std::size_t k = 1; k < p.size(); ++k) r.push_back(p[k] * Int(static_cast<long>(k)));
    return r;
}

/// Discriminant of a monic polynomial via (-1)^(n(n-1)/2) Res(p, p').
template <class R>
R monic_discriminant_resultant(std::span<const R> p, const R& one,
                               DetMethod method = DetMethod::Bareiss) {
    const std::size_t n = p.size() - 1;
    std::vector<R> dp = derivative(p);
    R r = resultant(p, std::span<const R>(dp), one, method);
    if ((n * (n - 1) / 2) % 2 != 0) r = -r;
    return r;
}

/// Closed-form discriminant of the monic cubic t^3 + b t^2 + c t + d.
template <class R>
R monic_cubic_discriminant(const R& b, const R& c, const R& d) {
    R bc = b * c;
    return bc * bc - c * c * c * Int(4) - b * b * b * d * Int(4) - d * d * Int(27) + bc * d * Int(18);
}

}  // namespace sextic

#endif
