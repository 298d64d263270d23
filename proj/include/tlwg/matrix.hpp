#pragma once

#include <utility>
#include <vector>

#include "tlwg/errors.hpp"
#include "tlwg/numeric.hpp"
#include "tlwg/polynomial.hpp"
#include "tlwg/rational_function.hpp"

namespace tlwg {

// Ring operations the fraction-free elimination needs, beyond the arithmetic
// operators the entry types already provide.
template <typename R>
struct ring_traits;

template <>
struct ring_traits<big_int> {
    static big_int zero() { return 0; }
    static big_int one() { return 1; }
    static bool is_zero(const big_int& a) { return a == 0; }
    static big_int exact_div(const big_int& a, const big_int& b) {
        if (b == 0) {
            throw std::logic_error("integer division by zero");
        }
        if (a % b != 0) {
            throw std::logic_error("inexact integer division");
        }
        return a / b;
    }
};

template <>
struct ring_traits<int_polynomial> {
    static int_polynomial zero() { return {}; }
    static int_polynomial one() { return int_polynomial(big_int(1)); }
    static bool is_zero(const int_polynomial& a) { return a.is_zero(); }
    static int_polynomial exact_div(const int_polynomial& a, const int_polynomial& b) {
        return tlwg::exact_div(a, b);
    }
};

template <>
struct ring_traits<big_rational> {
    static big_rational zero() { return 0; }
    static big_rational one() { return 1; }
    static bool is_zero(const big_rational& a) { return a == 0; }
    static big_rational exact_div(const big_rational& a, const big_rational& b) {
        if (b == 0) {
            throw std::logic_error("rational division by zero");
        }
        return a / b;
    }
};

template <>
struct ring_traits<rational_function> {
    static rational_function zero() { return {}; }
    static rational_function one() {
        return rational_function::from_polynomial(int_polynomial(big_int(1)));
    }
    static bool is_zero(const rational_function& a) { return a.is_zero(); }
    static rational_function exact_div(const rational_function& a, const rational_function& b) {
        return a / b;
    }
};

// Dense rectangular matrix with value-semantics entries.
template <typename T>
class matrix {
public:
    matrix() : rows_(0), cols_(0) {}

    matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * cols, ring_traits<T>::zero()) {
        if (rows < 0 || cols < 0) {
            throw index_out_of_range("negative matrix dimension");
        }
    }

    static matrix identity(int n) {
        matrix m(n, n);
        for (int i = 0; i < n; ++i) {
            m.at(i, i) = ring_traits<T>::one();
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) {
        check(i, j);
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const T& at(int i, int j) const {
        check(i, j);
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    friend matrix operator*(const matrix& a, const matrix& b) {
        if (a.cols_ != b.rows_) {
            throw size_mismatch("matrix product shape mismatch");
        }
        matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int l = 0; l < a.cols_; ++l) {
                const T& ail = a.at(i, l);
                if (ring_traits<T>::is_zero(ail)) {
                    continue;
                }
                for (int j = 0; j < b.cols_; ++j) {
                    r.at(i, j) = r.at(i, j) + ail * b.at(l, j);
                }
            }
        }
        return r;
    }

    friend bool operator==(const matrix&, const matrix&) = default;

private:
    void check(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
            throw index_out_of_range("matrix index (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") outside " + std::to_string(rows_) +
                                     "x" + std::to_string(cols_));
        }
    }

    int rows_;
    int cols_;
    std::vector<T> data_;
};

// Solution of lhs * X = denominator * rhs with X over the base ring; the
// true solution of lhs * Y = rhs is Y = X / denominator.
template <typename R>
struct scaled_solution {
    matrix<R> numerators;
    R denominator;
};

// Fraction-free Gaussian elimination (Bareiss) over an integral domain,
// followed by an exact back-substitution.  Every division performed is exact
// in the ring; the result is verified against the inputs before returning.
// Throws singular_matrix when lhs is not invertible.
template <typename R>
scaled_solution<R> solve_linear_scaled(const matrix<R>& lhs, const matrix<R>& rhs) {
    if (lhs.rows() != lhs.cols()) {
        throw size_mismatch("linear solve requires a square matrix");
    }
    if (rhs.rows() != lhs.rows()) {
        throw size_mismatch("right-hand side has the wrong number of rows");
    }
    const int n = lhs.rows();
    const int m = rhs.cols();
    const R one = ring_traits<R>::one();
    if (n == 0) {
        return {matrix<R>(0, m), one};
    }

    matrix<R> a(n, n + m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a.at(i, j) = lhs.at(i, j);
        }
        for (int j = 0; j < m; ++j) {
            a.at(i, n + j) = rhs.at(i, j);
        }
    }

    // Forward pass.  After step l the leading (l+1) columns are upper
    // triangular and every entry is, up to the accumulated sign, a minor of
    // the original augmented matrix; that is what keeps divisions exact.
    bool negate = false;
    R prev = one;
    for (int l = 0; l < n; ++l) {
        int pivot = -1;
        for (int i = l; i < n; ++i) {
            if (!ring_traits<R>::is_zero(a.at(i, l))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            throw singular_matrix("pivot column " + std::to_string(l) + " vanished");
        }
        if (pivot != l) {
            for (int j = 0; j < n + m; ++j) {
                std::swap(a.at(l, j), a.at(pivot, j));
            }
            negate = !negate;
        }
        for (int i = l + 1; i < n; ++i) {
            for (int j = l + 1; j < n + m; ++j) {
                a.at(i, j) = ring_traits<R>::exact_div(
                    a.at(l, l) * a.at(i, j) - a.at(i, l) * a.at(l, j), prev);
            }
            a.at(i, l) = ring_traits<R>::zero();
        }
        prev = a.at(l, l);
    }

    R det = negate ? (ring_traits<R>::zero() - a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);

    // Back-substitution scaled by det: the solution entries of
    // lhs * X = det * rhs are again ring elements (Cramer), and each step's
    // division by the diagonal entry is exact.
    matrix<R> x(n, m);
    for (int j = 0; j < m; ++j) {
        for (int i = n - 1; i >= 0; --i) {
            R acc = det * a.at(i, n + j);
            for (int l = i + 1; l < n; ++l) {
                acc = acc - a.at(i, l) * x.at(l, j);
            }
            x.at(i, j) = ring_traits<R>::exact_div(acc, a.at(i, i));
        }
    }

    // Independent check of the defining identity lhs * X == det * rhs.
    matrix<R> product = lhs * x;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            if (!(product.at(i, j) == det * rhs.at(i, j))) {
                throw std::logic_error("scaled linear solve failed verification");
            }
        }
    }
    return {std::move(x), std::move(det)};
}

template <typename R>
scaled_solution<R> inverse_scaled(const matrix<R>& m) {
    return solve_linear_scaled(m, matrix<R>::identity(m.rows()));
}

// Exact inverse over the rational functions.  Denominators are cleared with
// a polynomial common multiple, the integer-polynomial system is solved
// fraction-free, and the verified scaled solution is reassembled.
inline matrix<rational_function> matrix_inverse_exact(const matrix<rational_function>& m) {
    if (m.rows() != m.cols()) {
        throw size_mismatch("inverse of a non-square matrix");
    }
    const int n = m.rows();
    int_polynomial common(big_int(1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int_polynomial& den = m.at(i, j).den();
            common = exact_div(common * den, gcd(common, den));
        }
    }
    matrix<int_polynomial> cleared(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cleared.at(i, j) = m.at(i, j).num() * exact_div(common, m.at(i, j).den());
        }
    }
    const auto scaled = inverse_scaled(cleared);
    matrix<rational_function> inv(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            inv.at(i, j) = rational_function(scaled.numerators.at(i, j) * common,
                                             scaled.denominator);
        }
    }
    return inv;
}

inline matrix<big_rational> matrix_inverse_exact(const matrix<big_rational>& m) {
    if (m.rows() != m.cols()) {
        throw size_mismatch("inverse of a non-square matrix");
    }
    const int n = m.rows();
    big_int common = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const big_int& den = denominator(m.at(i, j));
            common = common * den / boost::multiprecision::gcd(common, den);
        }
    }
    matrix<big_int> cleared(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cleared.at(i, j) = numerator(m.at(i, j)) * (common / denominator(m.at(i, j)));
        }
    }
    const auto scaled = inverse_scaled(cleared);
    matrix<big_rational> inv(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            inv.at(i, j) = big_rational(scaled.numerators.at(i, j) * common) /
                           big_rational(scaled.denominator);
        }
    }
    return inv;
}

} // namespace tlwg
