#pragma once

#include <string>
#include <vector>

#include "tlwg/errors.hpp"
#include "tlwg/matrix.hpp"
#include "tlwg/numeric.hpp"
#include "tlwg/pairing.hpp"
#include "tlwg/polynomial.hpp"
#include "tlwg/rational_function.hpp"
#include "tlwg/tl_element.hpp"

namespace tlwg {

// Symbolic inversion of an n x n polynomial matrix costs minutes once n
// reaches the 42 pairings of half-size 5, hence the lower default cap;
// numeric inversion stays fast one size further.
inline constexpr int default_symbolic_cap = 5;
inline constexpr int default_numeric_cap = 6;

// Inverse Gram matrix with symbolic entries, rows and columns in canonical
// pairing order.
struct symbolic_weingarten {
    int k = 0;
    std::vector<pairing> ordering;
    matrix<rational_function> entries;
};

// Inverse Gram matrix evaluated at a rational d.
struct numeric_weingarten {
    int k = 0;
    big_rational d;
    std::vector<pairing> ordering;
    matrix<big_rational> entries;
};

inline symbolic_weingarten weingarten_symbolic(int k, int cap = default_symbolic_cap) {
    symbolic_weingarten wg;
    wg.k = k;
    wg.ordering = enumerate_nc2(k, cap);
    const auto scaled = inverse_scaled(gram_matrix(k, cap));
    const int n = static_cast<int>(wg.ordering.size());
    wg.entries = matrix<rational_function>(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            wg.entries.at(i, j) =
                rational_function(scaled.numerators.at(i, j), scaled.denominator);
        }
    }
    return wg;
}

inline numeric_weingarten weingarten_numeric(int k, const big_rational& d,
                                             int cap = default_numeric_cap) {
    numeric_weingarten wg;
    wg.k = k;
    wg.d = d;
    wg.ordering = enumerate_nc2(k, cap);
    const int n = static_cast<int>(wg.ordering.size());

    // Clear denominators: with d = a/b the entry d^j becomes a^j b^(k-j)
    // over the common factor b^k, so the system is integral.
    const big_int a = numerator(d);
    const big_int b = denominator(d);
    matrix<big_int> cleared(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int e = join_block_count(wg.ordering[i], wg.ordering[j]);
            cleared.at(i, j) = integer_power(a, e) * integer_power(b, k - e);
        }
    }
    const big_int scale = integer_power(b, k);

    try {
        const auto scaled = inverse_scaled(cleared);
        wg.entries = matrix<big_rational>(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                wg.entries.at(i, j) = big_rational(scaled.numerators.at(i, j) * scale) /
                                      big_rational(scaled.denominator);
            }
        }
    } catch (const singular_matrix&) {
        throw singular_gram("gram matrix is singular at d = " + to_string(d));
    }
    return wg;
}

// One row of the symbolic inverse Gram matrix, computed by a single
// fraction-free solve instead of a full inversion (the Gram matrix is
// symmetric, so the p-column of the inverse is also its p-row).
inline std::vector<rational_function> weingarten_row(const pairing& p,
                                                     int cap = default_symbolic_cap) {
    const int k = p.half_size();
    const auto ordering = enumerate_nc2(k, cap);
    const int n = static_cast<int>(ordering.size());
    int at = -1;
    for (int i = 0; i < n; ++i) {
        if (ordering[i] == p) {
            at = i;
            break;
        }
    }
    if (at < 0) {
        throw std::logic_error("pairing missing from its own basis");
    }
    matrix<int_polynomial> rhs(n, 1);
    rhs.at(at, 0) = ring_traits<int_polynomial>::one();
    const auto scaled = solve_linear_scaled(gram_matrix(k, cap), rhs);
    std::vector<rational_function> row;
    row.reserve(n);
    for (int i = 0; i < n; ++i) {
        row.emplace_back(scaled.numerators.at(i, 0), scaled.denominator);
    }
    return row;
}

// Dual basis element: the unique element with <D_q, dual(p)> = [p == q].
// Its coefficients over the diagram basis form the p-row of the inverse
// Gram matrix.
inline tl_element dual_basis_element(const pairing& p, int cap = default_symbolic_cap) {
    const int k = p.half_size();
    const auto ordering = enumerate_nc2(k, cap);
    const auto row = weingarten_row(p, cap);
    tl_element dual(k);
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        dual.add_term(ordering[i], row[i]);
    }
    return dual;
}

namespace detail {

// True when every block of p has equal values of the index word.
inline bool refines_kernel(const pairing& p, const std::vector<int>& word) {
    for (const auto& [a, b] : p.blocks()) {
        if (word[a - 1] != word[b - 1]) {
            return false;
        }
    }
    return true;
}

} // namespace detail

// Mixed moment of Haar-distributed matrix entries with index words i and j:
// zero for odd length, and otherwise the sum of inverse-Gram entries over
// the pairings refining the kernels of the two words.
inline big_rational haar_moment(const std::vector<int>& i, const std::vector<int>& j,
                                const big_rational& d, int cap = default_numeric_cap) {
    if (i.size() != j.size()) {
        throw size_mismatch("index words of different lengths");
    }
    for (const auto word : {&i, &j}) {
        for (int value : *word) {
            if (value < 1) {
                throw index_out_of_range("index entries must be positive");
            }
        }
    }
    const int l = static_cast<int>(i.size());
    if (l == 0) {
        return 1;
    }
    if (l % 2 != 0) {
        return 0;
    }
    const int k = l / 2;
    const auto wg = weingarten_numeric(k, d, cap);
    const int n = static_cast<int>(wg.ordering.size());

    big_rational sum = 0;
    for (int a = 0; a < n; ++a) {
        if (!detail::refines_kernel(wg.ordering[a], j)) {
            continue;
        }
        for (int b = 0; b < n; ++b) {
            if (!detail::refines_kernel(wg.ordering[b], i)) {
                continue;
            }
            sum += wg.entries.at(a, b);
        }
    }
    return sum;
}

} // namespace tlwg
