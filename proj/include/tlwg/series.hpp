#pragma once

#include <vector>

#include "tlwg/errors.hpp"
#include "tlwg/numeric.hpp"
#include "tlwg/rational_function.hpp"

namespace tlwg {

// Truncated expansion around d = infinity:
//   f(d) = sum_{j >= 0} coefficients[j] * d^(-offset - j),
// with coefficients known through the stored window.  For a nonzero function
// the first coefficient is nonzero; the zero function is stored with offset 0
// and an all-zero window.
struct series_at_infinity {
    int offset = 0;
    std::vector<big_rational> coefficients;

    bool is_zero() const {
        for (const auto& c : coefficients) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    // Coefficient of d^(-power).  Powers above the window start are zero by
    // construction; powers past the window end are simply not known.
    big_rational coefficient_of_power(int power) const {
        if (power < offset) {
            return 0;
        }
        const int j = power - offset;
        if (j >= static_cast<int>(coefficients.size())) {
            throw index_out_of_range("series window ends before d^-" + std::to_string(power));
        }
        return coefficients[j];
    }

    friend bool operator==(const series_at_infinity&, const series_at_infinity&) = default;
};

// Expands f at infinity in powers of 1/d, keeping order + 1 coefficients.
// Writing f = (a_0 d^m + ...) / (b_0 d^n + ...) with a_0, b_0 != 0, the
// expansion starts at d^(m - n) and the coefficients solve the triangular
// system b_0 c_j = a_j - sum_{i=1}^{j} b_i c_{j-i} over the rationals.
inline series_at_infinity expand_at_infinity(const rational_function& f, int order) {
    if (order < 0) {
        throw index_out_of_range("negative series order");
    }
    series_at_infinity s;
    s.coefficients.assign(order + 1, big_rational(0));
    if (f.is_zero()) {
        return s;
    }

    const int num_deg = f.num().degree();
    const int den_deg = f.den().degree();
    s.offset = den_deg - num_deg;

    // Coefficients of numerator and denominator read from the top.
    const auto from_top = [](const int_polynomial& p, int j) {
        return p.coefficient(p.degree() - j);
    };
    const big_rational lead(from_top(f.den(), 0));
    for (int j = 0; j <= order; ++j) {
        big_rational acc(from_top(f.num(), j));
        for (int i = 1; i <= j; ++i) {
            acc -= big_rational(from_top(f.den(), i)) * s.coefficients[j - i];
        }
        s.coefficients[j] = acc / lead;
    }
    return s;
}

} // namespace tlwg
