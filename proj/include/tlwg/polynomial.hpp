#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlwg/errors.hpp"
#include "tlwg/numeric.hpp"

namespace tlwg {

// Univariate polynomial over the arbitrary-precision integers, stored as
// ascending coefficients with no trailing zeros (the zero polynomial is the
// empty vector).  Exact division and gcd make these usable as entries of
// fraction-free eliminations.
class int_polynomial {
public:
    int_polynomial() = default;

    explicit int_polynomial(big_int constant) {
        if (constant != 0) {
            coeffs_.push_back(std::move(constant));
        }
    }

    explicit int_polynomial(long constant) : int_polynomial(big_int(constant)) {}

    static int_polynomial from_coefficients(std::vector<big_int> ascending) {
        int_polynomial p;
        p.coeffs_ = std::move(ascending);
        p.trim();
        return p;
    }

    // c * d^degree
    static int_polynomial monomial(big_int c, int degree) {
        if (degree < 0) {
            throw index_out_of_range("monomial with negative degree");
        }
        int_polynomial p;
        if (c != 0) {
            p.coeffs_.assign(degree + 1, big_int(0));
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    static int_polynomial variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    big_int coefficient(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
            return 0;
        }
        return coeffs_[i];
    }

    const std::vector<big_int>& coefficients() const { return coeffs_; }

    const big_int& leading_coefficient() const {
        if (is_zero()) {
            throw index_out_of_range("leading coefficient of the zero polynomial");
        }
        return coeffs_.back();
    }

    big_rational evaluate(const big_rational& x) const {
        big_rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    big_int evaluate(const big_int& x) const {
        big_int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    friend int_polynomial operator+(const int_polynomial& a, const int_polynomial& b) {
        int_polynomial r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), big_int(0));
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
            if (i < a.coeffs_.size()) {
                r.coeffs_[i] += a.coeffs_[i];
            }
            if (i < b.coeffs_.size()) {
                r.coeffs_[i] += b.coeffs_[i];
            }
        }
        r.trim();
        return r;
    }

    friend int_polynomial operator-(const int_polynomial& a) {
        int_polynomial r = a;
        for (auto& c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    friend int_polynomial operator-(const int_polynomial& a, const int_polynomial& b) {
        return a + (-b);
    }

    friend int_polynomial operator*(const int_polynomial& a, const int_polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        int_polynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, big_int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend int_polynomial operator*(const big_int& c, const int_polynomial& a) {
        if (c == 0) {
            return {};
        }
        int_polynomial r = a;
        for (auto& x : r.coeffs_) {
            x *= c;
        }
        return r;
    }

    int_polynomial& operator+=(const int_polynomial& o) { return *this = *this + o; }
    int_polynomial& operator-=(const int_polynomial& o) { return *this = *this - o; }
    int_polynomial& operator*=(const int_polynomial& o) { return *this = *this * o; }

    friend bool operator==(const int_polynomial& a, const int_polynomial& b) = default;

    // gcd of the coefficients, non-negative; 0 for the zero polynomial.
    big_int content() const {
        big_int g = 0;
        for (const auto& c : coeffs_) {
            g = boost::multiprecision::gcd(g, c);
        }
        return g;
    }

    // *this divided by its content; keeps the sign of the leading coefficient.
    int_polynomial primitive_part() const {
        if (is_zero()) {
            return {};
        }
        int_polynomial r = *this;
        const big_int c = content();
        for (auto& x : r.coeffs_) {
            x /= c;
        }
        return r;
    }

    std::string to_string(std::string_view var = "d") const {
        if (is_zero()) {
            return "0";
        }
        std::string s;
        for (int e = degree(); e >= 0; --e) {
            const big_int& c = coeffs_[e];
            if (c == 0) {
                continue;
            }
            const big_int mag = abs(c);
            if (s.empty()) {
                s += (c < 0) ? "-" : "";
            } else {
                s += (c < 0) ? " - " : " + ";
            }
            if (mag != 1 || e == 0) {
                s += mag.str();
            }
            if (e >= 1) {
                s += var;
                if (e >= 2) {
                    s += "^" + std::to_string(e);
                }
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<big_int> coeffs_;
};

// Divides every coefficient by c; the division must be exact.
inline int_polynomial exact_scalar_div(const int_polynomial& a, const big_int& c) {
    if (c == 0) {
        throw std::logic_error("polynomial division by the zero constant");
    }
    std::vector<big_int> out;
    out.reserve(a.coefficients().size());
    for (const auto& x : a.coefficients()) {
        if (x % c != 0) {
            throw std::logic_error("inexact scalar division of a polynomial");
        }
        out.push_back(x / c);
    }
    return int_polynomial::from_coefficients(std::move(out));
}

// Quotient a / b when b divides a exactly in Z[d]; throws otherwise.
inline int_polynomial exact_div(const int_polynomial& a, const int_polynomial& b) {
    if (b.is_zero()) {
        throw std::logic_error("polynomial division by zero");
    }
    if (a.is_zero()) {
        return {};
    }
    if (a.degree() < b.degree()) {
        throw std::logic_error("inexact polynomial division");
    }
    int_polynomial rem = a;
    std::vector<big_int> q(a.degree() - b.degree() + 1, big_int(0));
    const big_int lead = b.leading_coefficient();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        const big_int c = rem.coefficient(b.degree() + i);
        if (c == 0) {
            continue;
        }
        if (c % lead != 0) {
            throw std::logic_error("inexact polynomial division");
        }
        q[i] = c / lead;
        rem -= int_polynomial::monomial(q[i], i) * b;
    }
    if (!rem.is_zero()) {
        throw std::logic_error("inexact polynomial division");
    }
    return int_polynomial::from_coefficients(std::move(q));
}

namespace detail {

// lc(b)^(deg a - deg b + 1) * a  reduced modulo b; both nonzero, deg a >= deg b.
inline int_polynomial pseudo_remainder(const int_polynomial& a, const int_polynomial& b) {
    int_polynomial r = a;
    int e = a.degree() - b.degree() + 1;
    const big_int lead = b.leading_coefficient();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = int_polynomial::monomial(r.leading_coefficient(),
                                                    r.degree() - b.degree());
        r = lead * r - shift * b;
        --e;
    }
    return integer_power(lead, e) * r;
}

} // namespace detail

// Polynomial gcd over Z[d] via the subresultant pseudo-remainder sequence,
// which keeps intermediate coefficients from exploding.  Normalized to a
// positive leading coefficient; gcd(0, 0) == 0.
inline int_polynomial gcd(const int_polynomial& a, const int_polynomial& b) {
    const auto normalize = [](int_polynomial p) {
        if (!p.is_zero() && p.leading_coefficient() < 0) {
            p = big_int(-1) * p;
        }
        return p;
    };
    if (a.is_zero()) {
        return normalize(b);
    }
    if (b.is_zero()) {
        return normalize(a);
    }

    const big_int scalar = boost::multiprecision::gcd(a.content(), b.content());
    int_polynomial big = a.primitive_part();
    int_polynomial small = b.primitive_part();
    if (big.degree() < small.degree()) {
        std::swap(big, small);
    }

    big_int g = 1;
    big_int h = 1;
    while (true) {
        const int delta = big.degree() - small.degree();
        const int_polynomial rem = detail::pseudo_remainder(big, small);
        if (rem.is_zero()) {
            break;
        }
        if (rem.degree() == 0) {
            small = int_polynomial(big_int(1));
            break;
        }
        big = std::move(small);
        small = exact_scalar_div(rem, g * integer_power(h, delta));
        g = big.leading_coefficient();
        if (delta >= 1) {
            big_int gd = integer_power(g, delta);
            if (delta >= 2) {
                const big_int hd = integer_power(h, delta - 1);
                if (gd % hd != 0) {
                    throw std::logic_error("subresultant bookkeeping is inexact");
                }
                gd /= hd;
            }
            h = gd;
        }
    }
    return normalize(scalar * small.primitive_part());
}

// Chebyshev-like trace polynomials: delta_0 = 1, delta_1 = d,
// delta_{k+1} = d * delta_k - delta_{k-1}.
inline int_polynomial chebyshev_delta(int k) {
    if (k < 0) {
        throw index_out_of_range("chebyshev_delta of negative index");
    }
    int_polynomial prev(big_int(1));
    if (k == 0) {
        return prev;
    }
    int_polynomial cur = int_polynomial::variable();
    for (int i = 1; i < k; ++i) {
        int_polynomial next = int_polynomial::variable() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace tlwg
