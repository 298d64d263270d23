#pragma once

#include <string>
#include <utility>

#include "tlwg/errors.hpp"
#include "tlwg/numeric.hpp"
#include "tlwg/polynomial.hpp"

namespace tlwg {

// Ratio of integer polynomials in lowest terms.  Canonical form: numerator
// and denominator share no factor (integer content included) and the
// denominator has a positive leading coefficient, so equal values compare
// equal componentwise.
class rational_function {
public:
    rational_function() : den_(big_int(1)) {}

    rational_function(int_polynomial num, int_polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) {
            throw division_by_zero("rational function with zero denominator");
        }
        reduce();
    }

    static rational_function from_polynomial(int_polynomial p) {
        return rational_function(std::move(p), int_polynomial(big_int(1)));
    }

    static rational_function constant(const big_rational& c) {
        return rational_function(int_polynomial(numerator(c)), int_polynomial(denominator(c)));
    }

    const int_polynomial& num() const { return num_; }
    const int_polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    bool is_polynomial() const {
        return den_ == int_polynomial(big_int(1));
    }

    friend rational_function operator+(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend rational_function operator-(const rational_function& a) {
        rational_function r = a;
        r.num_ = -r.num_;
        return r;
    }

    friend rational_function operator-(const rational_function& a, const rational_function& b) {
        return a + (-b);
    }

    friend rational_function operator*(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend rational_function operator/(const rational_function& a, const rational_function& b) {
        if (b.is_zero()) {
            throw division_by_zero("division by the zero rational function");
        }
        return rational_function(a.num_ * b.den_, a.den_ * b.num_);
    }

    rational_function& operator+=(const rational_function& o) { return *this = *this + o; }
    rational_function& operator-=(const rational_function& o) { return *this = *this - o; }
    rational_function& operator*=(const rational_function& o) { return *this = *this * o; }
    rational_function& operator/=(const rational_function& o) { return *this = *this / o; }

    friend bool operator==(const rational_function& a, const rational_function& b) = default;

    rational_function reciprocal() const {
        if (is_zero()) {
            throw division_by_zero("reciprocal of the zero rational function");
        }
        return rational_function(den_, num_);
    }

    // Value at d = x; throws when x is a pole.
    big_rational evaluate(const big_rational& x) const {
        const big_rational den_value = den_.evaluate(x);
        if (den_value == 0) {
            throw division_by_zero("rational function evaluated at a pole");
        }
        return num_.evaluate(x) / den_value;
    }

    std::string to_string(std::string_view var = "d") const {
        if (is_polynomial()) {
            return num_.to_string(var);
        }
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = int_polynomial(big_int(1));
            return;
        }
        const int_polynomial g = gcd(num_, den_);
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
        if (den_.leading_coefficient() < 0) {
            num_ = big_int(-1) * num_;
            den_ = big_int(-1) * den_;
        }
    }

    int_polynomial num_;
    int_polynomial den_;
};

} // namespace tlwg
