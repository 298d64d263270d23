#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <sstream>
#include <string>
#include <string_view>

#include "tlwg/errors.hpp"

namespace tlwg {

using big_int = boost::multiprecision::mpz_int;
using big_rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const big_int& n) {
    return n.str();
}

// Canonical text form: "a" for integers, "a/b" with b > 1 otherwise.
inline std::string to_string(const big_rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/" + denominator(q).str();
    }
    return s;
}

// Accepts an optionally signed integer literal or a fraction "a/b".
// Decimal and exponent notation are rejected.
inline big_rational parse_rational(std::string_view text) {
    const auto is_integer_literal = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '+' || s.front() == '-')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };

    const auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text, true)) {
        throw parse_error("not a rational literal: \"" + std::string(text) + "\"");
    }
    const bool negative = num_text.front() == '-';
    if (num_text.front() == '+' || num_text.front() == '-') {
        num_text.remove_prefix(1);
    }
    big_int num{std::string(num_text)};
    if (negative) {
        num = -num;
    }
    if (slash == std::string_view::npos) {
        return big_rational(num);
    }

    std::string_view den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text, false)) {
        throw parse_error("not a rational literal: \"" + std::string(text) + "\"");
    }
    big_int den{std::string(den_text)};
    if (den == 0) {
        throw parse_error("zero denominator in rational literal: \"" + std::string(text) + "\"");
    }
    return big_rational(num, den);
}

inline big_int integer_power(const big_int& base, int exponent) {
    if (exponent < 0) {
        throw index_out_of_range("integer_power: negative exponent");
    }
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

inline big_rational rational_power(const big_rational& base, int exponent) {
    if (exponent >= 0) {
        return big_rational(integer_power(numerator(base), exponent),
                            integer_power(denominator(base), exponent));
    }
    if (base == 0) {
        throw index_out_of_range("rational_power: negative power of zero");
    }
    return big_rational(integer_power(denominator(base), -exponent),
                        integer_power(numerator(base), -exponent));
}

} // namespace tlwg
