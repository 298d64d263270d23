#pragma once

#include <string>
#include <vector>

#include "tlwg/errors.hpp"
#include "tlwg/pairing.hpp"
#include "tlwg/polynomial.hpp"
#include "tlwg/rational_function.hpp"
#include "tlwg/tl_element.hpp"
#include "tlwg/weingarten_oracle.hpp"

namespace tlwg {

// Embeds a pairing on 2k points into 2k+2 points by appending a straight
// strand on the right: top labels stay put, bottom labels shift by two, and
// the new strand pairs k+1 with k+2.
inline pairing embed_add_strand(const pairing& p) {
    const int k = p.half_size();
    const auto relabel = [&](int l) { return l <= k ? l : l + 2; };
    std::vector<int> partner(2 * k + 2);
    for (int i = 1; i <= 2 * k; ++i) {
        partner[relabel(i) - 1] = relabel(p.partner(i));
    }
    partner[k] = k + 2;
    partner[k + 1] = k + 1;
    return pairing(partner);
}

inline tl_element embed_add_strand(const tl_element& x) {
    tl_element r(x.half_size() + 1);
    for (const auto& [p, c] : x.terms()) {
        r.add_term(embed_add_strand(p), c);
    }
    return r;
}

// The projection built by the Wenzl recursion:
//   f_1 = D_1,   f_{m+1} = e(f_m) - (delta_{m-1}/delta_m) e(f_m) u_m e(f_m),
// where e adds a strand and delta is the trace polynomial.
inline tl_element jw_wenzl_recursion(int k, int cap = default_enumeration_cap) {
    if (k < 1) {
        throw index_out_of_range("projection needs half-size at least 1");
    }
    if (k > cap) {
        throw size_limit_exceeded("half-size " + std::to_string(k) + " exceeds cap " +
                                  std::to_string(cap));
    }
    tl_element f = tl_element::identity(1);
    for (int m = 1; m < k; ++m) {
        const tl_element e = embed_add_strand(f);
        const rational_function ratio(chebyshev_delta(m - 1), chebyshev_delta(m));
        const tl_element u = tl_element::basis_diagram(generator_u(m, m + 1));
        f = e - ratio * (e * u * e);
    }
    return f;
}

// The same projection from the dual basis: the dual of the identity pairing
// normalized to unit identity coefficient, i.e. coefficients
// Wg(1, q) / Wg(1, 1) over the diagram basis.
inline tl_element jw_via_weingarten(int k, int cap = default_symbolic_cap) {
    if (k < 1) {
        throw index_out_of_range("projection needs half-size at least 1");
    }
    const pairing one = identity_pairing(k);
    const auto ordering = enumerate_nc2(k, cap);
    const auto row = weingarten_row(one, cap);
    rational_function at_identity;
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        if (ordering[i] == one) {
            at_identity = row[i];
            break;
        }
    }
    if (at_identity.is_zero()) {
        throw std::logic_error("dual of the identity has no identity coefficient");
    }
    tl_element f(k);
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        f.add_term(ordering[i], row[i] / at_identity);
    }
    return f;
}

struct jw_report {
    int k = 0;
    std::vector<std::string> checks_passed;
};

// Structural identities of a candidate projection: unit identity
// coefficient, idempotence, annihilation by every generator on both sides,
// and the trace value.  Throws verification_failure naming the first
// identity that breaks.
inline jw_report verify_jw_candidate(const tl_element& f) {
    const int k = f.half_size();
    if (k < 1) {
        throw index_out_of_range("projection needs half-size at least 1");
    }
    jw_report report;
    report.k = k;
    const auto require = [&](bool ok, const std::string& name) {
        if (!ok) {
            throw verification_failure("half-size " + std::to_string(k) + ": " + name);
        }
        report.checks_passed.push_back(name);
    };

    require(f.coefficient(identity_pairing(k)) == ring_traits<rational_function>::one(),
            "identity coefficient is 1");
    require(f * f == f, "idempotent");
    for (int i = 1; i <= k - 1; ++i) {
        const auto u = tl_element::basis_diagram(generator_u(i, k));
        require((u * f).is_zero(), "u_" + std::to_string(i) + " * f = 0");
        require((f * u).is_zero(), "f * u_" + std::to_string(i) + " = 0");
    }
    require(markov_trace(f) ==
                rational_function::from_polynomial(chebyshev_delta(k)),
            "trace equals the trace polynomial");
    return report;
}

// Builds the projection both ways, demands exact agreement, then runs the
// structural identities.
inline jw_report verify_jw(int k, int cap = default_symbolic_cap) {
    const tl_element recursive = jw_wenzl_recursion(k, cap);
    const tl_element dual = jw_via_weingarten(k, cap);
    if (!(recursive == dual)) {
        throw verification_failure("half-size " + std::to_string(k) +
                                   ": recursion and dual-basis constructions differ");
    }
    jw_report report = verify_jw_candidate(recursive);
    report.checks_passed.insert(report.checks_passed.begin(),
                                "recursion and dual-basis constructions agree");
    return report;
}

} // namespace tlwg
