// Release gate: one PASS/FAIL line per criterion, each with a wall-clock
// budget.  Exits 0 only when every criterion passes within budget.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tlwg/tlwg.hpp"

namespace {

using namespace tlwg;

struct check_failed {
    std::string reason;
};

void demand(bool ok, const std::string& reason) {
    if (!ok) {
        throw check_failed{reason};
    }
}

int failures = 0;

void criterion(int id, const std::string& name, double budget_seconds,
               const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
        body();
    } catch (const check_failed& f) {
        reason = f.reason;
    } catch (const std::exception& e) {
        reason = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && elapsed > budget_seconds) {
        std::ostringstream s;
        s << "exceeded the " << budget_seconds << " s budget";
        reason = s.str();
    }
    std::ostringstream line;
    line << (reason.empty() ? "PASS" : "FAIL") << "  " << id << "  " << name << "  ("
         << std::fixed << std::setprecision(2) << elapsed << " s, budget "
         << std::setprecision(0) << budget_seconds << " s)";
    if (!reason.empty()) {
        line << "  -- " << reason;
        ++failures;
    }
    std::cout << line.str() << "\n" << std::flush;
}

int_polynomial poly(std::initializer_list<long> ascending) {
    std::vector<big_int> coeffs;
    for (long c : ascending) {
        coeffs.emplace_back(c);
    }
    return int_polynomial::from_coefficients(coeffs);
}

big_int catalan(int k) {
    big_int numerator = 1;
    for (int i = 2 * k; i > k; --i) {
        numerator *= i;
    }
    big_int denominator = 1;
    for (int i = 1; i <= k + 1; ++i) {
        denominator *= i;
    }
    return numerator / denominator;
}

matrix<rational_function> gram_as_rational(int k) {
    const auto gram = gram_matrix(k);
    matrix<rational_function> g(gram.rows(), gram.cols());
    for (int i = 0; i < gram.rows(); ++i) {
        for (int j = 0; j < gram.cols(); ++j) {
            g.at(i, j) = rational_function::from_polynomial(gram.at(i, j));
        }
    }
    return g;
}

matrix<big_rational> gram_at(int k, const big_rational& d) {
    const auto basis = enumerate_nc2(k);
    const int n = static_cast<int>(basis.size());
    matrix<big_rational> g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g.at(i, j) = rational_power(d, join_block_count(basis[i], basis[j]));
        }
    }
    return g;
}

// Graph expansion vs. symbolic inverse entry, coefficient by coefficient
// through order r_max, odd positions included.
void check_expansion_pair(const symbolic_weingarten& w, int i, int j, int r_max) {
    const auto series = laurent_series(w.ordering[i], w.ordering[j], r_max);
    const auto expansion = expand_at_infinity(w.entries.at(i, j), 2 * r_max);
    const std::string where = "(" + format_pairing(w.ordering[i]) + ", " +
                              format_pairing(w.ordering[j]) + ")";
    demand(expansion.offset == series.length, where + ": leading power disagrees");
    for (int r = 0; r <= r_max; ++r) {
        demand(expansion.coefficient_of_power(series.length + 2 * r) ==
                   big_rational(series.sign) * big_rational(series.walk_counts[r]),
               where + ": coefficient of order " + std::to_string(r) + " disagrees");
        if (r < r_max) {
            demand(expansion.coefficient_of_power(series.length + 2 * r + 1) == 0,
                   where + ": odd coefficient is non-zero");
        }
    }
}

} // namespace

int main() {
    criterion(1, "two-strand symbolic inverse Gram entries match the worked values", 1.0, [] {
        const auto w = weingarten_symbolic(2);
        demand(w.ordering == std::vector<pairing>{parse_pairing("{1,2}{3,4}"),
                                                  parse_pairing("{1,4}{2,3}")},
               "basis order changed");
        const rational_function off(poly({-1}), poly({0, -1, 0, 1}));
        const rational_function diagonal(poly({1}), poly({-1, 0, 1}));
        demand(w.entries.at(0, 1) == off && w.entries.at(1, 0) == off,
               "mixed entry is not -1/(d^3 - d)");
        demand(w.entries.at(1, 1) == diagonal, "nested diagonal entry is not 1/(d^2 - 1)");
    });

    criterion(2, "three-strand worked pair: L=5, sign +1, walk counts 2^(r+1)-1 through r=10, "
                 "matching the expansion of the exact entry through order 25", 5.0, [] {
        const auto p = parse_pairing("{1,4}{2,3}{5,6}");
        const auto q = parse_pairing("{1,6}{2,5}{3,4}");
        const auto series = laurent_series(p, q, 10);
        demand(series.length == 5, "leading order is not 5");
        demand(series.sign == 1, "sign is not +1");
        for (int r = 0; r <= 10; ++r) {
            demand(series.walk_counts[r] == (big_int(1) << (r + 1)) - 1,
                   "walk count at order " + std::to_string(r) + " is not 2^(r+1)-1");
        }
        const auto w = weingarten_symbolic(3);
        int pi = -1, qi = -1;
        for (std::size_t i = 0; i < w.ordering.size(); ++i) {
            if (w.ordering[i] == p) pi = static_cast<int>(i);
            if (w.ordering[i] == q) qi = static_cast<int>(i);
        }
        demand(pi >= 0 && qi >= 0, "pairings missing from the basis");
        const auto expansion = expand_at_infinity(w.entries.at(pi, qi), 20);
        for (int power = 5; power <= 25; ++power) {
            const auto expected = power % 2 == 1
                                      ? big_rational((big_int(1) << ((power - 5) / 2 + 1)) - 1)
                                      : big_rational(0);
            demand(expansion.coefficient_of_power(power) == expected,
                   "expansion coefficient at order " + std::to_string(power) + " disagrees");
        }
    });

    criterion(3, "four-strand distant pair: L=8 with m0=1, two orders beyond the join bound",
              10.0, [] {
        const auto p = parse_pairing("{1,6}{2,5}{3,4}{7,8}");
        const auto q = parse_pairing("{1,2}{3,8}{4,7}{5,6}");
        const auto series = laurent_series(p, q, 0);
        demand(series.length == 8, "leading order is not 8");
        demand(series.walk_counts[0] == 1, "leading walk count is not 1");
        const int join_bound = 2 * 4 - join_block_count(p, q);
        demand(series.length - join_bound == 2, "gap above the join bound is not 2");
    });

    criterion(4, "Gram times inverse is the identity: symbolic k<=4, numeric k<=6 at d=3, 7/2",
              120.0, [] {
        const auto budget = [](double seconds, std::chrono::steady_clock::time_point from,
                               const std::string& what) {
            const double spent =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - from).count();
            demand(spent < seconds, what + " exceeded its " + std::to_string(seconds) +
                                        " s share (" + std::to_string(spent) + " s)");
        };
        auto start = std::chrono::steady_clock::now();
        for (int k = 1; k <= 4; ++k) {
            const auto w = weingarten_symbolic(k);
            const int n = static_cast<int>(w.ordering.size());
            demand(gram_as_rational(k) * w.entries == matrix<rational_function>::identity(n),
                   "symbolic product at k=" + std::to_string(k) + " is not the identity");
        }
        budget(60.0, start, "the symbolic batch");
        start = std::chrono::steady_clock::now();
        for (int k = 1; k <= 6; ++k) {
            for (const auto& d : {big_rational(3), parse_rational("7/2")}) {
                const auto w = weingarten_numeric(k, d);
                const int n = static_cast<int>(w.ordering.size());
                demand(gram_at(k, d) * w.entries == matrix<big_rational>::identity(n),
                       "numeric product at k=" + std::to_string(k) + ", d=" + to_string(d) +
                           " is not the identity");
            }
        }
        budget(60.0, start, "the numeric batch");
    });

    criterion(5, "every pair with k<=4: walk-count expansion equals the exact entry "
                 "through order 6, odd coefficients zero", 300.0, [] {
        for (int k = 1; k <= 4; ++k) {
            const auto w = weingarten_symbolic(k);
            const int n = static_cast<int>(w.ordering.size());
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    check_expansion_pair(w, i, j, 6);
                }
            }
        }
    });

    criterion(6, "both subgraph policies give identical expansion data, k<=4, r<=6", 60.0, [] {
        for (int k = 1; k <= 4; ++k) {
            for (const auto& p : enumerate_nc2(k)) {
                for (const auto& q : enumerate_nc2(k)) {
                    demand(laurent_series(p, q, 6, subgraph_policy::a) ==
                               laurent_series(p, q, 6, subgraph_policy::b),
                           "policies disagree at (" + format_pairing(p) + ", " +
                               format_pairing(q) + ")");
                }
            }
        }
    });

    criterion(7, "every same-level edge changes the join statistic by exactly one, k<=4", 60.0, [] {
        for (int k = 1; k <= 4; ++k) {
            for (const auto& p : enumerate_nc2(k)) {
                for (const auto& q : enumerate_nc2(k)) {
                    const pair_vertex v(p, q);
                    const int join = join_block_count(p, q);
                    const auto check_side = [&](relation_side side, const std::vector<int>& ts) {
                        for (int t : ts) {
                            const auto edges = relation_edges(v, {side, t});
                            for (const auto& u : edges.same_level) {
                                const int next = join_block_count(u.p, u.q);
                                demand(next == join + 1 || next == join - 1,
                                       "edge at (" + format_pairing(p) + ", " +
                                           format_pairing(q) + "), interval " +
                                           std::to_string(t) + " breaks the parity rule");
                            }
                        }
                    };
                    check_side(relation_side::first, p.interval_positions());
                    check_side(relation_side::second, q.interval_positions());
                }
            }
        }
    });

    criterion(8, "projections for k<=5: both constructions agree, generators annihilate, "
                 "idempotent, trace polynomial, cup-cap coefficient -1/d", 120.0, [] {
        for (int k = 1; k <= 5; ++k) {
            const auto report = verify_jw(k);
            demand(report.checks_passed.size() == 2 * (k - 1) + 4,
                   "unexpected number of checks at k=" + std::to_string(k));
        }
        const auto q2 = jw_wenzl_recursion(2);
        demand(q2.coefficient(parse_pairing("{1,2}{3,4}")) ==
                   rational_function(poly({-1}), poly({0, 1})),
               "cup-cap coefficient of the two-strand projection is not -1/d");
    });

    criterion(9, "no entry of the numeric inverse vanishes at d=2, 3 for k<=5; every "
                 "projection coefficient is a non-zero rational function for k<=5", 120.0, [] {
        for (int k = 1; k <= 5; ++k) {
            for (const auto& d : {big_rational(2), big_rational(3)}) {
                const auto w = weingarten_numeric(k, d);
                const int n = static_cast<int>(w.ordering.size());
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) {
                        demand(w.entries.at(i, j) != 0,
                               "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                   ") vanishes at k=" + std::to_string(k) + ", d=" + to_string(d));
                    }
                }
            }
            const auto f = jw_wenzl_recursion(k);
            demand(big_int(f.terms().size()) == catalan(k),
                   "projection at k=" + std::to_string(k) +
                       " is not supported on the whole diagram basis");
            for (const auto& [p, c] : f.terms()) {
                demand(!c.is_zero(), "zero coefficient stored at " + format_pairing(p));
            }
        }
    });

    criterion(10, "non-crossing pairings are counted by the Catalan numbers, k<=8", 5.0, [] {
        for (int k = 0; k <= 8; ++k) {
            demand(big_int(enumerate_nc2(k, 10).size()) == catalan(k),
                   "count at k=" + std::to_string(k) + " is not the Catalan number");
        }
        demand(catalan(8) == 1430, "the eighth Catalan number should be 1430");
    });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
