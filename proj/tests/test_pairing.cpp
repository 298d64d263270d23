#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "tlwg/numeric.hpp"
#include "tlwg/pairing.hpp"

using namespace tlwg;

namespace {

// Independent count of NC2(2k): the Catalan number (2k)! / (k! (k+1)!).
big_int catalan(int k) {
    const auto factorial = [](int n) {
        big_int f = 1;
        for (int i = 2; i <= n; ++i) {
            f *= i;
        }
        return f;
    };
    return factorial(2 * k) / (factorial(k) * factorial(k + 1));
}

pairing P(const char* text) {
    return parse_pairing(text);
}

} // namespace

TEST_CASE("enumeration matches Catalan counts", "[pairing]") {
    const std::vector<long> expected = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int k = 0; k <= 8; ++k) {
        const auto all = enumerate_nc2(k, 10);
        REQUIRE(big_int(all.size()) == catalan(k));
        REQUIRE(static_cast<long>(all.size()) == expected[k]);
    }
}

TEST_CASE("enumeration is strictly increasing in canonical order", "[pairing]") {
    for (int k = 0; k <= 6; ++k) {
        const auto all = enumerate_nc2(k);
        for (std::size_t i = 1; i < all.size(); ++i) {
            REQUIRE(all[i - 1] < all[i]);
        }
    }
}

TEST_CASE("enumeration endpoints", "[pairing]") {
    const auto all = enumerate_nc2(3);
    REQUIRE(all.front() == P("{1,2}{3,4}{5,6}"));
    REQUIRE(all.back() == P("{1,6}{2,5}{3,4}"));
    REQUIRE(all.back() == identity_pairing(3));

    const auto k2 = enumerate_nc2(2);
    REQUIRE(k2 == std::vector<pairing>{P("{1,2}{3,4}"), P("{1,4}{2,3}")});
}

TEST_CASE("enumeration cap", "[pairing]") {
    REQUIRE_THROWS_AS(enumerate_nc2(11), size_limit_exceeded);
    REQUIRE_THROWS_AS(enumerate_nc2(3, 2), size_limit_exceeded);
    REQUIRE_THROWS_AS(enumerate_nc2(-1), index_out_of_range);
    REQUIRE(enumerate_nc2(0).size() == 1);
    REQUIRE(enumerate_nc2(0).front().half_size() == 0);
}

TEST_CASE("constructor validates involutions", "[pairing]") {
    REQUIRE_THROWS_AS(pairing({2, 1, 4}), not_involution);        // odd length
    REQUIRE_THROWS_AS(pairing({1, 2}), not_involution);           // fixed points
    REQUIRE_THROWS_AS(pairing({2, 1, 3, 4}), not_involution);     // fixed points
    REQUIRE_THROWS_AS(pairing({3, 4, 2, 1}), not_involution);     // not an involution
    REQUIRE_THROWS_AS(pairing({2, 1, 5, 3}), not_involution);     // out of range
    REQUIRE_THROWS_AS(pairing({3, 4, 1, 2}), not_non_crossing);   // {1,3}{2,4}
    REQUIRE_NOTHROW(pairing({2, 1, 4, 3}));
    REQUIRE_NOTHROW(pairing({4, 3, 2, 1}));
}

TEST_CASE("identity pairing nests fully", "[pairing]") {
    REQUIRE(identity_pairing(0) == pairing());
    REQUIRE(identity_pairing(1) == P("{1,2}"));
    REQUIRE(identity_pairing(3) == P("{1,6}{2,5}{3,4}"));
    const auto one = identity_pairing(4);
    for (int j = 1; j <= 8; ++j) {
        REQUIRE(one.partner(j) == 9 - j);
    }
}

TEST_CASE("parse and format round-trip over all small pairings", "[pairing]") {
    for (int k = 1; k <= 4; ++k) {
        for (const auto& p : enumerate_nc2(k)) {
            REQUIRE(parse_pairing(format_pairing(p)) == p);
        }
    }
    REQUIRE(P(" {1,4} {2,3} ") == P("{1,4}{2,3}"));
    REQUIRE(P("{2,3}{1,4}") == P("{1,4}{2,3}"));
    REQUIRE(format_pairing(P("{2,3}{1,4}")) == "{1,4}{2,3}");
}

TEST_CASE("parse rejects malformed and invalid text", "[pairing]") {
    REQUIRE_THROWS_AS(parse_pairing(""), parse_error);
    REQUIRE_THROWS_AS(parse_pairing("   "), parse_error);
    REQUIRE_THROWS_AS(parse_pairing("1,2"), parse_error);
    REQUIRE_THROWS_AS(parse_pairing("{1,2"), parse_error);
    REQUIRE_THROWS_AS(parse_pairing("{1;2}"), parse_error);
    REQUIRE_THROWS_AS(parse_pairing("{1,2}}"), parse_error);
    REQUIRE_THROWS_AS(parse_pairing("{1,2}{3,3}{4,5}"), not_involution);
    REQUIRE_THROWS_AS(parse_pairing("{1,2}{2,3}"), not_involution);
    REQUIRE_THROWS_AS(parse_pairing("{1,2}{3,5}"), not_involution);
    REQUIRE_THROWS_AS(parse_pairing("{1,3}{2,4}"), not_non_crossing);
}

TEST_CASE("join block count", "[pairing]") {
    // Worked orthogonality example at k = 2: the two pairings meet in a
    // single join block.
    REQUIRE(join_block_count(P("{1,2}{3,4}"), P("{1,4}{2,3}")) == 1);
    REQUIRE(join_block_count(P("{1,4}{2,3}{5,6}"), P("{1,6}{2,5}{3,4}")) == 1);
    REQUIRE(join_block_count(P("{1,6}{2,5}{3,4}{7,8}"), P("{1,2}{3,8}{4,7}{5,6}")) == 2);
    for (int k = 1; k <= 4; ++k) {
        for (const auto& p : enumerate_nc2(k)) {
            REQUIRE(join_block_count(p, p) == k);
        }
    }
    REQUIRE_THROWS_AS(join_block_count(P("{1,2}"), P("{1,2}{3,4}")), size_mismatch);
}

TEST_CASE("join block count is symmetric and bounded", "[pairing]") {
    for (const auto& p : enumerate_nc2(3)) {
        for (const auto& q : enumerate_nc2(3)) {
            const int j = join_block_count(p, q);
            REQUIRE(j == join_block_count(q, p));
            REQUIRE(j >= 1);
            REQUIRE(j <= 3);
            if (j == 3) {
                REQUIRE(p == q);
            }
        }
    }
}

TEST_CASE("interval queries", "[pairing]") {
    const auto p = P("{1,4}{2,3}{5,6}");
    REQUIRE(p.interval_positions() == std::vector<int>{2, 5});
    REQUIRE(p.has_interval_at(2));
    REQUIRE_FALSE(p.has_interval_at(1));
    REQUIRE_FALSE(p.has_interval_at(6));
    REQUIRE(identity_pairing(4).interval_positions() == std::vector<int>{4});
}

TEST_CASE("neighbors via an interval: worked values", "[pairing]") {
    REQUIRE(neighbors_via_interval(P("{1,4}{2,3}{5,6}"), 2) ==
            std::vector<pairing>{P("{1,2}{3,4}{5,6}")});
    REQUIRE(neighbors_via_interval(P("{1,2}{3,4}{5,6}"), 3) ==
            std::vector<pairing>{P("{1,2}{3,6}{4,5}"), P("{1,4}{2,3}{5,6}")});
    REQUIRE(neighbors_via_interval(P("{1,4}{2,3}"), 2) ==
            std::vector<pairing>{P("{1,2}{3,4}")});
    REQUIRE(neighbors_via_interval(P("{1,2}"), 1).empty());
    REQUIRE_THROWS_AS(neighbors_via_interval(P("{1,4}{2,3}"), 1), not_an_interval);
    REQUIRE_THROWS_AS(neighbors_via_interval(P("{1,2}"), 2), not_an_interval);
}

TEST_CASE("neighbors match the brute-force rewiring definition", "[pairing][property]") {
    // Reference definition: p' is a neighbor of p via {t, t+1} when p' is
    // non-crossing, pairs t and t+1 into some other block {x, y} of p (one
    // partner each), and agrees with p on every point outside {t, t+1, x, y}.
    for (int k = 1; k <= 5; ++k) {
        const auto all = enumerate_nc2(k);
        for (const auto& p : all) {
            for (int t : p.interval_positions()) {
                std::set<pairing> brute;
                for (const auto& cand : all) {
                    if (cand == p) {
                        continue;
                    }
                    const int x = cand.partner(t);
                    const int y = cand.partner(t + 1);
                    if (x == t + 1 || p.partner(x) != y) {
                        continue;
                    }
                    bool agrees = true;
                    for (int j = 1; j <= 2 * k; ++j) {
                        if (j == t || j == t + 1 || j == x || j == y) {
                            continue;
                        }
                        if (cand.partner(j) != p.partner(j)) {
                            agrees = false;
                            break;
                        }
                    }
                    if (agrees) {
                        brute.insert(cand);
                    }
                }
                const auto got = neighbors_via_interval(p, t);
                REQUIRE(std::set<pairing>(got.begin(), got.end()) == brute);
                REQUIRE(got.size() <= static_cast<std::size_t>(k - 1));
            }
        }
    }
}

TEST_CASE("neighbor rewiring touches exactly four points", "[pairing][property]") {
    for (int k = 2; k <= 4; ++k) {
        for (const auto& p : enumerate_nc2(k)) {
            for (int t : p.interval_positions()) {
                for (const auto& n : neighbors_via_interval(p, t)) {
                    int moved = 0;
                    for (int j = 1; j <= 2 * k; ++j) {
                        if (n.partner(j) != p.partner(j)) {
                            ++moved;
                        }
                    }
                    REQUIRE(moved == 4);
                    REQUIRE(n.partner(t) != t + 1);
                }
            }
        }
    }
}

TEST_CASE("common interval removal", "[pairing]") {
    const auto v = remove_common_interval(P("{1,2}{3,4}{5,6}"), P("{1,6}{2,5}{3,4}"), 3);
    REQUIRE(v.p == P("{1,2}{3,4}"));
    REQUIRE(v.q == P("{1,4}{2,3}"));

    const auto w = remove_common_interval(P("{1,4}{2,3}"), P("{1,4}{2,3}"), 2);
    REQUIRE(w.p == P("{1,2}"));
    REQUIRE(w.q == P("{1,2}"));

    const auto sink = remove_common_interval(P("{1,2}"), P("{1,2}"), 1);
    REQUIRE(sink.is_empty());
    REQUIRE(sink == pair_vertex());

    REQUIRE_THROWS_AS(remove_common_interval(P("{1,2}{3,4}"), P("{1,4}{2,3}"), 1),
                      not_common_interval);
    REQUIRE_THROWS_AS(remove_common_interval(P("{1,4}{2,3}"), P("{1,4}{2,3}"), 1),
                      not_common_interval);
    REQUIRE_THROWS_AS(remove_common_interval(P("{1,2}"), P("{1,2}"), 0), not_an_interval);
    REQUIRE_THROWS_AS(remove_common_interval(P("{1,2}"), P("{1,2}"), 2), not_an_interval);
    REQUIRE_THROWS_AS(remove_common_interval(P("{1,2}"), P("{1,2}{3,4}"), 1), size_mismatch);
}

TEST_CASE("pair vertex basics", "[pairing]") {
    REQUIRE(pair_vertex().is_empty());
    REQUIRE(pair_vertex().to_string() == "(∅,∅)");
    const pair_vertex v(P("{1,2}"), P("{1,2}"));
    REQUIRE_FALSE(v.is_empty());
    REQUIRE(v.half_size() == 1);
    REQUIRE(v.to_string() == "({1,2},{1,2})");
    REQUIRE(pair_vertex() < v);
    REQUIRE_THROWS_AS(pair_vertex(P("{1,2}"), P("{1,4}{2,3}")), size_mismatch);
}

TEST_CASE("rational literal parsing", "[numeric]") {
    REQUIRE(parse_rational("7") == big_rational(7));
    REQUIRE(parse_rational("-3") == big_rational(-3));
    REQUIRE(parse_rational("+4/6") == big_rational(2, 3));
    REQUIRE(parse_rational("7/2") == big_rational(7, 2));
    REQUIRE(to_string(parse_rational("-10/4")) == "-5/2");
    REQUIRE(to_string(big_rational(6, 3)) == "2");
    REQUIRE_THROWS_AS(parse_rational("1.5"), parse_error);
    REQUIRE_THROWS_AS(parse_rational("2e3"), parse_error);
    REQUIRE_THROWS_AS(parse_rational("1/0"), parse_error);
    REQUIRE_THROWS_AS(parse_rational(""), parse_error);
    REQUIRE_THROWS_AS(parse_rational("1/-2"), parse_error);
    REQUIRE_THROWS_AS(parse_rational("a"), parse_error);
}
