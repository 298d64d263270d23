#include <catch2/catch_amalgamated.hpp>

#include <deque>
#include <map>
#include <set>
#include <vector>

#include "tlwg/pairing.hpp"
#include "tlwg/weingarten_graph.hpp"

using namespace tlwg;

namespace {

pairing P(const char* text) {
    return parse_pairing(text);
}

// All relation targets regardless of choice: the full graph, for comparing
// distances against the one-choice-per-vertex subgraph.
std::vector<pair_vertex> every_relation_target(const pair_vertex& v) {
    std::set<pair_vertex> out;
    const auto collect = [&](relation_side side, const std::vector<int>& ts) {
        for (int t : ts) {
            const auto edges = relation_edges(v, {side, t});
            out.insert(edges.same_level.begin(), edges.same_level.end());
            if (edges.reduction) {
                out.insert(*edges.reduction);
            }
        }
    };
    collect(relation_side::first, v.p.interval_positions());
    collect(relation_side::second, v.q.interval_positions());
    return {out.begin(), out.end()};
}

int full_graph_distance(const pair_vertex& root) {
    std::map<pair_vertex, int> dist{{root, 0}};
    std::deque<pair_vertex> queue{root};
    while (!queue.empty()) {
        const pair_vertex v = queue.front();
        queue.pop_front();
        if (v.is_empty()) {
            return dist.at(v);
        }
        for (const auto& u : every_relation_target(v)) {
            if (dist.emplace(u, dist.at(v) + 1).second) {
                queue.push_back(u);
            }
        }
    }
    FAIL("empty vertex unreachable");
    return -1;
}

const pairing workout_p = P("{1,4}{2,3}{5,6}");
const pairing workout_q = P("{1,6}{2,5}{3,4}");

} // namespace

TEST_CASE("relation edges at a worked vertex", "[graph]") {
    const pair_vertex root(workout_p, workout_q);

    const auto at_two = relation_edges(root, {relation_side::first, 2});
    REQUIRE(at_two.same_level ==
            std::vector<pair_vertex>{{P("{1,2}{3,4}{5,6}"), workout_q}});
    REQUIRE_FALSE(at_two.reduction.has_value());

    const auto at_five = relation_edges(root, {relation_side::first, 5});
    REQUIRE(at_five.same_level ==
            std::vector<pair_vertex>{{P("{1,6}{2,3}{4,5}"), workout_q}});
    REQUIRE_FALSE(at_five.reduction.has_value());

    // Mirrored vertex, mirrored side.
    const auto mirrored =
        relation_edges(pair_vertex(workout_q, workout_p), {relation_side::second, 2});
    REQUIRE(mirrored.same_level ==
            std::vector<pair_vertex>{{workout_q, P("{1,2}{3,4}{5,6}")}});

    REQUIRE_THROWS_AS(relation_edges(root, {relation_side::first, 1}), not_an_interval);
    REQUIRE_THROWS_AS(relation_edges(root, {relation_side::second, 2}), not_an_interval);
    REQUIRE_THROWS_AS(relation_edges(pair_vertex(), {relation_side::first, 1}),
                      invalid_choice);
}

TEST_CASE("relation edges include the reduction on a common interval", "[graph]") {
    const pair_vertex v(P("{1,2}{3,4}{5,6}"), workout_q);
    const auto edges = relation_edges(v, {relation_side::first, 3});
    REQUIRE(edges.same_level ==
            std::vector<pair_vertex>{{P("{1,2}{3,6}{4,5}"), workout_q},
                                     {P("{1,4}{2,3}{5,6}"), workout_q}});
    REQUIRE(edges.reduction.has_value());
    REQUIRE(*edges.reduction == pair_vertex(P("{1,2}{3,4}"), P("{1,4}{2,3}")));
}

TEST_CASE("relation choices under both policies", "[graph]") {
    const pair_vertex root(workout_p, workout_q);
    REQUIRE(choose_relation(root, subgraph_policy::a) ==
            relation_choice{relation_side::first, 2});
    REQUIRE(choose_relation(root, subgraph_policy::b) ==
            relation_choice{relation_side::second, 3});

    // A common interval wins on both policies.
    const pair_vertex common(P("{1,2}{3,4}{5,6}"), workout_q);
    REQUIRE(choose_relation(common, subgraph_policy::a) ==
            relation_choice{relation_side::first, 3});
    REQUIRE(choose_relation(common, subgraph_policy::b) ==
            relation_choice{relation_side::second, 3});

    // Opposite tie-breaks between several common intervals.
    const pair_vertex doubled(P("{1,2}{3,4}"), P("{1,2}{3,4}"));
    REQUIRE(choose_relation(doubled, subgraph_policy::a) ==
            relation_choice{relation_side::first, 1});
    REQUIRE(choose_relation(doubled, subgraph_policy::b) ==
            relation_choice{relation_side::second, 3});

    REQUIRE_THROWS_AS(choose_relation(pair_vertex(), subgraph_policy::a), invalid_choice);
}

TEST_CASE("subgraph of the three-strand worked pair", "[graph]") {
    const auto g = build_subgraph(workout_p, workout_q, subgraph_policy::a);
    REQUIRE(g.vertex_count() == 9);
    REQUIRE(g.edge_count() == 13);
    REQUIRE(g.adjacency.count(pair_vertex()) == 1);
    REQUIRE(g.adjacency.at(pair_vertex()).empty());

    const pair_vertex root(workout_p, workout_q);
    REQUIRE(g.adjacency.at(root) ==
            std::vector<pair_vertex>{{P("{1,2}{3,4}{5,6}"), workout_q}});

    const pair_vertex a(P("{1,2}{3,4}{5,6}"), workout_q);
    REQUIRE(g.adjacency.at(a) ==
            std::vector<pair_vertex>{{P("{1,2}{3,6}{4,5}"), workout_q},
                                     root,
                                     {P("{1,2}{3,4}"), P("{1,4}{2,3}")}});

    // Every non-empty vertex records its choice.
    REQUIRE(g.choices.size() == 8);
    REQUIRE(g.choices.count(pair_vertex()) == 0);
}

TEST_CASE("subgraph errors", "[graph]") {
    REQUIRE_THROWS_AS(build_subgraph(P("{1,2}"), P("{1,2}{3,4}")), size_mismatch);
    REQUIRE_THROWS_AS(build_subgraph(identity_pairing(4), identity_pairing(4),
                                     subgraph_policy::a, 3),
                      size_limit_exceeded);
}

TEST_CASE("geodesic lengths of worked pairs", "[graph]") {
    REQUIRE(geodesic_length(workout_p, workout_q) == 5);
    REQUIRE(geodesic_length(workout_p, workout_q, subgraph_policy::b) == 5);

    REQUIRE(geodesic_length(P("{1,2}{3,4}"), P("{1,4}{2,3}")) == 3);
    REQUIRE(geodesic_length(P("{1,4}{2,3}"), P("{1,4}{2,3}")) == 2);
    REQUIRE(geodesic_length(P("{1,2}{3,4}"), P("{1,2}{3,4}")) == 2);
    REQUIRE(geodesic_length(P("{1,2}"), P("{1,2}")) == 1);

    for (int k = 1; k <= 4; ++k) {
        REQUIRE(geodesic_length(identity_pairing(k), identity_pairing(k)) == k);
    }
}

TEST_CASE("geodesics obey the join lower bound and match the full graph",
          "[graph][property]") {
    for (int k = 1; k <= 3; ++k) {
        for (const auto& p : enumerate_nc2(k)) {
            for (const auto& q : enumerate_nc2(k)) {
                const int join = join_block_count(p, q);
                const int in_a = geodesic_length(p, q, subgraph_policy::a);
                const int in_b = geodesic_length(p, q, subgraph_policy::b);
                const int in_full = full_graph_distance(pair_vertex(p, q));
                REQUIRE(in_a >= 2 * k - join);
                REQUIRE(in_a == in_full);
                REQUIRE(in_b == in_full);
            }
        }
    }
}

TEST_CASE("same-level edges flip the join statistic by one", "[graph][property]") {
    for (int k = 2; k <= 3; ++k) {
        for (const auto& p : enumerate_nc2(k)) {
            for (const auto& q : enumerate_nc2(k)) {
                const pair_vertex v(p, q);
                const int join = join_block_count(p, q);
                for (int t : p.interval_positions()) {
                    const auto edges = relation_edges(v, {relation_side::first, t});
                    for (const auto& u : edges.same_level) {
                        const int next = join_block_count(u.p, u.q);
                        REQUIRE((next == join + 1 || next == join - 1));
                    }
                    if (edges.reduction && !edges.reduction->is_empty()) {
                        REQUIRE(join_block_count(edges.reduction->p, edges.reduction->q) ==
                                join - 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("walk counts of the three-strand worked pair", "[graph]") {
    const auto series = laurent_series(workout_p, workout_q, 10);
    REQUIRE(series.k == 3);
    REQUIRE(series.sign == 1);
    REQUIRE(series.length == 5);
    REQUIRE(series.walk_counts.size() == 11);
    for (int r = 0; r <= 10; ++r) {
        REQUIRE(series.walk_counts[r] == (big_int(1) << (r + 1)) - 1);
    }
}

TEST_CASE("walk counts of the nested k=2 pairs", "[graph]") {
    const auto mixed = laurent_series(P("{1,2}{3,4}"), P("{1,4}{2,3}"), 8);
    REQUIRE(mixed.sign == -1);
    REQUIRE(mixed.length == 3);
    REQUIRE(mixed.walk_counts == std::vector<big_int>(9, big_int(1)));

    const auto diagonal = laurent_series(P("{1,4}{2,3}"), P("{1,4}{2,3}"), 8);
    REQUIRE(diagonal.sign == 1);
    REQUIRE(diagonal.length == 2);
    REQUIRE(diagonal.walk_counts == std::vector<big_int>(9, big_int(1)));
}

TEST_CASE("walk counts of the single-strand pair", "[graph]") {
    const auto s = laurent_series(P("{1,2}"), P("{1,2}"), 5);
    REQUIRE(s.sign == 1);
    REQUIRE(s.length == 1);
    REQUIRE(s.walk_counts == std::vector<big_int>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("distant pair with a geodesic above the join bound", "[graph]") {
    const auto p = P("{1,6}{2,5}{3,4}{7,8}");
    const auto q = P("{1,2}{3,8}{4,7}{5,6}");
    REQUIRE(join_block_count(p, q) == 2);
    const auto s = laurent_series(p, q, 0);
    REQUIRE(s.length == 8);
    REQUIRE(s.length - (2 * 4 - join_block_count(p, q)) == 2);
    REQUIRE(s.sign == 1);
    REQUIRE(s.walk_counts == std::vector<big_int>{1});
}

TEST_CASE("the two policies give identical expansion data", "[graph][property]") {
    for (int k = 1; k <= 3; ++k) {
        for (const auto& p : enumerate_nc2(k)) {
            for (const auto& q : enumerate_nc2(k)) {
                REQUIRE(laurent_series(p, q, 6, subgraph_policy::a) ==
                        laurent_series(p, q, 6, subgraph_policy::b));
            }
        }
    }
}

TEST_CASE("series evaluation", "[graph]") {
    const auto one_strand = laurent_series(P("{1,2}"), P("{1,2}"), 4);
    REQUIRE(evaluate_series(one_strand, big_rational(2), 0) == parse_rational("1/2"));
    REQUIRE(evaluate_series(one_strand, big_rational(2), 4) == parse_rational("1/2"));

    const auto diagonal = laurent_series(P("{1,4}{2,3}"), P("{1,4}{2,3}"), 4);
    REQUIRE(evaluate_series(diagonal, big_rational(2), 1) ==
            parse_rational("5/16"));  // 1/4 + 1/16
    REQUIRE(evaluate_series(diagonal, parse_rational("-2"), 1) == parse_rational("5/16"));

    const auto mixed = laurent_series(P("{1,2}{3,4}"), P("{1,4}{2,3}"), 4);
    REQUIRE(evaluate_series(mixed, big_rational(2), 1) ==
            parse_rational("-5/32"));  // -(1/8 + 1/32)

    REQUIRE_THROWS_AS(evaluate_series(mixed, parse_rational("3/2"), 1),
                      outside_convergence_region);
    REQUIRE_THROWS_AS(evaluate_series(mixed, big_rational(0), 1),
                      outside_convergence_region);
    REQUIRE_THROWS_AS(evaluate_series(mixed, big_rational(3), 5), index_out_of_range);
    REQUIRE_THROWS_AS(evaluate_series(mixed, big_rational(3), -1), index_out_of_range);
}

TEST_CASE("dot export", "[graph]") {
    const auto g = build_subgraph(P("{1,4}{2,3}"), P("{1,4}{2,3}"));
    const auto dot = export_dot(g);
    REQUIRE(dot == export_dot(g));
    REQUIRE(dot.find("digraph weingarten_subgraph {") == 0);
    REQUIRE(dot.find("choice: p {2,3}") != std::string::npos);
    REQUIRE(dot.find("style=bold") != std::string::npos);
    REQUIRE(dot.find("(∅,∅)") != std::string::npos);

    std::size_t arrows = 0;
    for (std::size_t at = dot.find("->"); at != std::string::npos;
         at = dot.find("->", at + 1)) {
        ++arrows;
    }
    REQUIRE(static_cast<int>(arrows) == g.edge_count());
}
