#pragma once

#include <algorithm>
#include <deque>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlwg/errors.hpp"
#include "tlwg/numeric.hpp"
#include "tlwg/pairing.hpp"

namespace tlwg {

// The orthogonality relation can be applied at an interval of either member
// of a vertex (p, q); `side` picks the member, `t` the interval position.
enum class relation_side { first, second };

struct relation_choice {
    relation_side side;
    int t;

    friend bool operator==(const relation_choice&, const relation_choice&) = default;
};

// Out-edges contributed by one application of the relation: every rewired
// neighbor on the same level, plus one size-reducing edge when the interval
// is a block of both members.
struct relation_edge_set {
    std::vector<pair_vertex> same_level;
    std::optional<pair_vertex> reduction;
};

inline relation_edge_set relation_edges(const pair_vertex& v, const relation_choice& c) {
    if (v.is_empty()) {
        throw invalid_choice("the empty vertex admits no relation");
    }
    const pairing& active = c.side == relation_side::first ? v.p : v.q;
    const pairing& passive = c.side == relation_side::first ? v.q : v.p;

    relation_edge_set edges;
    for (const auto& moved : neighbors_via_interval(active, c.t)) {
        if (c.side == relation_side::first) {
            edges.same_level.emplace_back(moved, v.q);
        } else {
            edges.same_level.emplace_back(v.p, moved);
        }
    }
    if (passive.has_interval_at(c.t)) {
        edges.reduction = remove_common_interval(v.p, v.q, c.t);
    }
    return edges;
}

// Deterministic one-relation-per-vertex rules.  Both prefer a common
// interval (whose relation carries the size-reducing edge) and fall back to
// an interval of one member; the two policies make opposite tie-breaks so
// that comparing them exercises the choice-independence of the expansion.
enum class subgraph_policy { a, b };

inline relation_choice choose_relation(const pair_vertex& v, subgraph_policy policy) {
    if (v.is_empty()) {
        throw invalid_choice("the empty vertex admits no relation");
    }
    const auto p_intervals = v.p.interval_positions();
    const auto q_intervals = v.q.interval_positions();
    std::vector<int> common;
    std::set_intersection(p_intervals.begin(), p_intervals.end(), q_intervals.begin(),
                          q_intervals.end(), std::back_inserter(common));
    if (policy == subgraph_policy::a) {
        if (!common.empty()) {
            return {relation_side::first, common.front()};
        }
        return {relation_side::first, p_intervals.front()};
    }
    if (!common.empty()) {
        return {relation_side::second, common.back()};
    }
    return {relation_side::second, q_intervals.back()};
}

// The part of the one-choice-per-vertex subgraph reachable from a root
// vertex.  Adjacency lists are ordered (rewiring targets in canonical order,
// then the reduction) so exports and walk counts are reproducible.
struct weingarten_subgraph {
    pair_vertex root;
    subgraph_policy policy = subgraph_policy::a;
    std::map<pair_vertex, relation_choice> choices;
    std::map<pair_vertex, std::vector<pair_vertex>> adjacency;

    int vertex_count() const { return static_cast<int>(adjacency.size()); }

    int edge_count() const {
        int edges = 0;
        for (const auto& [v, out] : adjacency) {
            edges += static_cast<int>(out.size());
        }
        return edges;
    }
};

inline weingarten_subgraph build_subgraph(const pairing& p, const pairing& q,
                                          subgraph_policy policy = subgraph_policy::a,
                                          int cap = default_enumeration_cap) {
    if (p.half_size() != q.half_size()) {
        throw size_mismatch("subgraph root with different half-sizes");
    }
    if (p.half_size() > cap) {
        throw size_limit_exceeded("half-size " + std::to_string(p.half_size()) +
                                  " exceeds cap " + std::to_string(cap));
    }
    weingarten_subgraph g;
    g.root = pair_vertex(p, q);
    g.policy = policy;

    std::deque<pair_vertex> queue{g.root};
    g.adjacency[g.root];
    while (!queue.empty()) {
        const pair_vertex v = queue.front();
        queue.pop_front();
        if (v.is_empty()) {
            continue;
        }
        const relation_choice c = choose_relation(v, policy);
        const relation_edge_set edges = relation_edges(v, c);
        g.choices.emplace(v, c);

        auto& out = g.adjacency[v];
        out = edges.same_level;
        if (edges.reduction) {
            out.push_back(*edges.reduction);
        }
        for (const auto& target : out) {
            if (g.adjacency.emplace(target, std::vector<pair_vertex>{}).second) {
                queue.push_back(target);
            }
        }
    }
    return g;
}

// Length of a shortest directed path from the root to the empty vertex.
inline int geodesic_length(const weingarten_subgraph& g) {
    std::map<pair_vertex, int> dist{{g.root, 0}};
    std::deque<pair_vertex> queue{g.root};
    while (!queue.empty()) {
        const pair_vertex v = queue.front();
        queue.pop_front();
        const int dv = dist.at(v);
        if (v.is_empty()) {
            return dv;
        }
        for (const auto& u : g.adjacency.at(v)) {
            if (dist.emplace(u, dv + 1).second) {
                queue.push_back(u);
            }
        }
    }
    throw std::logic_error("empty vertex unreachable from " + g.root.to_string());
}

inline int geodesic_length(const pairing& p, const pairing& q,
                           subgraph_policy policy = subgraph_policy::a,
                           int cap = default_enumeration_cap) {
    return geodesic_length(build_subgraph(p, q, policy, cap));
}

// Data of the expansion of a dual-basis coefficient at large d:
//   value = sign * sum_r walk_counts[r] * d^-(length + 2r).
struct laurent_data {
    int k = 0;
    pairing p;
    pairing q;
    int sign = 1;
    int length = 0;
    std::vector<big_int> walk_counts;

    friend bool operator==(const laurent_data&, const laurent_data&) = default;
};

// Counts directed walks from the root to the empty vertex, by length.  Walks
// of every admissible length contribute (revisits allowed); lengths of the
// wrong parity carry no walks, which is asserted rather than assumed.
inline laurent_data laurent_series(const pairing& p, const pairing& q, int r_max,
                                   subgraph_policy policy = subgraph_policy::a,
                                   int cap = default_enumeration_cap) {
    if (r_max < 0) {
        throw index_out_of_range("negative series order");
    }
    const weingarten_subgraph g = build_subgraph(p, q, policy, cap);

    laurent_data data;
    data.k = p.half_size();
    data.p = p;
    data.q = q;
    data.length = geodesic_length(g);
    data.sign = (join_block_count(p, q) + data.k) % 2 == 0 ? 1 : -1;

    std::vector<pair_vertex> vertices;
    vertices.reserve(g.adjacency.size());
    std::map<pair_vertex, int> index;
    for (const auto& [v, out] : g.adjacency) {
        index.emplace(v, static_cast<int>(vertices.size()));
        vertices.push_back(v);
    }
    std::vector<std::vector<int>> successors(vertices.size());
    for (const auto& [v, out] : g.adjacency) {
        for (const auto& u : out) {
            successors[index.at(v)].push_back(index.at(u));
        }
    }

    const int root = index.at(g.root);
    const int sink = index.at(pair_vertex());
    const int steps = data.length + 2 * r_max + 1;

    std::vector<big_int> walks(vertices.size(), big_int(0));
    walks[sink] = 1;
    const auto record = [&](int s, const big_int& at_root) {
        if (s >= data.length && (s - data.length) % 2 == 0) {
            data.walk_counts.push_back(at_root);
        } else if (at_root != 0) {
            throw std::logic_error("walk count of impossible length " + std::to_string(s) +
                                   " is nonzero");
        }
    };
    record(0, walks[root]);
    for (int s = 1; s <= steps; ++s) {
        std::vector<big_int> next(vertices.size(), big_int(0));
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            for (int u : successors[v]) {
                next[v] += walks[u];
            }
        }
        walks = std::move(next);
        record(s, walks[root]);
    }
    if (static_cast<int>(data.walk_counts.size()) != r_max + 1) {
        throw std::logic_error("walk table has the wrong span");
    }
    return data;
}

// Partial sum of the expansion through the d^-(length + 2 r_max) term.  The
// expansion is only certified on |d| >= 2, comfortably inside its region of
// validity for every half-size.
inline big_rational evaluate_series(const laurent_data& data, const big_rational& d,
                                    int r_max) {
    if (r_max < 0 || r_max >= static_cast<int>(data.walk_counts.size())) {
        throw index_out_of_range("series order " + std::to_string(r_max) +
                                 " outside the computed window");
    }
    if (abs(d) < 2) {
        throw outside_convergence_region("evaluation requires |d| >= 2, got " + to_string(d));
    }
    big_rational sum = 0;
    for (int r = 0; r <= r_max; ++r) {
        sum += big_rational(data.walk_counts[r]) * rational_power(d, -(data.length + 2 * r));
    }
    if (data.sign < 0) {
        sum = -sum;
    }
    return sum;
}

// Graphviz rendering; vertices carry their chosen relation as
// "choice: p {t,t+1}" (or q) and the root is drawn bold.
inline std::string export_dot(const weingarten_subgraph& g) {
    std::map<pair_vertex, int> index;
    for (const auto& [v, out] : g.adjacency) {
        index.emplace(v, static_cast<int>(index.size()));
    }
    std::string dot;
    dot += "digraph weingarten_subgraph {\n";
    dot += "  rankdir=LR;\n";
    dot += "  node [shape=box];\n";
    for (const auto& [v, id] : index) {
        dot += "  v" + std::to_string(id) + " [label=\"" + v.to_string();
        const auto choice = g.choices.find(v);
        if (choice != g.choices.end()) {
            const auto& [side, t] = choice->second;
            dot += "\\nchoice: ";
            dot += side == relation_side::first ? "p" : "q";
            dot += " {" + std::to_string(t) + "," + std::to_string(t + 1) + "}";
        }
        dot += "\"";
        if (v == g.root) {
            dot += ", style=bold";
        }
        dot += "];\n";
    }
    for (const auto& [v, out] : g.adjacency) {
        for (const auto& u : out) {
            dot += "  v" + std::to_string(index.at(v)) + " -> v" +
                   std::to_string(index.at(u)) + ";\n";
        }
    }
    dot += "}\n";
    return dot;
}

} // namespace tlwg
