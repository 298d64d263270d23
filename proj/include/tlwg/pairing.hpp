#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlwg/errors.hpp"

namespace tlwg {

// Largest half-size accepted by the enumerating constructors.  NC2(2k) grows
// like the Catalan numbers, so anything past this is almost certainly a typo.
inline constexpr int default_enumeration_cap = 10;

// A non-crossing pair partition of {1, ..., 2k}, stored as a 1-based partner
// array: partner(i) == j exactly when {i, j} is a block.  Comparison is
// lexicographic on the partner array, which fixes the canonical ordering used
// everywhere (matrix rows, enumeration order, JSON output).
class pairing {
public:
    // The empty pairing (k == 0).
    pairing() = default;

    // Validates that `partner` is a fixed-point-free involution of
    // {1, ..., 2k} and that the resulting blocks are non-crossing.
    explicit pairing(std::vector<int> partner) : partner_(std::move(partner)) {
        const int n = static_cast<int>(partner_.size());
        if (n % 2 != 0) {
            throw not_involution("odd number of points");
        }
        for (int i = 1; i <= n; ++i) {
            const int j = partner_[i - 1];
            if (j < 1 || j > n) {
                throw not_involution("partner out of range at point " + std::to_string(i));
            }
            if (j == i) {
                throw not_involution("point " + std::to_string(i) + " paired with itself");
            }
            if (partner_[j - 1] != i) {
                throw not_involution("partner array is not an involution at point " +
                                     std::to_string(i));
            }
        }
        if (!is_non_crossing(partner_)) {
            throw not_non_crossing("blocks cross");
        }
    }

    int half_size() const { return static_cast<int>(partner_.size()) / 2; }
    int points() const { return static_cast<int>(partner_.size()); }

    int partner(int i) const {
        if (i < 1 || i > points()) {
            throw index_out_of_range("point " + std::to_string(i) + " outside 1.." +
                                     std::to_string(points()));
        }
        return partner_[i - 1];
    }

    bool is_block(int a, int b) const { return a != b && partner(a) == b; }

    // True when {t, t+1} is a block.
    bool has_interval_at(int t) const {
        return t >= 1 && t + 1 <= points() && partner_[t - 1] == t + 1;
    }

    // Blocks as {min, max} pairs, sorted by smallest element.
    std::vector<std::pair<int, int>> blocks() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(partner_.size() / 2);
        for (int i = 1; i <= points(); ++i) {
            if (partner_[i - 1] > i) {
                out.emplace_back(i, partner_[i - 1]);
            }
        }
        return out;
    }

    // All t with {t, t+1} a block.
    std::vector<int> interval_positions() const {
        std::vector<int> out;
        for (int t = 1; t + 1 <= points(); ++t) {
            if (partner_[t - 1] == t + 1) {
                out.push_back(t);
            }
        }
        return out;
    }

    const std::vector<int>& partner_array() const { return partner_; }

    std::string to_string() const {
        if (partner_.empty()) {
            return "∅";
        }
        std::string s;
        for (const auto& [a, b] : blocks()) {
            s += "{" + std::to_string(a) + "," + std::to_string(b) + "}";
        }
        return s;
    }

    friend auto operator<=>(const pairing&, const pairing&) = default;

    // Non-throwing structural check used both by the constructor and by the
    // neighbor search, where crossing candidates are expected and skipped.
    static bool is_non_crossing(const std::vector<int>& partner) {
        std::vector<int> open;
        for (int i = 1; i <= static_cast<int>(partner.size()); ++i) {
            if (partner[i - 1] > i) {
                open.push_back(i);
            } else {
                if (open.empty() || open.back() != partner[i - 1]) {
                    return false;
                }
                open.pop_back();
            }
        }
        return open.empty();
    }

private:
    std::vector<int> partner_;
};

// The fully nested pairing {j, 2k+1-j}; acts as the identity diagram.
inline pairing identity_pairing(int k) {
    if (k < 0) {
        throw index_out_of_range("negative half-size");
    }
    std::vector<int> partner(2 * k);
    for (int j = 1; j <= 2 * k; ++j) {
        partner[j - 1] = 2 * k + 1 - j;
    }
    return pairing(partner);
}

namespace detail {

// All non-crossing perfect matchings of positions lo..hi, as block lists in
// lexicographic order of the induced partner arrays.
inline std::vector<std::vector<std::pair<int, int>>> nc_matchings(int lo, int hi) {
    if (lo > hi) {
        return {{}};
    }
    std::vector<std::vector<std::pair<int, int>>> out;
    for (int m = lo + 1; m <= hi; m += 2) {
        const auto inner = nc_matchings(lo + 1, m - 1);
        const auto outer = nc_matchings(m + 1, hi);
        for (const auto& in : inner) {
            for (const auto& ou : outer) {
                std::vector<std::pair<int, int>> blocks;
                blocks.reserve(1 + in.size() + ou.size());
                blocks.emplace_back(lo, m);
                blocks.insert(blocks.end(), in.begin(), in.end());
                blocks.insert(blocks.end(), ou.begin(), ou.end());
                out.push_back(std::move(blocks));
            }
        }
    }
    return out;
}

inline pairing pairing_from_blocks(const std::vector<std::pair<int, int>>& blocks) {
    std::vector<int> partner(blocks.size() * 2);
    for (const auto& [a, b] : blocks) {
        partner[a - 1] = b;
        partner[b - 1] = a;
    }
    return pairing(partner);
}

} // namespace detail

// NC2(2k) in canonical (lexicographic) order.  |NC2(2k)| is the k-th Catalan
// number, so the cap keeps accidental huge requests from running away.
inline std::vector<pairing> enumerate_nc2(int k, int cap = default_enumeration_cap) {
    if (k < 0) {
        throw index_out_of_range("negative half-size");
    }
    if (k > cap) {
        throw size_limit_exceeded("half-size " + std::to_string(k) + " exceeds cap " +
                                  std::to_string(cap));
    }
    std::vector<pairing> out;
    for (const auto& blocks : detail::nc_matchings(1, 2 * k)) {
        out.push_back(detail::pairing_from_blocks(blocks));
    }
    return out;
}

// Number of blocks of the join p v q: connected components of the graph on
// {1, ..., 2k} whose edges are the blocks of p and of q.
inline int join_block_count(const pairing& p, const pairing& q) {
    if (p.half_size() != q.half_size()) {
        throw size_mismatch("join of pairings with different half-sizes");
    }
    const int n = p.points();
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    const auto find = [&](int a) {
        while (root[a] != a) {
            root[a] = root[root[a]];
            a = root[a];
        }
        return a;
    };
    const auto unite = [&](int a, int b) { root[find(a)] = find(b); };
    for (int i = 1; i <= n; ++i) {
        unite(i - 1, p.partner(i) - 1);
        unite(i - 1, q.partner(i) - 1);
    }
    int components = 0;
    for (int a = 0; a < n; ++a) {
        if (find(a) == a) {
            ++components;
        }
    }
    return components;
}

// Non-crossing neighbors of p arising from the interval {t, t+1}: rewire the
// block {t, t+1} with one other block {x, y} (t and t+1 get partners x and y
// in one of the two possible ways) and keep the results that stay
// non-crossing.  Exactly one rewiring per other block can survive, so the
// list has at most k-1 entries.  Sorted canonically.
inline std::vector<pairing> neighbors_via_interval(const pairing& p, int t) {
    if (!p.has_interval_at(t)) {
        throw not_an_interval("{" + std::to_string(t) + "," + std::to_string(t + 1) +
                              "} is not a block of " + p.to_string());
    }
    std::set<pairing> out;
    for (const auto& [x, y] : p.blocks()) {
        if (x == t) {
            continue;
        }
        for (int swap = 0; swap < 2; ++swap) {
            const int a = swap == 0 ? x : y;
            const int b = swap == 0 ? y : x;
            std::vector<int> partner = p.partner_array();
            partner[t - 1] = a;
            partner[a - 1] = t;
            partner[t] = b;
            partner[b - 1] = t + 1;
            if (pairing::is_non_crossing(partner)) {
                out.insert(pairing(std::move(partner)));
            }
        }
    }
    return {out.begin(), out.end()};
}

// A vertex of the Weingarten graph: an ordered pair of equal-size pairings.
// The default-constructed vertex (both empty) is the sink.
struct pair_vertex {
    pairing p;
    pairing q;

    pair_vertex() = default;

    pair_vertex(pairing p_, pairing q_) : p(std::move(p_)), q(std::move(q_)) {
        if (p.half_size() != q.half_size()) {
            throw size_mismatch("pair vertex with different half-sizes");
        }
    }

    bool is_empty() const { return p.half_size() == 0; }
    int half_size() const { return p.half_size(); }

    std::string to_string() const {
        return "(" + p.to_string() + "," + q.to_string() + ")";
    }

    friend auto operator<=>(const pair_vertex&, const pair_vertex&) = default;
};

// Deletes the block {t, t+1} from both pairings and closes the gap by
// relabeling points above t+1 down by two.  Requires the interval to be a
// block of both p and q.
inline pair_vertex remove_common_interval(const pairing& p, const pairing& q, int t) {
    if (p.half_size() != q.half_size()) {
        throw size_mismatch("interval removal on pairings with different half-sizes");
    }
    if (t < 1 || t + 1 > p.points()) {
        throw not_an_interval("interval position " + std::to_string(t) + " outside 1.." +
                              std::to_string(p.points() - 1));
    }
    if (!p.has_interval_at(t) || !q.has_interval_at(t)) {
        throw not_common_interval("{" + std::to_string(t) + "," + std::to_string(t + 1) +
                                  "} is not a common block of " + p.to_string() + " and " +
                                  q.to_string());
    }
    const auto reduce = [&](const pairing& r) {
        std::vector<int> partner(r.points() - 2);
        const auto relabel = [&](int j) { return j < t ? j : j - 2; };
        for (int i = 1; i <= r.points(); ++i) {
            if (i == t || i == t + 1) {
                continue;
            }
            partner[relabel(i) - 1] = relabel(r.partner(i));
        }
        return pairing(partner);
    };
    return pair_vertex(reduce(p), reduce(q));
}

// Parses the canonical text form "{1,4}{2,3}".  Whitespace between tokens is
// allowed; the blocks may come in any order but must tile {1, ..., 2k}.
inline pairing parse_pairing(std::string_view text) {
    std::size_t pos = 0;
    const auto skip_space = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
            ++pos;
        }
    };
    const auto expect = [&](char c) {
        skip_space();
        if (pos >= text.size() || text[pos] != c) {
            throw parse_error("expected '" + std::string(1, c) + "' at offset " +
                              std::to_string(pos) + " in \"" + std::string(text) + "\"");
        }
        ++pos;
    };
    const auto read_int = [&] {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++pos;
        }
        if (pos == start || pos - start > 9) {
            throw parse_error("expected a point label at offset " + std::to_string(start) +
                              " in \"" + std::string(text) + "\"");
        }
        return std::stoi(std::string(text.substr(start, pos - start)));
    };

    std::vector<std::pair<int, int>> blocks;
    skip_space();
    if (pos == text.size()) {
        throw parse_error("empty pairing text");
    }
    while (true) {
        expect('{');
        const int a = read_int();
        expect(',');
        const int b = read_int();
        expect('}');
        blocks.emplace_back(a, b);
        skip_space();
        if (pos == text.size()) {
            break;
        }
    }

    const int n = static_cast<int>(blocks.size()) * 2;
    std::vector<int> partner(n, 0);
    for (const auto& [a, b] : blocks) {
        if (a < 1 || a > n || b < 1 || b > n) {
            throw not_involution("point label outside 1.." + std::to_string(n) + " in \"" +
                                 std::string(text) + "\"");
        }
        if (a == b) {
            throw not_involution("point " + std::to_string(a) + " paired with itself");
        }
        if (partner[a - 1] != 0 || partner[b - 1] != 0) {
            throw not_involution("point used twice in \"" + std::string(text) + "\"");
        }
        partner[a - 1] = b;
        partner[b - 1] = a;
    }
    return pairing(partner);
}

inline std::string format_pairing(const pairing& p) {
    return p.to_string();
}

} // namespace tlwg
