#pragma once

#include <json.hpp>

#include "tlwg/pairing.hpp"
#include "tlwg/tl_element.hpp"
#include "tlwg/weingarten_graph.hpp"
#include "tlwg/weingarten_oracle.hpp"

// JSON views of the main value types.  Keys keep insertion order and big
// integers are rendered as decimal strings, so output is stable across runs
// and safe for consumers without arbitrary-precision integers.

namespace tlwg {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const tl_element& x) {
    ordered_json terms = ordered_json::array();
    for (const auto& [p, c] : x.terms()) {
        terms.push_back(ordered_json{{"pairing", format_pairing(p)},
                                     {"num", c.num().to_string()},
                                     {"den", c.den().to_string()}});
    }
    return ordered_json{{"k", x.half_size()}, {"terms", std::move(terms)}};
}

inline ordered_json to_json(const laurent_data& data) {
    ordered_json walks = ordered_json::array();
    for (const auto& m : data.walk_counts) {
        walks.push_back(to_string(m));
    }
    return ordered_json{{"k", data.k},
                        {"p", format_pairing(data.p)},
                        {"q", format_pairing(data.q)},
                        {"sign", data.sign},
                        {"L", data.length},
                        {"m", std::move(walks)}};
}

namespace detail {

inline ordered_json ordering_to_json(const std::vector<pairing>& ordering) {
    ordered_json names = ordered_json::array();
    for (const auto& p : ordering) {
        names.push_back(format_pairing(p));
    }
    return names;
}

} // namespace detail

inline ordered_json to_json(const symbolic_weingarten& w) {
    ordered_json rows = ordered_json::array();
    const int n = static_cast<int>(w.ordering.size());
    for (int i = 0; i < n; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < n; ++j) {
            row.push_back(w.entries.at(i, j).to_string());
        }
        rows.push_back(std::move(row));
    }
    return ordered_json{{"k", w.k},
                        {"mode", "symbolic"},
                        {"ordering", detail::ordering_to_json(w.ordering)},
                        {"entries", std::move(rows)}};
}

inline ordered_json to_json(const numeric_weingarten& w) {
    ordered_json rows = ordered_json::array();
    const int n = static_cast<int>(w.ordering.size());
    for (int i = 0; i < n; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < n; ++j) {
            row.push_back(to_string(w.entries.at(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return ordered_json{{"k", w.k},
                        {"mode", "numeric"},
                        {"d", to_string(w.d)},
                        {"ordering", detail::ordering_to_json(w.ordering)},
                        {"entries", std::move(rows)}};
}

} // namespace tlwg
