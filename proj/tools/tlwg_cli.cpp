// Command-line front end: enumeration, Gram matrices, inverse-Gram entries
// (exact and as large-d expansions), projections, moments, and Graphviz
// exports.  All structured output is JSON on stdout; diagnostics go to
// stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
// error (bad sizes, singular matrices, values outside guarantees).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tlwg/tlwg.hpp"

namespace {

using tlwg::ordered_json;

void emit(const ordered_json& out) {
    std::cout << out.dump(2) << "\n";
}

const CLI::Validator rational_literal(
    [](std::string& input) -> std::string {
        try {
            tlwg::parse_rational(input);
            return {};
        } catch (const tlwg::parse_error& e) {
            return std::string(e.what());
        }
    },
    "RATIONAL");

const CLI::Validator pairing_literal(
    [](std::string& input) -> std::string {
        try {
            tlwg::parse_pairing(input);
            return {};
        } catch (const tlwg::error& e) {
            return std::string(e.what());
        }
    },
    "PAIRING");

tlwg::subgraph_policy parse_policy(const std::string& name) {
    return name == "B" ? tlwg::subgraph_policy::b : tlwg::subgraph_policy::a;
}

ordered_json gram_to_json(int k, const std::optional<std::string>& at) {
    const auto ordering = tlwg::enumerate_nc2(k);
    const int n = static_cast<int>(ordering.size());
    ordered_json names = ordered_json::array();
    for (const auto& p : ordering) {
        names.push_back(tlwg::format_pairing(p));
    }
    ordered_json rows = ordered_json::array();
    if (at) {
        const auto d = tlwg::parse_rational(*at);
        for (int i = 0; i < n; ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 0; j < n; ++j) {
                row.push_back(tlwg::to_string(
                    tlwg::rational_power(d, tlwg::join_block_count(ordering[i], ordering[j]))));
            }
            rows.push_back(std::move(row));
        }
        return ordered_json{{"k", k},
                            {"mode", "numeric"},
                            {"d", tlwg::to_string(d)},
                            {"ordering", std::move(names)},
                            {"entries", std::move(rows)}};
    }
    const auto gram = tlwg::gram_matrix(k);
    for (int i = 0; i < n; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < n; ++j) {
            row.push_back(gram.at(i, j).to_string());
        }
        rows.push_back(std::move(row));
    }
    return ordered_json{{"k", k},
                        {"mode", "symbolic"},
                        {"ordering", std::move(names)},
                        {"entries", std::move(rows)}};
}

// Cross-checks the walk-count expansion of every inverse-Gram entry of
// half-size k against the symbolic inverse, on both subgraph policies.
ordered_json verify_expansions(int k, int r_max) {
    const auto w = tlwg::weingarten_symbolic(k);
    const int n = static_cast<int>(w.ordering.size());
    const auto fail = [&](int i, int j, const std::string& what) {
        throw tlwg::verification_failure(
            "entry (" + tlwg::format_pairing(w.ordering[i]) + ", " +
            tlwg::format_pairing(w.ordering[j]) + "): " + what);
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto series =
                tlwg::laurent_series(w.ordering[i], w.ordering[j], r_max);
            if (series != tlwg::laurent_series(w.ordering[i], w.ordering[j], r_max,
                                               tlwg::subgraph_policy::b)) {
                fail(i, j, "subgraph policies disagree");
            }
            const auto expansion = tlwg::expand_at_infinity(w.entries.at(i, j), 2 * r_max);
            if (expansion.offset != series.length) {
                fail(i, j, "leading power disagrees");
            }
            for (int r = 0; r <= r_max; ++r) {
                if (expansion.coefficient_of_power(series.length + 2 * r) !=
                    tlwg::big_rational(series.sign) * tlwg::big_rational(series.walk_counts[r])) {
                    fail(i, j, "coefficient of order " + std::to_string(r) + " disagrees");
                }
                if (r < r_max &&
                    expansion.coefficient_of_power(series.length + 2 * r + 1) != 0) {
                    fail(i, j, "odd coefficient is nonzero");
                }
            }
        }
    }
    return ordered_json{{"k", k},
                        {"rmax", r_max},
                        {"pairs", n * n},
                        {"status", "ok"}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Temperley-Lieb dual-basis and projection calculator"};
    app.require_subcommand(1);

    int k = 1;
    int r_max = 6;
    std::string p_text;
    std::string q_text;
    std::string policy_name = "A";
    std::optional<std::string> at_text;
    std::optional<std::string> eval_text;
    std::string d_text;
    std::string out_path = "-";
    std::vector<int> i_word;
    std::vector<int> j_word;
    bool check = false;

    auto* enumerate = app.add_subcommand("enumerate", "List the diagram basis of half-size k");
    enumerate->add_option("--k", k, "half-size")->required()->check(CLI::Range(0, 10));

    auto* gram = app.add_subcommand("gram", "Gram matrix of the diagram basis");
    gram->add_option("--k", k, "half-size")->required()->check(CLI::Range(1, 10));
    gram->add_option("--at", at_text, "evaluate at a rational d")->check(rational_literal);

    auto* wg = app.add_subcommand("wg", "Inverse Gram matrix (dual-basis coefficients)");
    wg->require_subcommand(1);

    auto* wg_exact = wg->add_subcommand("exact", "Invert the Gram matrix exactly");
    wg_exact->add_option("--k", k, "half-size")->required()->check(CLI::Range(1, 10));
    wg_exact->add_option("--at", at_text, "evaluate at a rational d")->check(rational_literal);

    auto* wg_series = wg->add_subcommand("series", "Large-d expansion of one entry from walk counts");
    wg_series->add_option("--p", p_text, "row pairing")->required()->check(pairing_literal);
    wg_series->add_option("--q", q_text, "column pairing")->required()->check(pairing_literal);
    wg_series->add_option("--rmax", r_max, "expansion order")->required()->check(CLI::Range(0, 1000));
    wg_series->add_option("--policy", policy_name, "subgraph policy")
        ->check(CLI::IsMember({"A", "B"}));
    wg_series->add_option("--eval", eval_text, "partial sum at a rational d, |d| >= 2")
        ->check(rational_literal);

    auto* wg_verify = wg->add_subcommand(
        "verify", "Check walk-count expansions against the exact inverse for every pair");
    wg_verify->add_option("--k", k, "half-size")->required()->check(CLI::Range(1, 5));
    wg_verify->add_option("--rmax", r_max, "expansion order")->check(CLI::Range(0, 100));

    auto* jw = app.add_subcommand("jw", "Jones-Wenzl projection over the diagram basis");
    jw->add_option("--k", k, "half-size")->required()->check(CLI::Range(1, 10));
    jw->add_flag("--check", check,
                 "also build it from the dual basis and verify the projection identities");

    auto* graph = app.add_subcommand("graph", "Weingarten subgraph tools");
    graph->require_subcommand(1);
    auto* graph_export = graph->add_subcommand("export", "Write the subgraph in Graphviz format");
    graph_export->add_option("--p", p_text, "row pairing")->required()->check(pairing_literal);
    graph_export->add_option("--q", q_text, "column pairing")->required()->check(pairing_literal);
    graph_export->add_option("--policy", policy_name, "subgraph policy")
        ->check(CLI::IsMember({"A", "B"}));
    graph_export->add_option("--out", out_path, "output file, or - for stdout");

    auto* moment = app.add_subcommand("moment", "Mixed moment of Haar matrix entries");
    moment->add_option("--d", d_text, "rational dimension parameter")
        ->required()
        ->check(rational_literal);
    moment->add_option("--i", i_word, "first index word, comma separated")
        ->delimiter(',');
    moment->add_option("--j", j_word, "second index word, comma separated")
        ->delimiter(',');

    try {
        app.parse(argc, argv);

        if (*enumerate) {
            const auto basis = tlwg::enumerate_nc2(k);
            ordered_json names = ordered_json::array();
            for (const auto& p : basis) {
                names.push_back(tlwg::format_pairing(p));
            }
            emit(ordered_json{{"k", k},
                              {"count", basis.size()},
                              {"pairings", std::move(names)}});
        } else if (*gram) {
            emit(gram_to_json(k, at_text));
        } else if (*wg_exact) {
            if (at_text) {
                emit(tlwg::to_json(tlwg::weingarten_numeric(k, tlwg::parse_rational(*at_text))));
            } else {
                emit(tlwg::to_json(tlwg::weingarten_symbolic(k)));
            }
        } else if (*wg_series) {
            const auto p = tlwg::parse_pairing(p_text);
            const auto q = tlwg::parse_pairing(q_text);
            const auto series =
                tlwg::laurent_series(p, q, r_max, parse_policy(policy_name));
            auto out = tlwg::to_json(series);
            if (eval_text) {
                out["eval"] = *eval_text;
                out["value"] = tlwg::to_string(
                    tlwg::evaluate_series(series, tlwg::parse_rational(*eval_text), r_max));
            }
            emit(out);
        } else if (*wg_verify) {
            emit(verify_expansions(k, r_max));
        } else if (*jw) {
            const auto f = tlwg::jw_wenzl_recursion(k);
            auto out = tlwg::to_json(f);
            if (check) {
                const auto report = tlwg::verify_jw(k);
                out["checks"] = report.checks_passed;
            }
            emit(out);
        } else if (*graph_export) {
            const auto dot = tlwg::export_dot(tlwg::build_subgraph(
                tlwg::parse_pairing(p_text), tlwg::parse_pairing(q_text),
                parse_policy(policy_name)));
            if (out_path == "-") {
                std::cout << dot;
            } else {
                std::ofstream file(out_path);
                if (!file) {
                    throw tlwg::error("cannot open " + out_path + " for writing");
                }
                file << dot;
            }
        } else if (*moment) {
            const auto d = tlwg::parse_rational(d_text);
            const auto value = tlwg::haar_moment(i_word, j_word, d);
            emit(ordered_json{{"d", tlwg::to_string(d)},
                              {"i", i_word},
                              {"j", j_word},
                              {"value", tlwg::to_string(value)}});
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const tlwg::verification_failure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
