#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tlwg/errors.hpp"
#include "tlwg/matrix.hpp"
#include "tlwg/pairing.hpp"
#include "tlwg/polynomial.hpp"
#include "tlwg/rational_function.hpp"

namespace tlwg {

namespace detail {

struct union_find {
    explicit union_find(int n) : root(n) {
        std::iota(root.begin(), root.end(), 0);
    }

    int find(int a) {
        while (root[a] != a) {
            root[a] = root[root[a]];
            a = root[a];
        }
        return a;
    }

    void unite(int a, int b) { root[find(a)] = find(b); }

    std::vector<int> root;
};

} // namespace detail

// Result of composing two diagrams: the surviving pairing plus the number of
// closed loops created in the middle (each contributes a factor d).
struct diagram_product {
    int loops;
    pairing result;
};

// Composite of the diagrams of p and q: q is stacked on top of p, q's bottom
// row glued to p's top row.  Boundary labels run clockwise, so the bottom
// position j of a diagram carries label 2k+1-j.  Traced with a union-find on
// the 4k strand endpoints.
inline diagram_product diagram_multiply(const pairing& p, const pairing& q) {
    if (p.half_size() != q.half_size()) {
        throw size_mismatch("product of diagrams with different half-sizes");
    }
    const int k = p.half_size();

    // Node layout: 0..k-1 q's top, k..2k-1 q's bottom, 2k..3k-1 p's top,
    // 3k..4k-1 p's bottom, each row left to right.
    detail::union_find uf(4 * k);
    const auto q_node = [&](int label) { return label <= k ? label - 1 : 3 * k - label; };
    const auto p_node = [&](int label) { return label <= k ? 2 * k + label - 1 : 5 * k - label; };
    for (int i = 1; i <= 2 * k; ++i) {
        uf.unite(q_node(i), q_node(q.partner(i)));
        uf.unite(p_node(i), p_node(p.partner(i)));
    }
    for (int j = 1; j <= k; ++j) {
        uf.unite(k + j - 1, 2 * k + j - 1);
    }

    // External endpoints of the composite: q's top row and p's bottom row.
    const auto out_node = [&](int label) {
        return label <= k ? label - 1 : 5 * k - label;
    };
    std::map<int, std::vector<int>> by_component;
    for (int label = 1; label <= 2 * k; ++label) {
        by_component[uf.find(out_node(label))].push_back(label);
    }
    std::vector<int> partner(2 * k);
    for (const auto& [component, labels] : by_component) {
        if (labels.size() != 2) {
            throw std::logic_error("diagram strand does not connect two endpoints");
        }
        partner[labels[0] - 1] = labels[1];
        partner[labels[1] - 1] = labels[0];
    }

    int components = 0;
    for (int a = 0; a < 4 * k; ++a) {
        if (uf.find(a) == a) {
            ++components;
        }
    }
    return {components - k, pairing(std::move(partner))};
}

// Reflection across the horizontal axis: label i maps to 2k+1-i.
inline pairing transpose(const pairing& p) {
    const int n = p.points();
    std::vector<int> partner(n);
    for (int i = 1; i <= n; ++i) {
        partner[n - i] = n + 1 - p.partner(i);
    }
    return pairing(partner);
}

// The generator diagram u_i: a cup {i, i+1} on top, the matching cap
// {2k-i, 2k+1-i} on the bottom, straight strands elsewhere.
inline pairing generator_u(int i, int k) {
    if (k < 1 || i < 1 || i > k - 1) {
        throw index_out_of_range("generator index " + std::to_string(i) +
                                 " outside 1.." + std::to_string(k - 1));
    }
    std::vector<int> partner(2 * k);
    for (int j = 1; j <= 2 * k; ++j) {
        partner[j - 1] = 2 * k + 1 - j;
    }
    const auto pair_up = [&](int a, int b) {
        partner[a - 1] = b;
        partner[b - 1] = a;
    };
    pair_up(i, i + 1);
    pair_up(2 * k - i, 2 * k + 1 - i);
    return pairing(partner);
}

// Element of the diagram algebra: a finite linear combination of diagrams
// with rational-function coefficients, all at one half-size.
class tl_element {
public:
    explicit tl_element(int k) : k_(k) {
        if (k < 0) {
            throw index_out_of_range("negative half-size");
        }
    }

    static tl_element basis_diagram(const pairing& p) {
        tl_element x(p.half_size());
        x.terms_.emplace(p, ring_traits<rational_function>::one());
        return x;
    }

    static tl_element identity(int k) { return basis_diagram(identity_pairing(k)); }

    int half_size() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<pairing, rational_function>& terms() const { return terms_; }

    rational_function coefficient(const pairing& p) const {
        const auto it = terms_.find(p);
        return it == terms_.end() ? rational_function() : it->second;
    }

    tl_element& add_term(const pairing& p, const rational_function& c) {
        if (p.half_size() != k_) {
            throw size_mismatch("term half-size does not match the element");
        }
        if (c.is_zero()) {
            return *this;
        }
        auto [it, inserted] = terms_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
        return *this;
    }

    friend tl_element operator+(const tl_element& a, const tl_element& b) {
        if (a.k_ != b.k_) {
            throw size_mismatch("sum of elements with different half-sizes");
        }
        tl_element r = a;
        for (const auto& [p, c] : b.terms_) {
            r.add_term(p, c);
        }
        return r;
    }

    friend tl_element operator-(const tl_element& a) {
        tl_element r = a;
        for (auto& [p, c] : r.terms_) {
            c = -c;
        }
        return r;
    }

    friend tl_element operator-(const tl_element& a, const tl_element& b) {
        return a + (-b);
    }

    friend tl_element operator*(const rational_function& c, const tl_element& a) {
        tl_element r(a.k_);
        for (const auto& [p, coeff] : a.terms_) {
            r.add_term(p, c * coeff);
        }
        return r;
    }

    friend tl_element operator*(const tl_element& a, const tl_element& b) {
        if (a.k_ != b.k_) {
            throw size_mismatch("product of elements with different half-sizes");
        }
        tl_element r(a.k_);
        for (const auto& [pa, ca] : a.terms_) {
            for (const auto& [pb, cb] : b.terms_) {
                const auto prod = diagram_multiply(pa, pb);
                const auto weight = rational_function::from_polynomial(
                    int_polynomial::monomial(1, prod.loops));
                r.add_term(prod.result, ca * cb * weight);
            }
        }
        return r;
    }

    tl_element& operator+=(const tl_element& o) { return *this = *this + o; }
    tl_element& operator-=(const tl_element& o) { return *this = *this - o; }
    tl_element& operator*=(const tl_element& o) { return *this = *this * o; }

    friend bool operator==(const tl_element&, const tl_element&) = default;

    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string s;
        for (const auto& [p, c] : terms_) {
            if (!s.empty()) {
                s += " + ";
            }
            s += "(" + c.to_string() + ")*D[" + p.to_string() + "]";
        }
        return s;
    }

private:
    int k_;
    std::map<pairing, rational_function> terms_;
};

// Element product D_p * D_q resolved back into the diagram basis.
inline tl_element diagram_basis_product(const pairing& p, const pairing& q) {
    return tl_element::basis_diagram(p) * tl_element::basis_diagram(q);
}

inline tl_element transpose(const tl_element& x) {
    tl_element r(x.half_size());
    for (const auto& [p, c] : x.terms()) {
        r.add_term(transpose(p), c);
    }
    return r;
}

// Markov trace: close every diagram up with nested strands; a diagram D_p
// contributes d^(number of blocks of the join of p with the identity).
inline rational_function markov_trace(const tl_element& x) {
    const pairing one = identity_pairing(x.half_size());
    rational_function tr;
    for (const auto& [p, c] : x.terms()) {
        const int loops = join_block_count(p, one);
        tr += c * rational_function::from_polynomial(int_polynomial::monomial(1, loops));
    }
    return tr;
}

// Trace inner product <x, y> = trace(transpose(x) * y).  On basis diagrams
// this evaluates to d^(join block count).
inline rational_function bilinear_form(const tl_element& x, const tl_element& y) {
    if (x.half_size() != y.half_size()) {
        throw size_mismatch("bilinear form of elements with different half-sizes");
    }
    return markov_trace(transpose(x) * y);
}

// Gram matrix of the diagram basis in canonical order; the (p, q) entry is
// the monomial d^(join block count of p and q).
inline matrix<int_polynomial> gram_matrix(int k, int cap = default_enumeration_cap) {
    const auto basis = enumerate_nc2(k, cap);
    const int n = static_cast<int>(basis.size());
    matrix<int_polynomial> g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            auto entry = int_polynomial::monomial(1, join_block_count(basis[i], basis[j]));
            g.at(j, i) = entry;
            g.at(i, j) = std::move(entry);
        }
    }
    return g;
}

} // namespace tlwg
