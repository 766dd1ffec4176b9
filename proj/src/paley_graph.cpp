#include "paley/paley_graph.hpp"

#include <vector>

#include "paley/errors.hpp"
#include "paley/exact_linalg.hpp"
#include "paley/numbers.hpp"

namespace paley {

SrgParams SrgParams::for_q(std::int64_t q) {
    if (q % 4 != 1) throw invalid_input("srg parameters need q = 1 (mod 4)");
    return SrgParams{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4, {-1, 1}, {-1, -1}};
}

Graph build_paley(std::int64_t q) {
    auto pp = as_prime_power(q);
    if (!pp) throw invalid_input("q must be a prime power = 1 (mod 4)");
    if (q % 4 != 1) throw invalid_input("q must be = 1 (mod 4); otherwise x-y square is directed");

    FiniteField field = find_field(pp->p, pp->t);
    const auto mask = field.square_mask();

    Graph g;
    g.n = q;
    g.adjacency = BigMatrix(q, q);
    for (std::int64_t i = 0; i < q; ++i) {
        FieldElement xi = field.index_element(i);
        for (std::int64_t j = 0; j < q; ++j) {
            if (i == j) continue;
            std::int64_t d = field.element_index(field.sub(xi, field.index_element(j)));
            if (mask[d]) g.adjacency(i, j) = 1;
        }
    }

    // Regularity and connectivity sanity; Paley graphs satisfy both.
    std::vector<char> seen(q, 0);
    std::vector<std::int64_t> stack{0};
    seen[0] = 1;
    std::int64_t reached = 1;
    while (!stack.empty()) {
        std::int64_t v = stack.back();
        stack.pop_back();
        for (std::int64_t u = 0; u < q; ++u) {
            if (g.adjacency(v, u) != 0 && !seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    if (reached != q) throw internal_error("Paley graph not connected");
    return g;
}

BigMatrix laplacian(const Graph& g) {
    const std::size_t n = g.adjacency.rows();
    mpz_class degree = 0;
    for (std::size_t j = 0; j < n; ++j) degree += g.adjacency(0, j);
    BigMatrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            row += g.adjacency(i, j);
            l(i, j) = -g.adjacency(i, j);
        }
        if (row != degree) throw invalid_input("laplacian expects a regular graph");
        l(i, i) = degree;
    }
    return l;
}

bool srg_check(const Graph& g) {
    const std::int64_t q = g.n;
    if (q % 4 != 1) return false;
    SrgParams sp = SrgParams::for_q(q);
    const BigMatrix& a = g.adjacency;
    BigMatrix lhs = a * a;
    BigMatrix jmia = BigMatrix::constant(q, q, 1) - BigMatrix::identity(q) - a;
    BigMatrix rhs = BigMatrix::identity(q).scaled(sp.k) + a.scaled(sp.lambda) + jmia.scaled(sp.mu);
    return lhs == rhs;
}

mpz_class spanning_tree_count(const Graph& g) {
    BigMatrix l = laplacian(g);
    return abs(det_bareiss(l.minor_without(0, 0)));
}

} // namespace paley
