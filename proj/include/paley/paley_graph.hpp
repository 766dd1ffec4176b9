#pragma once

#include <cstdint>

#include "paley/big_matrix.hpp"
#include "paley/finite_field.hpp"

namespace paley {

// Simple undirected graph as a 0/1 symmetric adjacency matrix.
struct Graph {
    std::int64_t n = 0;
    BigMatrix adjacency;
};

// srg(q, k, lambda, mu) data for P(q); restricted eigenvalues are
// (a + b*sqrt(q))/2 pairs.
struct SrgParams {
    std::int64_t n, k, lambda, mu;
    struct Eigenvalue {
        std::int64_t a, b;
    };
    Eigenvalue r, s; // (-1 + sqrt q)/2 and (-1 - sqrt q)/2

    static SrgParams for_q(std::int64_t q);
};

// Vertices are field elements in element_index order; x ~ y iff x - y is a
// nonzero square.  Requires q = p^t = 1 (mod 4).
Graph build_paley(std::int64_t q);

// L = kI - A for a k-regular graph.
BigMatrix laplacian(const Graph& g);

// Exact check of A^2 = kI + lambda*A + mu*(J - I - A) over Z.
bool srg_check(const Graph& g);

// Matrix-tree count: cofactor determinant of L with row/column 0 deleted.
mpz_class spanning_tree_count(const Graph& g);

} // namespace paley
