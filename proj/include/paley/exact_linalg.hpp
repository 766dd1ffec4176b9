#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "paley/abelian_group.hpp"
#include "paley/big_matrix.hpp"

namespace paley {

// Diagonal of the Smith normal form: positive divisors in a divisibility
// chain (units included), plus the number of zero diagonal entries.
struct SmithForm {
    std::vector<mpz_class> divisors;
    std::size_t zero_count = 0;
};

// Unimodular diagonalization with minimal-absolute-value pivoting, then a
// gcd/lcm sweep to restore the divisibility chain.  Only the diagonal is
// kept; no transform matrices.
SmithForm smith_normal_form(BigMatrix m);

// Fraction-free determinant (Bareiss), exact over Z.
mpz_class det_bareiss(BigMatrix m);

// Cokernel of a square matrix as an abstract abelian group.
AbelianGroup cokernel(const BigMatrix& m);

// Exponent of ell in each nonzero SNF divisor (units contribute 0).
std::vector<std::int64_t> local_divisors(const BigMatrix& m, const mpz_class& ell);

// JSON array of {divisor, multiplicity} pairs plus the zero count.
nlohmann::json smith_to_json(const SmithForm& s);

} // namespace paley
