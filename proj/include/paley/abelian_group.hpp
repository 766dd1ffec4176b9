#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace paley {

// Finite(ly generated) abelian group: free rank plus per-prime elementary
// divisor exponents.  divisors[l] is the ascending multiset of e >= 1 with
// one entry per Z/l^e summand.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::map<mpz_class, std::vector<int>> divisors;

    void add_prime_power(const mpz_class& prime, int exp, std::int64_t multiplicity = 1);
    void add_cyclic(const mpz_class& n, std::int64_t multiplicity = 1); // factors n
    void normalize(); // sort exponent lists, drop empty primes

    bool is_trivial() const { return free_rank == 0 && divisors.empty(); }
    mpz_class order() const; // torsion order; invalid_input if free_rank > 0

    // Canonical chain d_1 | d_2 | ... | d_r, each > 1, largest prime powers
    // aligned with the largest invariant factor.
    std::vector<mpz_class> invariant_factors() const;

    bool same_torsion(const AbelianGroup& o) const;

    nlohmann::json to_json() const;
    std::string to_string() const; // e.g. "(Z/2)^4 + (Z/3)^2 + (Z/9)^2"
};

struct CompareResult {
    bool equal = false;
    std::string detail; // first differing prime and multiset diff on mismatch
};

// Per-prime elementary-divisor multiset equality (torsion parts only).
CompareResult compare_groups(const AbelianGroup& predicted, const AbelianGroup& computed);

} // namespace paley
