#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace paley {

bool is_prime(std::int64_t n);
bool is_prime(const mpz_class& n);

// Exact prime factorization, exponents >= 1.  Trial division backed by
// Pollard rho for the occasional large cofactor from random test matrices.
std::map<mpz_class, int> factorize(mpz_class n);

std::vector<std::int64_t> prime_divisors(std::int64_t n);

struct PrimePower {
    std::int64_t p = 0;
    std::int64_t t = 0;
};

// q = p^t with p prime, t >= 1.
std::optional<PrimePower> as_prime_power(std::int64_t q);

mpz_class mpz_pow(const mpz_class& base, std::uint64_t exp);
mpz_class mpz_binomial(std::uint64_t n, std::uint64_t k);

std::int64_t pow_i64(std::int64_t base, std::int64_t exp);

} // namespace paley
