#include "paley/numbers.hpp"

#include <stdexcept>

#include "paley/errors.hpp"

namespace paley {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
    // n odd composite, not a prime power of interest to trial division.
    mpz_class c = 1;
    while (true) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
        c += 1;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::map<mpz_class, int> factorize(mpz_class n) {
    if (n < 0) n = -n;
    if (n == 0) throw invalid_input("factorize: zero has no factorization");
    std::map<mpz_class, int> out;
    for (std::int64_t d : {std::int64_t(2), std::int64_t(3), std::int64_t(5)}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
            out[mpz_class(d)] += 1;
            n /= static_cast<unsigned long>(d);
        }
    }
    std::int64_t d = 7;
    while (d < 100000 && mpz_class(d) * d <= n) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
            out[mpz_class(d)] += 1;
            n /= static_cast<unsigned long>(d);
        }
        d += 2;
    }
    factor_into(n, out);
    return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<PrimePower> as_prime_power(std::int64_t q) {
    if (q < 2) return std::nullopt;
    std::int64_t p = q;
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::int64_t t = 0, r = q;
    while (r % p == 0) {
        r /= p;
        ++t;
    }
    if (r != 1) return std::nullopt;
    return PrimePower{p, t};
}

mpz_class mpz_pow(const mpz_class& base, std::uint64_t exp) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

mpz_class mpz_binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class out;
    if (k > n) return 0;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

std::int64_t pow_i64(std::int64_t base, std::int64_t exp) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > (std::int64_t(1) << 62) / (base < 0 ? -base : base))
            throw invalid_input("pow_i64: overflow");
        out *= base;
    }
    return out;
}

} // namespace paley
