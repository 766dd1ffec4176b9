#include "paley/abelian_group.hpp"

#include <algorithm>
#include <sstream>

#include "paley/errors.hpp"
#include "paley/numbers.hpp"

namespace paley {

void AbelianGroup::add_prime_power(const mpz_class& prime, int exp, std::int64_t multiplicity) {
    if (exp <= 0 || multiplicity <= 0) return;
    auto& v = divisors[prime];
    v.insert(v.end(), static_cast<std::size_t>(multiplicity), exp);
}

void AbelianGroup::add_cyclic(const mpz_class& n, std::int64_t multiplicity) {
    if (n == 1) return;
    for (const auto& [prime, exp] : factorize(n)) add_prime_power(prime, exp, multiplicity);
}

void AbelianGroup::normalize() {
    for (auto it = divisors.begin(); it != divisors.end();) {
        std::sort(it->second.begin(), it->second.end());
        it = it->second.empty() ? divisors.erase(it) : std::next(it);
    }
}

mpz_class AbelianGroup::order() const {
    if (free_rank > 0) throw invalid_input("order of an infinite group");
    mpz_class out = 1;
    for (const auto& [prime, exps] : divisors)
        for (int e : exps) out *= mpz_pow(prime, static_cast<std::uint64_t>(e));
    return out;
}

std::vector<mpz_class> AbelianGroup::invariant_factors() const {
    std::size_t slots = 0;
    for (const auto& [prime, exps] : divisors) slots = std::max(slots, exps.size());
    // Right-align each prime's ascending exponents so the largest powers meet.
    std::vector<mpz_class> chain(slots, 1);
    for (const auto& [prime, exps] : divisors) {
        auto sorted = exps;
        std::sort(sorted.begin(), sorted.end());
        std::size_t offset = slots - sorted.size();
        for (std::size_t i = 0; i < sorted.size(); ++i)
            chain[offset + i] *= mpz_pow(prime, static_cast<std::uint64_t>(sorted[i]));
    }
    return chain;
}

bool AbelianGroup::same_torsion(const AbelianGroup& o) const {
    AbelianGroup a = *this, b = o;
    a.normalize();
    b.normalize();
    return a.divisors == b.divisors;
}

nlohmann::json AbelianGroup::to_json() const {
    AbelianGroup g = *this;
    g.normalize();
    nlohmann::json ed = nlohmann::json::object();
    for (const auto& [prime, exps] : g.divisors) ed[prime.get_str()] = exps;
    nlohmann::json inv = nlohmann::json::array();
    for (const auto& d : g.invariant_factors()) inv.push_back(d.get_str());
    return {{"free_rank", g.free_rank},
            {"elementary_divisors", ed},
            {"invariant_factors", inv}};
}

std::string AbelianGroup::to_string() const {
    AbelianGroup g = *this;
    g.normalize();
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (g.free_rank > 0) {
        sep();
        os << "Z";
        if (g.free_rank > 1) os << "^" << g.free_rank;
    }
    for (const auto& [prime, exps] : g.divisors) {
        // group equal exponents into (Z/l^e)^mult
        for (std::size_t i = 0; i < exps.size();) {
            std::size_t j = i;
            while (j < exps.size() && exps[j] == exps[i]) ++j;
            sep();
            os << "(Z/" << mpz_pow(prime, static_cast<std::uint64_t>(exps[i])).get_str() << ")";
            if (j - i > 1) os << "^" << (j - i);
            i = j;
        }
    }
    if (first) os << "trivial";
    return os.str();
}

CompareResult compare_groups(const AbelianGroup& predicted, const AbelianGroup& computed) {
    AbelianGroup a = predicted, b = computed;
    a.normalize();
    b.normalize();
    if (a.divisors == b.divisors) return {true, "equal"};

    // Report the first differing prime.
    auto primes = a.divisors;
    for (const auto& [prime, exps] : b.divisors) primes.try_emplace(prime);
    for (const auto& [prime, unused] : primes) {
        auto ita = a.divisors.find(prime);
        auto itb = b.divisors.find(prime);
        const std::vector<int> empty;
        const auto& ea = ita == a.divisors.end() ? empty : ita->second;
        const auto& eb = itb == b.divisors.end() ? empty : itb->second;
        if (ea != eb) {
            std::ostringstream os;
            os << "mismatch at prime " << prime.get_str() << ": predicted exponents [";
            for (std::size_t i = 0; i < ea.size(); ++i) os << (i ? "," : "") << ea[i];
            os << "] vs computed [";
            for (std::size_t i = 0; i < eb.size(); ++i) os << (i ? "," : "") << eb[i];
            os << "]";
            return {false, os.str()};
        }
    }
    return {false, "mismatch"};
}

} // namespace paley
