#include "paley/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "paley/errors.hpp"
#include "paley/numbers.hpp"

namespace paley {

namespace {

// Locate a nonzero entry of minimal absolute value in m[k.., k..].
// Minimal-entry pivoting keeps coefficient growth in check at these sizes.
bool find_min_pivot(const BigMatrix& m, std::size_t k, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = k; i < m.rows(); ++i) {
        for (std::size_t j = k; j < m.cols(); ++j) {
            const mpz_class& v = m(i, j);
            if (v == 0) continue;
            mpz_class a = abs(v);
            if (!found || a < best) {
                found = true;
                best = std::move(a);
                pr = i;
                pc = j;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

void swap_rows(BigMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(BigMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

} // namespace

SmithForm smith_normal_form(BigMatrix m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    std::vector<mpz_class> diag;
    diag.reserve(n);

    mpz_class quot, tmp;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = k, pc = k;
        if (!find_min_pivot(m, k, pr, pc)) break; // remaining block is zero
        swap_rows(m, k, pr);
        swap_cols(m, k, pc);

        for (;;) {
            const mpz_class& pivot = m(k, k);
            // Clear column k with truncated-quotient row operations; leftover
            // remainders are strictly smaller than the pivot.
            bool dirty = false;
            for (std::size_t i = k + 1; i < m.rows(); ++i) {
                if (m(i, k) == 0) continue;
                mpz_tdiv_q(quot.get_mpz_t(), m(i, k).get_mpz_t(), pivot.get_mpz_t());
                if (quot != 0) {
                    for (std::size_t j = k; j < m.cols(); ++j) {
                        tmp = quot * m(k, j);
                        m(i, j) -= tmp;
                    }
                }
                if (m(i, k) != 0) dirty = true;
            }
            for (std::size_t j = k + 1; j < m.cols(); ++j) {
                if (m(k, j) == 0) continue;
                mpz_tdiv_q(quot.get_mpz_t(), m(k, j).get_mpz_t(), pivot.get_mpz_t());
                if (quot != 0) {
                    for (std::size_t i = k; i < m.rows(); ++i) {
                        tmp = quot * m(i, k);
                        m(i, j) -= tmp;
                    }
                }
                if (m(k, j) != 0) dirty = true;
            }
            if (!dirty) break;
            // A smaller remainder exists somewhere in row/column k; reselect.
            if (!find_min_pivot(m, k, pr, pc)) break;
            swap_rows(m, k, pr);
            swap_cols(m, k, pc);
        }
        diag.push_back(abs(m(k, k)));
    }

    // Pairwise gcd/lcm merging turns the diagonal multiset into the chain.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < diag.size(); ++i) {
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] % diag[i] == 0) continue;
                mpz_class g = gcd(diag[i], diag[j]);
                diag[j] = diag[i] / g * diag[j];
                diag[i] = std::move(g);
                changed = true;
            }
        }
    }
    std::sort(diag.begin(), diag.end());

    SmithForm out;
    out.divisors = std::move(diag);
    out.zero_count = n - out.divisors.size();
    return out;
}

mpz_class det_bareiss(BigMatrix m) {
    if (m.rows() != m.cols()) throw invalid_input("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    int sign = 1;
    mpz_class prev = 1, tmp;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // pick the smallest nonzero pivot in column k to limit growth
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i) {
            if (m(i, k) == 0) continue;
            if (best == n || abs(m(i, k)) < abs(m(best, k))) best = i;
        }
        if (best == n) return 0;
        if (best != k) {
            swap_rows(m, k, best);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                tmp = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : mpz_class(-m(n - 1, n - 1));
}

AbelianGroup cokernel(const BigMatrix& m) {
    if (m.rows() != m.cols()) throw invalid_input("cokernel expects a square matrix");
    SmithForm s = smith_normal_form(m);
    AbelianGroup g;
    g.free_rank = s.zero_count;
    for (const auto& d : s.divisors)
        if (d > 1) g.add_cyclic(d);
    g.normalize();
    return g;
}

std::vector<std::int64_t> local_divisors(const BigMatrix& m, const mpz_class& ell) {
    if (m.rows() != m.cols()) throw invalid_input("local divisors expect a square matrix");
    if (!is_prime(ell)) throw invalid_input("ell must be prime");
    SmithForm s = smith_normal_form(m);
    std::vector<std::int64_t> out;
    out.reserve(s.divisors.size());
    for (const auto& d : s.divisors) {
        std::int64_t e = 0;
        mpz_class v = d;
        while (mpz_divisible_p(v.get_mpz_t(), ell.get_mpz_t())) {
            v /= ell;
            ++e;
        }
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::json smith_to_json(const SmithForm& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < s.divisors.size();) {
        std::size_t j = i;
        while (j < s.divisors.size() && s.divisors[j] == s.divisors[i]) ++j;
        arr.push_back({{"divisor", s.divisors[i].get_str()}, {"multiplicity", j - i}});
        i = j;
    }
    return {{"divisors", arr}, {"zero_count", s.zero_count}};
}

} // namespace paley
