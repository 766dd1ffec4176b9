#include "paley/finite_field.hpp"

#include <algorithm>
#include <cassert>

#include "paley/numbers.hpp"

namespace paley {

namespace {

using Poly = std::vector<std::int64_t>; // constant term first

std::int64_t norm_mod(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

// Remainder of a by a monic divisor, coefficients mod n.
Poly poly_mod(Poly a, const Poly& m, std::int64_t n) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::int64_t lead = a.back() % n;
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t j = 0; j < dm; ++j) {
                __int128 v = (__int128)a[shift + j] - (__int128)lead * m[j];
                a[shift + j] = norm_mod((std::int64_t)(v % n), n);
            }
        }
        a.pop_back();
    }
    return a;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

// Monic polynomial of degree d whose low coefficients are the base-p digits of v.
Poly poly_from_index(std::int64_t v, std::int64_t d, std::int64_t p) {
    Poly out(d + 1, 0);
    for (std::int64_t i = 0; i < d; ++i) {
        out[i] = v % p;
        v /= p;
    }
    out[d] = 1;
    return out;
}

// Monic irreducibles over F_p of each degree up to max_deg, by sieving
// against lower-degree irreducibles.  Fine at desk scale (t <= 8).
std::vector<std::vector<Poly>> irreducibles_up_to(std::int64_t p, std::int64_t max_deg) {
    std::vector<std::vector<Poly>> irr(max_deg + 1);
    for (std::int64_t d = 1; d <= max_deg; ++d) {
        const std::int64_t count = pow_i64(p, d);
        for (std::int64_t v = 0; v < count; ++v) {
            Poly f = poly_from_index(v, d, p);
            bool reducible = false;
            for (std::int64_t e = 1; !reducible && 2 * e <= d; ++e) {
                for (const Poly& g : irr[e]) {
                    if (poly_is_zero(poly_mod(f, g, p))) {
                        reducible = true;
                        break;
                    }
                }
            }
            if (!reducible) irr[d].push_back(std::move(f));
        }
    }
    return irr;
}

// Element product in Z/n[x]/(modulus), modulus monic of degree t.
std::vector<std::int64_t> mul_mod(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b,
                                  const std::vector<std::int64_t>& modulus,
                                  std::int64_t n) {
    const std::size_t t = modulus.size() - 1;
    if (t == 1) {
        __int128 v = (__int128)a[0] * b[0] % n;
        return {norm_mod((std::int64_t)v, n)};
    }
    std::vector<__int128> conv(2 * t - 1, 0);
    for (std::size_t i = 0; i < t; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < t; ++j) conv[i + j] += (__int128)a[i] * b[j];
    }
    for (std::size_t d = 2 * t - 2; d >= t; --d) {
        __int128 lead = conv[d] % n;
        if (lead != 0) {
            for (std::size_t j = 0; j < t; ++j) conv[d - t + j] -= lead * modulus[j];
        }
        conv[d] = 0;
    }
    std::vector<std::int64_t> out(t);
    for (std::size_t i = 0; i < t; ++i) out[i] = norm_mod((std::int64_t)(conv[i] % n), n);
    return out;
}

} // namespace

PrimePowerParams PrimePowerParams::make(std::int64_t p, std::int64_t t) {
    if (!is_prime(p)) throw invalid_input("p must be prime");
    if (t < 1) throw invalid_input("t must be >= 1");
    PrimePowerParams out;
    out.p = p;
    out.t = t;
    out.q = pow_i64(p, t);
    out.k = (out.q - 1) / 2;
    if (out.q % 4 == 1) out.mu = (out.q - 1) / 4;
    return out;
}

PrimePowerParams PrimePowerParams::from_q(std::int64_t q) {
    auto pp = as_prime_power(q);
    if (!pp) throw invalid_input("q must be a prime power");
    return make(pp->p, pp->t);
}

FieldElement FiniteField::zero() const {
    return FieldElement{std::vector<std::int64_t>(params_.t, 0)};
}

FieldElement FiniteField::one() const {
    auto e = zero();
    e.coeffs[0] = 1;
    return e;
}

FieldElement FiniteField::from_int(std::int64_t n) const {
    auto e = zero();
    e.coeffs[0] = norm_mod(n, params_.p);
    return e;
}

bool FiniteField::is_zero(const FieldElement& a) const { return poly_is_zero(a.coeffs); }

std::int64_t FiniteField::element_index(const FieldElement& a) const {
    std::int64_t idx = 0;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) idx = idx * params_.p + a.coeffs[i];
    return idx;
}

FieldElement FiniteField::index_element(std::int64_t index) const {
    if (index < 0 || index >= params_.q) throw invalid_input("element index out of range");
    FieldElement e = zero();
    for (std::int64_t i = 0; i < params_.t; ++i) {
        e.coeffs[i] = index % params_.p;
        index /= params_.p;
    }
    return e;
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = norm_mod(out.coeffs[i] + b.coeffs[i], params_.p);
    return out;
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = norm_mod(out.coeffs[i] - b.coeffs[i], params_.p);
    return out;
}

FieldElement FiniteField::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
    return FieldElement{mul_mod(a.coeffs, b.coeffs, modulus_, params_.p)};
}

FieldElement FiniteField::inv(const FieldElement& a) const {
    if (is_zero(a)) throw non_invertible("inverse of zero");
    return pow(a, params_.q - 2);
}

FieldElement FiniteField::pow(const FieldElement& a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    FieldElement base = a, out = one();
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

std::vector<FieldElement> FiniteField::nonzero_squares() const {
    auto mask = square_mask();
    std::vector<FieldElement> out;
    for (std::int64_t i = 1; i < params_.q; ++i)
        if (mask[i]) out.push_back(index_element(i));
    return out;
}

std::vector<char> FiniteField::square_mask() const {
    std::vector<char> mask(params_.q, 0);
    for (std::int64_t i = 1; i < params_.q; ++i) {
        FieldElement y = index_element(i);
        mask[element_index(mul(y, y))] = 1;
    }
    return mask;
}

FieldElement FiniteField::generator() const {
    const auto primes = prime_divisors(params_.q - 1);
    for (std::int64_t i = 1; i < params_.q; ++i) {
        FieldElement g = index_element(i);
        bool ok = true;
        for (std::int64_t r : primes) {
            if (pow(g, (params_.q - 1) / r) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw internal_error("no generator found"); // unreachable for a field
}

FiniteField find_field(std::int64_t p, std::int64_t t) {
    if (!is_prime(p)) throw invalid_input("p must be prime");
    if (t < 1) throw invalid_input("t must be >= 1");

    const auto irr = irreducibles_up_to(p, t / 2);
    const std::int64_t count = pow_i64(p, t);
    for (std::int64_t v = 0; v < count; ++v) {
        Poly f = poly_from_index(v, t, p);
        bool reducible = false;
        for (std::int64_t e = 1; !reducible && 2 * e <= t; ++e) {
            for (const Poly& g : irr[e]) {
                if (poly_is_zero(poly_mod(f, g, p))) {
                    reducible = true;
                    break;
                }
            }
        }
        if (!reducible) {
            FiniteField field;
            field.params_ = PrimePowerParams::make(p, t);
            field.modulus_ = std::move(f);
            return field;
        }
    }
    throw internal_error("no irreducible polynomial found"); // unreachable
}

GaloisRing::GaloisRing(const FiniteField& field, std::int64_t m)
    : field_(field), p_(field.p()), m_(m), t_(field.t()), q_(field.q()) {
    if (m < 1) throw invalid_input("precision m must be >= 1");
    pm_ = 1;
    for (std::int64_t i = 0; i < m; ++i) {
        if (pm_ > (std::int64_t(1) << 31) / p_) throw invalid_input("p^m too large");
        pm_ *= p_;
    }
    modulus_ = field.modulus(); // same integer coefficients, read mod p^m
}

RingElement GaloisRing::zero() const { return RingElement{std::vector<std::int64_t>(t_, 0)}; }

RingElement GaloisRing::one() const {
    auto e = zero();
    e.coeffs[0] = 1;
    return e;
}

RingElement GaloisRing::from_int(std::int64_t n) const {
    auto e = zero();
    e.coeffs[0] = norm_mod(n, pm_);
    return e;
}

bool GaloisRing::is_zero(const RingElement& a) const { return poly_is_zero(a.coeffs); }

bool GaloisRing::is_unit(const RingElement& a) const {
    return std::any_of(a.coeffs.begin(), a.coeffs.end(),
                       [this](std::int64_t c) { return c % p_ != 0; });
}

RingElement GaloisRing::add(const RingElement& a, const RingElement& b) const {
    RingElement out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = norm_mod(out.coeffs[i] + b.coeffs[i], pm_);
    return out;
}

RingElement GaloisRing::sub(const RingElement& a, const RingElement& b) const {
    RingElement out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = norm_mod(out.coeffs[i] - b.coeffs[i], pm_);
    return out;
}

RingElement GaloisRing::neg(const RingElement& a) const { return sub(zero(), a); }

RingElement GaloisRing::mul(const RingElement& a, const RingElement& b) const {
    return RingElement{mul_mod(a.coeffs, b.coeffs, modulus_, pm_)};
}

RingElement GaloisRing::scalar_mul(std::int64_t c, const RingElement& a) const {
    RingElement out = a;
    c = norm_mod(c, pm_);
    for (auto& x : out.coeffs) x = (std::int64_t)((__int128)x * c % pm_);
    return out;
}

RingElement GaloisRing::inv(const RingElement& a) const {
    if (!is_unit(a)) throw non_invertible("inverse of a non-unit in GR(p^m,t)");
    // Hensel lift of the residue-field inverse; each step doubles accuracy.
    RingElement b = lift(field_.inv(reduce(a)));
    RingElement two = from_int(2);
    for (std::int64_t acc = 1; acc < m_; acc *= 2) b = mul(b, sub(two, mul(a, b)));
    if (!(mul(a, b) == one())) throw internal_error("Hensel inversion failed");
    return b;
}

RingElement GaloisRing::pow(const RingElement& a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    RingElement base = a, out = one();
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

RingElement GaloisRing::lift(const FieldElement& a) const { return RingElement{a.coeffs}; }

FieldElement GaloisRing::reduce(const RingElement& a) const {
    FieldElement out;
    out.coeffs.resize(t_);
    for (std::int64_t i = 0; i < t_; ++i) out.coeffs[i] = norm_mod(a.coeffs[i], p_);
    return out;
}

RingElement GaloisRing::teichmuller(const FieldElement& x) const {
    if (poly_is_zero(x.coeffs)) throw invalid_input("Teichmuller lift of zero");
    // y <- y^q at least doubles p-adic accuracy, so m steps reach precision m.
    RingElement y = lift(x);
    for (std::int64_t i = 0; i < m_; ++i) y = pow(y, q_);
    if (!(pow(y, q_) == y)) throw internal_error("Teichmuller lift did not stabilize");
    return y;
}

std::int64_t GaloisRing::valuation(const RingElement& a) const {
    std::int64_t best = m_;
    for (std::int64_t c : a.coeffs) {
        if (c == 0) continue;
        std::int64_t v = 0;
        while (c % p_ == 0) {
            c /= p_;
            ++v;
        }
        best = std::min(best, v);
    }
    return best;
}

} // namespace paley
