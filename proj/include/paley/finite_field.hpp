#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paley/errors.hpp"

namespace paley {

// q = p^t.  mu = (q-1)/4 is only meaningful when q = 1 (mod 4).
struct PrimePowerParams {
    std::int64_t p = 0;
    std::int64_t t = 0;
    std::int64_t q = 0;
    std::int64_t k = 0; // (q-1)/2
    std::optional<std::int64_t> mu;

    static PrimePowerParams make(std::int64_t p, std::int64_t t);
    static PrimePowerParams from_q(std::int64_t q);
};

// Coefficient vector in the polynomial basis, constant term first,
// length exactly t, entries in [0, p).
struct FieldElement {
    std::vector<std::int64_t> coeffs;
    bool operator==(const FieldElement&) const = default;
};

// Same layout with entries in [0, p^m).
struct RingElement {
    std::vector<std::int64_t> coeffs;
    bool operator==(const RingElement&) const = default;
};

// GF(p^t) with the lexicographically smallest monic irreducible modulus
// (coefficients constant-first, compared as a base-p integer).  The fixed
// modulus pins the vertex order of every downstream matrix.
class FiniteField {
public:
    const PrimePowerParams& params() const { return params_; }
    std::int64_t p() const { return params_.p; }
    std::int64_t t() const { return params_.t; }
    std::int64_t q() const { return params_.q; }
    // Monic, degree t, constant term first, length t+1.
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t n) const; // n * 1 in the prime subfield
    bool is_zero(const FieldElement& a) const;

    // index = sum coeffs[i] * p^i, a bijection with [0, q).
    std::int64_t element_index(const FieldElement& a) const;
    FieldElement index_element(std::int64_t index) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::int64_t e) const;

    // S = { y^2 : y in F_q* }, sorted by element index.
    std::vector<FieldElement> nonzero_squares() const;
    // Membership bitmap indexed by element_index; entry 0 is always false.
    std::vector<char> square_mask() const;

    // Smallest-index element of multiplicative order q-1.
    FieldElement generator() const;

private:
    friend FiniteField find_field(std::int64_t p, std::int64_t t);
    PrimePowerParams params_;
    std::vector<std::int64_t> modulus_;
};

FiniteField find_field(std::int64_t p, std::int64_t t);

// GR(p^m, t): Z/p^m [x] / (f) where f is the field modulus lifted verbatim.
// Finite-precision stand-in for the unramified p-adic ring Z_p[xi_{q-1}].
class GaloisRing {
public:
    GaloisRing(const FiniteField& field, std::int64_t m);

    std::int64_t p() const { return p_; }
    std::int64_t m() const { return m_; }
    std::int64_t t() const { return t_; }
    std::int64_t q() const { return q_; }
    std::int64_t pm() const { return pm_; } // p^m
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    const FiniteField& residue_field() const { return field_; }

    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(std::int64_t n) const;
    bool is_zero(const RingElement& a) const;
    bool is_unit(const RingElement& a) const; // nonzero mod p

    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement scalar_mul(std::int64_t c, const RingElement& a) const;
    RingElement inv(const RingElement& a) const;
    RingElement pow(const RingElement& a, std::int64_t e) const;

    RingElement lift(const FieldElement& a) const;   // coefficientwise
    FieldElement reduce(const RingElement& a) const; // mod p

    // Unique (q-1)-th root of unity congruent to x mod p.  x must be nonzero.
    RingElement teichmuller(const FieldElement& x) const;

    // min over coefficients of their p-adic valuation, capped at m.
    // A return of m means ">= m or zero"; exact whenever the true value < m.
    std::int64_t valuation(const RingElement& a) const;

private:
    FiniteField field_;
    std::int64_t p_, m_, t_, q_, pm_;
    std::vector<std::int64_t> modulus_;
};

} // namespace paley
