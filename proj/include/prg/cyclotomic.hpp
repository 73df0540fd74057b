#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prg/errors.hpp"
#include "prg/rational.hpp"

namespace prg {

/// Euler's totient. Rejects n = 0.
unsigned phi(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial (constant term first,
/// monic). Computed once per n and cached.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

/**
 * An exact element of the cyclotomic field Q(w_n), stored as the rational
 * coordinate vector over the power basis {1, w_n, ..., w_n^(phi(n)-1)}.
 *
 * The representation is canonical: after every operation coefficients are
 * reduced modulo the n-th cyclotomic polynomial, so two elements of the
 * same order are equal iff their coefficient vectors are equal.
 * Cross-order arithmetic is rejected; callers embed into a common field
 * first. Values are immutable after construction.
 */
class CycloElement {
  public:
    CycloElement(unsigned order, std::vector<Rational> coeffs);

    static CycloElement zero(unsigned order);
    static CycloElement one(unsigned order);
    static CycloElement from_rational(unsigned order, const Rational& q);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True iff all non-constant coordinates vanish.
    bool is_rational() const;
    /// The constant coordinate (the value itself when is_rational()).
    const Rational& rational_part() const { return coeffs_[0]; }

    /// Canonical string form; collision-free within a fixed order, so it
    /// doubles as a set/map key.
    std::string key() const;

    bool operator==(const CycloElement& other) const;
    bool operator!=(const CycloElement& other) const { return !(*this == other); }

  private:
    unsigned order_;
    std::vector<Rational> coeffs_;
};

/// w_n^e, exponent reduced mod n, canonically reduced to the power basis.
CycloElement root_of_unity(unsigned n, long e);

CycloElement add(const CycloElement& x, const CycloElement& y);
CycloElement sub(const CycloElement& x, const CycloElement& y);
CycloElement mul(const CycloElement& x, const CycloElement& y);
CycloElement neg(const CycloElement& x);
CycloElement scalar_mul(const Rational& q, const CycloElement& x);
/// Multiplicative inverse; rejects zero.
CycloElement invert(const CycloElement& x);

/// Image under the field automorphism w_n -> w_n^(-1) (complex conjugation).
CycloElement conjugate(const CycloElement& x);

/// The same complex number expressed in Q(w_m) via w_n = w_m^(m/n).
/// Requires order(x) | m.
CycloElement embed(const CycloElement& x, unsigned m);

/// True iff every power-basis coordinate is an integer. In Q(w_n) these
/// are exactly the algebraic integers.
bool is_algebraic_integer(const CycloElement& x);

/// sqrt(2) = w_8 + w_8^(-1) in Q(w_ambient); ambient must be a multiple of 8.
CycloElement sqrt2(unsigned ambient);

/// i = w_4 in Q(w_ambient); ambient must be a multiple of 4.
CycloElement imag_unit(unsigned ambient);

/// Membership in Q(w_k, sqrt 2), decided by exact linear algebra over Q
/// against the spanning set {w_k^i, sqrt2 * w_k^i}. Requires 4 to not
/// divide k and order(x) to be a multiple of lcm(8, k).
bool in_real_quadratic_subfield(const CycloElement& x, unsigned k);

/// Rational coordinates of x in the Q-span of the given elements (all of
/// x's order), or nullopt if x lies outside the span.
std::optional<std::vector<Rational>> coordinates_in_span(
    const CycloElement& x, const std::vector<CycloElement>& span);

/// Rewrite x as an element of the subfield Q(w_k), when possible.
/// Requires k | order(x).
std::optional<CycloElement> descend(const CycloElement& x, unsigned k);

inline CycloElement operator+(const CycloElement& x, const CycloElement& y) { return add(x, y); }
inline CycloElement operator-(const CycloElement& x, const CycloElement& y) { return sub(x, y); }
inline CycloElement operator*(const CycloElement& x, const CycloElement& y) { return mul(x, y); }
inline CycloElement operator-(const CycloElement& x) { return neg(x); }

unsigned lcm_u(unsigned a, unsigned b);
unsigned gcd_u(unsigned a, unsigned b);

}  // namespace prg
