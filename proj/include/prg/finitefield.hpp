#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "prg/groups.hpp"

namespace prg {

/// An element re + im*i of the nine-element field F_9 = F_3(i), with
/// i^2 = -1. Components are kept reduced to {0, 1, 2}.
class F9 {
  public:
    F9() : re_(0), im_(0) {}
    F9(int re, int im) : re_(((re % 3) + 3) % 3), im_(((im % 3) + 3) % 3) {}

    static F9 imaginary() { return F9(0, 1); }

    int re() const { return re_; }
    int im() const { return im_; }

    bool operator==(const F9& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const F9& o) const { return !(*this == o); }

    F9 operator+(const F9& o) const { return F9(re_ + o.re_, im_ + o.im_); }
    F9 operator-(const F9& o) const { return F9(re_ - o.re_, im_ - o.im_); }
    F9 operator-() const { return F9(-re_, -im_); }
    F9 operator*(const F9& o) const {
        return F9(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }

    std::string to_string() const;

  private:
    int re_, im_;
};

/// x -> x^3, the Frobenius automorphism: fixes F_3 and negates i.
F9 frobenius_conjugate(const F9& x);

/// A 2x2 matrix over F_9. Construction is unchecked; the unitary
/// similitude property is the predicate is_gu29.
struct GUMat {
    std::array<F9, 4> e;  // row-major

    const F9& at(int r, int c) const { return e[static_cast<std::size_t>((r - 1) * 2 + c - 1)]; }
    bool operator==(const GUMat& o) const { return e == o.e; }
    bool operator!=(const GUMat& o) const { return !(*this == o); }
};

GUMat gu_mul(const GUMat& a, const GUMat& b);
/// Transpose composed with the Frobenius conjugate, entrywise.
GUMat gu_dagger(const GUMat& m);
GUMat gu_identity();

/// U^dagger U = I or -I.
bool is_gu29(const GUMat& m);

/**
 * Reduction modulo 3: the ring morphism determined by w_8 -> 1 - i and
 * 1/2 -> 2, applied entrywise. Defined for matrices over Q(w_8) whose
 * power-basis coordinates have only powers of 2 in the denominator
 * (all Clifford elements qualify); throws NotReducible otherwise.
 */
GUMat reduce_mod3(const Mat2& m);

struct Gu29Report {
    bool homomorphism;
    bool injective;
    bool all_in_gu;
    std::size_t image_size;
};

/// Check that reduction mod 3 maps the enumerated 192-element Clifford
/// group bijectively into {U : U^dagger U = +-I}: multiplicativity over
/// all element pairs, pairwise-distinct images, membership of every
/// image.
Gu29Report verify_gu29_isomorphism(const FiniteGroup& clifford);

}  // namespace prg
