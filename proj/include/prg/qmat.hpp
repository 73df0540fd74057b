#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "prg/cyclotomic.hpp"

namespace prg {

/// One of the three Bloch-sphere directions.
enum class Axis : int { A1 = 1, A2 = 2, A3 = 3 };

/// Validating constructor for Axis.
Axis axis(int value);
inline int axis_value(Axis a) { return static_cast<int>(a); }

/// The axis completing {a, b} to {1, 2, 3}; requires a != b.
Axis third_axis(Axis a, Axis b);

/// (a - b)(b - c)(c - a) / 2: +1 or -1 on permutations of (1,2,3), else 0.
int levi_civita(Axis a, Axis b, Axis c);

/// An element of Sigma+- = {sigma_a, -sigma_a}.
struct SignedPauli {
    Axis axis;
    int sign;  // +1 or -1
    bool operator==(const SignedPauli& o) const { return axis == o.axis && sign == o.sign; }
};

/// Dense index 0..5 for Sigma+-: sigma_1..sigma_3, then their negatives.
std::size_t sigma_index(const SignedPauli& s);
SignedPauli sigma_from_index(std::size_t i);
std::string sigma_name(const SignedPauli& s);  // "+1", "-3", ...

/**
 * A 2x2 matrix with entries in a common cyclotomic field Q(w_order).
 * Immutable; compared by exact entry equality (no phase quotient).
 */
class Mat2 {
  public:
    Mat2(CycloElement e11, CycloElement e12, CycloElement e21, CycloElement e22);

    static Mat2 identity(unsigned order);
    static Mat2 zero(unsigned order);

    unsigned order() const { return order_; }
    /// Entry at row r, column c (1-based, as in the usual matrix notation).
    const CycloElement& at(int r, int c) const;

    /// Canonical string key: flattened entry keys. Collision-free within a
    /// fixed ambient field.
    std::string key() const;

    bool operator==(const Mat2& o) const;
    bool operator!=(const Mat2& o) const { return !(*this == o); }

  private:
    unsigned order_;
    std::array<CycloElement, 4> e_;
};

Mat2 mul(const Mat2& a, const Mat2& b);
Mat2 add(const Mat2& a, const Mat2& b);
/// Conjugate transpose.
Mat2 dagger(const Mat2& m);
CycloElement det(const Mat2& m);
CycloElement trace(const Mat2& m);
Mat2 scalar_mul(const CycloElement& c, const Mat2& m);
/// m^e by repeated squaring, e >= 0.
Mat2 pow(const Mat2& m, std::uint64_t e);
bool equals(const Mat2& a, const Mat2& b);
/// Entrywise embedding into Q(w_m); requires order | m.
Mat2 embed(const Mat2& m, unsigned ambient);
/// True iff m^dagger m = I exactly.
bool is_unitary(const Mat2& m);

inline Mat2 operator*(const Mat2& a, const Mat2& b) { return mul(a, b); }

/// sigma_a in Q(w_ambient); ambient must be a multiple of 4.
Mat2 pauli(Axis a, unsigned ambient);

/// The k-th identity root V_{k,a} = ((1+w_k) I + (1-w_k) sigma_a) / 2.
/// Unitary with determinant w_k and V^k = I. Ambient must be a multiple
/// of lcm(k, 4).
Mat2 identity_root(unsigned k, Axis a, unsigned ambient);

/// The translation matrix rho_ab = (sigma_a + sigma_b) / sqrt(2) for
/// a != b, and rho_aa = I. Self-inverse and symmetric in (a, b).
/// Ambient must be a multiple of 8.
Mat2 translation(Axis a, Axis b, unsigned ambient);

/// A permutation of the six signed Pauli matrices; image[i] is the index
/// of the image of sigma_from_index(i).
struct SigmaPerm {
    std::array<std::uint8_t, 6> image;
    bool operator==(const SigmaPerm& o) const { return image == o.image; }
};

SigmaPerm identity_perm();
/// Composition: first f, then g.
SigmaPerm compose(const SigmaPerm& g, const SigmaPerm& f);
std::string perm_to_string(const SigmaPerm& p);

/// The permutation of Sigma+- induced by s -> U s U^dagger, computed
/// exactly. Throws NotInSigmaPM when some conjugate leaves Sigma+-,
/// i.e. U does not normalize the signed Pauli set.
SigmaPerm signed_pauli_action(const Mat2& u);

/// C = rho_ab V_{4,a}^dagger; conjugation U -> C U C^(-1) cyclically
/// permutes sigma_a -> sigma_b -> sigma_c -> sigma_a, and likewise the
/// V_{k,.} and rho_".." families. Requires eps_abc = 1 for the
/// completing axis c.
Mat2 cyclic_conjugator(Axis a, Axis b, unsigned ambient);

/// Smallest field holding every generator entry for degree k: lcm(8, k).
unsigned default_ambient_for_degree(unsigned k);

}  // namespace prg
