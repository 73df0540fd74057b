#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "prg/qmat.hpp"

namespace prg {

/**
 * The four indices naming a Pauli root group <V_{k,a}, rho_bc>: degree k,
 * root direction a, and the translation pair (b, c). The group is cyclic
 * when b = c (the translation is the identity), polycyclic when all three
 * indices are distinct, and smooth otherwise.
 */
struct GroupSpec {
    unsigned k;
    Axis a, b, c;

    bool operator==(const GroupSpec& o) const {
        return k == o.k && a == o.a && b == o.b && c == o.c;
    }
};

/// Translation pair sorted so that b <= c; the matrix rho_bc is symmetric.
GroupSpec normalized(const GroupSpec& spec);

/// "k:a:bc" literal form.
std::string spec_to_string(const GroupSpec& spec);

/// True iff the two specs name the same translation matrix (rho_bc is the
/// identity for any b = c, and rho_bc = rho_cb).
bool same_translation(const GroupSpec& p, const GroupSpec& q);

enum class GroupKind { Cyclic, Polycyclic, Smooth };

std::string kind_to_string(GroupKind kind);

GroupKind classify(const GroupSpec& spec);

/// Finite iff cyclic, polycyclic, or smooth of degree 1, 2, or 4.
bool is_finite(const GroupSpec& spec);

/// k for cyclic, 2k^2 for polycyclic, 2 / 16 / 192 for smooth degrees
/// 1 / 2 / 4; nullopt when the group is infinite.
std::optional<std::uint64_t> predicted_order(const GroupSpec& spec);

/// Human-readable isomorphism-class label; throws InfiniteGroup when the
/// group is infinite.
std::string structure_label(const GroupSpec& spec);

/// Ambient field used for a spec unless the caller overrides: lcm(8, k).
unsigned default_ambient(const GroupSpec& spec);

/// The twelve Pauli root groups of degree k (3 cyclic, 3 polycyclic,
/// 6 smooth), in a fixed order.
std::vector<GroupSpec> canonical_specs(unsigned k);

/// Apply r steps of the axis rotation 1 -> 2 -> 3 -> 1 to every index.
/// Conjugation by cyclic_conjugator realizes one step on the matrices.
GroupSpec rotate_spec(const GroupSpec& spec, int r);

/// For a smooth spec, the root axis together with the other axis of the
/// translation pair.
std::pair<Axis, Axis> smooth_axes(const GroupSpec& spec);

/**
 * A fully enumerated Pauli root group: the element set keyed by canonical
 * matrix form, in breadth-first discovery order, and one shortest
 * generator word per element ('V' = identity root, 'R' = translation).
 * Immutable after construction.
 */
class FiniteGroup {
  public:
    FiniteGroup(GroupSpec spec, unsigned ambient, std::vector<Mat2> elements,
                std::vector<std::string> words);

    const GroupSpec& spec() const { return spec_; }
    unsigned ambient() const { return ambient_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Mat2>& elements() const { return elements_; }
    const Mat2& element(std::size_t i) const { return elements_[i]; }
    const std::string& word(std::size_t i) const { return words_[i]; }
    const std::vector<std::string>& words() const { return words_; }

    const Mat2& gen_root() const { return gen_root_; }
    const Mat2& gen_translation() const { return gen_translation_; }

    /// Index of a matrix already expressed in this group's ambient field.
    std::optional<std::size_t> index_of(const Mat2& m) const;

  private:
    GroupSpec spec_;
    unsigned ambient_;
    std::vector<Mat2> elements_;
    std::vector<std::string> words_;
    std::unordered_map<std::string, std::size_t> index_;
    Mat2 gen_root_;
    Mat2 gen_translation_;
};

/// The expected outcome when a closure overflows its cap; infinite groups
/// are ordinary inputs, so this is a result, not an error.
struct CapExceeded {
    std::uint64_t cap;
};

using EnumerateResult = std::variant<FiniteGroup, CapExceeded>;

/// Breadth-first closure of {V_{k,a}, rho_bc} under right multiplication,
/// in Q(w_ambient) (default lcm(8, k); an override must be a multiple of
/// it). Deterministic element order; shortest word per element.
EnumerateResult enumerate(const GroupSpec& spec, std::uint64_t cap, unsigned ambient = 0);

/// Convenience for specs known to be finite; throws when the cap is hit.
FiniteGroup enumerate_finite(const GroupSpec& spec, unsigned ambient = 0);

/// Membership with a realizing generator word. The matrix must embed into
/// the group's ambient field.
std::optional<std::string> member(const FiniteGroup& g, const Mat2& m);

/// Exponents of the normal form V^s (R V R)^t R^u of a polycyclic group
/// element.
struct PolycyclicNF {
    unsigned s, t, u;
    bool operator==(const PolycyclicNF& o) const { return s == o.s && t == o.t && u == o.u; }
};

/// The unique normal form of M over the spec's own generators. Requires a
/// polycyclic spec; throws NotAMember when M is not in the group.
PolycyclicNF polycyclic_nf(const GroupSpec& spec, const Mat2& m);

/// Evaluate V^s (R V R)^t R^u exactly (the inverse of polycyclic_nf).
Mat2 polycyclic_nf_eval(const GroupSpec& spec, const PolycyclicNF& nf, unsigned ambient = 0);

/// All scalars lambda with lambda*I in the group, as exact field elements
/// in enumeration order.
std::vector<CycloElement> scalar_subgroup(const FiniteGroup& g);

/**
 * Machine-checkable evidence that a smooth group of degree k not in
 * {1, 2, 4} is infinite: the coordinates of Tr(V_{k,a} rho_ab)^2 over the
 * power basis of Q(w_k) contain a non-integer, so the trace square is not
 * an algebraic integer and V rho has infinite order.
 */
struct InfinitenessCertificate {
    GroupSpec spec;
    CycloElement trace_squared;          // element of Q(w_k)
    std::vector<Rational> coordinates;   // its power-basis coordinates
    std::size_t witness_index;           // a non-integral coordinate
};

/// Throws NotApplicable for cyclic/polycyclic specs and for smooth specs
/// whose trace-square coordinates all turn out integral (degrees 1, 2, 4).
InfinitenessCertificate infiniteness_certificate(const GroupSpec& spec);

}  // namespace prg
