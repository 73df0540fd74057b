#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prg/groups.hpp"

namespace prg {

enum class RelAnswer { Equal, NotEqual, Subgroup, NotSubgroup, Undetermined };

std::string answer_to_string(RelAnswer a);

/// One letter of a generator word: 'V' (identity root) or 'R'
/// (translation), optionally daggered.
struct WordLetter {
    char gen;     // 'V' or 'R'
    bool dagger;  // apply the conjugate transpose of the generator
    bool operator==(const WordLetter& o) const { return gen == o.gen && dagger == o.dagger; }
};

using Word = std::vector<WordLetter>;

/// Left-to-right product of the letters over the given generator pair.
Mat2 evaluate_word(const Word& word, const Mat2& gen_v, const Mat2& gen_r);

/// Formal inverse: reversed letters with flipped daggers.
Word word_dagger(const Word& word);

/// "R V R", "V' R V", "" (identity). Round-trips with word_from_string.
std::string word_to_string(const Word& word);
Word word_from_string(const std::string& text);

/// Rewrite every daggered V as V^(k-1) and daggered R as R, using
/// V^k = I and R^2 = I; the result evaluates to the same matrix.
Word word_without_daggers(const Word& word, unsigned k);

/// One expressed generator: a word over the source group's generators
/// whose exact evaluation equals `target`.
struct WitnessEntry {
    std::string target_name;  // e.g. "V(8,3)" or "rho(1,3)"
    Mat2 target;
    Word word;
};

/**
 * Constructive evidence for a positive relation: every generator of
 * `expressed` written as a word over the generators of `over`, evaluated
 * in Q(w_ambient). Witnesses are verified by exact evaluation, never
 * asserted.
 */
struct Witness {
    GroupSpec over;       // the source group supplying the generators
    GroupSpec expressed;  // the group whose generators are being written
    unsigned ambient;
    std::vector<WitnessEntry> entries;
};

/// Re-check a witness by evaluating every word exactly.
bool verify_witness(const Witness& w);

/// |P| and |Q| differ (nullopt order = infinite). For two polycyclic
/// groups the gap is between |P| and the smooth majorizer that equality
/// would force inside P; the note says which groups the numbers refer to.
struct OrderGap {
    std::optional<std::uint64_t> order_p;
    std::optional<std::uint64_t> order_q;
    std::string note;
};

/// A matrix entry of one group's translation lies outside Q(w_k, sqrt 2)
/// while every entry of the other group's generators lies inside. Both
/// specs are first rotated (r applications of the axis cycle 1->2->3->1,
/// realized by conjugation) so that the inside group uses the {1,3} pair.
struct FieldObstruction {
    int rotation;
    GroupSpec p_rotated;
    GroupSpec q_rotated;
    unsigned subfield_k;
    Mat2 p_root;         // generators of the rotated P, all entries inside
    Mat2 p_translation;
    Mat2 q_translation;  // rotated Q translation holding the bad entry
    int offending_row, offending_col;
    CycloElement offending_entry;
};

/// A concrete matrix in one group but not the other, found by
/// enumeration.
struct MissingElement {
    Mat2 element;
    std::string absent_from;  // "p" or "q"
    std::string description;
};

/// k does not divide l.
struct DegreeObstruction {
    unsigned k, l;
};

using NegativeEvidence =
    std::variant<OrderGap, FieldObstruction, MissingElement, DegreeObstruction>;

/**
 * Outcome of a relation decision: the answer, the stable rule tag of the
 * case that decided it (e.g. "theorem1.case4", "theorem2.divides"), and
 * the evidence — a Witness for positive answers, NegativeEvidence for
 * negative ones, neither for Undetermined.
 */
struct RelationVerdict {
    RelAnswer answer;
    std::string rule;
    std::optional<Witness> witness;
    std::optional<NegativeEvidence> evidence;
};

/// Equality of two Pauli root groups of the same degree. Throws
/// DegreeMismatch when the degrees differ.
RelationVerdict decide_equal(const GroupSpec& p, const GroupSpec& q);

/// Containment p <= q. Decided directly when both specs use the same root
/// direction and translation pair (Subgroup iff p.k | q.k); when the axes
/// differ but q is smooth of degree divisible by 4 and p is smooth, the
/// verdict composes the degree-4 equality case with the divisibility
/// criterion (rule tag "theorem1.case4+theorem2.divides"). Anything else
/// is Undetermined.
RelationVerdict decide_subgroup(const GroupSpec& p, const GroupSpec& q);

/// Words over p's generators for every generator of q. Defined whenever
/// q = p as groups, or q <= p; throws NoPositiveRelation otherwise.
Witness witness_generators(const GroupSpec& p, const GroupSpec& q);

/// Independent oracle: enumerate both groups in a common ambient field
/// and compare element sets. Equal / Subgroup (strict p < q) / NotEqual
/// with a missing element; Undetermined when either closure exceeds cap.
RelationVerdict brute_force_relation(const GroupSpec& p, const GroupSpec& q,
                                     std::uint64_t cap);

}  // namespace prg
