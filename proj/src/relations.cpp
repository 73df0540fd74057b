#include "prg/relations.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace prg {

std::string answer_to_string(RelAnswer a) {
    switch (a) {
        case RelAnswer::Equal: return "equal";
        case RelAnswer::NotEqual: return "not-equal";
        case RelAnswer::Subgroup: return "subgroup";
        case RelAnswer::NotSubgroup: return "not-subgroup";
        case RelAnswer::Undetermined: return "undetermined";
    }
    return "?";
}

Mat2 evaluate_word(const Word& word, const Mat2& gen_v, const Mat2& gen_r) {
    Mat2 vd = dagger(gen_v);
    Mat2 rd = dagger(gen_r);
    Mat2 acc = Mat2::identity(gen_v.order());
    for (const WordLetter& l : word) {
        const Mat2& g = (l.gen == 'V') ? (l.dagger ? vd : gen_v) : (l.dagger ? rd : gen_r);
        acc = mul(acc, g);
    }
    return acc;
}

Word word_dagger(const Word& word) {
    Word out(word.rbegin(), word.rend());
    for (WordLetter& l : out) l.dagger = !l.dagger;
    return out;
}

std::string word_to_string(const Word& word) {
    std::string out;
    for (const WordLetter& l : word) {
        if (!out.empty()) out += ' ';
        out += l.gen;
        if (l.dagger) out += '\'';
    }
    return out;
}

Word word_from_string(const std::string& text) {
    Word out;
    std::istringstream in(text);
    std::string token;
    std::size_t pos = 0;
    while (in >> token) {
        pos = text.find(token, pos);
        if (token[0] != 'V' && token[0] != 'R')
            throw ParseError("word letter must be V or R", pos);
        bool dag = token.size() == 2 && token[1] == '\'';
        if (token.size() > 2 || (token.size() == 2 && !dag))
            throw ParseError("malformed word letter '" + token + "'", pos);
        out.push_back({token[0], dag});
        pos += token.size();
    }
    return out;
}

Word word_without_daggers(const Word& word, unsigned k) {
    // V^k = I and R^2 = I, so V' = V^(k-1) and R' = R.
    Word out;
    for (const WordLetter& l : word) {
        if (!l.dagger) {
            out.push_back(l);
        } else if (l.gen == 'R') {
            out.push_back({'R', false});
        } else {
            for (unsigned i = 0; i + 1 < k; ++i) out.push_back({'V', false});
        }
    }
    return out;
}

bool verify_witness(const Witness& w) {
    Mat2 gen_v = identity_root(w.over.k, w.over.a, w.ambient);
    Mat2 gen_r = translation(w.over.b, w.over.c, w.ambient);
    for (const WitnessEntry& e : w.entries) {
        if (evaluate_word(e.word, gen_v, gen_r) != e.target) return false;
    }
    return true;
}

namespace {

Word letter(char g, bool dag = false) { return Word{{g, dag}}; }

Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Word repeat(const Word& w, unsigned times) {
    Word out;
    out.reserve(w.size() * times);
    for (unsigned i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

// by . inner . by^dagger
Word conjugated(const Word& inner, const Word& by) {
    return concat({by, inner, word_dagger(by)});
}

// by^dagger . inner . by
Word conjugated_inv(const Word& inner, const Word& by) {
    return concat({word_dagger(by), inner, by});
}

Word plain_word(const std::string& letters) {
    Word out;
    for (char ch : letters) out.push_back({ch, false});
    return out;
}

std::string v_name(unsigned k, Axis a) {
    return "V(" + std::to_string(k) + "," + std::to_string(axis_value(a)) + ")";
}

std::string rho_name(Axis b, Axis c) {
    int x = axis_value(b), y = axis_value(c);
    if (x > y) std::swap(x, y);
    return "rho(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// Words over the generators of a smooth spec p with 4 | k for the whole
// constructor family of degree k: every identity root, every quarter
// turn, every translation. Built from the conjugation calculus:
// translation conjugation moves the root across the pair, V^(k/4) gives
// the quarter turns, and quarter-turn conjugation reaches the third axis.
struct SmoothWordTable {
    std::array<Word, 4> v_k;                 // by axis value
    std::array<Word, 4> v_4;                 // by axis value
    std::array<std::array<Word, 4>, 4> rho;  // by unordered axis pair
};

SmoothWordTable smooth_word_table(const GroupSpec& p) {
    if (classify(p) != GroupKind::Smooth || p.k % 4 != 0)
        throw Error("smooth_word_table needs a smooth spec of degree divisible by 4");
    auto [a, b] = smooth_axes(p);
    Axis c = third_axis(a, b);
    int av = axis_value(a), bv = axis_value(b), cv = axis_value(c);
    int s = levi_civita(a, b, c);
    unsigned m = p.k / 4;

    SmoothWordTable t;
    t.v_k[av] = letter('V');
    t.v_k[bv] = concat({letter('R'), letter('V'), letter('R')});
    t.v_4[av] = repeat(t.v_k[av], m);
    t.v_4[bv] = repeat(t.v_k[bv], m);
    t.v_k[cv] = (s == 1) ? conjugated(t.v_k[bv], t.v_4[av])
                         : conjugated_inv(t.v_k[bv], t.v_4[av]);
    t.v_4[cv] = repeat(t.v_k[cv], m);

    Word& rho_ab = t.rho[std::min(av, bv)][std::max(av, bv)];
    Word& rho_ac = t.rho[std::min(av, cv)][std::max(av, cv)];
    Word& rho_bc = t.rho[std::min(bv, cv)][std::max(bv, cv)];
    rho_ab = letter('R');
    rho_ac = (s == 1) ? conjugated(rho_ab, t.v_4[av]) : conjugated_inv(rho_ab, t.v_4[av]);
    rho_bc = (s == -1) ? conjugated(rho_ab, t.v_4[bv]) : conjugated_inv(rho_ab, t.v_4[bv]);
    return t;
}

WitnessEntry root_entry(unsigned k, Axis a, Word word, unsigned ambient) {
    return WitnessEntry{v_name(k, a), identity_root(k, a, ambient), std::move(word)};
}

WitnessEntry translation_entry(Axis b, Axis c, Word word, unsigned ambient) {
    return WitnessEntry{rho_name(b, c), translation(b, c, ambient), std::move(word)};
}

// Witness for Q = P: q's generators as words over p's, built by the case
// named in `rule`.
Witness equal_witness(const GroupSpec& p, const GroupSpec& q, const std::string& rule) {
    unsigned n = default_ambient(p);
    Witness w{p, q, n, {}};
    if (rule == "theorem1.case1") {
        // degree 1: every identity root is I and the translations agree
        w.entries.push_back(root_entry(1, q.a, {}, n));
        w.entries.push_back(
            translation_entry(q.b, q.c, q.b == q.c ? Word{} : letter('R'), n));
    } else if (rule == "theorem1.case2") {
        w.entries.push_back(root_entry(q.k, q.a, letter('V'), n));
        w.entries.push_back(translation_entry(q.b, q.c, {}, n));
    } else if (rule == "identical-spec") {
        w.entries.push_back(root_entry(q.k, q.a, letter('V'), n));
        w.entries.push_back(translation_entry(q.b, q.c, letter('R'), n));
    } else if (rule == "theorem1.case3") {
        Word v_word =
            (q.a == p.a) ? letter('V') : concat({letter('R'), letter('V'), letter('R')});
        w.entries.push_back(root_entry(q.k, q.a, std::move(v_word), n));
        w.entries.push_back(translation_entry(q.b, q.c, letter('R'), n));
    } else if (rule == "theorem1.case4") {
        SmoothWordTable t = smooth_word_table(p);
        auto [qa, qb] = smooth_axes(q);
        int x = axis_value(qa), y = axis_value(qb);
        w.entries.push_back(root_entry(q.k, q.a, t.v_k[axis_value(q.a)], n));
        w.entries.push_back(
            translation_entry(q.b, q.c, t.rho[std::min(x, y)][std::max(x, y)], n));
    } else {
        throw Error("equal_witness: unknown rule " + rule);
    }
    return w;
}

// Witness for small <= big: small's generators as words over big's. The
// composed form goes through the degree-4 generator family of big.
Witness subgroup_witness(const GroupSpec& small, const GroupSpec& big, bool composed) {
    unsigned n = default_ambient(big);  // small.k | big.k, so w_small is present
    unsigned quot = big.k / small.k;
    Witness w{big, small, n, {}};
    if (!composed) {
        w.entries.push_back(root_entry(small.k, small.a, repeat(letter('V'), quot), n));
        w.entries.push_back(translation_entry(small.b, small.c,
                                              small.b == small.c ? Word{} : letter('R'), n));
    } else {
        SmoothWordTable t = smooth_word_table(big);
        w.entries.push_back(
            root_entry(small.k, small.a, repeat(t.v_k[axis_value(small.a)], quot), n));
        auto [sa, sb] = smooth_axes(small);
        int x = axis_value(sa), y = axis_value(sb);
        w.entries.push_back(translation_entry(small.b, small.c,
                                              t.rho[std::min(x, y)][std::max(x, y)], n));
    }
    return w;
}

RelationVerdict positive(RelAnswer answer, std::string rule, Witness w) {
    return RelationVerdict{answer, std::move(rule), std::move(w), std::nullopt};
}

RelationVerdict negative(RelAnswer answer, std::string rule, NegativeEvidence e) {
    return RelationVerdict{answer, std::move(rule), std::nullopt, std::move(e)};
}

// Rotation count sending the translation pair of a smooth spec to {1,3}.
int rotation_to_13(const GroupSpec& p) {
    auto [a, b] = smooth_axes(p);
    int lo = std::min(axis_value(a), axis_value(b));
    int hi = std::max(axis_value(a), axis_value(b));
    if (lo == 1 && hi == 3) return 0;
    if (lo == 2 && hi == 3) return 1;
    return 2;  // {1,2}
}

FieldObstruction field_obstruction(const GroupSpec& p, const GroupSpec& q) {
    int r = rotation_to_13(p);
    GroupSpec pr = rotate_spec(p, r);
    GroupSpec qr = rotate_spec(q, r);
    unsigned n = default_ambient(p);
    auto [pa, pb] = smooth_axes(pr);
    auto [qa, qb] = smooth_axes(qr);
    Mat2 q_rho = translation(qa, qb, n);
    // The rotated Q pair contains axis 2, and the lower-left entry of its
    // translation involves i, which Q(w_k, sqrt 2) cannot hold when 4
    // does not divide k.
    return FieldObstruction{r,
                            pr,
                            qr,
                            p.k,
                            identity_root(p.k, pa, n),
                            translation(pa, pb, n),
                            q_rho,
                            2,
                            1,
                            q_rho.at(2, 1)};
}

}  // namespace

RelationVerdict decide_equal(const GroupSpec& p, const GroupSpec& q) {
    if (p.k != q.k) throw DegreeMismatch(p.k, q.k);
    const unsigned k = p.k;
    const GroupKind kp = classify(p);
    const GroupKind kq = classify(q);

    if (k == 1) {
        // rule theorem1.case1: only the translation matters at degree 1.
        if (same_translation(p, q))
            return positive(RelAnswer::Equal, "theorem1.case1",
                            equal_witness(p, q, "theorem1.case1"));
        unsigned n = default_ambient(p);
        return negative(RelAnswer::NotEqual, "theorem1.case1",
                        MissingElement{translation(q.b, q.c, n), "p",
                                       "q's translation differs from p's; both degree-1 "
                                       "groups are {I, rho}"});
    }

    if (kp == GroupKind::Cyclic && kq == GroupKind::Cyclic) {
        if (p.a == q.a)
            return positive(RelAnswer::Equal, "theorem1.case2",
                            equal_witness(p, q, "theorem1.case2"));
        unsigned n = default_ambient(p);
        return negative(RelAnswer::NotEqual, "theorem1.case2",
                        MissingElement{identity_root(k, q.a, n), "p",
                                       "q's generator points along a different axis and "
                                       "lies outside the cyclic group p"});
    }

    if (kp != kq) {
        // Mixed kinds of degree > 1 are never equal.
        if (kp == GroupKind::Cyclic || kq == GroupKind::Cyclic) {
            bool p_cyclic = kp == GroupKind::Cyclic;
            const GroupSpec& other = p_cyclic ? q : p;
            unsigned n = default_ambient(p);
            return negative(RelAnswer::NotEqual, "lemma5.missing-element",
                            MissingElement{translation(other.b, other.c, n),
                                           p_cyclic ? "p" : "q",
                                           "a non-identity translation never lies in a "
                                           "cyclic group"});
        }
        bool p_poly = kp == GroupKind::Polycyclic;
        const GroupSpec& poly = p_poly ? p : q;
        const GroupSpec& smooth = p_poly ? q : p;
        return negative(RelAnswer::NotEqual, "lemma5.order-gap",
                        OrderGap{predicted_order(p), predicted_order(q),
                                 "the polycyclic group " + spec_to_string(poly) + " has " +
                                     std::to_string(*predicted_order(poly)) +
                                     " elements, strictly fewer than the smooth group " +
                                     spec_to_string(smooth) + " of the same degree"});
    }

    if (kp == GroupKind::Polycyclic) {
        if (normalized(p) == normalized(q))
            return positive(RelAnswer::Equal, "identical-spec",
                            equal_witness(p, q, "identical-spec"));
        // Distinct polycyclic groups of one degree are never equal:
        // equality would force a smooth group of the same degree inside
        // p, and smooth groups are strictly larger.
        Axis partner = (p.b == q.a) ? p.c : p.b;
        GroupSpec majorizer = normalized({k, q.a, q.a, partner});
        auto smooth_order = predicted_order(majorizer);
        return negative(
            RelAnswer::NotEqual, "lemma4.order-gap",
            OrderGap{predicted_order(p), smooth_order,
                     "if p = q then the smooth group " + spec_to_string(majorizer) +
                         " (order " +
                         (smooth_order ? std::to_string(*smooth_order)
                                       : std::string("infinite")) +
                         ") would embed in p (order " +
                         std::to_string(*predicted_order(p)) + ")"});
    }

    // Both smooth.
    if (same_translation(p, q))
        return positive(RelAnswer::Equal, "theorem1.case3",
                        equal_witness(p, q, "theorem1.case3"));
    if (k % 4 == 0)
        return positive(RelAnswer::Equal, "theorem1.case4",
                        equal_witness(p, q, "theorem1.case4"));
    return negative(RelAnswer::NotEqual, "lemma8.field-obstruction",
                    field_obstruction(p, q));
}

RelationVerdict decide_subgroup(const GroupSpec& p, const GroupSpec& q) {
    const bool same_axes = (p.a == q.a) && same_translation(p, q);
    if (same_axes) {
        if (q.k % p.k == 0)
            return positive(RelAnswer::Subgroup, "theorem2.divides",
                            subgroup_witness(p, q, false));
        return negative(RelAnswer::NotSubgroup, "theorem2.divides",
                        DegreeObstruction{p.k, q.k});
    }
    // Different axes: decidable when q coincides with the same-degree
    // group over p's axes, which happens exactly for smooth degrees
    // divisible by 4.
    if (classify(p) == GroupKind::Smooth && classify(q) == GroupKind::Smooth &&
        q.k % 4 == 0) {
        if (q.k % p.k == 0)
            return positive(RelAnswer::Subgroup, "theorem1.case4+theorem2.divides",
                            subgroup_witness(p, q, true));
        return negative(RelAnswer::NotSubgroup, "theorem1.case4+theorem2.divides",
                        DegreeObstruction{p.k, q.k});
    }
    return RelationVerdict{RelAnswer::Undetermined, "outside-theorems", std::nullopt,
                           std::nullopt};
}

Witness witness_generators(const GroupSpec& p, const GroupSpec& q) {
    if (p.k == q.k) {
        RelationVerdict eq = decide_equal(p, q);
        if (eq.answer == RelAnswer::Equal) return std::move(*eq.witness);
    }
    RelationVerdict sub = decide_subgroup(q, p);  // q <= p puts q's generators in p
    if (sub.answer == RelAnswer::Subgroup) return std::move(*sub.witness);
    throw NoPositiveRelation("no equality or containment between " + spec_to_string(p) +
                             " and " + spec_to_string(q) +
                             " is established by the decision procedures");
}

RelationVerdict brute_force_relation(const GroupSpec& p, const GroupSpec& q,
                                     std::uint64_t cap) {
    unsigned n = lcm_u(default_ambient(p), default_ambient(q));
    EnumerateResult rp = enumerate(p, cap, n);
    EnumerateResult rq = enumerate(q, cap, n);
    if (std::holds_alternative<CapExceeded>(rp) || std::holds_alternative<CapExceeded>(rq))
        return RelationVerdict{RelAnswer::Undetermined, "brute-force.cap-exceeded",
                               std::nullopt, std::nullopt};
    const FiniteGroup& gp = std::get<FiniteGroup>(rp);
    const FiniteGroup& gq = std::get<FiniteGroup>(rq);

    auto contained = [](const FiniteGroup& inner, const FiniteGroup& outer) {
        for (const Mat2& m : inner.elements())
            if (!outer.index_of(m)) return false;
        return true;
    };

    // Generator words found by the enumeration itself serve as witness.
    auto membership_witness = [n](const FiniteGroup& host, const GroupSpec& expressed) {
        Witness w{host.spec(), expressed, n, {}};
        Mat2 v = identity_root(expressed.k, expressed.a, n);
        Mat2 r = translation(expressed.b, expressed.c, n);
        w.entries.push_back(
            WitnessEntry{v_name(expressed.k, expressed.a), v, plain_word(*member(host, v))});
        w.entries.push_back(WitnessEntry{rho_name(expressed.b, expressed.c), r,
                                         plain_word(*member(host, r))});
        return w;
    };

    bool p_in_q = contained(gp, gq);
    if (p_in_q && contained(gq, gp))
        return positive(RelAnswer::Equal, "brute-force.set-equality",
                        membership_witness(gp, q));
    if (p_in_q)
        return positive(RelAnswer::Subgroup, "brute-force.strict-containment",
                        membership_witness(gq, p));
    for (std::size_t i = 0; i < gp.size(); ++i) {
        if (!gq.index_of(gp.element(i)))
            return negative(RelAnswer::NotEqual, "brute-force.missing-element",
                            MissingElement{gp.element(i), "q",
                                           "element of p (word \"" + gp.word(i) +
                                               "\") not found in q's enumeration"});
    }
    throw Error("brute_force_relation: inconsistent containment state");
}

}  // namespace prg
