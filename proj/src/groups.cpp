#include "prg/groups.hpp"

#include <algorithm>
#include <deque>

namespace prg {

GroupSpec normalized(const GroupSpec& spec) {
    GroupSpec s = spec;
    if (axis_value(s.b) > axis_value(s.c)) std::swap(s.b, s.c);
    return s;
}

std::string spec_to_string(const GroupSpec& spec) {
    return std::to_string(spec.k) + ":" + std::to_string(axis_value(spec.a)) + ":" +
           std::to_string(axis_value(spec.b)) + std::to_string(axis_value(spec.c));
}

bool same_translation(const GroupSpec& p, const GroupSpec& q) {
    bool p_id = p.b == p.c;
    bool q_id = q.b == q.c;
    if (p_id || q_id) return p_id && q_id;
    GroupSpec pn = normalized(p), qn = normalized(q);
    return pn.b == qn.b && pn.c == qn.c;
}

GroupKind classify(const GroupSpec& spec) {
    if (spec.b == spec.c) return GroupKind::Cyclic;
    if (levi_civita(spec.a, spec.b, spec.c) != 0) return GroupKind::Polycyclic;
    return GroupKind::Smooth;
}

std::string kind_to_string(GroupKind kind) {
    switch (kind) {
        case GroupKind::Cyclic: return "cyclic";
        case GroupKind::Polycyclic: return "polycyclic";
        case GroupKind::Smooth: return "smooth";
    }
    return "?";
}

bool is_finite(const GroupSpec& spec) {
    switch (classify(spec)) {
        case GroupKind::Cyclic:
        case GroupKind::Polycyclic:
            return true;
        case GroupKind::Smooth:
            return spec.k == 1 || spec.k == 2 || spec.k == 4;
    }
    return false;
}

std::optional<std::uint64_t> predicted_order(const GroupSpec& spec) {
    switch (classify(spec)) {
        case GroupKind::Cyclic:
            return spec.k;
        case GroupKind::Polycyclic:
            return 2ull * spec.k * spec.k;
        case GroupKind::Smooth:
            if (spec.k == 1) return 2;
            if (spec.k == 2) return 16;
            if (spec.k == 4) return 192;
            return std::nullopt;
    }
    return std::nullopt;
}

std::string structure_label(const GroupSpec& spec) {
    if (!is_finite(spec))
        throw InfiniteGroup("no structure label: the group " + spec_to_string(spec) +
                            " is infinite");
    switch (classify(spec)) {
        case GroupKind::Cyclic:
            return "C_" + std::to_string(spec.k);
        case GroupKind::Polycyclic:
            return "C_" + std::to_string(spec.k) + " ≀ C_2 = S(" +
                   std::to_string(spec.k) + ",2)";
        case GroupKind::Smooth:
            if (spec.k == 1) return "C_2";
            if (spec.k == 2) return "D_8 (16 elements)";
            return "2O ⋊ C_4";
    }
    return "?";
}

unsigned default_ambient(const GroupSpec& spec) { return default_ambient_for_degree(spec.k); }

std::vector<GroupSpec> canonical_specs(unsigned k) {
    std::vector<GroupSpec> out;
    out.reserve(12);
    for (int a = 1; a <= 3; ++a) out.push_back({k, axis(a), axis(a), axis(a)});
    for (int a = 1; a <= 3; ++a) {
        Axis b = axis(a % 3 + 1);
        Axis c = third_axis(axis(a), b);
        out.push_back(normalized({k, axis(a), b, c}));
    }
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            if (a == b) continue;
            out.push_back(normalized({k, axis(a), axis(a), axis(b)}));
        }
    return out;
}

GroupSpec rotate_spec(const GroupSpec& spec, int r) {
    auto rot = [&](Axis x) { return axis((axis_value(x) - 1 + r) % 3 + 1); };
    return {spec.k, rot(spec.a), rot(spec.b), rot(spec.c)};
}

std::pair<Axis, Axis> smooth_axes(const GroupSpec& spec) {
    if (classify(spec) != GroupKind::Smooth)
        throw Error("smooth_axes: spec " + spec_to_string(spec) + " is not smooth");
    Axis other = (spec.b == spec.a) ? spec.c : spec.b;
    return {spec.a, other};
}

FiniteGroup::FiniteGroup(GroupSpec spec, unsigned ambient, std::vector<Mat2> elements,
                         std::vector<std::string> words)
    : spec_(spec),
      ambient_(ambient),
      elements_(std::move(elements)),
      words_(std::move(words)),
      gen_root_(identity_root(spec.k, spec.a, ambient)),
      gen_translation_(translation(spec.b, spec.c, ambient)) {
    if (elements_.size() != words_.size())
        throw Error("FiniteGroup: elements and words must align");
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].key(), i);
}

std::optional<std::size_t> FiniteGroup::index_of(const Mat2& m) const {
    auto it = index_.find(m.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

EnumerateResult enumerate(const GroupSpec& spec, std::uint64_t cap, unsigned ambient) {
    if (cap == 0) throw Error("enumerate: cap must be positive");
    unsigned n = ambient == 0 ? default_ambient(spec) : ambient;
    if (n % default_ambient(spec) != 0)
        throw UnsupportedField("enumerate: ambient " + std::to_string(n) +
                               " must be a multiple of lcm(8, k) = " +
                               std::to_string(default_ambient(spec)));
    const Mat2 gen_v = identity_root(spec.k, spec.a, n);
    const Mat2 gen_r = translation(spec.b, spec.c, n);
    const std::pair<const Mat2*, char> gens[2] = {{&gen_v, 'V'}, {&gen_r, 'R'}};

    std::vector<Mat2> elements;
    std::vector<std::string> words;
    std::unordered_map<std::string, std::size_t> seen;
    elements.push_back(Mat2::identity(n));
    words.emplace_back("");
    seen.emplace(elements[0].key(), 0);

    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& [gen, letter] : gens) {
            Mat2 next = mul(elements[head], *gen);
            std::string key = next.key();
            if (seen.count(key)) continue;
            if (elements.size() + 1 > cap) return CapExceeded{cap};
            seen.emplace(std::move(key), elements.size());
            words.push_back(words[head] + letter);
            elements.push_back(std::move(next));
        }
    }
    return FiniteGroup(spec, n, std::move(elements), std::move(words));
}

FiniteGroup enumerate_finite(const GroupSpec& spec, unsigned ambient) {
    auto predicted = predicted_order(spec);
    std::uint64_t cap = predicted ? *predicted : 4096;
    EnumerateResult result = enumerate(spec, cap, ambient);
    if (auto* g = std::get_if<FiniteGroup>(&result)) return std::move(*g);
    throw Error("enumerate_finite: closure of " + spec_to_string(spec) +
                " exceeded the predicted order");
}

std::optional<std::string> member(const FiniteGroup& g, const Mat2& m) {
    Mat2 target = m.order() == g.ambient() ? m : embed(m, g.ambient());
    auto idx = g.index_of(target);
    if (!idx) return std::nullopt;
    return g.word(*idx);
}

namespace {

// Rotation count bringing the root axis of a polycyclic spec to 3.
int frame_rotation(Axis root) { return (3 - axis_value(root)) % 3; }

// Discrete log of x as a power of w_k inside Q(w_ambient); nullopt when x
// is not such a root of unity.
std::optional<unsigned> dlog_root(const CycloElement& x, unsigned k) {
    for (unsigned e = 0; e < k; ++e) {
        if (x == embed(root_of_unity(k, static_cast<long>(e)), x.order())) return e;
    }
    return std::nullopt;
}

}  // namespace

PolycyclicNF polycyclic_nf(const GroupSpec& spec, const Mat2& m) {
    if (classify(spec) != GroupKind::Polycyclic)
        throw Error("polycyclic_nf: spec " + spec_to_string(spec) + " is not polycyclic");
    unsigned n = lcm_u(default_ambient(spec), m.order());
    Mat2 target = embed(m, n);

    // Conjugate into the diagonal frame (root axis 3, translation rho_12).
    int r = frame_rotation(spec.a);
    if (r != 0) {
        Mat2 c = cyclic_conjugator(axis(1), axis(2), n);
        for (int i = 0; i < r; ++i) target = mul(mul(c, target), dagger(c));
    }

    unsigned u = 0;
    if (!target.at(1, 2).is_zero() || !target.at(2, 1).is_zero()) {
        u = 1;
        target = mul(target, translation(axis(1), axis(2), n));
    }
    if (!target.at(1, 2).is_zero() || !target.at(2, 1).is_zero())
        throw NotAMember("polycyclic_nf: matrix is not an element of " + spec_to_string(spec));

    // In the diagonal frame V^s (R V R)^t = diag(w^t, w^s).
    auto t = dlog_root(target.at(1, 1), spec.k);
    auto s = dlog_root(target.at(2, 2), spec.k);
    if (!t || !s)
        throw NotAMember("polycyclic_nf: diagonal entries are not powers of the degree-" +
                         std::to_string(spec.k) + " root of unity");
    return PolycyclicNF{*s, *t, u};
}

Mat2 polycyclic_nf_eval(const GroupSpec& spec, const PolycyclicNF& nf, unsigned ambient) {
    unsigned n = ambient == 0 ? default_ambient(spec) : ambient;
    Mat2 v = identity_root(spec.k, spec.a, n);
    Mat2 rho = translation(spec.b, spec.c, n);
    Mat2 result = pow(v, nf.s);
    result = mul(result, pow(mul(mul(rho, v), rho), nf.t));
    if (nf.u) result = mul(result, rho);
    return result;
}

std::vector<CycloElement> scalar_subgroup(const FiniteGroup& g) {
    std::vector<CycloElement> out;
    for (const Mat2& m : g.elements()) {
        if (m.at(1, 2).is_zero() && m.at(2, 1).is_zero() && m.at(1, 1) == m.at(2, 2))
            out.push_back(m.at(1, 1));
    }
    return out;
}

InfinitenessCertificate infiniteness_certificate(const GroupSpec& spec) {
    if (classify(spec) != GroupKind::Smooth)
        throw NotApplicable("infiniteness certificate: " + spec_to_string(spec) + " is " +
                            kind_to_string(classify(spec)) + ", hence finite");
    unsigned n = default_ambient(spec);
    Mat2 u = mul(identity_root(spec.k, spec.a, n), translation(spec.b, spec.c, n));
    CycloElement tr = trace(u);
    CycloElement tr2 = mul(tr, tr);
    auto down = descend(tr2, spec.k);
    if (!down)
        throw Error("infiniteness certificate: trace square unexpectedly left Q(w_k)");
    const std::vector<Rational>& coords = down->coeffs();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!is_integer(coords[i]))
            return InfinitenessCertificate{spec, *down, coords, i};
    }
    throw NotApplicable("infiniteness certificate: all trace-square coordinates of " +
                        spec_to_string(spec) +
                        " are integers, so no obstruction exists (the group is finite)");
}

}  // namespace prg
