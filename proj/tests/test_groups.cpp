#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "prg/groups.hpp"

using namespace prg;

namespace {

GroupSpec spec(unsigned k, int a, int b, int c) { return {k, axis(a), axis(b), axis(c)}; }

// Independent closure oracle with a caller-chosen generator order.
std::set<std::string> closure_keys(const std::vector<Mat2>& gens, std::size_t cap) {
    std::vector<Mat2> frontier = {Mat2::identity(gens[0].order())};
    std::set<std::string> seen = {frontier[0].key()};
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const Mat2& m : frontier)
            for (const Mat2& g : gens) {
                Mat2 p = mul(m, g);
                if (seen.insert(p.key()).second) {
                    REQUIRE(seen.size() <= cap);
                    next.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

TEST_CASE("classification trichotomy") {
    CHECK(classify(spec(8, 3, 3, 3)) == GroupKind::Cyclic);
    CHECK(classify(spec(8, 3, 1, 2)) == GroupKind::Polycyclic);
    CHECK(classify(spec(8, 3, 1, 3)) == GroupKind::Smooth);  // <T, H>
    CHECK(classify(spec(8, 1, 1, 2)) == GroupKind::Smooth);
    CHECK(classify(spec(1, 1, 2, 3)) == GroupKind::Polycyclic);

    // a smooth spec always exposes its <V_{k,a}, rho_ab> form
    auto [root, other] = smooth_axes(spec(8, 3, 1, 3));
    CHECK(axis_value(root) == 3);
    CHECK(axis_value(other) == 1);
}

TEST_CASE("finiteness and predicted orders") {
    CHECK(is_finite(spec(4, 1, 1, 2)));
    CHECK(!is_finite(spec(8, 1, 1, 2)));
    CHECK(is_finite(spec(100, 3, 1, 2)));

    CHECK(predicted_order(spec(3, 3, 1, 2)) == 18);
    CHECK(predicted_order(spec(2, 1, 1, 3)) == 16);
    CHECK(predicted_order(spec(4, 1, 1, 3)) == 192);
    CHECK(predicted_order(spec(5, 2, 2, 2)) == 5);
    CHECK(!predicted_order(spec(8, 3, 1, 3)).has_value());
}

TEST_CASE("structure labels") {
    CHECK(structure_label(spec(6, 3, 1, 2)) == "C_6 ≀ C_2 = S(6,2)");
    CHECK(structure_label(spec(2, 1, 1, 3)) == "D_8 (16 elements)");
    CHECK(structure_label(spec(5, 2, 2, 2)) == "C_5");
    CHECK(structure_label(spec(1, 1, 1, 2)) == "C_2");
    CHECK(structure_label(spec(4, 3, 1, 3)) == "2O ⋊ C_4");
    CHECK_THROWS_AS(structure_label(spec(8, 3, 1, 3)), InfiniteGroup);
}

TEST_CASE("the twelve canonical specs") {
    auto specs = canonical_specs(5);
    REQUIRE(specs.size() == 12);
    int cyclic = 0, polycyclic = 0, smooth = 0;
    std::set<std::string> distinct;
    for (const GroupSpec& s : specs) {
        distinct.insert(spec_to_string(s));
        switch (classify(s)) {
            case GroupKind::Cyclic: ++cyclic; break;
            case GroupKind::Polycyclic: ++polycyclic; break;
            case GroupKind::Smooth: ++smooth; break;
        }
    }
    CHECK(cyclic == 3);
    CHECK(polycyclic == 3);
    CHECK(smooth == 6);
    CHECK(distinct.size() == 12);
}

TEST_CASE("enumerate small groups") {
    // the Clifford group
    FiniteGroup clifford = enumerate_finite(spec(4, 3, 1, 3));
    CHECK(clifford.size() == 192);

    auto poly5 = enumerate(spec(5, 3, 1, 2), 1000);
    REQUIRE(std::holds_alternative<FiniteGroup>(poly5));
    CHECK(std::get<FiniteGroup>(poly5).size() == 50);

    // degenerate degree 1
    auto cyc1 = enumerate(spec(1, 2, 2, 2), 10);
    CHECK(std::get<FiniteGroup>(cyc1).size() == 1);
    auto smooth1 = enumerate(spec(1, 1, 1, 3), 10);
    CHECK(std::get<FiniteGroup>(smooth1).size() == 2);

    // infinite: the Clifford+T group exceeds any cap
    auto ct = enumerate(spec(8, 3, 1, 3), 5000);
    REQUIRE(std::holds_alternative<CapExceeded>(ct));
    CHECK(std::get<CapExceeded>(ct).cap == 5000);
}

TEST_CASE("enumerated sizes match predictions for every finite spec, k <= 8") {
    for (unsigned k = 1; k <= 8; ++k) {
        for (const GroupSpec& s : canonical_specs(k)) {
            if (!is_finite(s)) continue;
            FiniteGroup g = enumerate_finite(s);
            CHECK(g.size() == *predicted_order(s));
        }
    }
}

TEST_CASE("closure is generator-order independent") {
    for (const GroupSpec& s : {spec(4, 3, 1, 3), spec(3, 3, 1, 2), spec(2, 2, 2, 1)}) {
        FiniteGroup g = enumerate_finite(s);
        std::set<std::string> via_enumerate;
        for (const Mat2& m : g.elements()) via_enumerate.insert(m.key());
        auto swapped = closure_keys({g.gen_translation(), g.gen_root()}, g.size());
        CHECK(via_enumerate == swapped);
    }
}

TEST_CASE("group closure sanity: daggers inside, words evaluate back") {
    for (const GroupSpec& s : {spec(4, 3, 1, 3), spec(3, 1, 2, 3), spec(6, 2, 2, 2)}) {
        FiniteGroup g = enumerate_finite(s);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const Mat2& m = g.element(i);
            CHECK(g.index_of(dagger(m)).has_value());
            Mat2 acc = Mat2::identity(g.ambient());
            for (char letter : g.word(i))
                acc = mul(acc, letter == 'V' ? g.gen_root() : g.gen_translation());
            CHECK(acc == m);
        }
    }
}

TEST_CASE("membership with witness words") {
    FiniteGroup clifford = enumerate_finite(spec(4, 3, 1, 3));
    unsigned n = clifford.ambient();

    auto id_word = member(clifford, Mat2::identity(n));
    REQUIRE(id_word.has_value());
    CHECK(id_word->empty());

    // w_8 I is a Clifford element (the scalar kernel)
    Mat2 scalar = scalar_mul(root_of_unity(8, 1), Mat2::identity(n));
    CHECK(member(clifford, scalar).has_value());

    // the T gate is not
    CHECK(!member(clifford, identity_root(8, axis(3), n)).has_value());

    CHECK_THROWS_AS(member(clifford, Mat2::identity(24)), NotASubfield);
}

TEST_CASE("polycyclic normal form basics") {
    GroupSpec s = spec(4, 3, 1, 2);
    unsigned n = default_ambient(s);

    CHECK(polycyclic_nf(s, Mat2::identity(n)) == PolycyclicNF{0, 0, 0});
    CHECK(polycyclic_nf(s, translation(axis(1), axis(2), n)) == PolycyclicNF{0, 0, 1});

    // diag(w_4, w_4^3) -> (s, t, u) = (3, 1, 0), confirmed by brute force
    Mat2 target(embed(root_of_unity(4, 1), n), CycloElement::zero(n),
                CycloElement::zero(n), embed(root_of_unity(4, 3), n));
    PolycyclicNF found = polycyclic_nf(s, target);
    CHECK(found == PolycyclicNF{3, 1, 0});
    int matches = 0;
    for (unsigned ss = 0; ss < 4; ++ss)
        for (unsigned tt = 0; tt < 4; ++tt)
            for (unsigned uu = 0; uu < 2; ++uu) {
                if (polycyclic_nf_eval(s, {ss, tt, uu}) == target) {
                    ++matches;
                    CHECK(PolycyclicNF{ss, tt, uu} == found);
                }
            }
    CHECK(matches == 1);

    CHECK_THROWS_AS(polycyclic_nf(s, identity_root(8, axis(3), n)), NotAMember);
    CHECK_THROWS_AS(polycyclic_nf(spec(4, 3, 1, 3), Mat2::identity(8)), Error);
}

TEST_CASE("normal form is a bijection onto the group, k <= 6, every root axis") {
    for (unsigned k = 1; k <= 6; ++k) {
        for (int a = 1; a <= 3; ++a) {
            Axis b = axis(a % 3 + 1);
            GroupSpec s = normalized({k, axis(a), b, third_axis(axis(a), b)});
            REQUIRE(classify(s) == GroupKind::Polycyclic);
            FiniteGroup g = enumerate_finite(s);
            REQUIRE(g.size() == 2ull * k * k);

            std::set<std::string> images;
            for (unsigned ss = 0; ss < k; ++ss)
                for (unsigned tt = 0; tt < k; ++tt)
                    for (unsigned uu = 0; uu < 2; ++uu) {
                        Mat2 m = polycyclic_nf_eval(s, {ss, tt, uu}, g.ambient());
                        CHECK(g.index_of(m).has_value());
                        images.insert(m.key());
                        CHECK(polycyclic_nf(s, m) == PolycyclicNF{ss, tt, uu});
                    }
            CHECK(images.size() == g.size());
        }
    }
}

TEST_CASE("diagonal subgroup shape for root axis 3") {
    for (unsigned k : {2u, 3u, 4u, 6u}) {
        GroupSpec s = spec(k, 3, 1, 2);
        FiniteGroup g = enumerate_finite(s);
        for (const Mat2& m : g.elements()) {
            PolycyclicNF nf = polycyclic_nf(s, m);
            if (nf.u == 0) {
                CHECK(m.at(1, 2).is_zero());
                CHECK(m.at(2, 1).is_zero());
                // and the diagonal is (w^t, w^s)
                CHECK(m.at(1, 1) == embed(root_of_unity(k, nf.t), g.ambient()));
                CHECK(m.at(2, 2) == embed(root_of_unity(k, nf.s), g.ambient()));
            }
        }
    }
}

TEST_CASE("scalar subgroups") {
    FiniteGroup clifford = enumerate_finite(spec(4, 3, 1, 3));
    auto scalars = scalar_subgroup(clifford);
    REQUIRE(scalars.size() == 8);
    std::set<std::string> keys;
    for (const CycloElement& c : scalars) keys.insert(c.key());
    for (long i = 0; i < 8; ++i)
        CHECK(keys.count(root_of_unity(8, i).key()) == 1);

    // (rho_13 V_{4,3})^3 = w_8 I exactly
    unsigned n = clifford.ambient();
    Mat2 m = pow(mul(translation(axis(1), axis(3), n), identity_root(4, axis(3), n)), 3);
    CHECK(m == scalar_mul(root_of_unity(8, 1), Mat2::identity(n)));

    auto cyc3 = scalar_subgroup(enumerate_finite(spec(3, 3, 3, 3)));
    REQUIRE(cyc3.size() == 1);
    CHECK(cyc3[0] == CycloElement::one(24));

    auto sm1 = scalar_subgroup(enumerate_finite(spec(1, 1, 1, 2)));
    REQUIRE(sm1.size() == 1);
    CHECK(sm1[0] == CycloElement::one(8));
}

TEST_CASE("smooth degree-2 group is dihedral of order 16") {
    GroupSpec s = spec(2, 1, 1, 3);
    unsigned n = default_ambient(s);
    Mat2 sigma = identity_root(2, axis(1), n);
    Mat2 rho = translation(axis(1), axis(3), n);
    CHECK(mul(sigma, sigma) == Mat2::identity(n));
    CHECK(mul(rho, rho) == Mat2::identity(n));
    Mat2 sr = mul(sigma, rho);
    CHECK(pow(sr, 8) == Mat2::identity(n));
    CHECK(pow(sr, 4) != Mat2::identity(n));
    CHECK(enumerate_finite(s).size() == 16);
}

TEST_CASE("same-kind same-degree groups are conjugate (generators map exactly)") {
    for (unsigned k = 1; k <= 8; ++k) {
        unsigned n = default_ambient_for_degree(k);
        Mat2 c = cyclic_conjugator(axis(1), axis(2), n);
        auto conj_pow = [&](const Mat2& m, int r) {
            Mat2 out = m;
            for (int i = 0; i < r; ++i) out = mul(mul(c, out), dagger(c));
            return out;
        };
        auto specs = canonical_specs(k);
        for (const GroupSpec& p : specs) {
            for (const GroupSpec& q : specs) {
                if (classify(p) != classify(q)) continue;
                Mat2 vp = identity_root(k, p.a, n);
                Mat2 rp = translation(p.b, p.c, n);
                Mat2 vq = identity_root(k, q.a, n);
                Mat2 rq = translation(q.b, q.c, n);
                if (classify(p) != GroupKind::Smooth) {
                    // a rotation aligns the root axes; for cyclic and
                    // polycyclic specs that determines everything
                    int r = (axis_value(q.a) - axis_value(p.a) + 3) % 3;
                    CHECK(conj_pow(vp, r) == vq);
                    if (classify(p) == GroupKind::Polycyclic) CHECK(conj_pow(rp, r) == rq);
                } else {
                    // rotate the root into place, then if the translation
                    // pair still differs flip it with a quarter turn
                    int r = (axis_value(q.a) - axis_value(p.a) + 3) % 3;
                    Mat2 v1 = conj_pow(vp, r);
                    Mat2 r1 = conj_pow(rp, r);
                    CHECK(v1 == vq);
                    GroupSpec p_rot = rotate_spec(p, r);
                    auto [root_q, other_q] = smooth_axes(q);
                    auto [root_p2, other_p2] = smooth_axes(p_rot);
                    REQUIRE(root_p2 == root_q);
                    if (other_p2 != other_q) {
                        Mat2 v4 = identity_root(4, root_q, n);
                        if (levi_civita(root_q, other_p2, other_q) == 1)
                            r1 = mul(mul(v4, r1), dagger(v4));
                        else
                            r1 = mul(mul(dagger(v4), r1), v4);
                    }
                    CHECK(r1 == rq);
                }
            }
        }
    }
}

TEST_CASE("root powers collapse degrees: V_{dk,a}^d = V_{k,a}") {
    for (unsigned d = 1; d <= 12; ++d)
        for (unsigned k = 1; k <= 12; ++k) {
            unsigned n = default_ambient_for_degree(d * k);
            for (int a = 1; a <= 3; ++a) {
                CHECK(pow(identity_root(d * k, axis(a), n), d) ==
                      identity_root(k, axis(a), n));
            }
        }
}

TEST_CASE("infiniteness certificates") {
    auto coords_of = [](unsigned k, int a, int b, int c) {
        return infiniteness_certificate(spec(k, a, b, c));
    };

    InfinitenessCertificate c8 = coords_of(8, 3, 1, 3);
    CHECK(c8.coordinates == std::vector<Rational>{make_rational(1, 2), make_rational(-1),
                                                  make_rational(1, 2), make_rational(0)});
    CHECK(c8.witness_index == 0);
    CHECK(c8.trace_squared.order() == 8);

    InfinitenessCertificate c3 = coords_of(3, 1, 1, 2);
    CHECK(c3.coordinates == std::vector<Rational>{make_rational(0), make_rational(-3, 2)});
    CHECK(c3.witness_index == 1);

    InfinitenessCertificate c6 = coords_of(6, 3, 1, 3);
    CHECK(c6.coordinates == std::vector<Rational>{make_rational(0), make_rational(-1, 2)});
    CHECK(c6.witness_index == 1);

    // degrees 1, 2, 4 produce all-integer coordinates and refuse
    CHECK_THROWS_AS(coords_of(4, 3, 1, 3), NotApplicable);
    CHECK_THROWS_AS(coords_of(2, 1, 1, 2), NotApplicable);
    CHECK_THROWS_AS(coords_of(1, 1, 1, 2), NotApplicable);
    // as do cyclic and polycyclic specs
    CHECK_THROWS_AS(coords_of(8, 3, 3, 3), NotApplicable);
    CHECK_THROWS_AS(coords_of(8, 3, 1, 2), NotApplicable);

    // the certified coordinate really is non-integral
    for (unsigned k : {3u, 5u, 6u, 7u, 8u, 12u}) {
        InfinitenessCertificate cert = coords_of(k, 3, 1, 3);
        CHECK(!is_integer(cert.coordinates[cert.witness_index]));
        CHECK(!is_algebraic_integer(cert.trace_squared));
    }
}
