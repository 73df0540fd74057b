#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "numeric_oracle.hpp"
#include "prg/qmat.hpp"

using namespace prg;

namespace {

const std::vector<Axis> kAxes = {Axis::A1, Axis::A2, Axis::A3};

Mat2 minus_one(const Mat2& m) {
    return scalar_mul(neg(CycloElement::one(m.order())), m);
}

}  // namespace

TEST_CASE("levi_civita") {
    CHECK(levi_civita(axis(1), axis(2), axis(3)) == 1);
    CHECK(levi_civita(axis(2), axis(3), axis(1)) == 1);
    CHECK(levi_civita(axis(3), axis(1), axis(2)) == 1);
    CHECK(levi_civita(axis(3), axis(2), axis(1)) == -1);
    CHECK(levi_civita(axis(2), axis(1), axis(3)) == -1);
    CHECK(levi_civita(axis(1), axis(3), axis(2)) == -1);
    CHECK(levi_civita(axis(1), axis(1), axis(2)) == 0);
    CHECK(levi_civita(axis(2), axis(2), axis(2)) == 0);
    for (Axis a : kAxes)
        for (Axis b : kAxes)
            for (Axis c : kAxes) {
                CHECK(levi_civita(a, b, c) == -levi_civita(b, a, c));
                CHECK(levi_civita(a, b, c) == -levi_civita(a, c, b));
            }
    CHECK_THROWS_AS(axis(0), BadAxes);
    CHECK_THROWS_AS(axis(4), BadAxes);
}

TEST_CASE("pauli matrices") {
    Mat2 s3 = pauli(axis(3), 8);
    CHECK(s3.at(1, 1) == CycloElement::one(8));
    CHECK(s3.at(2, 2) == neg(CycloElement::one(8)));
    CHECK(s3.at(1, 2).is_zero());
    CHECK(s3.at(2, 1).is_zero());

    Mat2 s1 = pauli(axis(1), 8);
    CHECK(s1.at(1, 2) == CycloElement::one(8));
    CHECK(s1.at(2, 1) == CycloElement::one(8));
    CHECK(s1.at(1, 1).is_zero());

    for (Axis a : kAxes) {
        Mat2 s = pauli(a, 8);
        CHECK(mul(s, s) == Mat2::identity(8));
        CHECK(dagger(s) == s);  // Hermitian
        CHECK(is_unitary(s));
        CHECK(trace(s).is_zero());
    }
    CHECK_THROWS_AS(pauli(axis(2), 6), UnsupportedField);
}

TEST_CASE("identity roots") {
    for (Axis a : kAxes) {
        CHECK(identity_root(1, a, 8) == Mat2::identity(8));
        CHECK(identity_root(2, a, 8) == pauli(a, 8));
    }
    // the T gate
    Mat2 t = identity_root(8, axis(3), 8);
    CHECK(t.at(1, 1) == CycloElement::one(8));
    CHECK(t.at(2, 2) == root_of_unity(8, 1));
    CHECK(t.at(1, 2).is_zero());
    CHECK(t.at(2, 1).is_zero());

    // T^4 = Z
    CHECK(pow(t, 4) == pauli(axis(3), 8));

    // det(V_{k,a}) = w_k and V^k = I
    for (unsigned k : {1u, 2u, 3u, 4u, 8u, 12u}) {
        unsigned n = default_ambient_for_degree(k);
        for (Axis a : kAxes) {
            Mat2 v = identity_root(k, a, n);
            CHECK(det(v) == embed(root_of_unity(k, 1), n));
            CHECK(pow(v, k) == Mat2::identity(n));
            CHECK(is_unitary(v));
        }
    }
    CHECK_THROWS_AS(identity_root(8, axis(1), 4), UnsupportedField);
}

TEST_CASE("translation matrices") {
    // rho_13 is the Hadamard matrix
    Mat2 h = translation(axis(1), axis(3), 8);
    CycloElement inv_s2 = invert(sqrt2(8));
    CHECK(h.at(1, 1) == inv_s2);
    CHECK(h.at(1, 2) == inv_s2);
    CHECK(h.at(2, 1) == inv_s2);
    CHECK(h.at(2, 2) == neg(inv_s2));

    // rho_12 = (0, w_8^7; w_8, 0)
    Mat2 r12 = translation(axis(1), axis(2), 8);
    CHECK(r12.at(1, 1).is_zero());
    CHECK(r12.at(2, 2).is_zero());
    CHECK(r12.at(1, 2) == root_of_unity(8, 7));
    CHECK(r12.at(2, 1) == root_of_unity(8, 1));

    // rho_23 = (1, -i; i, -1)/sqrt2, i.e. (sigma_2 + sigma_3)/sqrt2
    Mat2 r23 = translation(axis(2), axis(3), 8);
    CycloElement i8 = imag_unit(8);
    CHECK(r23.at(1, 1) == inv_s2);
    CHECK(r23.at(1, 2) == neg(mul(i8, inv_s2)));
    CHECK(r23.at(2, 1) == mul(i8, inv_s2));
    CHECK(r23.at(2, 2) == neg(inv_s2));
    CHECK(r23 == scalar_mul(inv_s2, add(pauli(axis(2), 8), pauli(axis(3), 8))));

    CHECK(translation(axis(2), axis(2), 8) == Mat2::identity(8));

    for (Axis a : kAxes)
        for (Axis b : kAxes) {
            Mat2 r = translation(a, b, 8);
            CHECK(r == translation(b, a, 8));
            CHECK(mul(r, r) == Mat2::identity(8));
            CHECK(is_unitary(r));
        }
    CHECK_THROWS_AS(translation(axis(1), axis(2), 4), UnsupportedField);
}

TEST_CASE("matrix plumbing") {
    Mat2 t = identity_root(8, axis(3), 8);
    Mat2 h = translation(axis(1), axis(3), 8);
    CHECK(dagger(dagger(t)) == t);
    CHECK(mul(t, dagger(t)) == Mat2::identity(8));
    CHECK(det(mul(t, h)) == mul(det(t), det(h)));
    CHECK(det(identity_root(12, axis(2), 24)) == embed(root_of_unity(12, 1), 24));
    CHECK(pow(t, 0) == Mat2::identity(8));
    CHECK_THROWS_AS(mul(t, identity_root(8, axis(3), 16)), OrderMismatch);
}

TEST_CASE("translation conjugation (pauli-to-pauli and root-to-root)") {
    for (Axis a : kAxes) {
        for (Axis b : kAxes) {
            if (a == b) continue;
            Mat2 r = translation(a, b, 8);
            CHECK(mul(mul(r, pauli(b, 8)), r) == pauli(a, 8));
            CHECK(mul(mul(r, pauli(a, 8)), r) == pauli(b, 8));
            // negation of the third axis
            Axis c = third_axis(a, b);
            CHECK(mul(mul(r, pauli(c, 8)), r) == minus_one(pauli(c, 8)));
            // the same conjugation translates identity roots, k <= 12
            for (unsigned k = 1; k <= 12; ++k) {
                unsigned n = default_ambient_for_degree(k);
                Mat2 rn = translation(a, b, n);
                CHECK(mul(mul(rn, identity_root(k, b, n)), rn) == identity_root(k, a, n));
            }
        }
    }
}

TEST_CASE("sigma_a sigma_b sigma_c = i eps I") {
    for (Axis a : kAxes)
        for (Axis b : kAxes)
            for (Axis c : kAxes) {
                int eps = levi_civita(a, b, c);
                if (eps == 0) continue;
                Mat2 prod = mul(mul(pauli(a, 8), pauli(b, 8)), pauli(c, 8));
                CycloElement scale = scalar_mul(make_rational(eps), imag_unit(8));
                CHECK(prod == scalar_mul(scale, Mat2::identity(8)));
            }
}

TEST_CASE("quarter-turn conjugation of the Pauli frame") {
    for (Axis a : kAxes)
        for (Axis b : kAxes)
            for (Axis c : kAxes) {
                if (levi_civita(a, b, c) != 1) continue;
                Mat2 v = identity_root(4, a, 8);
                Mat2 vd = dagger(v);
                CHECK(mul(mul(v, pauli(a, 8)), vd) == pauli(a, 8));
                CHECK(mul(mul(v, pauli(b, 8)), vd) == pauli(c, 8));
                CHECK(mul(mul(v, pauli(c, 8)), vd) == minus_one(pauli(b, 8)));
            }
}

TEST_CASE("root direction change via quarter turns") {
    for (unsigned k : {2u, 3u, 4u, 8u, 12u}) {
        unsigned n = default_ambient_for_degree(k);
        for (Axis a : kAxes)
            for (Axis b : kAxes)
                for (Axis c : kAxes) {
                    int eps = levi_civita(a, b, c);
                    if (eps == 0) continue;
                    Mat2 vc = identity_root(4, c, n);
                    Mat2 va = identity_root(k, a, n);
                    Mat2 expect = identity_root(k, b, n);
                    if (eps == 1)
                        CHECK(mul(mul(vc, va), dagger(vc)) == expect);
                    else
                        CHECK(mul(mul(dagger(vc), va), vc) == expect);
                }
    }
}

TEST_CASE("translation change via quarter turns") {
    for (Axis a : kAxes)
        for (Axis b : kAxes)
            for (Axis c : kAxes) {
                int eps = levi_civita(a, b, c);
                if (eps == 0) continue;
                Mat2 va = identity_root(4, a, 8);
                Mat2 rab = translation(a, b, 8);
                Mat2 rac = translation(a, c, 8);
                if (eps == 1)
                    CHECK(mul(mul(va, rab), dagger(va)) == rac);
                else
                    CHECK(mul(mul(dagger(va), rab), va) == rac);
            }
}

TEST_CASE("signed pauli action") {
    // rho_12 swaps sigma_1 and sigma_2 and negates sigma_3
    SigmaPerm p = signed_pauli_action(translation(axis(1), axis(2), 8));
    CHECK(p.image[sigma_index({axis(1), +1})] == sigma_index({axis(2), +1}));
    CHECK(p.image[sigma_index({axis(2), +1})] == sigma_index({axis(1), +1}));
    CHECK(p.image[sigma_index({axis(3), +1})] == sigma_index({axis(3), -1}));

    // V_{4,1} fixes sigma_1, sends sigma_2 -> sigma_3 and sigma_3 -> -sigma_2
    SigmaPerm q = signed_pauli_action(identity_root(4, axis(1), 8));
    CHECK(q.image[sigma_index({axis(1), +1})] == sigma_index({axis(1), +1}));
    CHECK(q.image[sigma_index({axis(2), +1})] == sigma_index({axis(3), +1}));
    CHECK(q.image[sigma_index({axis(3), +1})] == sigma_index({axis(2), -1}));

    CHECK(signed_pauli_action(Mat2::identity(8)) == identity_perm());

    // sign equivariance: the image of -s is the negative of the image of s
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK((p.image[i] + 3) % 6 == p.image[i + 3]);
        CHECK((q.image[i] + 3) % 6 == q.image[i + 3]);
    }

    // the T gate does not normalize the signed Pauli set
    CHECK_THROWS_AS(signed_pauli_action(identity_root(8, axis(3), 8)), NotInSigmaPM);
}

TEST_CASE("action permutations generate a group of order 24") {
    std::vector<SigmaPerm> gens;
    for (Axis a : kAxes) gens.push_back(signed_pauli_action(identity_root(4, a, 8)));
    for (Axis a : kAxes)
        for (Axis b : kAxes)
            if (axis_value(a) < axis_value(b))
                gens.push_back(signed_pauli_action(translation(a, b, 8)));

    std::set<std::array<std::uint8_t, 6>> closure;
    std::vector<SigmaPerm> frontier = {identity_perm()};
    closure.insert(identity_perm().image);
    while (!frontier.empty()) {
        std::vector<SigmaPerm> next;
        for (const SigmaPerm& p : frontier)
            for (const SigmaPerm& g : gens) {
                SigmaPerm q = compose(g, p);
                if (closure.insert(q.image).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    CHECK(closure.size() == 24);
}

TEST_CASE("cyclic conjugator") {
    unsigned n = 8;
    Mat2 c = cyclic_conjugator(axis(1), axis(2), n);
    Mat2 cinv = dagger(c);
    REQUIRE(mul(c, cinv) == Mat2::identity(n));

    CHECK(mul(mul(c, pauli(axis(1), n)), cinv) == pauli(axis(2), n));
    CHECK(mul(mul(c, pauli(axis(2), n)), cinv) == pauli(axis(3), n));
    CHECK(mul(mul(c, pauli(axis(3), n)), cinv) == pauli(axis(1), n));

    CHECK(mul(mul(c, identity_root(8, axis(1), n)), cinv) == identity_root(8, axis(2), n));
    CHECK(mul(mul(c, translation(axis(1), axis(2), n)), cinv) ==
          translation(axis(2), axis(3), n));
    CHECK(mul(mul(c, translation(axis(2), axis(3), n)), cinv) ==
          translation(axis(3), axis(1), n));

    CHECK_THROWS_AS(cyclic_conjugator(axis(2), axis(1), 8), BadAxes);
    CHECK_THROWS_AS(cyclic_conjugator(axis(1), axis(1), 8), BadAxes);

    // full cycle for every positively oriented pair, several degrees
    for (unsigned k : {2u, 3u, 4u, 8u, 12u}) {
        unsigned m = default_ambient_for_degree(k);
        for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 1}}) {
            Axis aa = axis(a), bb = axis(b);
            Axis cc = third_axis(aa, bb);
            Mat2 g = cyclic_conjugator(aa, bb, m);
            Mat2 gd = dagger(g);
            CHECK(mul(mul(g, identity_root(k, aa, m)), gd) == identity_root(k, bb, m));
            CHECK(mul(mul(g, identity_root(k, bb, m)), gd) == identity_root(k, cc, m));
            CHECK(mul(mul(g, identity_root(k, cc, m)), gd) == identity_root(k, aa, m));
            CHECK(mul(mul(g, translation(aa, bb, m)), gd) == translation(bb, cc, m));
        }
    }
}

TEST_CASE("numeric oracle agrees with constructors") {
    using prg::testing::to_complex;
    Mat2 h = translation(axis(1), axis(3), 8);
    double r = 0.7071067811865476;
    CHECK(prg::testing::near(to_complex(h.at(1, 1)), {r, 0.0}));
    CHECK(prg::testing::near(to_complex(h.at(2, 2)), {-r, 0.0}));
    Mat2 t = identity_root(8, axis(3), 8);
    CHECK(prg::testing::near(to_complex(t.at(2, 2)), {r, r}));
}
