#include "prg/finitefield.hpp"

#include <set>

namespace prg {

std::string F9::to_string() const {
    return std::to_string(re_) + (im_ ? "+" + std::to_string(im_) + "i" : "");
}

F9 frobenius_conjugate(const F9& x) { return x * x * x; }

GUMat gu_mul(const GUMat& a, const GUMat& b) {
    return GUMat{{a.at(1, 1) * b.at(1, 1) + a.at(1, 2) * b.at(2, 1),
                  a.at(1, 1) * b.at(1, 2) + a.at(1, 2) * b.at(2, 2),
                  a.at(2, 1) * b.at(1, 1) + a.at(2, 2) * b.at(2, 1),
                  a.at(2, 1) * b.at(1, 2) + a.at(2, 2) * b.at(2, 2)}};
}

GUMat gu_dagger(const GUMat& m) {
    return GUMat{{frobenius_conjugate(m.at(1, 1)), frobenius_conjugate(m.at(2, 1)),
                  frobenius_conjugate(m.at(1, 2)), frobenius_conjugate(m.at(2, 2))}};
}

GUMat gu_identity() { return GUMat{{F9(1, 0), F9(), F9(), F9(1, 0)}}; }

bool is_gu29(const GUMat& m) {
    GUMat p = gu_mul(gu_dagger(m), m);
    GUMat minus_id{{F9(-1, 0), F9(), F9(), F9(-1, 0)}};
    return p == gu_identity() || p == minus_id;
}

namespace {

// Rational with power-of-two denominator -> F_3; 1/2 maps to 2.
F9 reduce_rational(const Rational& q) {
    Integer den = q.get_den();
    // den is positive and canonical; a power of two has a single set bit
    if (mpz_popcount(den.get_mpz_t()) != 1)
        throw NotReducible("denominator " + den.get_str() +
                           " has an odd prime factor; entry lies outside Z[w_8, 1/2]");
    int num = static_cast<int>(mpz_fdiv_ui(q.get_num().get_mpz_t(), 3));
    // den = 2^twos, and 1/2 -> 2 with 2^2 = 1 mod 3, so only the parity
    // of the exponent matters
    unsigned long twos = mpz_scan1(den.get_mpz_t(), 0);
    return F9(twos % 2 == 1 ? num * 2 : num, 0);
}

F9 reduce_entry(const CycloElement& x) {
    if (x.order() != 8)
        throw NotReducible("entry is declared in Q(w_" + std::to_string(x.order()) +
                           "); reduction is defined on the w_8 power basis");
    // w_8 -> 1 - i; consistent since (1-i)^2 = i matches w_8^2 = i.
    const F9 w(1, -1);
    F9 acc;
    F9 power(1, 0);
    for (const Rational& c : x.coeffs()) {
        acc = acc + reduce_rational(c) * power;
        power = power * w;
    }
    return acc;
}

}  // namespace

GUMat reduce_mod3(const Mat2& m) {
    Mat2 source = m;
    if (m.order() != 8) {
        if (m.order() % 8 == 0) {
            // tolerate larger declared fields when the entries descend
            auto down = [&](const CycloElement& e) {
                auto d = descend(e, 8);
                if (!d) throw NotReducible("entry does not lie in Q(w_8)");
                return *d;
            };
            source = Mat2(down(m.at(1, 1)), down(m.at(1, 2)), down(m.at(2, 1)),
                          down(m.at(2, 2)));
        } else if (8 % m.order() == 0) {
            source = embed(m, 8);
        } else {
            throw NotReducible("matrix field Q(w_" + std::to_string(m.order()) +
                               ") is incompatible with Q(w_8)");
        }
    }
    return GUMat{{reduce_entry(source.at(1, 1)), reduce_entry(source.at(1, 2)),
                  reduce_entry(source.at(2, 1)), reduce_entry(source.at(2, 2))}};
}

Gu29Report verify_gu29_isomorphism(const FiniteGroup& clifford) {
    if (classify(clifford.spec()) != GroupKind::Smooth || clifford.spec().k != 4 ||
        clifford.size() != 192)
        throw Error("verify_gu29_isomorphism expects the enumerated 192-element smooth "
                    "degree-4 group, got " +
                    spec_to_string(clifford.spec()) + " with " +
                    std::to_string(clifford.size()) + " elements");

    std::vector<GUMat> images;
    images.reserve(clifford.size());
    for (const Mat2& m : clifford.elements()) images.push_back(reduce_mod3(m));

    Gu29Report report{true, true, true, 0};

    auto key = [](const GUMat& g) {
        int v = 0;
        for (const F9& x : g.e) v = v * 9 + x.re() * 3 + x.im();
        return v;
    };
    std::set<int> distinct;
    for (const GUMat& g : images) {
        if (!is_gu29(g)) report.all_in_gu = false;
        distinct.insert(key(g));
    }
    report.image_size = distinct.size();
    report.injective = distinct.size() == clifford.size();

    // Multiplicativity over every pair of group elements. Products are
    // looked up through the group index, so this also cross-checks the
    // enumeration's closure.
    for (std::size_t i = 0; i < clifford.size() && report.homomorphism; ++i) {
        for (std::size_t j = 0; j < clifford.size(); ++j) {
            Mat2 prod = mul(clifford.element(i), clifford.element(j));
            auto idx = clifford.index_of(prod);
            if (!idx) throw Error("verify_gu29_isomorphism: group is not closed");
            if (gu_mul(images[i], images[j]) != images[*idx]) {
                report.homomorphism = false;
                break;
            }
        }
    }
    return report;
}

}  // namespace prg
