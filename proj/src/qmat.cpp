#include "prg/qmat.hpp"

#include <sstream>

namespace prg {

Axis axis(int value) {
    if (value < 1 || value > 3)
        throw BadAxes("axis index must be 1, 2, or 3, got " + std::to_string(value));
    return static_cast<Axis>(value);
}

Axis third_axis(Axis a, Axis b) {
    if (a == b) throw BadAxes("third_axis requires two distinct axes");
    return axis(6 - axis_value(a) - axis_value(b));
}

int levi_civita(Axis a, Axis b, Axis c) {
    int av = axis_value(a), bv = axis_value(b), cv = axis_value(c);
    return (av - bv) * (bv - cv) * (cv - av) / 2;
}

std::size_t sigma_index(const SignedPauli& s) {
    return static_cast<std::size_t>(axis_value(s.axis) - 1) + (s.sign < 0 ? 3 : 0);
}

SignedPauli sigma_from_index(std::size_t i) {
    if (i >= 6) throw Error("sigma_from_index: index out of range");
    return SignedPauli{axis(static_cast<int>(i % 3) + 1), i < 3 ? +1 : -1};
}

std::string sigma_name(const SignedPauli& s) {
    return std::string(s.sign < 0 ? "-" : "+") + std::to_string(axis_value(s.axis));
}

Mat2::Mat2(CycloElement e11, CycloElement e12, CycloElement e21, CycloElement e22)
    : order_(e11.order()), e_{std::move(e11), std::move(e12), std::move(e21), std::move(e22)} {
    for (const CycloElement& e : e_)
        if (e.order() != order_) throw OrderMismatch(order_, e.order());
}

Mat2 Mat2::identity(unsigned order) {
    return Mat2(CycloElement::one(order), CycloElement::zero(order),
                CycloElement::zero(order), CycloElement::one(order));
}

Mat2 Mat2::zero(unsigned order) {
    return Mat2(CycloElement::zero(order), CycloElement::zero(order),
                CycloElement::zero(order), CycloElement::zero(order));
}

const CycloElement& Mat2::at(int r, int c) const {
    if (r < 1 || r > 2 || c < 1 || c > 2) throw Error("Mat2::at: indices are 1-based");
    return e_[static_cast<std::size_t>((r - 1) * 2 + (c - 1))];
}

std::string Mat2::key() const {
    std::ostringstream os;
    for (const CycloElement& e : e_) os << e.key() << ';';
    return os.str();
}

bool Mat2::operator==(const Mat2& o) const {
    if (order_ != o.order_) throw OrderMismatch(order_, o.order_);
    return e_ == o.e_;
}

Mat2 mul(const Mat2& a, const Mat2& b) {
    if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
    return Mat2(a.at(1, 1) * b.at(1, 1) + a.at(1, 2) * b.at(2, 1),
                a.at(1, 1) * b.at(1, 2) + a.at(1, 2) * b.at(2, 2),
                a.at(2, 1) * b.at(1, 1) + a.at(2, 2) * b.at(2, 1),
                a.at(2, 1) * b.at(1, 2) + a.at(2, 2) * b.at(2, 2));
}

Mat2 add(const Mat2& a, const Mat2& b) {
    if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
    return Mat2(a.at(1, 1) + b.at(1, 1), a.at(1, 2) + b.at(1, 2),
                a.at(2, 1) + b.at(2, 1), a.at(2, 2) + b.at(2, 2));
}

Mat2 dagger(const Mat2& m) {
    return Mat2(conjugate(m.at(1, 1)), conjugate(m.at(2, 1)),
                conjugate(m.at(1, 2)), conjugate(m.at(2, 2)));
}

CycloElement det(const Mat2& m) {
    return m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
}

CycloElement trace(const Mat2& m) { return m.at(1, 1) + m.at(2, 2); }

Mat2 scalar_mul(const CycloElement& c, const Mat2& m) {
    return Mat2(c * m.at(1, 1), c * m.at(1, 2), c * m.at(2, 1), c * m.at(2, 2));
}

Mat2 pow(const Mat2& m, std::uint64_t e) {
    Mat2 result = Mat2::identity(m.order());
    Mat2 base = m;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool equals(const Mat2& a, const Mat2& b) { return a == b; }

Mat2 embed(const Mat2& m, unsigned ambient) {
    return Mat2(embed(m.at(1, 1), ambient), embed(m.at(1, 2), ambient),
                embed(m.at(2, 1), ambient), embed(m.at(2, 2), ambient));
}

bool is_unitary(const Mat2& m) { return mul(dagger(m), m) == Mat2::identity(m.order()); }

Mat2 pauli(Axis a, unsigned ambient) {
    if (ambient == 0 || ambient % 4 != 0)
        throw UnsupportedField("pauli needs an ambient field order divisible by 4, got " +
                               std::to_string(ambient));
    CycloElement zero = CycloElement::zero(ambient);
    CycloElement one = CycloElement::one(ambient);
    switch (a) {
        case Axis::A1:
            return Mat2(zero, one, one, zero);
        case Axis::A2: {
            CycloElement i = imag_unit(ambient);
            return Mat2(zero, neg(i), i, zero);
        }
        case Axis::A3:
            return Mat2(one, zero, zero, neg(one));
    }
    throw BadAxes("invalid axis");
}

Mat2 identity_root(unsigned k, Axis a, unsigned ambient) {
    if (k == 0) throw Error("identity_root: degree must be positive");
    if (ambient == 0 || ambient % lcm_u(k, 4) != 0)
        throw UnsupportedField("identity_root of degree " + std::to_string(k) +
                               " needs an ambient field order divisible by lcm(k, 4) = " +
                               std::to_string(lcm_u(k, 4)) + ", got " + std::to_string(ambient));
    CycloElement w = embed(root_of_unity(k, 1), ambient);
    Rational half = make_rational(1, 2);
    CycloElement u = scalar_mul(half, add(CycloElement::one(ambient), w));  // (1+w)/2
    CycloElement v = scalar_mul(half, sub(CycloElement::one(ambient), w));  // (1-w)/2
    Mat2 s = pauli(a, ambient);
    return add(scalar_mul(u, Mat2::identity(ambient)), scalar_mul(v, s));
}

Mat2 translation(Axis a, Axis b, unsigned ambient) {
    if (ambient == 0 || ambient % 8 != 0)
        throw UnsupportedField("translation needs an ambient field order divisible by 8, got " +
                               std::to_string(ambient));
    if (a == b) return Mat2::identity(ambient);
    CycloElement inv_sqrt2 = invert(sqrt2(ambient));
    return scalar_mul(inv_sqrt2, add(pauli(a, ambient), pauli(b, ambient)));
}

SigmaPerm identity_perm() {
    SigmaPerm p{};
    for (std::uint8_t i = 0; i < 6; ++i) p.image[i] = i;
    return p;
}

SigmaPerm compose(const SigmaPerm& g, const SigmaPerm& f) {
    SigmaPerm p{};
    for (std::size_t i = 0; i < 6; ++i) p.image[i] = g.image[f.image[i]];
    return p;
}

std::string perm_to_string(const SigmaPerm& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < 6; ++i) {
        if (i) os << ' ';
        os << sigma_name(sigma_from_index(i)) << "->" << sigma_name(sigma_from_index(p.image[i]));
    }
    return os.str();
}

SigmaPerm signed_pauli_action(const Mat2& u) {
    unsigned n = u.order();
    if (n % 4 != 0)
        throw UnsupportedField("signed_pauli_action needs an ambient field order divisible by 4");
    std::array<Mat2, 6> table = {pauli(Axis::A1, n),
                                 pauli(Axis::A2, n),
                                 pauli(Axis::A3, n),
                                 scalar_mul(neg(CycloElement::one(n)), pauli(Axis::A1, n)),
                                 scalar_mul(neg(CycloElement::one(n)), pauli(Axis::A2, n)),
                                 scalar_mul(neg(CycloElement::one(n)), pauli(Axis::A3, n))};
    Mat2 ud = dagger(u);
    SigmaPerm perm{};
    for (std::size_t i = 0; i < 6; ++i) {
        Mat2 conj = mul(mul(u, table[i]), ud);
        bool found = false;
        for (std::size_t j = 0; j < 6; ++j) {
            if (conj == table[j]) {
                perm.image[i] = static_cast<std::uint8_t>(j);
                found = true;
                break;
            }
        }
        if (!found)
            throw NotInSigmaPM("conjugate of " + sigma_name(sigma_from_index(i)) +
                               " is not a signed Pauli matrix; the given matrix does not "
                               "normalize the signed Pauli set");
    }
    return perm;
}

Mat2 cyclic_conjugator(Axis a, Axis b, unsigned ambient) {
    if (a == b || levi_civita(a, b, third_axis(a, b)) != 1)
        throw BadAxes("cyclic_conjugator requires axes (a, b) with eps_abc = 1");
    return mul(translation(a, b, ambient), dagger(identity_root(4, a, ambient)));
}

unsigned default_ambient_for_degree(unsigned k) { return lcm_u(8, k); }

}  // namespace prg
