#include "prg/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace prg {

unsigned gcd_u(unsigned a, unsigned b) {
    while (b != 0) {
        unsigned t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / gcd_u(a, b) * b; }

unsigned phi(unsigned n) {
    if (n == 0) throw Error("phi: argument must be positive");
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the quotient is known to be integral.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    while (num.size() >= den.size() && !num.empty()) {
        Integer c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        ztrim(num);
    }
    return quot;
}

const ZPoly& cyclotomic_impl(unsigned n, std::map<unsigned, ZPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1 divided by the cyclotomic polynomials of all proper divisors.
    ZPoly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) num = zdiv_exact(std::move(num), cyclotomic_impl(d, memo));
    }
    return memo.emplace(n, std::move(num)).first->second;
}

// Everything needed to reduce into the power basis of Q(w_n): the monic
// modulus and a table of x^e mod Phi_n for all exponents that can appear
// (products of two reduced elements, exponent remapping up to n).
struct FieldData {
    unsigned n = 0;
    unsigned deg = 0;                // phi(n)
    QPoly modulus;                   // Phi_n, size deg + 1
    std::vector<QPoly> high_powers;  // high_powers[j] = x^(deg+j) mod Phi_n
};

std::mutex g_field_mutex;

const FieldData& field_data(unsigned n) {
    static std::map<unsigned, std::unique_ptr<FieldData>> registry;
    static std::map<unsigned, ZPoly> cyclo_memo;

    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto it = registry.find(n);
    if (it != registry.end()) return *it->second;

    auto fd = std::make_unique<FieldData>();
    fd->n = n;
    fd->deg = phi(n);
    const ZPoly& zmod = cyclotomic_impl(n, cyclo_memo);
    fd->modulus.reserve(zmod.size());
    for (const Integer& c : zmod) fd->modulus.emplace_back(c);

    unsigned deg = fd->deg;
    unsigned max_exp = std::max(deg >= 1 ? 2 * deg - 2 : 0, n);
    if (max_exp >= deg) {
        fd->high_powers.resize(max_exp - deg + 1);
        // x^deg = -(Phi_n - x^deg)
        QPoly row(deg);
        for (unsigned i = 0; i < deg; ++i) row[i] = -fd->modulus[i];
        fd->high_powers[0] = row;
        for (unsigned j = 1; j + deg <= max_exp; ++j) {
            const QPoly& prev = fd->high_powers[j - 1];
            QPoly next(deg);
            for (unsigned i = 0; i + 1 < deg; ++i) next[i + 1] = prev[i];
            if (deg >= 1 && prev[deg - 1] != 0) {
                const Rational& lead = prev[deg - 1];
                for (unsigned i = 0; i < deg; ++i) next[i] += lead * fd->high_powers[0][i];
            }
            fd->high_powers[j] = std::move(next);
        }
    }
    return *registry.emplace(n, std::move(fd)).first->second;
}

// Reduce an arbitrary-degree coefficient vector into the power basis.
std::vector<Rational> reduce_poly(const std::vector<Rational>& p, const FieldData& fd) {
    std::vector<Rational> out(fd.deg);
    for (std::size_t e = 0; e < p.size(); ++e) {
        if (p[e] == 0) continue;
        if (e < fd.deg) {
            out[e] += p[e];
        } else {
            const QPoly& row = fd.high_powers.at(e - fd.deg);
            for (unsigned i = 0; i < fd.deg; ++i)
                if (row[i] != 0) out[i] += p[e] * row[i];
        }
    }
    return out;
}

void check_same_order(const CycloElement& x, const CycloElement& y) {
    if (x.order() != y.order()) throw OrderMismatch(x.order(), y.order());
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error("cyclotomic_polynomial: argument must be positive");
    static std::map<unsigned, ZPoly> memo;
    std::lock_guard<std::mutex> lock(g_field_mutex);
    return cyclotomic_impl(n, memo);
}

CycloElement::CycloElement(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ == 0) throw Error("CycloElement: order must be positive");
    if (coeffs_.size() != phi(order_))
        throw Error("CycloElement: expected " + std::to_string(phi(order_)) +
                    " coefficients for order " + std::to_string(order_) + ", got " +
                    std::to_string(coeffs_.size()));
    for (Rational& c : coeffs_) {
        if (c.get_den() == 0) throw DivisionByZero();
        c.canonicalize();  // lowest terms, positive denominator
    }
}

CycloElement CycloElement::zero(unsigned order) {
    return CycloElement(order, std::vector<Rational>(phi(order)));
}

CycloElement CycloElement::one(unsigned order) {
    return from_rational(order, Rational(1));
}

CycloElement CycloElement::from_rational(unsigned order, const Rational& q) {
    std::vector<Rational> c(phi(order));
    c[0] = q;
    // In Q(w_1) and Q(w_2) the basis element is 1, so this is general.
    return CycloElement(order, std::move(c));
}

bool CycloElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::string CycloElement::key() const {
    std::ostringstream os;
    os << order_ << ':';
    for (const Rational& c : coeffs_) os << c.get_str() << ',';
    return os.str();
}

bool CycloElement::operator==(const CycloElement& other) const {
    check_same_order(*this, other);
    return coeffs_ == other.coeffs_;
}

CycloElement root_of_unity(unsigned n, long e) {
    if (n == 0) throw Error("root_of_unity: order must be positive");
    long m = e % static_cast<long>(n);
    if (m < 0) m += n;
    const FieldData& fd = field_data(n);
    std::vector<Rational> p(static_cast<std::size_t>(m) + 1);
    p[static_cast<std::size_t>(m)] = 1;
    return CycloElement(n, reduce_poly(p, fd));
}

CycloElement add(const CycloElement& x, const CycloElement& y) {
    check_same_order(x, y);
    std::vector<Rational> c(x.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs()[i];
    return CycloElement(x.order(), std::move(c));
}

CycloElement sub(const CycloElement& x, const CycloElement& y) {
    check_same_order(x, y);
    std::vector<Rational> c(x.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= y.coeffs()[i];
    return CycloElement(x.order(), std::move(c));
}

CycloElement neg(const CycloElement& x) {
    std::vector<Rational> c(x.coeffs());
    for (Rational& v : c) v = -v;
    return CycloElement(x.order(), std::move(c));
}

CycloElement scalar_mul(const Rational& q, const CycloElement& x) {
    std::vector<Rational> c(x.coeffs());
    for (Rational& v : c) v *= q;
    return CycloElement(x.order(), std::move(c));
}

CycloElement mul(const CycloElement& x, const CycloElement& y) {
    check_same_order(x, y);
    const FieldData& fd = field_data(x.order());
    const auto& a = x.coeffs();
    const auto& b = y.coeffs();
    std::vector<Rational> prod(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    return CycloElement(x.order(), reduce_poly(prod, fd));
}

CycloElement invert(const CycloElement& x) {
    if (x.is_zero()) throw DivisionByZero();
    if (x.is_rational()) {
        return CycloElement::from_rational(x.order(),
                                           make_rational(Integer(1), Integer(1)) / x.rational_part());
    }
    // Extended Euclid in Q[x] against the (irreducible) modulus: track the
    // cofactor of x only; the final nonzero remainder is a rational scalar.
    const FieldData& fd = field_data(x.order());
    QPoly r0 = fd.modulus;
    QPoly r1 = x.coeffs();
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    QPoly s0;               // cofactor of x in r0
    QPoly s1 = {Rational(1)};  // cofactor of x in r1

    auto poly_deg = [](const QPoly& p) { return p.empty() ? -1 : static_cast<int>(p.size()) - 1; };

    while (poly_deg(r1) > 0) {
        // r0 = q * r1 + r2
        QPoly q(static_cast<std::size_t>(poly_deg(r0) - poly_deg(r1)) + 1);
        QPoly rem = r0;
        while (poly_deg(rem) >= poly_deg(r1)) {
            Rational c = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        // s2 = s0 - q * s1
        QPoly s2 = s0;
        s2.resize(std::max(s2.size(), q.size() + s1.size()));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        while (!s2.empty() && s2.back() == 0) s2.pop_back();
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw Error("invert: element shares a factor with the modulus");
    // r1 is a nonzero constant g with s1 * x = g (mod Phi_n).
    const Rational& g = r1[0];
    for (Rational& c : s1) c /= g;
    return CycloElement(x.order(), reduce_poly(s1, fd));
}

CycloElement conjugate(const CycloElement& x) {
    unsigned n = x.order();
    const FieldData& fd = field_data(n);
    std::vector<Rational> p(n + 1);
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] == 0) continue;
        std::size_t e = (i == 0) ? 0 : n - i;
        p[e] += x.coeffs()[i];
    }
    return CycloElement(n, reduce_poly(p, fd));
}

CycloElement embed(const CycloElement& x, unsigned m) {
    unsigned n = x.order();
    if (m == 0 || m % n != 0) throw NotASubfield(n, m);
    if (m == n) return x;
    unsigned t = m / n;
    const FieldData& fd = field_data(m);
    std::vector<Rational> p(static_cast<std::size_t>(phi(n) - 1) * t + 1);
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] == 0) continue;
        p[i * t] += x.coeffs()[i];
    }
    return CycloElement(m, reduce_poly(p, fd));
}

bool is_algebraic_integer(const CycloElement& x) {
    return std::all_of(x.coeffs().begin(), x.coeffs().end(),
                       [](const Rational& c) { return is_integer(c); });
}

CycloElement sqrt2(unsigned ambient) {
    if (ambient == 0 || ambient % 8 != 0)
        throw UnsupportedField("sqrt2 needs an ambient field order divisible by 8, got " +
                               std::to_string(ambient));
    long e = static_cast<long>(ambient) / 8;
    return add(root_of_unity(ambient, e), root_of_unity(ambient, -e));
}

CycloElement imag_unit(unsigned ambient) {
    if (ambient == 0 || ambient % 4 != 0)
        throw UnsupportedField("imag_unit needs an ambient field order divisible by 4, got " +
                               std::to_string(ambient));
    return root_of_unity(ambient, static_cast<long>(ambient) / 4);
}

std::optional<std::vector<Rational>> coordinates_in_span(
    const CycloElement& x, const std::vector<CycloElement>& span) {
    const std::size_t rows = x.coeffs().size();
    const std::size_t cols = span.size();
    for (const CycloElement& s : span)
        if (s.order() != x.order()) throw OrderMismatch(s.order(), x.order());

    // Augmented matrix [A | x], eliminated exactly over Q.
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = span[j].coeffs()[i];
    for (std::size_t i = 0; i < rows; ++i) m[i][cols] = x.coeffs()[i];

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        const Rational lead = m[row][col];
        for (std::size_t j = col; j <= cols; ++j) m[row][j] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j <= cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    // Inconsistent iff a zero row has a nonzero right-hand side.
    for (std::size_t i = row; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;

    std::vector<Rational> coords(cols);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) coords[pivot_col[r]] = m[r][cols];
    return coords;
}

bool in_real_quadratic_subfield(const CycloElement& x, unsigned k) {
    if (k == 0 || k % 4 == 0)
        throw UnsupportedField("in_real_quadratic_subfield requires 4 to not divide k, got k = " +
                               std::to_string(k));
    unsigned needed = lcm_u(8, k);
    if (x.order() % needed != 0)
        throw UnsupportedField("ambient field order " + std::to_string(x.order()) +
                               " must be a multiple of lcm(8, k) = " + std::to_string(needed));
    unsigned n = x.order();
    CycloElement s2 = sqrt2(n);
    std::vector<CycloElement> span;
    span.reserve(2 * phi(k));
    for (unsigned i = 0; i < phi(k); ++i) {
        CycloElement wi = embed(root_of_unity(k, static_cast<long>(i)), n);
        span.push_back(wi);
        span.push_back(mul(s2, wi));
    }
    return coordinates_in_span(x, span).has_value();
}

std::optional<CycloElement> descend(const CycloElement& x, unsigned k) {
    unsigned n = x.order();
    if (k == 0 || n % k != 0) throw NotASubfield(k, n);
    if (k == n) return x;
    std::vector<CycloElement> basis;
    basis.reserve(phi(k));
    for (unsigned i = 0; i < phi(k); ++i)
        basis.push_back(embed(root_of_unity(k, static_cast<long>(i)), n));
    auto coords = coordinates_in_span(x, basis);
    if (!coords) return std::nullopt;
    return CycloElement(k, std::move(*coords));
}

}  // namespace prg
