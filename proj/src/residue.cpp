#include "quotdeg/residue.hpp"

#include <string>
#include <utility>

#include "quotdeg/errors.hpp"

namespace quotdeg {

namespace {

void require_same_modulus(const ResidueElem& a, const ResidueElem& b) {
    if (a.modulus() == b.modulus()) return;
    if (*a.modulus() == *b.modulus()) return;
    throw ModulusMismatch("ResidueElem: mixing elements of Q[x]/(" + a.modulus()->str() +
                          ") and Q[x]/(" + b.modulus()->str() + ")");
}

}  // namespace

Modulus make_modulus(PolyQ m) {
    if (m.degree() < 1) throw ParameterError("make_modulus: modulus must have degree >= 1");
    if (m.leading() != BigRational(1)) m *= BigRational(1) / m.leading();
    return std::make_shared<const PolyQ>(std::move(m));
}

ResidueElem::ResidueElem(Modulus m, const PolyQ& value) : m_(std::move(m)) {
    if (!m_ || m_->degree() < 1) throw ParameterError("ResidueElem: invalid modulus");
    v_ = value.degree() < m_->degree() ? value : value % *m_;
}

ResidueElem ResidueElem::constant(const Modulus& m, const BigRational& c) {
    return ResidueElem(m, PolyQ::constant(c));
}

ResidueElem ResidueElem::x_power(const Modulus& m, unsigned long k) {
    return ResidueElem(m, PolyQ::monomial(k));
}

BigRational ResidueElem::constant_value() const {
    if (!v_.is_constant())
        throw NonRationalResult("ResidueElem: " + v_.str() + " is not a rational constant");
    return v_.coeff(0);
}

ResidueElem ResidueElem::operator-() const { return ResidueElem(m_, -v_); }

ResidueElem operator+(const ResidueElem& a, const ResidueElem& b) {
    require_same_modulus(a, b);
    return ResidueElem(a.m_, a.v_ + b.v_);
}

ResidueElem operator-(const ResidueElem& a, const ResidueElem& b) {
    require_same_modulus(a, b);
    return ResidueElem(a.m_, a.v_ - b.v_);
}

ResidueElem operator*(const ResidueElem& a, const ResidueElem& b) {
    require_same_modulus(a, b);
    return ResidueElem(a.m_, a.v_ * b.v_);
}

ResidueElem operator*(const BigRational& s, const ResidueElem& a) {
    return ResidueElem(a.m_, a.v_ * s);
}

bool operator==(const ResidueElem& a, const ResidueElem& b) {
    require_same_modulus(a, b);
    return a.v_ == b.v_;
}

ResidueElem invert(const ResidueElem& a) {
    if (a.is_zero()) throw NonInvertible("invert: zero element");
    ExtGcd e = ext_gcd(a.value(), *a.modulus());
    if (e.g.degree() != 0)
        throw NonInvertible("invert: " + a.value().str() + " shares the factor " + e.g.str() +
                            " with the modulus");
    // g is the monic constant 1, so s * a == 1 (mod m).
    return ResidueElem(a.modulus(), e.s);
}

ResidueElem pow(const ResidueElem& a, long long e) {
    if (e < 0) return pow(invert(a), -e);
    ResidueElem acc = ResidueElem::constant(a.modulus(), BigRational(1));
    ResidueElem base = a;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

BigRational trace_nontrivial(unsigned long n, const ResidueElem& f) {
    if (n < 2) throw ParameterError("trace_nontrivial: n must be >= 2");
    if (*f.modulus() != all_ones(n))
        throw ModulusMismatch("trace_nontrivial: element does not live in Q[x]/(1+x+...+x^" +
                              std::to_string(n - 1) + ")");
    const BigRational n_q(static_cast<long long>(n));
    BigRational acc(0);
    const auto& coeffs = f.value().coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        // T(k) = n*[n | k] - 1; only k = 0 can hit the divisibility branch
        // for a reduced representative.
        BigRational tk = (k % n == 0) ? n_q - BigRational(1) : BigRational(-1);
        acc += coeffs[k] * tk;
    }
    return acc;
}

namespace {

// Square-and-multiply on plain polynomials; exponents here stay tiny.
PolyQ poly_pow(const PolyQ& base, unsigned long e) {
    PolyQ acc = PolyQ::constant(BigRational(1));
    PolyQ b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace

BigRational nontrivial_root_sum(unsigned long n, long long g) {
    if (n < 2) throw ParameterError("nontrivial_root_sum: n must be >= 2");
    if (g < 2) throw ParameterError("nontrivial_root_sum: g must be >= 2");
    Modulus m = make_modulus(all_ones(n));
    // (x-1)^{2g-2} expanded before entering the ring, then one reduction and
    // one inversion. gcd(x-1, 1+x+...+x^{n-1}) = 1 since the modulus
    // evaluates to n at 1, so the inversion cannot fail.
    PolyQ denom = poly_pow(PolyQ{BigRational(-1), BigRational(1)},
                           static_cast<unsigned long>(2 * g - 2));
    ResidueElem denom_inv = invert(ResidueElem(m, denom));
    ResidueElem f = ResidueElem::x_power(m, static_cast<unsigned long>(g - 1)) * denom_inv;
    return trace_nontrivial(n, f);
}

}  // namespace quotdeg
