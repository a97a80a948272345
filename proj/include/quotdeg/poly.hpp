#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "quotdeg/rational.hpp"

namespace quotdeg {

/**
 * Dense univariate polynomial over the rationals.
 *
 * coeff(i) is the coefficient of x^i. The zero polynomial is the empty
 * coefficient vector; for anything else the leading coefficient is nonzero,
 * so degree() == size of the vector minus one. All arithmetic is exact.
 */
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(std::initializer_list<BigRational> coeffs);  // low power first
    explicit PolyQ(std::vector<BigRational> coeffs);

    static PolyQ constant(const BigRational& c);
    // c * x^k
    static PolyQ monomial(std::size_t k, const BigRational& c = BigRational(1));

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    // Zero beyond the stored degree.
    const BigRational& coeff(std::size_t i) const;
    const std::vector<BigRational>& coeffs() const { return c_; }

    // Precondition: nonzero polynomial.
    const BigRational& leading() const;

    BigRational eval(const BigRational& t) const;

    PolyQ operator-() const;
    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ& operator*=(const PolyQ& o) { *this = *this * o; return *this; }
    PolyQ& operator*=(const BigRational& s);

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const BigRational& s, PolyQ p) { return p *= s; }
    friend PolyQ operator*(PolyQ p, const BigRational& s) { return p *= s; }

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    // Human-readable form, e.g. "x^2 - x + 1"; for diagnostics and tests.
    std::string str() const;

private:
    std::vector<BigRational> c_;
    void trim();
};

struct DivMod {
    PolyQ quot;
    PolyQ rem;
};

// Exact division with remainder: a = quot * b + rem, deg(rem) < deg(b).
// Throws ParameterError when b is the zero polynomial.
DivMod divmod(const PolyQ& a, const PolyQ& b);

inline PolyQ operator/(const PolyQ& a, const PolyQ& b) { return divmod(a, b).quot; }
inline PolyQ operator%(const PolyQ& a, const PolyQ& b) { return divmod(a, b).rem; }

struct ExtGcd {
    PolyQ g;  // monic gcd (zero only if both inputs are zero, which is rejected)
    PolyQ s;
    PolyQ t;  // g == s*a + t*b exactly
};

// Extended Euclidean algorithm over Q[x]. Throws ParameterError when both
// inputs are zero.
ExtGcd ext_gcd(const PolyQ& a, const PolyQ& b);

/**
 * n-th cyclotomic polynomial, computed by exact division of x^n - 1 by the
 * product of the cyclotomic polynomials of the proper divisors of n.
 * Integer coefficients, degree phi(n). Memoized per process.
 */
PolyQ cyclotomic(unsigned long n);

// 1 + x + ... + x^{n-1}, the modulus whose roots are exactly the
// nontrivial n-th roots of unity. Requires n >= 2.
PolyQ all_ones(unsigned long n);

unsigned long euler_phi(unsigned long n);

std::ostream& operator<<(std::ostream& os, const PolyQ& p);

}  // namespace quotdeg
