#pragma once

#include <memory>

#include "quotdeg/poly.hpp"

namespace quotdeg {

// Shared, immutable modulus. Elements of the same ring should share one
// Modulus instance; equality falls back to comparing the polynomials.
using Modulus = std::shared_ptr<const PolyQ>;

// Normalizes to a monic modulus. Requires degree >= 1.
Modulus make_modulus(PolyQ m);

/**
 * Element of the quotient ring Q[x]/m(x).
 *
 * The representative is always fully reduced (degree < degree of m), and
 * elements combine only when their moduli agree. For m = cyclotomic(n) the
 * class x represents a fixed primitive n-th root of unity; for
 * m = all_ones(n) it ranges over all nontrivial n-th roots at once.
 */
class ResidueElem {
public:
    ResidueElem(Modulus m, const PolyQ& value);

    static ResidueElem constant(const Modulus& m, const BigRational& c);
    // x^k mod m for k >= 0.
    static ResidueElem x_power(const Modulus& m, unsigned long k);

    const PolyQ& value() const { return v_; }
    const Modulus& modulus() const { return m_; }

    bool is_zero() const { return v_.is_zero(); }
    bool is_constant() const { return v_.is_constant(); }

    // The value as a rational scalar; throws NonRationalResult when the
    // reduced representative is not constant.
    BigRational constant_value() const;

    ResidueElem operator-() const;
    friend ResidueElem operator+(const ResidueElem& a, const ResidueElem& b);
    friend ResidueElem operator-(const ResidueElem& a, const ResidueElem& b);
    friend ResidueElem operator*(const ResidueElem& a, const ResidueElem& b);
    friend ResidueElem operator*(const BigRational& s, const ResidueElem& a);

    ResidueElem& operator+=(const ResidueElem& o) { return *this = *this + o; }
    ResidueElem& operator*=(const ResidueElem& o) { return *this = *this * o; }

    friend bool operator==(const ResidueElem& a, const ResidueElem& b);

private:
    Modulus m_;
    PolyQ v_;
};

// Multiplicative inverse via the extended Euclidean algorithm. Throws
// NonInvertible when the element shares a factor with the modulus.
ResidueElem invert(const ResidueElem& a);

// Square-and-multiply; negative exponents go through invert.
ResidueElem pow(const ResidueElem& a, long long e);

/**
 * Sum of f over the nontrivial n-th roots of unity, taken exactly.
 *
 * f must live in Q[x]/all_ones(n). Writing f = sum coeff_k x^k with
 * k < n-1, each power contributes T(k) = n*[n | k] - 1, the trace of
 * multiplication by x^k on that algebra, so the result is
 * sum_k coeff_k * T(k).
 */
BigRational trace_nontrivial(unsigned long n, const ResidueElem& f);

// Exact value of  sum_{z^n = 1, z != 1}  z^{g-1} / (z - 1)^{2g-2},
// computed by inverting (x-1)^{2g-2} in Q[x]/all_ones(n), multiplying by
// x^{g-1} and applying trace_nontrivial. Requires n >= 2, g >= 2.
BigRational nontrivial_root_sum(unsigned long n, long long g);

}  // namespace quotdeg
