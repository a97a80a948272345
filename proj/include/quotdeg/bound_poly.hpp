#pragma once

#include <vector>

#include "quotdeg/rational.hpp"

namespace quotdeg {

/**
 * The degree bound for a fixed genus, recovered as an exact polynomial in
 * the characteristic p. Degree is exactly 3g-3 and only the powers
 * g-1, g+1, ..., 3g-3 can carry nonzero coefficients (the bound is p^{g-1}
 * times a polynomial in p^2).
 */
class PolynomialInP {
public:
    PolynomialInP(long long g, std::vector<BigRational> coeffs);

    long long genus() const { return g_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    const BigRational& coeff(std::size_t power) const;

    BigRational eval(const BigRational& p) const;

private:
    long long g_;
    std::vector<BigRational> coeffs_;  // index = power of p
};

/**
 * Interpolates the bound:
 *
 *   B(g, m) = (-4m)^{g-1} * nontrivial_root_sum(2m, g)
 *
 * is evaluated exactly at the 3g-2 integer nodes m = 2, ..., 3g-1 (the
 * expression is defined for any integer m >= 2, primality plays no role),
 * run through Newton divided differences over the rationals, and the
 * resulting degree <= 3g-3 polynomial is verified by exact equality at the
 * three fresh nodes m = 3g, 3g+1, 3g+2. The degree and coefficient-support
 * invariants are asserted; any mismatch throws CrossCheckFailure.
 */
PolynomialInP bound_polynomial(long long g);

// Same construction from nodes first_node, ..., first_node + 3g-3, with
// verification at the next three integers. The result cannot depend on the
// node set; tests rely on that.
PolynomialInP bound_polynomial_from(long long g, long long first_node);

// Exact Horner evaluation at an integer characteristic.
BigRational eval_polynomial(const PolynomialInP& poly, long long p);

}  // namespace quotdeg
