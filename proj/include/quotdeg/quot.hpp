#pragma once

#include "quotdeg/rational.hpp"

namespace quotdeg {

/**
 * Validated parameter pack for a Quot scheme of rank-r subsheaves of a
 * rank-n, degree-d bundle on a genus-g curve, with every derived invariant
 * filled in:
 *
 *   d = a*n - b with 0 <= b < n          (unique decomposition)
 *   eps = d*r - r*(n-r)*(g-1)  mod n,  0 <= eps < n
 *   s_r = r*(n-r)*(g-1) + eps
 *   e_max = (d*r - s_r) / n              (always an integer)
 *   quot_dim = eps                       (dimension of every component)
 */
struct QuotParams {
    long long n = 0;
    long long d = 0;
    long long r = 0;
    long long g = 0;

    long long a = 0;
    long long b = 0;
    long long eps = 0;
    long long s_r = 0;
    long long e_max = 0;
    long long quot_dim = 0;
};

// Throws ParameterError unless 1 <= r <= n and g >= 2.
QuotParams derive_params(long long n, long long d, long long r, long long g);

// The degree formula below applies exactly when this holds (eps == 0).
bool is_zero_dimensional(const QuotParams& p);

/**
 * Exact degree of the zero-dimensional Quot scheme:
 *
 *   (-1)^{(r-1)(br - (g-1)r^2)/n} * n^{r(g-1)} / r!
 *       * sum over r-tuples of mutually distinct n-th roots of unity of
 *         prod_i z_i^{b-g+1} / prod_{i != j} (z_i - z_j)^{g-1}
 *
 * The summand is symmetric, so the sum runs over unordered r-subsets of
 * root exponents and the r! cancels. All arithmetic happens in
 * Q[x]/cyclotomic(n); the final element must reduce to a rational integer.
 *
 * Throws DimensionPositive when eps != 0, NonIntegerSign if the sign
 * exponent is fractional, NonRationalResult if the reduced sum is not a
 * rational integer (both latter cases indicate internal bugs).
 */
BigRational holla_degree(const QuotParams& p);

struct BruteForceOptions {
    long long max_n = 64;     // refuse larger enumerations
    double imag_tol = 1e-6;   // |Im| must stay below this, relative to |Re|
};

/**
 * Floating-point oracle for holla_degree: direct compensated summation over
 * all ordered r-tuples of explicit complex roots of unity. Returns the real
 * part; throws CrossCheckFailure when the imaginary part fails the relative
 * tolerance, ParameterError when n exceeds the cap or eps != 0.
 */
double brute_force_degree(const QuotParams& p, const BruteForceOptions& opts = {});

}  // namespace quotdeg
