#pragma once

#include <optional>

#include "quotdeg/quot.hpp"
#include "quotdeg/rational.hpp"

namespace quotdeg {

bool is_prime(long long n);

/**
 * Validated (p, g) pair for the rank-2 pullback-degree bound: p an odd
 * prime, genus g with p+1 > g > 1. Construction rejects anything else.
 */
struct VerschParams {
    long long p;
    long long g;

    VerschParams(long long p, long long g);
};

// The parameter pack (n, d, r, g) = (2p, 2(p-1)(g-1), 2, g). The derived
// values are forced to (a, b, e_max, eps) = (g-1, 2(g-1), 0, 0) by the
// hypothesis p+1 > g; a mismatch throws CrossCheckFailure.
QuotParams specialize(const VerschParams& v);

// Exact value of the degree bound:
//   (-4p)^{g-1} * sum_{z^{2p}=1, z!=1} z^{g-1} / (z-1)^{2g-2}.
BigRational bound_exact(const VerschParams& v);

// Same quantity through floating point:
//   p^{g-1} * sum_{theta=1}^{2p-1} 1 / sin(pi*theta/(2p))^{2g-2},
// with compensated summation. Cross-check only, never feeds exact results.
double bound_trig(const VerschParams& v);

// p^g * bound_exact(v), the degree of the fixed-determinant Quot scheme
// bounding the pullback count. Also evaluated independently through
// holla_degree(specialize(v)); disagreement throws CrossCheckFailure.
BigRational quotf_degree_bound(const VerschParams& v);

// Riemann-Roch bookkeeping for the pushforward bundle. euler_diff is the
// (Hom - Ext) dimension difference and must vanish identically.
struct PushforwardDegrees {
    long long deg_pushforward;  // 2(p-1)(g-1), the degree of the pushforward
    long long deg_hom;          // 4(p-1)(g-1), degree of the Hom sheaf
    long long euler_diff;       // deg_hom + 2(2p-2)(1-g), asserted zero
};

PushforwardDegrees pushforward_degrees(const VerschParams& v);

// Genus-2 case where the exact degree (p^3+2p)/3 is known: the bound
// exceeds it by exactly p^3 - p.
struct G2Comparison {
    BigRational exact;
    BigRational bound;
    BigRational gap;
};

G2Comparison g2_comparison(long long p);

/**
 * Everything the CLI reports for one (g, p): the exact bound, the scaled
 * Quot-scheme degree (cross-checked against the root-of-unity engine), the
 * float evaluation with its relative error, the Riemann-Roch identities,
 * and for g=2 the comparison against the known exact degree.
 */
struct BoundReport {
    BigRational bound_exact;
    BigRational quotf_degree_bound;
    double trig_value = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool within_tol = false;
    bool bound_is_integer = false;  // observed property, reported not assumed
    PushforwardDegrees degrees{};
    std::optional<G2Comparison> g2;
};

BoundReport bound_report(const VerschParams& v, double tol);

}  // namespace quotdeg
