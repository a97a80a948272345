#include "quotdeg/versch.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quotdeg/errors.hpp"
#include "quotdeg/kahan.hpp"
#include "quotdeg/residue.hpp"

namespace quotdeg {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

VerschParams::VerschParams(long long p_, long long g_) : p(p_), g(g_) {
    if (p == 2 || !is_prime(p) || !(g > 1) || !(p + 1 > g))
        throw ParameterError("versch: requires p+1 > g > 1 and p != 2 with p an odd prime"
                             " (got p=" + std::to_string(p) + ", g=" + std::to_string(g) + ")");
}

QuotParams specialize(const VerschParams& v) {
    QuotParams q = derive_params(2 * v.p, 2 * (v.p - 1) * (v.g - 1), 2, v.g);
    if (q.a != v.g - 1 || q.b != 2 * (v.g - 1) || q.e_max != 0 || q.eps != 0)
        throw CrossCheckFailure("specialize: derived (a,b,e_max,eps)=(" + std::to_string(q.a) +
                                "," + std::to_string(q.b) + "," + std::to_string(q.e_max) + "," +
                                std::to_string(q.eps) + ") differs from (g-1, 2(g-1), 0, 0)");
    return q;
}

BigRational bound_exact(const VerschParams& v) {
    return BigRational(-4 * v.p).pow(v.g - 1) *
           nontrivial_root_sum(static_cast<unsigned long>(2 * v.p), v.g);
}

double bound_trig(const VerschParams& v) {
    KahanSum<long double> acc;
    const long double half_step = std::numbers::pi_v<long double> /
                                  (2.0L * static_cast<long double>(v.p));
    for (long long theta = 1; theta <= 2 * v.p - 1; ++theta) {
        long double s = std::sin(half_step * static_cast<long double>(theta));
        acc += std::pow(s, static_cast<long double>(-(2 * v.g - 2)));
    }
    long double prefactor =
        std::pow(static_cast<long double>(v.p), static_cast<long double>(v.g - 1));
    return static_cast<double>(prefactor * acc.sum);
}

BigRational quotf_degree_bound(const VerschParams& v) {
    BigRational scaled = BigRational(v.p).pow(v.g) * bound_exact(v);
    BigRational from_formula = holla_degree(specialize(v));
    if (scaled != from_formula)
        throw CrossCheckFailure("quotf_degree_bound: p^g * bound = " + scaled.str() +
                                " but the root-of-unity engine gives " + from_formula.str());
    return scaled;
}

PushforwardDegrees pushforward_degrees(const VerschParams& v) {
    PushforwardDegrees d{};
    d.deg_pushforward = 2 * (v.p - 1) * (v.g - 1);
    d.deg_hom = 4 * (v.p - 1) * (v.g - 1);
    d.euler_diff = d.deg_hom + 2 * (2 * v.p - 2) * (1 - v.g);
    if (d.euler_diff != 0)
        throw CrossCheckFailure("pushforward_degrees: Euler characteristic difference " +
                                std::to_string(d.euler_diff) + " != 0");
    if (d.deg_pushforward != specialize(v).d)
        throw CrossCheckFailure("pushforward_degrees: pushforward degree disagrees with the"
                                " specialized parameter pack");
    return d;
}

G2Comparison g2_comparison(long long p) {
    VerschParams v(p, 2);
    G2Comparison c;
    c.exact = (BigRational(p).pow(3) + BigRational(2 * p)) / BigRational(3);
    c.bound = bound_exact(v);
    c.gap = c.bound - c.exact;
    BigRational expected_gap = BigRational(p).pow(3) - BigRational(p);
    if (c.gap != expected_gap || !(c.gap > BigRational(0)))
        throw CrossCheckFailure("g2_comparison: gap " + c.gap.str() + " != p^3 - p = " +
                                expected_gap.str());
    return c;
}

BoundReport bound_report(const VerschParams& v, double tol) {
    BoundReport r;
    r.bound_exact = bound_exact(v);
    r.quotf_degree_bound = quotf_degree_bound(v);
    r.trig_value = bound_trig(v);
    const double exact_d = r.bound_exact.to_double();
    r.rel_err = std::fabs(r.trig_value - exact_d) / std::fabs(exact_d);
    r.tol = tol;
    r.within_tol = r.rel_err < tol;
    r.bound_is_integer = r.bound_exact.is_integer();
    r.degrees = pushforward_degrees(v);
    if (v.g == 2) r.g2 = g2_comparison(v.p);
    return r;
}

}  // namespace quotdeg
