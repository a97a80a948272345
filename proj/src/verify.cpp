#include "quotdeg/verify.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "quotdeg/bound_poly.hpp"
#include "quotdeg/errors.hpp"
#include "quotdeg/kahan.hpp"
#include "quotdeg/poly.hpp"
#include "quotdeg/quot.hpp"
#include "quotdeg/residue.hpp"
#include "quotdeg/versch.hpp"

namespace quotdeg {

namespace {

using Complex = std::complex<long double>;

std::vector<long long> odd_primes_upto(long long max) {
    std::vector<long long> out;
    for (long long p = 3; p <= max; p += 2)
        if (is_prime(p)) out.push_back(p);
    return out;
}

PolyQ random_poly(std::mt19937& rng, int max_degree, int coeff_range) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_int_distribution<int> num_dist(-coeff_range, coeff_range);
    std::uniform_int_distribution<int> den_dist(1, 4);
    int deg = deg_dist(rng);
    std::vector<BigRational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& q : c) q = BigRational(num_dist(rng), den_dist(rng));
    return PolyQ(std::move(c));
}

PolyQ x_pow_minus_one(unsigned long n) {
    std::vector<BigRational> v(n + 1);
    v[0] = BigRational(-1);
    v[n] = BigRational(1);
    return PolyQ(std::move(v));
}

// Direct complex sum of x^k over the nontrivial n-th roots of unity.
long double power_sum_over_nontrivial_roots(unsigned long n, unsigned long k) {
    KahanSum<long double> re;
    for (unsigned long j = 1; j < n; ++j)
        re += std::cos(2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j * k) /
                       static_cast<long double>(n));
    return re.sum;
}

// Float evaluation of sum_{z^n=1, z!=1} z^{g-1}/(z-1)^{2g-2} over explicit roots.
long double root_sum_float(unsigned long n, long long g) {
    KahanSum<long double> re, im;
    for (unsigned long j = 1; j < n; ++j) {
        Complex z = std::polar<long double>(
            1.0L, 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) /
                      static_cast<long double>(n));
        Complex term = std::pow(z, static_cast<long double>(g - 1)) /
                       std::pow(z - Complex(1.0L), static_cast<long double>(2 * g - 2));
        re += std::real(term);
        im += std::imag(term);
    }
    (void)im;  // vanishes by conjugate symmetry
    return re.sum;
}

struct Suite {
    std::vector<CheckResult> out;
    void record(const std::string& name, const std::function<std::string()>& body) {
        // body returns "" on success, a failure detail otherwise; exceptions fail too
        try {
            std::string detail = body();
            out.push_back({name, detail.empty(), detail});
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
};

std::string format_rel_err(double err) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << err;
    return os.str();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    Suite suite;
    std::mt19937 rng(opts.rng_seed);

    suite.record("divmod_identity", [&]() -> std::string {
        for (int i = 0; i < 200; ++i) {
            PolyQ a = random_poly(rng, 8, 9);
            PolyQ b = random_poly(rng, 5, 9);
            if (b.is_zero()) b = PolyQ{BigRational(1), BigRational(2)};
            DivMod d = divmod(a, b);
            if (d.quot * b + d.rem != a) return "a != q*b + r at iteration " + std::to_string(i);
            if (d.rem.degree() >= b.degree()) return "remainder degree too large";
        }
        return "";
    });

    suite.record("ext_gcd_bezout", [&]() -> std::string {
        for (int i = 0; i < 1000; ++i) {
            PolyQ a = random_poly(rng, 7, 9);
            PolyQ b = random_poly(rng, 7, 9);
            if (a.is_zero() && b.is_zero()) a = PolyQ{BigRational(1)};
            ExtGcd e = ext_gcd(a, b);
            if (e.s * a + e.t * b != e.g) return "Bezout identity failed at " + std::to_string(i);
            if (e.g.leading() != BigRational(1)) return "gcd not monic";
            if (!(a % e.g).is_zero() || !(b % e.g).is_zero()) return "gcd does not divide inputs";
        }
        return "";
    });

    suite.record("cyclotomic_product", []() -> std::string {
        for (unsigned long n = 1; n <= 200; ++n) {
            PolyQ prod = PolyQ::constant(BigRational(1));
            for (unsigned long d = 1; d <= n; ++d)
                if (n % d == 0) prod *= cyclotomic(d);
            if (prod != x_pow_minus_one(n)) return "product != x^n - 1 at n=" + std::to_string(n);
            PolyQ phi = cyclotomic(n);
            if (phi.degree() != static_cast<long>(euler_phi(n)))
                return "degree != phi(n) at n=" + std::to_string(n);
            for (const auto& c : phi.coeffs())
                if (!c.is_integer()) return "non-integer coefficient at n=" + std::to_string(n);
        }
        return "";
    });

    suite.record("all_ones_identity", []() -> std::string {
        PolyQ x_minus_1{BigRational(-1), BigRational(1)};
        for (unsigned long n = 2; n <= 200; ++n)
            if (all_ones(n) * x_minus_1 != x_pow_minus_one(n))
                return "identity failed at n=" + std::to_string(n);
        return "";
    });

    suite.record("residue_inverse", [&]() -> std::string {
        for (unsigned long n : {4ul, 7ul, 12ul, 30ul, 45ul, 60ul}) {
            for (const PolyQ& base : {cyclotomic(n), all_ones(n)}) {
                Modulus m = make_modulus(base);
                ResidueElem one = ResidueElem::constant(m, BigRational(1));
                for (int i = 0; i < 8; ++i) {
                    ResidueElem a(m, random_poly(rng, static_cast<int>(base.degree()) - 1, 5));
                    if (a.is_zero()) continue;
                    try {
                        if (invert(a) * a != one)
                            return "inverse check failed mod n=" + std::to_string(n);
                    } catch (const NonInvertible&) {
                        // legitimate zero divisors exist modulo all_ones(n)
                    }
                }
            }
        }
        return "";
    });

    suite.record("trace_formula", []() -> std::string {
        for (unsigned long n = 2; n <= 60; ++n) {
            Modulus m = make_modulus(all_ones(n));
            for (unsigned long k = 0; k < 3 * n; ++k) {
                BigRational expected(k % n == 0 ? static_cast<long long>(n) - 1 : -1);
                ResidueElem xk = ResidueElem::x_power(m, k);
                if (trace_nontrivial(n, xk) != expected)
                    return "trace(x^" + std::to_string(k) + ") wrong at n=" + std::to_string(n);
                long double direct = power_sum_over_nontrivial_roots(n, k);
                if (std::fabs(static_cast<double>(direct) - expected.to_double()) > 1e-6)
                    return "complex summation disagrees at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k);
            }
        }
        return "";
    });

    suite.record("trace_linearity", [&]() -> std::string {
        for (unsigned long n : {5ul, 12ul, 26ul}) {
            Modulus m = make_modulus(all_ones(n));
            for (int i = 0; i < 25; ++i) {
                ResidueElem f(m, random_poly(rng, static_cast<int>(n) - 2, 7));
                ResidueElem h(m, random_poly(rng, static_cast<int>(n) - 2, 7));
                BigRational alpha(std::uniform_int_distribution<int>(-5, 5)(rng),
                                  std::uniform_int_distribution<int>(1, 4)(rng));
                BigRational beta(std::uniform_int_distribution<int>(-5, 5)(rng),
                                 std::uniform_int_distribution<int>(1, 4)(rng));
                ResidueElem combo = alpha * f + beta * h;
                if (trace_nontrivial(n, combo) !=
                    alpha * trace_nontrivial(n, f) + beta * trace_nontrivial(n, h))
                    return "linearity failed at n=" + std::to_string(n);
            }
        }
        return "";
    });

    suite.record("root_sum_float_agreement", [&]() -> std::string {
        double worst = 0.0;
        for (unsigned long n = 2; n <= 60; ++n) {
            for (long long g = 2; g <= 6; ++g) {
                double exact = nontrivial_root_sum(n, g).to_double();
                double approx = static_cast<double>(root_sum_float(n, g));
                double err = std::fabs(approx - exact) / std::fabs(exact);
                worst = std::max(worst, err);
                if (err > opts.tol)
                    return "rel err " + format_rel_err(err) + " at n=" + std::to_string(n) +
                           ", g=" + std::to_string(g);
            }
        }
        return "";
    });

    suite.record("sign_exponent_integral", [&]() -> std::string {
        // r capped at 4: subset enumeration is binomial(n, r)
        std::uniform_int_distribution<long long> n_dist(2, 30), g_dist(2, 6), shift(-3, 3);
        for (int i = 0; i < 60; ++i) {
            long long n = n_dist(rng);
            long long r = std::uniform_int_distribution<long long>(1, std::min<long long>(4, n))(rng);
            long long g = g_dist(rng);
            for (long long d0 = 0; d0 < n; ++d0) {
                QuotParams q = derive_params(n, d0 + shift(rng) * n, r, g);
                if (!is_zero_dimensional(q)) continue;
                long long numer = (q.r - 1) * (q.b * q.r - (q.g - 1) * q.r * q.r);
                if (numer % q.n != 0)
                    return "non-integral sign exponent for (n,d,r,g)=(" + std::to_string(q.n) +
                           "," + std::to_string(q.d) + "," + std::to_string(q.r) + "," +
                           std::to_string(q.g) + ")";
                // evaluate the degree only while the enumeration and the
                // field degree (Euclid cost) stay modest
                long long subsets = 1;
                for (long long i = 0; i < r; ++i) subsets = subsets * (n - i) / (i + 1);
                if (subsets <= 2000 &&
                    euler_phi(static_cast<unsigned long>(n)) <= 12) {
                    BigRational deg = holla_degree(q);
                    if (!deg.is_integer() || !(deg > BigRational(0)))
                        return "degree not a positive integer for n=" + std::to_string(q.n);
                }
                break;
            }
        }
        return "";
    });

    suite.record("classical_count_2g", []() -> std::string {
        for (long long g = 2; g <= 8; ++g) {
            long long d = (g - 1) % 2;
            QuotParams q = derive_params(2, d, 1, g);
            if (holla_degree(q) != BigRational(2).pow(g))
                return "degree != 2^g at g=" + std::to_string(g);
        }
        return "";
    });

    suite.record("holla_vs_brute_force", []() -> std::string {
        for (long long n = 2; n <= 10; ++n)
            for (long long r = 1; r <= std::min<long long>(3, n); ++r)
                for (long long g = 2; g <= 4; ++g)
                    for (long long d = 0; d < n; ++d) {
                        QuotParams q = derive_params(n, d, r, g);
                        if (!is_zero_dimensional(q)) continue;
                        double exact = holla_degree(q).to_double();
                        double approx = brute_force_degree(q);
                        if (std::fabs(approx - exact) > 1e-6 * std::fabs(exact))
                            return "mismatch at (n,d,r,g)=(" + std::to_string(n) + "," +
                                   std::to_string(d) + "," + std::to_string(r) + "," +
                                   std::to_string(g) + ")";
                    }
        return "";
    });

    suite.record("cross_path_grid", [&]() -> std::string {
        for (long long p : odd_primes_upto(opts.p_max)) {
            for (long long g = 2; g <= std::min(opts.g_max, p); ++g) {
                VerschParams v(p, g);
                BoundReport r = bound_report(v, opts.tol);
                if (r.quotf_degree_bound != BigRational(p).pow(g) * r.bound_exact)
                    return "p^g scaling failed at (g,p)=(" + std::to_string(g) + "," +
                           std::to_string(p) + ")";
                if (!r.within_tol)
                    return "trig rel err " + format_rel_err(r.rel_err) + " at (g,p)=(" +
                           std::to_string(g) + "," + std::to_string(p) + ")";
                if (!r.bound_is_integer)
                    return "FINDING: bound_exact not an integer at (g,p)=(" + std::to_string(g) +
                           "," + std::to_string(p) + "): " + r.bound_exact.str();
                if (r.degrees.euler_diff != 0) return "Euler difference nonzero";
            }
        }
        return "";
    });

    suite.record("g2_gap_law", [&]() -> std::string {
        for (long long p : odd_primes_upto(opts.p_max)) {
            G2Comparison c = g2_comparison(p);
            if (c.gap != BigRational(p).pow(3) - BigRational(p))
                return "gap != p^3 - p at p=" + std::to_string(p);
        }
        return "";
    });

    suite.record("bound_polynomial_match", [&]() -> std::string {
        for (long long g = 2; g <= std::min<long long>(opts.g_max, 6); ++g) {
            PolynomialInP poly = bound_polynomial(g);
            PolynomialInP rebuilt = bound_polynomial_from(g, 5);
            if (poly.coeffs() != rebuilt.coeffs())
                return "node-set dependence at g=" + std::to_string(g);
            for (long long p : odd_primes_upto(std::min<long long>(opts.p_max, 31))) {
                if (g >= p + 1) continue;
                if (eval_polynomial(poly, p) != bound_exact(VerschParams(p, g)))
                    return "polynomial disagrees with the exact bound at (g,p)=(" +
                           std::to_string(g) + "," + std::to_string(p) + ")";
            }
        }
        return "";
    });

    return suite.out;
}

}  // namespace quotdeg
