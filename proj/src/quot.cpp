#include "quotdeg/quot.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "quotdeg/errors.hpp"
#include "quotdeg/kahan.hpp"
#include "quotdeg/residue.hpp"

namespace quotdeg {

QuotParams derive_params(long long n, long long d, long long r, long long g) {
    if (n < 1) throw ParameterError("derive_params: n must be >= 1");
    if (r < 1 || r > n) throw ParameterError("derive_params: need 1 <= r <= n");
    if (g < 2) throw ParameterError("derive_params: g must be >= 2");

    QuotParams p;
    p.n = n;
    p.d = d;
    p.r = r;
    p.g = g;

    p.a = d / n;
    if (p.a * n < d) ++p.a;  // smallest a with a*n >= d
    p.b = p.a * n - d;

    long long generic = r * (n - r) * (g - 1);
    p.eps = ((d * r - generic) % n + n) % n;
    p.s_r = generic + p.eps;
    p.e_max = (d * r - p.s_r) / n;
    p.quot_dim = p.eps;
    return p;
}

bool is_zero_dimensional(const QuotParams& p) { return p.eps == 0; }

BigRational holla_degree(const QuotParams& p) {
    if (!is_zero_dimensional(p))
        throw DimensionPositive("Quot scheme has positive dimension eps=" +
                                std::to_string(p.eps) + "; Holla formula inapplicable");

    // Sign exponent (r-1)(br - (g-1)r^2)/n. eps == 0 forces br = (g-1)r^2
    // mod n, hence integrality; validated anyway so corruption fails loudly.
    const long long sign_numer = (p.r - 1) * (p.b * p.r - (p.g - 1) * p.r * p.r);
    if (sign_numer % p.n != 0)
        throw NonIntegerSign("sign exponent " + std::to_string(sign_numer) + "/" +
                             std::to_string(p.n) + " is not an integer");
    const long long sign_exp = sign_numer / p.n;

    const Modulus mod = make_modulus(cyclotomic(static_cast<unsigned long>(p.n)));
    const ResidueElem one = ResidueElem::constant(mod, BigRational(1));

    // Powers of the fixed primitive root, reduced once up front.
    std::vector<ResidueElem> zeta;
    zeta.reserve(static_cast<std::size_t>(p.n));
    for (long long k = 0; k < p.n; ++k)
        zeta.push_back(ResidueElem::x_power(mod, static_cast<unsigned long>(k)));

    const long long root_exp = p.b - p.g + 1;
    // Ordered-pair denominator = (-1)^{C(r,2)(g-1)} * (prod_{i<j} diff)^{2(g-1)}.
    const bool pair_sign_odd = ((p.r * (p.r - 1) / 2) * (p.g - 1)) % 2 != 0;

    ResidueElem total = ResidueElem::constant(mod, BigRational(0));
    std::vector<long long> subset(static_cast<std::size_t>(p.r));
    for (long long i = 0; i < p.r; ++i) subset[static_cast<std::size_t>(i)] = i;

    while (true) {
        long long exp_sum = 0;
        for (long long k : subset) exp_sum += k;

        ResidueElem numer = pow(zeta[1 % p.n], root_exp * exp_sum);

        ResidueElem diff_prod = one;
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = i + 1; j < subset.size(); ++j)
                diff_prod *= zeta[static_cast<std::size_t>(subset[i])] -
                             zeta[static_cast<std::size_t>(subset[j])];

        // Distinct powers of a primitive root differ by a unit, so diff_prod
        // is invertible in Q[x]/cyclotomic(n).
        ResidueElem term = numer * pow(invert(diff_prod), 2 * (p.g - 1));
        if (pair_sign_odd) term = -term;
        total += term;

        // next r-subset of {0, ..., n-1} in lexicographic order
        long long i = p.r - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == p.n - p.r + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (long long j = i + 1; j < p.r; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }

    if (!total.is_constant())
        throw NonRationalResult("holla_degree: root-of-unity sum did not reduce to a constant: " +
                                total.value().str());

    BigRational result = BigRational(p.n).pow(p.r * (p.g - 1)) * total.constant_value();
    if (sign_exp % 2 != 0) result = -result;
    if (!result.is_integer())
        throw NonRationalResult("holla_degree: value " + result.str() + " is not an integer");
    return result;
}

namespace {

using Complex = std::complex<long double>;

void sum_tuples(const std::vector<Complex>& roots, std::vector<int>& picked,
                std::vector<bool>& used, long long r, long long root_exp, long long g,
                KahanSum<Complex>& acc) {
    const long long n = static_cast<long long>(roots.size());
    if (static_cast<long long>(picked.size()) == r) {
        long long exp_sum = 0;
        for (int k : picked) exp_sum += k;
        // prod z_i^{b-g+1} = e^{2 pi i * (b-g+1) * sum(k) / n}
        const long double angle = 2.0L * std::numbers::pi_v<long double> *
                                  static_cast<long double>(root_exp * exp_sum) /
                                  static_cast<long double>(n);
        Complex numer = std::polar<long double>(1.0L, angle);

        Complex denom(1.0L, 0.0L);
        for (std::size_t i = 0; i < picked.size(); ++i)
            for (std::size_t j = 0; j < picked.size(); ++j) {
                if (i == j) continue;
                Complex diff = roots[static_cast<std::size_t>(picked[i])] -
                               roots[static_cast<std::size_t>(picked[j])];
                for (long long e = 0; e < g - 1; ++e) denom *= diff;
            }
        acc += numer / denom;
        return;
    }
    for (int k = 0; k < n; ++k) {
        if (used[static_cast<std::size_t>(k)]) continue;
        used[static_cast<std::size_t>(k)] = true;
        picked.push_back(k);
        sum_tuples(roots, picked, used, r, root_exp, g, acc);
        picked.pop_back();
        used[static_cast<std::size_t>(k)] = false;
    }
}

}  // namespace

double brute_force_degree(const QuotParams& p, const BruteForceOptions& opts) {
    if (!is_zero_dimensional(p))
        throw ParameterError("brute_force_degree: eps=" + std::to_string(p.eps) +
                             ", formula inapplicable");
    if (p.n > opts.max_n)
        throw ParameterError("brute_force_degree: n=" + std::to_string(p.n) +
                             " exceeds cap " + std::to_string(opts.max_n));

    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(p.n));
    for (long long k = 0; k < p.n; ++k)
        roots.push_back(std::polar<long double>(
            1.0L, 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                      static_cast<long double>(p.n)));

    KahanSum<Complex> acc;
    std::vector<int> picked;
    std::vector<bool> used(static_cast<std::size_t>(p.n), false);
    sum_tuples(roots, picked, used, p.r, p.b - p.g + 1, p.g, acc);

    long double factorial = 1.0L;
    for (long long i = 2; i <= p.r; ++i) factorial *= static_cast<long double>(i);
    long double prefactor =
        std::pow(static_cast<long double>(p.n), static_cast<long double>(p.r * (p.g - 1))) /
        factorial;
    const long long sign_exp = ((p.r - 1) * (p.b * p.r - (p.g - 1) * p.r * p.r)) / p.n;
    if (sign_exp % 2 != 0) prefactor = -prefactor;

    Complex total = prefactor * acc.sum;
    const long double scale = std::max<long double>(std::fabs(std::real(total)), 1.0L);
    if (std::fabs(std::imag(total)) > opts.imag_tol * scale)
        throw CrossCheckFailure("brute_force_degree: imaginary part " +
                                std::to_string(static_cast<double>(std::imag(total))) +
                                " exceeds tolerance");
    return static_cast<double>(std::real(total));
}

}  // namespace quotdeg
