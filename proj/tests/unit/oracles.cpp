#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "quotdeg/errors.hpp"
#include "quotdeg/kahan.hpp"
#include "quotdeg/residue.hpp"

namespace quotdeg::oracles {

namespace {
using Complex = std::complex<long double>;
constexpr long double kPi = std::numbers::pi_v<long double>;

Complex root(unsigned long n, unsigned long j) {
    return std::polar<long double>(1.0L, 2.0L * kPi * static_cast<long double>(j) /
                                             static_cast<long double>(n));
}
}  // namespace

long double power_sum(unsigned long n, long long k) {
    KahanSum<long double> acc;
    for (unsigned long j = 1; j < n; ++j)
        acc += std::cos(2.0L * kPi * static_cast<long double>(j) * static_cast<long double>(k) /
                        static_cast<long double>(n));
    return acc.sum;
}

long double root_sum_complex(unsigned long n, long long g) {
    KahanSum<long double> re;
    for (unsigned long j = 1; j < n; ++j) {
        Complex z = root(n, j);
        Complex term = std::pow(z, static_cast<long double>(g - 1)) /
                       std::pow(z - Complex(1.0L), static_cast<long double>(2 * g - 2));
        re += std::real(term);
    }
    return re.sum;
}

long double root_sum_sine(unsigned long n, long long g) {
    KahanSum<long double> acc;
    for (unsigned long theta = 1; theta < n; ++theta) {
        long double s = std::sin(kPi * static_cast<long double>(theta) /
                                 static_cast<long double>(n));
        acc += std::pow(s, static_cast<long double>(-(2 * g - 2)));
    }
    long double scale = std::pow(-0.25L, static_cast<long double>(g - 1));
    return scale * acc.sum;
}

BigRational holla_degree_ordered(const QuotParams& p) {
    const Modulus mod = make_modulus(cyclotomic(static_cast<unsigned long>(p.n)));
    const ResidueElem x = ResidueElem::x_power(mod, 1);
    ResidueElem total = ResidueElem::constant(mod, BigRational(0));

    std::vector<long long> tuple;
    std::vector<bool> used(static_cast<std::size_t>(p.n), false);
    const long long root_exp = p.b - p.g + 1;

    auto recurse = [&](auto&& self) -> void {
        if (static_cast<long long>(tuple.size()) == p.r) {
            long long exp_sum = 0;
            for (long long k : tuple) exp_sum += k;
            ResidueElem numer = pow(x, root_exp * exp_sum);
            ResidueElem denom = ResidueElem::constant(mod, BigRational(1));
            for (std::size_t i = 0; i < tuple.size(); ++i)
                for (std::size_t j = 0; j < tuple.size(); ++j) {
                    if (i == j) continue;
                    ResidueElem diff =
                        ResidueElem::x_power(mod, static_cast<unsigned long>(tuple[i])) -
                        ResidueElem::x_power(mod, static_cast<unsigned long>(tuple[j]));
                    denom *= pow(diff, p.g - 1);
                }
            total += numer * invert(denom);
            return;
        }
        for (long long k = 0; k < p.n; ++k) {
            if (used[static_cast<std::size_t>(k)]) continue;
            used[static_cast<std::size_t>(k)] = true;
            tuple.push_back(k);
            self(self);
            tuple.pop_back();
            used[static_cast<std::size_t>(k)] = false;
        }
    };
    recurse(recurse);

    BigRational factorial(1);
    for (long long i = 2; i <= p.r; ++i) factorial *= BigRational(i);

    const long long sign_numer = (p.r - 1) * (p.b * p.r - (p.g - 1) * p.r * p.r);
    if (sign_numer % p.n != 0) throw NonIntegerSign("ordered oracle: fractional sign exponent");

    BigRational value = total.constant_value();  // throws if not Galois-invariant
    BigRational result = BigRational(p.n).pow(p.r * (p.g - 1)) / factorial * value;
    if ((sign_numer / p.n) % 2 != 0) result = -result;
    return result;
}

}  // namespace quotdeg::oracles
