#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "quotdeg/errors.hpp"
#include "quotdeg/residue.hpp"

using namespace quotdeg;

namespace {

Modulus gaussian() {  // x^2 + 1
    return make_modulus(PolyQ{BigRational(1), BigRational(0), BigRational(1)});
}

PolyQ random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), num(-7, 7), den(1, 3);
    std::vector<BigRational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& q : c) q = BigRational(num(rng), den(rng));
    return PolyQ(std::move(c));
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
    SUBCASE("x * x = -1 mod x^2+1") {
        Modulus m = gaussian();
        ResidueElem x = ResidueElem::x_power(m, 1);
        CHECK(x * x == ResidueElem::constant(m, BigRational(-1)));
    }
    SUBCASE("x * x^5 reduces mod all_ones(6)") {
        Modulus m = make_modulus(all_ones(6));
        ResidueElem prod = ResidueElem::x_power(m, 1) * ResidueElem::x_power(m, 5);
        CHECK(prod.value().degree() < 5);
        CHECK(prod == ResidueElem::constant(m, BigRational(1)));  // x^6 = 1 there
    }
    SUBCASE("(x-1)(x+1) = x-2 mod cyclotomic(6)") {
        Modulus m = make_modulus(cyclotomic(6));
        ResidueElem a(m, PolyQ{BigRational(-1), BigRational(1)});
        ResidueElem b(m, PolyQ{BigRational(1), BigRational(1)});
        // independent route: long-divide x^2-1 by x^2-x+1 directly
        DivMod d = divmod(PolyQ{BigRational(-1), BigRational(0), BigRational(1)}, cyclotomic(6));
        CHECK((a * b).value() == d.rem);
        CHECK((a * b).value() == PolyQ{BigRational(-2), BigRational(1)});
    }
}

TEST_CASE("moduli must match") {
    ResidueElem a = ResidueElem::x_power(gaussian(), 1);
    ResidueElem b = ResidueElem::x_power(make_modulus(cyclotomic(6)), 1);
    CHECK_THROWS_AS(a + b, ModulusMismatch);
    CHECK_THROWS_AS(a * b, ModulusMismatch);

    // same polynomial behind two distinct handles composes fine
    ResidueElem c = ResidueElem::x_power(gaussian(), 1);
    CHECK(a * c == ResidueElem::constant(gaussian(), BigRational(-1)));
}

TEST_CASE("inversion") {
    SUBCASE("invert(x) = -x mod x^2+1") {
        Modulus m = gaussian();
        ResidueElem x = ResidueElem::x_power(m, 1);
        CHECK(invert(x) == -x);
        CHECK(pow(x, -1) == -x);
    }
    SUBCASE("x-1 is a unit mod all_ones(6)") {
        Modulus m = make_modulus(all_ones(6));
        ResidueElem a(m, PolyQ{BigRational(-1), BigRational(1)});
        CHECK(invert(a) * a == ResidueElem::constant(m, BigRational(1)));
    }
    SUBCASE("x-1 is a zero divisor mod x^2-1") {
        Modulus m = make_modulus(PolyQ{BigRational(-1), BigRational(0), BigRational(1)});
        ResidueElem a(m, PolyQ{BigRational(-1), BigRational(1)});
        CHECK_THROWS_AS(invert(a), NonInvertible);
        CHECK_THROWS_AS(invert(ResidueElem::constant(m, BigRational(0))), NonInvertible);
    }
}

TEST_CASE("inverse property on random elements") {
    std::mt19937 rng(23);
    for (const PolyQ& base : {cyclotomic(12), all_ones(12), cyclotomic(30)}) {
        Modulus m = make_modulus(base);
        ResidueElem one = ResidueElem::constant(m, BigRational(1));
        for (int i = 0; i < 25; ++i) {
            ResidueElem a(m, random_poly(rng, static_cast<int>(base.degree()) - 1));
            if (a.is_zero()) continue;
            try {
                ResidueElem inv = invert(a);
                CHECK(inv * a == one);
            } catch (const NonInvertible&) {
                // possible modulo all_ones(12); never for an irreducible modulus
                CHECK(base == all_ones(12));
            }
        }
    }
}

TEST_CASE("trace over nontrivial roots") {
    Modulus m = make_modulus(all_ones(6));
    CHECK(trace_nontrivial(6, ResidueElem::constant(m, BigRational(1))) == BigRational(5));
    CHECK(trace_nontrivial(6, ResidueElem::x_power(m, 1)) == BigRational(-1));
    CHECK(trace_nontrivial(6, ResidueElem::x_power(m, 3)) == BigRational(-1));

    // direct complex summation of z^3 over the five nontrivial 6th roots
    CHECK(static_cast<double>(oracles::power_sum(6, 3)) == doctest::Approx(-1.0).epsilon(1e-12));

    // wrong modulus is rejected
    CHECK_THROWS_AS(trace_nontrivial(6, ResidueElem::x_power(gaussian(), 1)), ModulusMismatch);
}

TEST_CASE("trace matches complex summation for all powers") {
    for (unsigned long n : {2ul, 5ul, 6ul, 12ul, 30ul}) {
        Modulus m = make_modulus(all_ones(n));
        for (unsigned long k = 0; k < 3 * n; ++k) {
            BigRational expected(k % n == 0 ? static_cast<long long>(n) - 1 : -1);
            CHECK(trace_nontrivial(n, ResidueElem::x_power(m, k)) == expected);
            CHECK(static_cast<double>(oracles::power_sum(n, static_cast<long long>(k))) ==
                  doctest::Approx(expected.to_double()).epsilon(1e-9));
        }
    }
}

TEST_CASE("trace is linear") {
    std::mt19937 rng(31);
    Modulus m = make_modulus(all_ones(10));
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    for (int i = 0; i < 30; ++i) {
        ResidueElem f(m, random_poly(rng, 8));
        ResidueElem h(m, random_poly(rng, 8));
        BigRational alpha(num(rng), den(rng)), beta(num(rng), den(rng));
        CHECK(trace_nontrivial(10, alpha * f + beta * h) ==
              alpha * trace_nontrivial(10, f) + beta * trace_nontrivial(10, h));
    }
}

TEST_CASE("nontrivial_root_sum") {
    SUBCASE("n=2, g=2: single term at z=-1") {
        CHECK(nontrivial_root_sum(2, 2) == BigRational(-1, 4));
    }
    SUBCASE("n=6, g=2 equals -35/12 by two float routes") {
        CHECK(nontrivial_root_sum(6, 2) == BigRational(-35, 12));
        CHECK(static_cast<double>(oracles::root_sum_sine(6, 2)) ==
              doctest::Approx(-35.0 / 12.0).epsilon(1e-12));
        CHECK(static_cast<double>(oracles::root_sum_complex(6, 2)) ==
              doctest::Approx(-35.0 / 12.0).epsilon(1e-12));
    }
    SUBCASE("n=10, g=3 vs complex brute force at 1e-12") {
        double exact = nontrivial_root_sum(10, 3).to_double();
        double brute = static_cast<double>(oracles::root_sum_complex(10, 3));
        CHECK(std::fabs(brute - exact) <= 1e-12 * std::fabs(exact));
    }
    SUBCASE("float agreement across a range") {
        for (unsigned long n = 2; n <= 30; ++n)
            for (long long g = 2; g <= 5; ++g) {
                double exact = nontrivial_root_sum(n, g).to_double();
                CHECK(static_cast<double>(oracles::root_sum_sine(n, g)) ==
                      doctest::Approx(exact).epsilon(1e-9));
            }
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(nontrivial_root_sum(1, 2), ParameterError);
        CHECK_THROWS_AS(nontrivial_root_sum(6, 1), ParameterError);
    }
}
