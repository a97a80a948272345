#include "quotdeg/bound_poly.hpp"

#include <string>
#include <utility>

#include "quotdeg/errors.hpp"
#include "quotdeg/poly.hpp"
#include "quotdeg/residue.hpp"

namespace quotdeg {

namespace {
const BigRational kZero(0);

BigRational bound_at(long long g, long long m) {
    return BigRational(-4 * m).pow(g - 1) *
           nontrivial_root_sum(static_cast<unsigned long>(2 * m), g);
}
}  // namespace

PolynomialInP::PolynomialInP(long long g, std::vector<BigRational> coeffs)
    : g_(g), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigRational& PolynomialInP::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : kZero;
}

BigRational PolynomialInP::eval(const BigRational& p) const {
    BigRational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * p + coeffs_[i];
    return acc;
}

PolynomialInP bound_polynomial(long long g) { return bound_polynomial_from(g, 2); }

PolynomialInP bound_polynomial_from(long long g, long long first_node) {
    if (g < 2) throw ParameterError("bound_polynomial: g must be >= 2");
    if (first_node < 2) throw ParameterError("bound_polynomial: nodes start at m >= 2");

    const long long node_count = 3 * g - 2;  // one more than the degree
    std::vector<BigRational> nodes, dd;
    nodes.reserve(static_cast<std::size_t>(node_count));
    dd.reserve(static_cast<std::size_t>(node_count));
    for (long long m = first_node; m < first_node + node_count; ++m) {
        nodes.emplace_back(m);
        dd.push_back(bound_at(g, m));
    }

    // Newton divided differences, updated in place.
    for (std::size_t j = 1; j < dd.size(); ++j)
        for (std::size_t i = dd.size(); i-- > j;)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j]);

    // Expand the Newton form to monomial coefficients.
    PolyQ poly = PolyQ::constant(dd.back());
    for (std::size_t j = dd.size() - 1; j-- > 0;)
        poly = poly * PolyQ{-nodes[j], BigRational(1)} + PolyQ::constant(dd[j]);

    PolynomialInP result(g, poly.coeffs());

    for (long long m = first_node + node_count; m < first_node + node_count + 3; ++m) {
        if (result.eval(BigRational(m)) != bound_at(g, m))
            throw CrossCheckFailure("bound_polynomial: verification node m=" + std::to_string(m) +
                                    " disagrees with the interpolant");
    }

    if (result.degree() != 3 * g - 3)
        throw CrossCheckFailure("bound_polynomial: degree " + std::to_string(result.degree()) +
                                " != 3g-3");
    for (std::size_t k = 0; k < result.coeffs().size(); ++k) {
        if (result.coeffs()[k].is_zero()) continue;
        const long long power = static_cast<long long>(k);
        if (power < g - 1 || (power - (g - 1)) % 2 != 0)
            throw CrossCheckFailure("bound_polynomial: unexpected coefficient at power " +
                                    std::to_string(power));
    }
    return result;
}

BigRational eval_polynomial(const PolynomialInP& poly, long long p) {
    return poly.eval(BigRational(p));
}

}  // namespace quotdeg
