#include "quotdeg/poly.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

#include "quotdeg/errors.hpp"

namespace quotdeg {

namespace {
const BigRational kZero(0);
}

PolyQ::PolyQ(std::initializer_list<BigRational> coeffs) : c_(coeffs) { trim(); }

PolyQ::PolyQ(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::constant(const BigRational& c) { return PolyQ{c}; }

PolyQ PolyQ::monomial(std::size_t k, const BigRational& c) {
    if (c.is_zero()) return PolyQ();
    std::vector<BigRational> v(k + 1);
    v[k] = c;
    return PolyQ(std::move(v));
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const BigRational& PolyQ::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const BigRational& PolyQ::leading() const {
    if (is_zero()) throw ParameterError("PolyQ: zero polynomial has no leading coefficient");
    return c_.back();
}

BigRational PolyQ::eval(const BigRational& t) const {
    BigRational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

PolyQ PolyQ::operator-() const {
    PolyQ r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const BigRational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyQ(std::move(r));
}

std::string PolyQ::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigRational& c = c_[i];
        if (c.is_zero()) continue;
        BigRational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != BigRational(1)) os << mag.str();
        if (i > 0) {
            if (mag != BigRational(1)) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

DivMod divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw ParameterError("divmod: division by the zero polynomial");
    if (a.degree() < b.degree()) return {PolyQ(), a};

    std::vector<BigRational> rem(a.coeffs());
    const long db = b.degree();
    std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    const BigRational& lead = b.leading();

    for (long i = a.degree(); i >= db; --i) {
        BigRational& top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        BigRational q = top / lead;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
    }
    rem.resize(static_cast<std::size_t>(db));
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

ExtGcd ext_gcd(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() && b.is_zero())
        throw ParameterError("ext_gcd: both inputs are zero");

    // Invariants: r0 == s0*a + t0*b and r1 == s1*a + t1*b.
    PolyQ r0 = a, r1 = b;
    PolyQ s0 = PolyQ::constant(1), s1;
    PolyQ t0, t1 = PolyQ::constant(1);

    while (!r1.is_zero()) {
        DivMod d = divmod(r0, r1);
        PolyQ r2 = d.rem;
        PolyQ s2 = s0 - d.quot * s1;
        PolyQ t2 = t0 - d.quot * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }

    BigRational inv_lead = BigRational(1) / r0.leading();
    return {r0 * inv_lead, s0 * inv_lead, t0 * inv_lead};
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

PolyQ x_pow_minus_one(unsigned long n) {
    std::vector<BigRational> v(n + 1);
    v[0] = BigRational(-1);
    v[n] = BigRational(1);
    return PolyQ(std::move(v));
}

}  // namespace

PolyQ cyclotomic(unsigned long n) {
    if (n < 1) throw ParameterError("cyclotomic: n must be >= 1");

    static std::map<unsigned long, PolyQ> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    PolyQ result;
    if (n == 1) {
        result = PolyQ{BigRational(-1), BigRational(1)};  // x - 1
    } else {
        PolyQ divisor_product = PolyQ::constant(1);
        for (unsigned long d = 1; d < n; ++d)
            if (n % d == 0) divisor_product *= cyclotomic(d);
        DivMod d = divmod(x_pow_minus_one(n), divisor_product);
        if (!d.rem.is_zero())
            throw NonRationalResult("cyclotomic: inexact division for n=" + std::to_string(n));
        result = std::move(d.quot);
    }

    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(n, std::move(result)).first->second;
}

PolyQ all_ones(unsigned long n) {
    if (n < 2) throw ParameterError("all_ones: n must be >= 2");
    return PolyQ(std::vector<BigRational>(n, BigRational(1)));
}

std::ostream& operator<<(std::ostream& os, const PolyQ& p) { return os << p.str(); }

}  // namespace quotdeg
