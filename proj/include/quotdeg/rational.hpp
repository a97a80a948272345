#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace quotdeg {

/**
 * Arbitrary-precision rational number, the universal exact scalar.
 *
 * Always stored in lowest terms with a positive denominator (GMP canonical
 * form); every operation is exact, nothing is ever rounded. Values are
 * immutable in spirit: all operators return fresh values and the class is
 * safe to share between threads once constructed.
 */
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long long n) : v_(static_cast<long>(n)) {}
    BigRational(int n) : v_(n) {}
    BigRational(long long num, long long den);
    explicit BigRational(const mpz_class& z) : v_(z) {}
    explicit BigRational(mpq_class q);

    // Parses "n" or "n/d" in base 10. Throws ParameterError on malformed input.
    explicit BigRational(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational numerator() const { return BigRational(mpz_class(v_.get_num())); }
    BigRational denominator() const { return BigRational(mpz_class(v_.get_den())); }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    // Exact integer power; negative exponents invert (throws on 0^negative).
    BigRational pow(long long e) const;

    BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }
    double to_double() const { return v_.get_d(); }

    // "35", "-35/12": numerator, then "/den" only when den != 1.
    std::string str() const { return v_.get_str(); }
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    // Fits-in-long-long accessor for small integral values.
    long long to_int() const;

private:
    mpq_class v_;
};

inline BigRational pow(const BigRational& b, long long e) { return b.pow(e); }
inline BigRational abs(const BigRational& b) { return b.abs(); }

std::ostream& operator<<(std::ostream& os, const BigRational& q);

}  // namespace quotdeg
