#include "quotdeg/rational.hpp"

#include <limits>
#include <ostream>

#include "quotdeg/errors.hpp"

namespace quotdeg {

BigRational::BigRational(long long num, long long den) {
    if (den == 0) throw ParameterError("BigRational: zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    v_.canonicalize();
}

BigRational::BigRational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw ParameterError("BigRational: zero denominator");
    v_.canonicalize();
}

BigRational::BigRational(const std::string& s) {
    if (mpq_set_str(v_.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParameterError("BigRational: cannot parse '" + s + "'");
    if (v_.get_den() == 0) throw ParameterError("BigRational: zero denominator in '" + s + "'");
    v_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw ParameterError("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
}

BigRational BigRational::pow(long long e) const {
    if (e < 0) {
        if (is_zero()) throw ParameterError("BigRational: 0 raised to a negative power");
        BigRational inv(mpq_class(1 / v_));
        return inv.pow(-e);
    }
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(std::move(r));  // num/den coprime => powers coprime
}

long long BigRational::to_int() const {
    if (!is_integer()) throw NonRationalResult("BigRational: " + str() + " is not an integer");
    if (!v_.get_num().fits_slong_p())
        throw ParameterError("BigRational: " + str() + " does not fit in a machine integer");
    return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.str(); }

}  // namespace quotdeg
