#include "virmod/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace virmod {

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    mpq_class n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long k) const {
    Scalar base = *this;
    if (k < 0) {
        base = base.inverse();
        k = -k;
    }
    Scalar out(1);
    while (k > 0) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

static std::string q_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
    if (is_real()) return q_str(re_);
    return "(" + q_str(re_) + ")+(" + q_str(im_) + ")i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar factorial(unsigned n) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return Scalar(mpq_class(z));
}

Scalar binomial(unsigned n, unsigned k) {
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return Scalar(mpq_class(z));
}

mpz_class floor_of(const mpq_class& q) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

}  // namespace virmod
