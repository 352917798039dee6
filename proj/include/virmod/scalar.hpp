#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace virmod {

// Exact Gaussian rational: re + im*i with re, im in Q.
// Every operation is exact; equality is literal equality of reduced fractions.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar rational(long num, long den);
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;        // throws std::domain_error on zero
    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar pow(long k) const;      // integer power; k < 0 inverts first

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order so Scalar can key std::map; lexicographic, not a numeric order on C.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    std::string str() const;       // "p/q" when real, "(p/q)+(r/s)i" otherwise

private:
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar factorial(unsigned n);
Scalar binomial(unsigned n, unsigned k);

// Largest integer <= q.
mpz_class floor_of(const mpq_class& q);

}  // namespace virmod
