#pragma once

#include <map>
#include <string>
#include <vector>

#include "virmod/scalar.hpp"

namespace virmod {

// Finite linear combination of generators d_k (k in Z) and the central element z.
// Canonical sparse form: no zero coefficient is ever stored.
class VirasoroElement {
public:
    VirasoroElement() = default;

    static VirasoroElement d(long k, Scalar c = Scalar(1));
    static VirasoroElement z(Scalar c = Scalar(1));

    const std::map<long, Scalar>& terms() const { return terms_; }
    const Scalar& central() const { return central_; }
    Scalar coeff(long k) const;

    bool is_zero() const { return terms_.empty() && central_.is_zero(); }

    VirasoroElement& operator+=(const VirasoroElement& o);
    VirasoroElement& operator-=(const VirasoroElement& o);
    VirasoroElement operator*(const Scalar& c) const;
    friend VirasoroElement operator+(VirasoroElement a, const VirasoroElement& b) { return a += b; }
    friend VirasoroElement operator-(VirasoroElement a, const VirasoroElement& b) { return a -= b; }
    friend bool operator==(const VirasoroElement& a, const VirasoroElement& b) {
        return a.terms_ == b.terms_ && a.central_ == b.central_;
    }

    void add_term(long k, const Scalar& c);
    void add_central(const Scalar& c);

private:
    std::map<long, Scalar> terms_;
    Scalar central_;
};

struct SubalgebraSpec {
    enum class Kind { Witt, Borel, Tail, Quotient } kind;
    int r = 0;  // Tail: indices >= r; Quotient: the algebra spanned by d_0..d_r

    static SubalgebraSpec witt() { return {Kind::Witt, 0}; }
    static SubalgebraSpec borel() { return {Kind::Borel, 0}; }
    static SubalgebraSpec tail(int r);
    static SubalgebraSpec quotient(int r);
};

// Formal degree-2 operator word: sum of (coefficient, generator index list),
// each index list applied right to left.
struct OperatorWord {
    std::vector<std::pair<Scalar, std::vector<long>>> summands;
};

// [d_m, d_n] = (n - m) d_{m+n} + delta_{m,-n} (m^3 - m)/12 z
VirasoroElement bracket(long m, long n);

// Bilinear extension; central components of either side contribute nothing.
VirasoroElement bracket_elements(const VirasoroElement& x, const VirasoroElement& y);

// True iff every nonzero term of x lies in the span defined by s.
// z belongs to none of the subalgebras: nonzero central part means false.
bool in_subalgebra(const VirasoroElement& x, const SubalgebraSpec& s);

// X_{l,m} = d_{l-m-3} d_{m+3} - 3 d_{l-m-2} d_{m+2} + 3 d_{l-m-1} d_{m+1} - d_{l-m} d_m
OperatorWord x_word(long l, long m);

}  // namespace virmod
