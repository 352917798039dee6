#pragma once

#include <map>
#include <utility>

#include "virmod/loopmod.hpp"
#include "virmod/pbw.hpp"
#include "virmod/scalar.hpp"

namespace virmod {

// Four-parameter family E realized on the T-basis; lambda stands for e^h.
// Dictionary to loop modules: highest weight b' = -gamma, loop parameter a = b,
// twist parameter = gamma + p.
struct EParams {
    Scalar lambda;  // nonzero
    Scalar b, gamma, p;

    EParams(Scalar lam, Scalar b_, Scalar gamma_, Scalar p_);
};

// Sparse combination of T_i^k = (-1)^k d_{-1}^k w_0 (x) t^i, keyed by (k, i).
class TBasisElement {
public:
    TBasisElement() = default;
    static TBasisElement unit(unsigned k, long i, Scalar c = Scalar(1));

    const std::map<std::pair<unsigned, long>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(unsigned k, long i) const;

    void add_term(unsigned k, long i, const Scalar& c);
    TBasisElement& operator+=(const TBasisElement& o);
    TBasisElement operator*(const Scalar& c) const;
    friend TBasisElement operator+(TBasisElement a, const TBasisElement& b) { return a += b; }
    friend bool operator==(const TBasisElement& a, const TBasisElement& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<std::pair<unsigned, long>, Scalar> terms_;
};

// The closed-form action on the T-basis:
// d_n T_i^k = lambda^n n b' sum_{j=0}^{k-1} C(k,j) n^{k-j} T_{i+n}^j
//             - lambda^n sum_{j=0}^{k-2} C(k,j) n^{k-j} T_{i+n}^{j+1}
//             + (1 - lambda^n) T_{i+n}^{k+1}
//             + (a + nb + i + lambda^n n b' - lambda^n n k) T_{i+n}^k.
TBasisElement cm_act(const EParams& E, long n, const TBasisElement& v);

// E(lambda, b, gamma, p) as the loop module L(Verma(-gamma), lambda, b, gamma + p).
// gamma = 0 routes through the weight-0 Verma and is rejected here.
LParams e_to_l(const EParams& E);

// Change of basis T_i^k <-> (-1)^k d_{-1}^k w_0 (x) t^i.
LoopElement t_to_loop(const TBasisElement& v);
TBasisElement loop_to_t(const LoopElement& v);

// Direct formula for the r = 1 module on monomials d_{-1}^i d_0^j (x) t^k:
// d_m . = lambda^m (d_{-1}-m)^i (d_{-1} d_0^j + m d_0^{j+1} + (m^2/2) mu_1 (d_0-1)^j
//          + (m^3/6) mu_2 (d_0-2)^j) (x) t^{k+m}
//          + (-d_{-1} + a + k + bm) d_{-1}^i d_0^j (x) t^{k+m}.
LoopElement example3_act(const Scalar& mu1, const Scalar& mu2, const Scalar& lambda,
                         const Scalar& a, const Scalar& b, long m, int i, int j, long k);

}  // namespace virmod
