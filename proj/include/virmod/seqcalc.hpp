#pragma once

#include <map>
#include <utility>
#include <vector>

#include "virmod/linalg.hpp"
#include "virmod/scalar.hpp"

namespace virmod {

// Univariate polynomial over Scalar, ascending coefficients, trailing zeros pruned.
class ShiftPolynomial {
public:
    ShiftPolynomial() = default;
    explicit ShiftPolynomial(std::vector<Scalar> coeffs);
    static ShiftPolynomial x_minus(const Scalar& lambda);  // x - lambda
    static ShiftPolynomial one() { return ShiftPolynomial({Scalar(1)}); }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Scalar eval(const Scalar& x) const;
    ShiftPolynomial operator*(const ShiftPolynomial& o) const;
    ShiftPolynomial pow(unsigned k) const;
    // Quotient and remainder by the monic (x - lambda).
    std::pair<ShiftPolynomial, Scalar> div_x_minus(const Scalar& lambda) const;
    // (x - lambda)^k | p
    bool divisible_by_power(const Scalar& lambda, unsigned k) const;

    friend bool operator==(const ShiftPolynomial& a, const ShiftPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Scalar> coeffs_;
};

// Exp-polynomial sequence Z -> P: m |-> sum_lambda lambda^m g_lambda(m), with
// g_lambda a P-valued polynomial stored by powers of m. Canonical form: distinct
// lambdas, no zero g, no zero leading coefficient vector.
class ExpPolySequence {
public:
    explicit ExpPolySequence(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Scalar, std::vector<Vec>>& terms() const { return terms_; }

    // Add lambda^m m^power * v.
    void add(const Scalar& lambda, unsigned power, const Vec& v);
    Vec eval(long m) const;

    friend bool operator==(const ExpPolySequence& a, const ExpPolySequence& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    std::size_t dim_;
    std::map<Scalar, std::vector<Vec>> terms_;  // lambda -> coefficient vectors by power

    void prune(const Scalar& lambda);
};

// (x^i . T)(m) = T(m + i), extended to polynomials: each (lambda, g) maps to
// (lambda, m |-> sum_i p_i lambda^i g(m + i)).
ExpPolySequence shift_act(const ShiftPolynomial& p, const ExpPolySequence& T);

// Does p annihilate m |-> lambda^m m^k? Decided two ways (shift_act pruning and
// the (x - lambda)^{k+1} divisibility criterion) which must agree.
bool annihilator_check(const ShiftPolynomial& p, const Scalar& lambda, unsigned k);

struct Component {
    Scalar lambda;
    unsigned power;
    Vec v;
};

// Recover the components v_{i,j} of m |-> sum lambda_i^m m^j v_{i,j} from samples
// at s(k+1) consecutive integers, by one exact generalized-Vandermonde solve.
// Extra samples are checked against the reconstruction.
std::vector<Component> extract_components(const std::vector<std::pair<long, Vec>>& samples,
                                          const std::vector<Scalar>& lambdas, unsigned k);

}  // namespace virmod
