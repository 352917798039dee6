#pragma once

#include <functional>
#include <map>
#include <utility>

#include "virmod/algebra.hpp"
#include "virmod/pbw.hpp"
#include "virmod/scalar.hpp"

namespace virmod {

// Parameters of the loop module L(W, lambda, a, b) on W (x) C[t, t^-1].
struct LParams {
    VacuumSpec spec;  // defines W
    Scalar lambda;    // nonzero
    Scalar a, b;

    LParams(VacuumSpec s, Scalar lam, Scalar a_, Scalar b_);
};

// Parameters of N(B, a) with the b-twist on B (d_0 acting as d_0 + twist).
struct NParams {
    VacuumSpec spec;  // defines B = C[d_0..d_{r-1}]|vac>
    Scalar a;
    Scalar twist;
};

// Sparse sum of (PBW monomial (x) t^n) terms. W-level monomials for L-modules,
// B-level ones for N-modules.
class LoopElement {
public:
    explicit LoopElement(Level lev = Level::W) : level_(lev) {}
    static LoopElement pure(ModuleElement w, long n);
    static LoopElement term(Level lev, Monomial m, long n, Scalar c = Scalar(1));
    static LoopElement vacuum(long n, Scalar c = Scalar(1));  // |vac> (x) t^n, W-level

    Level level() const { return level_; }
    const std::map<std::pair<Monomial, long>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Monomial& m, long n) const;
    int max_dminus1_degree() const;

    // The W-component at loop index n.
    ModuleElement component(long n) const;
    // Loop indices present, in increasing order.
    std::vector<long> indices() const;

    void add_term(Monomial m, long n, const Scalar& c);
    LoopElement& operator+=(const LoopElement& o);
    LoopElement& operator-=(const LoopElement& o);
    LoopElement operator*(const Scalar& c) const;
    friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
    friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
    friend bool operator==(const LoopElement& a, const LoopElement& b) {
        return a.level_ == b.level_ && a.terms_ == b.terms_;
    }

private:
    Level level_;
    std::map<std::pair<Monomial, long>, Scalar> terms_;
};

// d_k . (w (x) t^j) = lambda^k sum_i (k^i/i!) (d_{i-1} w) (x) t^{k+j}
//                     - (d_{-1} w) (x) t^{k+j} + (a + kb + j) w (x) t^{k+j}.
// The i-sum is finite: d_{i-1} w = 0 once i-1 > 2r + d_{-1}-degree of w.
LoopElement l_act(const LParams& P, long k, const LoopElement& v);

// The full algebra acting through l_act; the central term acts as zero.
LoopElement act_virasoro(const LParams& P, const VirasoroElement& x, const LoopElement& v);

// Intermediate series A_{a,b}: d_m v_n = (a + n + bm) v_{n+m}.
std::pair<Scalar, long> a_act(const Scalar& a, const Scalar& b, long m, long n);

// d_k . (w (x) t^n) = (a + n) w (x) t^{n+k} + k (d_0 w + twist w) (x) t^{n+k}
//                     + sum_{j>=2} (k^j/j!) (d_{j-1} w) (x) t^{n+k}.
LoopElement n_act(const NParams& N, long k, const LoopElement& v);

// a + n when all terms share loop index n; throws on zero or mixed indices.
Scalar weight_of(const Scalar& a, const LoopElement& v);

// Word application, rightmost generator first.
template <class Action>
LoopElement apply_word(const OperatorWord& word, Action&& action, const LoopElement& v) {
    LoopElement out(v.level());
    for (const auto& [c, idxs] : word.summands) {
        LoopElement cur = v;
        for (auto it = idxs.rbegin(); it != idxs.rend(); ++it) cur = action(*it, cur);
        out += cur * c;
    }
    return out;
}

inline LoopElement apply_word(const OperatorWord& word, const LParams& P, const LoopElement& v) {
    return apply_word(word, [&P](long k, const LoopElement& u) { return l_act(P, k, u); }, v);
}

}  // namespace virmod
