#include "virmod/cm_compat.hpp"

#include <stdexcept>

namespace virmod {

EParams::EParams(Scalar lam, Scalar b_, Scalar gamma_, Scalar p_)
    : lambda(std::move(lam)), b(std::move(b_)), gamma(std::move(gamma_)), p(std::move(p_)) {
    if (lambda.is_zero()) throw std::invalid_argument("E-module needs lambda != 0");
}

TBasisElement TBasisElement::unit(unsigned k, long i, Scalar c) {
    TBasisElement out;
    out.add_term(k, i, c);
    return out;
}

Scalar TBasisElement::coeff(unsigned k, long i) const {
    auto it = terms_.find({k, i});
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TBasisElement::add_term(unsigned k, long i, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::make_pair(k, i), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TBasisElement& TBasisElement::operator+=(const TBasisElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

TBasisElement TBasisElement::operator*(const Scalar& c) const {
    TBasisElement out;
    if (c.is_zero()) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

TBasisElement cm_act(const EParams& E, long n, const TBasisElement& v) {
    // Display parameters: b' = -gamma, a = E.b, b = gamma + p.
    const Scalar bp = -E.gamma;
    const Scalar a = E.b;
    const Scalar b = E.gamma + E.p;
    const Scalar lam_n = E.lambda.pow(n);
    const Scalar sn(n);

    TBasisElement out;
    for (const auto& [key, c] : v.terms()) {
        const auto& [k, i] = key;
        const long tgt = i + n;

        Scalar npow(1);  // n^{k-j}, built from j = k downward
        std::vector<Scalar> npows(k + 1);
        for (unsigned j = k + 1; j-- > 0;) {
            npows[j] = npow;
            npow *= sn;
        }

        for (unsigned j = 0; j + 1 <= k && k >= 1; ++j)
            out.add_term(j, tgt, c * lam_n * sn * bp * binomial(k, j) * npows[j]);
        for (unsigned j = 0; j + 2 <= k; ++j)
            out.add_term(j + 1, tgt, -(c * lam_n * binomial(k, j) * npows[j]));
        out.add_term(k + 1, tgt, c * (Scalar(1) - lam_n));
        out.add_term(k, tgt,
                     c * (a + sn * b + Scalar(i) + lam_n * sn * bp - lam_n * sn * Scalar(k)));
    }
    return out;
}

LParams e_to_l(const EParams& E) {
    if (E.gamma.is_zero())
        throw std::invalid_argument("gamma = 0: use the classify_E gamma-zero path");
    return LParams(VacuumSpec::verma(-E.gamma), E.lambda, E.b, E.gamma + E.p);
}

LoopElement t_to_loop(const TBasisElement& v) {
    LoopElement out(Level::W);
    for (const auto& [key, c] : v.terms()) {
        const auto& [k, i] = key;
        const Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
        out.add_term(mono_pow(-1, static_cast<int>(k)), i, c * sign);
    }
    return out;
}

TBasisElement loop_to_t(const LoopElement& v) {
    TBasisElement out;
    for (const auto& [key, c] : v.terms()) {
        const auto& [mono, i] = key;
        const int k = dminus1_degree(mono);
        if (total_degree(mono) != k)
            throw std::invalid_argument("element is not in a highest weight loop module");
        const Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
        out.add_term(static_cast<unsigned>(k), i, c * sign);
    }
    return out;
}

// (d_0 - c)^j |vac> expanded over the r = 1 basis, left-multiplied by nothing yet.
static ModuleElement d0_shift_pow(const Scalar& c, int j) {
    ModuleElement out(Level::W);
    Scalar cpow(1);  // (-c)^{j-u}
    std::vector<Scalar> cpows(j + 1);
    for (int u = j; u >= 0; --u) {
        cpows[u] = cpow;
        cpow *= -c;
    }
    for (int u = 0; u <= j; ++u)
        out.add_term(mono_pow(0, u), binomial(static_cast<unsigned>(j), static_cast<unsigned>(u)) * cpows[u]);
    return out;
}

LoopElement example3_act(const Scalar& mu1, const Scalar& mu2, const Scalar& lambda,
                         const Scalar& a, const Scalar& b, long m, int i, int j, long k) {
    if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
    if (i < 0 || j < 0) throw std::invalid_argument("exponents must be nonnegative");
    const Scalar sm(m);
    const long tgt = k + m;

    // Inner bracket: d_{-1} d_0^j + m d_0^{j+1} + (m^2/2) mu_1 (d_0-1)^j + (m^3/6) mu_2 (d_0-2)^j.
    ModuleElement inner(Level::W);
    inner.add_term(mono_mul_gen(-1, mono_pow(0, j)), Scalar(1));
    inner += ModuleElement::monomial(Level::W, mono_pow(0, j + 1), sm);
    inner += d0_shift_pow(Scalar(1), j) * (sm * sm * Scalar::rational(1, 2) * mu1);
    inner += d0_shift_pow(Scalar(2), j) * (sm * sm * sm * Scalar::rational(1, 6) * mu2);

    // (d_{-1} - m)^i multiplies freely on the left.
    ModuleElement first(Level::W);
    Scalar mpow(1);  // (-m)^{i-u}
    std::vector<Scalar> mpows(i + 1);
    for (int u = i; u >= 0; --u) {
        mpows[u] = mpow;
        mpow *= -sm;
    }
    for (int u = 0; u <= i; ++u) {
        const Scalar f = binomial(static_cast<unsigned>(i), static_cast<unsigned>(u)) * mpows[u];
        for (const auto& [mono, c] : inner.terms()) {
            Monomial key = mono;
            if (u > 0) {
                if (!key.empty() && key.front().first == -1)
                    key.front().second += u;
                else
                    key.insert(key.begin(), {-1, u});
            }
            first.add_term(std::move(key), c * f);
        }
    }

    LoopElement out = LoopElement::pure(first * lambda.pow(m), tgt);

    // (-d_{-1} + a + k + bm) d_{-1}^i d_0^j
    Monomial base = mono_pow(0, j);
    if (i > 0) base.insert(base.begin(), {-1, i});
    Monomial raised = base;
    if (!raised.empty() && raised.front().first == -1)
        ++raised.front().second;
    else
        raised.insert(raised.begin(), {-1, 1});
    out.add_term(std::move(raised), tgt, Scalar(-1));
    out.add_term(std::move(base), tgt, a + Scalar(k) + b * sm);
    return out;
}

}  // namespace virmod
