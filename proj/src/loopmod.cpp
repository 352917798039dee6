#include "virmod/loopmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace virmod {

LParams::LParams(VacuumSpec s, Scalar lam, Scalar a_, Scalar b_)
    : spec(std::move(s)), lambda(std::move(lam)), a(std::move(a_)), b(std::move(b_)) {
    if (lambda.is_zero()) throw std::invalid_argument("loop module needs lambda != 0");
}

LoopElement LoopElement::pure(ModuleElement w, long n) {
    LoopElement out(w.level());
    for (const auto& [m, c] : w.terms()) out.terms_.emplace(std::make_pair(m, n), c);
    return out;
}

LoopElement LoopElement::term(Level lev, Monomial m, long n, Scalar c) {
    LoopElement out(lev);
    out.add_term(std::move(m), n, c);
    return out;
}

LoopElement LoopElement::vacuum(long n, Scalar c) {
    return term(Level::W, Monomial{}, n, std::move(c));
}

Scalar LoopElement::coeff(const Monomial& m, long n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? Scalar(0) : it->second;
}

int LoopElement::max_dminus1_degree() const {
    int d = 0;
    for (const auto& [key, c] : terms_) {
        (void)c;
        d = std::max(d, dminus1_degree(key.first));
    }
    return d;
}

ModuleElement LoopElement::component(long n) const {
    ModuleElement out(level_);
    for (const auto& [key, c] : terms_)
        if (key.second == n) out.add_term(key.first, c);
    return out;
}

std::vector<long> LoopElement::indices() const {
    std::vector<long> out;
    for (const auto& [key, c] : terms_) {
        (void)c;
        if (out.empty() || out.back() != key.second) out.push_back(key.second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void LoopElement::add_term(Monomial m, long n, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::make_pair(std::move(m), n), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
    if (level_ != o.level_) throw std::invalid_argument("mixed loop-element levels");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
    if (level_ != o.level_) throw std::invalid_argument("mixed loop-element levels");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

LoopElement LoopElement::operator*(const Scalar& c) const {
    LoopElement out(level_);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

LoopElement l_act(const LParams& P, long k, const LoopElement& v) {
    if (v.level() != Level::W) throw std::invalid_argument("l_act needs a W-level element");
    LoopElement out(Level::W);
    const Scalar lam_k = P.lambda.pow(k);
    for (const auto& [key, c] : v.terms()) {
        const auto& [mono, j] = key;
        const long tgt = k + j;

        out.add_term(mono, tgt, c * (P.a + P.b * Scalar(k) + Scalar(j)));

        ModuleElement w = ModuleElement::monomial(Level::W, mono);
        out += LoopElement::pure(act(P.spec, -1, w) * (-c), tgt);

        // lambda^k sum_i (k^i / i!) d_{i-1} w; terms vanish past the order bound
        const int imax = 2 * P.spec.r + dminus1_degree(mono) + 1;
        Scalar k_pow(1);  // k^i / i!
        for (int i = 0; i <= imax; ++i) {
            if (i > 0) {
                if (k == 0) break;
                k_pow *= Scalar::rational(k, i);
            }
            out += LoopElement::pure(act(P.spec, i - 1, w) * (c * lam_k * k_pow), tgt);
        }
    }
    return out;
}

LoopElement act_virasoro(const LParams& P, const VirasoroElement& x, const LoopElement& v) {
    LoopElement out(v.level());
    for (const auto& [k, c] : x.terms()) out += l_act(P, k, v) * c;
    return out;  // central part acts as zero
}

std::pair<Scalar, long> a_act(const Scalar& a, const Scalar& b, long m, long n) {
    return {a + Scalar(n) + b * Scalar(m), n + m};
}

LoopElement n_act(const NParams& N, long k, const LoopElement& v) {
    if (v.level() != Level::B) throw std::invalid_argument("n_act needs a B-level element");
    LoopElement out(Level::B);
    for (const auto& [key, c] : v.terms()) {
        const auto& [mono, n] = key;
        const long tgt = n + k;

        out.add_term(mono, tgt, c * (N.a + Scalar(n)));
        if (k == 0) continue;

        ModuleElement w = ModuleElement::monomial(Level::B, mono);
        ModuleElement twisted = act(N.spec, 0, w) + w * N.twist;
        out += LoopElement::pure(twisted * (c * Scalar(k)), tgt);

        const int jmax = 2 * N.spec.r + 1;
        Scalar k_pow = Scalar(k);  // k^j / j!
        for (int j = 2; j <= jmax; ++j) {
            k_pow *= Scalar::rational(k, j);
            out += LoopElement::pure(act(N.spec, j - 1, w) * (c * k_pow), tgt);
        }
    }
    return out;
}

Scalar weight_of(const Scalar& a, const LoopElement& v) {
    if (v.is_zero()) throw std::invalid_argument("weight undefined for zero");
    auto idx = v.indices();
    if (idx.size() != 1) throw std::invalid_argument("not homogeneous");
    return a + Scalar(idx.front());
}

}  // namespace virmod
