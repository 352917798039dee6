#include "virmod/seqcalc.hpp"

#include <algorithm>
#include <stdexcept>

namespace virmod {

ShiftPolynomial::ShiftPolynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ShiftPolynomial ShiftPolynomial::x_minus(const Scalar& lambda) {
    return ShiftPolynomial({-lambda, Scalar(1)});
}

Scalar ShiftPolynomial::eval(const Scalar& x) const {
    Scalar out(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + *it;
    return out;
}

ShiftPolynomial ShiftPolynomial::operator*(const ShiftPolynomial& o) const {
    if (is_zero() || o.is_zero()) return ShiftPolynomial();
    std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return ShiftPolynomial(std::move(out));
}

ShiftPolynomial ShiftPolynomial::pow(unsigned k) const {
    ShiftPolynomial out = one();
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
}

std::pair<ShiftPolynomial, Scalar> ShiftPolynomial::div_x_minus(const Scalar& lambda) const {
    if (is_zero()) return {ShiftPolynomial(), Scalar(0)};
    std::vector<Scalar> q(coeffs_.size() - 1, Scalar(0));
    Scalar carry(0);
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
        carry = coeffs_[i] + carry * lambda;
        q[i - 1] = carry;
    }
    Scalar rem = coeffs_[0] + carry * lambda;
    return {ShiftPolynomial(std::move(q)), rem};
}

bool ShiftPolynomial::divisible_by_power(const Scalar& lambda, unsigned k) const {
    if (is_zero()) return true;
    ShiftPolynomial cur = *this;
    for (unsigned i = 0; i < k; ++i) {
        auto [q, rem] = cur.div_x_minus(lambda);
        if (!rem.is_zero()) return false;
        cur = std::move(q);
    }
    return true;
}

void ExpPolySequence::prune(const Scalar& lambda) {
    auto it = terms_.find(lambda);
    if (it == terms_.end()) return;
    auto& g = it->second;
    while (!g.empty()) {
        bool zero = true;
        for (const auto& x : g.back())
            if (!x.is_zero()) {
                zero = false;
                break;
            }
        if (!zero) break;
        g.pop_back();
    }
    if (g.empty()) terms_.erase(it);
}

void ExpPolySequence::add(const Scalar& lambda, unsigned power, const Vec& v) {
    if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
    if (v.size() != dim_) throw std::invalid_argument("component dimension mismatch");
    auto& g = terms_[lambda];
    if (g.size() <= power) g.resize(power + 1, Vec(dim_, Scalar(0)));
    for (std::size_t c = 0; c < dim_; ++c) g[power][c] += v[c];
    prune(lambda);
}

Vec ExpPolySequence::eval(long m) const {
    Vec out(dim_, Scalar(0));
    const Scalar sm(m);
    for (const auto& [lambda, g] : terms_) {
        Scalar w = lambda.pow(m);  // lambda^m m^j accumulated below
        for (std::size_t j = 0; j < g.size(); ++j) {
            for (std::size_t c = 0; c < dim_; ++c) out[c] += w * g[j][c];
            w *= sm;
        }
    }
    return out;
}

ExpPolySequence shift_act(const ShiftPolynomial& p, const ExpPolySequence& T) {
    ExpPolySequence out(T.dim());
    for (const auto& [lambda, g] : T.terms()) {
        // h_u = sum_i p_i lambda^i sum_{j>=u} C(j,u) i^{j-u} g_j
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            if (p.coeffs()[i].is_zero()) continue;
            const Scalar c = p.coeffs()[i] * lambda.pow(static_cast<long>(i));
            const Scalar si(static_cast<long>(i));
            for (std::size_t j = 0; j < g.size(); ++j) {
                Scalar ipow(1);  // i^{j-u}, built from u = j downward
                for (std::size_t u = j + 1; u-- > 0;) {
                    Scalar f = c * binomial(static_cast<unsigned>(j), static_cast<unsigned>(u)) * ipow;
                    Vec scaled(g[j].size());
                    for (std::size_t t = 0; t < g[j].size(); ++t) scaled[t] = g[j][t] * f;
                    out.add(lambda, static_cast<unsigned>(u), scaled);
                    ipow *= si;
                }
            }
        }
    }
    return out;
}

bool annihilator_check(const ShiftPolynomial& p, const Scalar& lambda, unsigned k) {
    if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
    ExpPolySequence T(1);
    T.add(lambda, k, {Scalar(1)});
    const bool by_action = shift_act(p, T).is_zero();
    const bool by_division = p.divisible_by_power(lambda, k + 1);
    if (by_action != by_division)
        throw std::logic_error("annihilator routes disagree");  // Lemma 4(c) would be violated
    return by_action;
}

std::vector<Component> extract_components(const std::vector<std::pair<long, Vec>>& samples,
                                          const std::vector<Scalar>& lambdas, unsigned k) {
    const std::size_t s = lambdas.size();
    for (std::size_t i = 0; i < s; ++i) {
        if (lambdas[i].is_zero()) throw std::invalid_argument("lambda must be nonzero");
        for (std::size_t j = i + 1; j < s; ++j)
            if (lambdas[i] == lambdas[j]) throw std::invalid_argument("duplicate lambda");
    }
    const std::size_t needed = s * (k + 1);
    if (samples.size() < needed) throw std::invalid_argument("insufficient samples");

    auto sorted = samples;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    const std::size_t dim = sorted.front().second.size();
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].second.size() != dim) throw std::invalid_argument("sample dimension mismatch");
        if (i > 0 && sorted[i].first != sorted[i - 1].first + 1)
            throw std::invalid_argument("samples must sit at consecutive integers");
    }

    // Columns ordered (lambda_1, m^0), (lambda_1, m^1), ..., (lambda_s, m^k).
    Mat M(needed, Vec(needed, Scalar(0)));
    for (std::size_t row = 0; row < needed; ++row) {
        const long m = sorted[row].first;
        std::size_t col = 0;
        for (std::size_t i = 0; i < s; ++i) {
            Scalar w = lambdas[i].pow(m);
            for (unsigned j = 0; j <= k; ++j) {
                M[row][col++] = w;
                w *= Scalar(m);
            }
        }
    }

    Mat coeffs(needed, Vec(dim, Scalar(0)));  // row = column index of M, col = P-coordinate
    for (std::size_t c = 0; c < dim; ++c) {
        Vec rhs(needed);
        for (std::size_t row = 0; row < needed; ++row) rhs[row] = sorted[row].second[c];
        auto x = solve(M, rhs);
        if (!x) throw std::logic_error("generalized Vandermonde system was singular");
        for (std::size_t row = 0; row < needed; ++row) coeffs[row][c] = (*x)[row];
    }

    std::vector<Component> out;
    ExpPolySequence recon(dim);
    std::size_t col = 0;
    for (std::size_t i = 0; i < s; ++i) {
        for (unsigned j = 0; j <= k; ++j, ++col) {
            bool zero = true;
            for (const auto& x : coeffs[col])
                if (!x.is_zero()) {
                    zero = false;
                    break;
                }
            if (zero) continue;
            out.push_back({lambdas[i], j, coeffs[col]});
            recon.add(lambdas[i], j, coeffs[col]);
        }
    }

    for (const auto& [m, value] : sorted)
        if (recon.eval(m) != value)
            throw std::invalid_argument("samples are not an exp-polynomial sequence of the stated shape");
    return out;
}

}  // namespace virmod
