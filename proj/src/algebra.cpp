#include "virmod/algebra.hpp"

#include <stdexcept>

namespace virmod {

VirasoroElement VirasoroElement::d(long k, Scalar c) {
    VirasoroElement e;
    e.add_term(k, c);
    return e;
}

VirasoroElement VirasoroElement::z(Scalar c) {
    VirasoroElement e;
    e.central_ = std::move(c);
    return e;
}

Scalar VirasoroElement::coeff(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void VirasoroElement::add_term(long k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void VirasoroElement::add_central(const Scalar& c) { central_ += c; }

VirasoroElement& VirasoroElement::operator+=(const VirasoroElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    central_ += o.central_;
    return *this;
}

VirasoroElement& VirasoroElement::operator-=(const VirasoroElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    central_ -= o.central_;
    return *this;
}

VirasoroElement VirasoroElement::operator*(const Scalar& c) const {
    VirasoroElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    out.central_ = central_ * c;
    return out;
}

SubalgebraSpec SubalgebraSpec::tail(int r) {
    if (r < 0) throw std::invalid_argument("tail subalgebra needs r >= 0");
    return {Kind::Tail, r};
}

SubalgebraSpec SubalgebraSpec::quotient(int r) {
    if (r < 0) throw std::invalid_argument("quotient algebra needs r >= 0");
    return {Kind::Quotient, r};
}

VirasoroElement bracket(long m, long n) {
    VirasoroElement out = VirasoroElement::d(m + n, Scalar(n - m));
    if (m == -n) {
        // (m^3 - m)/12
        mpq_class c(m, 12);
        c.canonicalize();
        out.add_central(Scalar(c * (mpq_class(m) * m - 1)));
    }
    return out;
}

VirasoroElement bracket_elements(const VirasoroElement& x, const VirasoroElement& y) {
    VirasoroElement out;
    for (const auto& [m, cm] : x.terms())
        for (const auto& [n, cn] : y.terms()) out += bracket(m, n) * (cm * cn);
    return out;
}

bool in_subalgebra(const VirasoroElement& x, const SubalgebraSpec& s) {
    if (!x.central().is_zero()) return false;
    for (const auto& [k, c] : x.terms()) {
        (void)c;
        switch (s.kind) {
            case SubalgebraSpec::Kind::Witt:
                if (k < -1) return false;
                break;
            case SubalgebraSpec::Kind::Borel:
                if (k < 0) return false;
                break;
            case SubalgebraSpec::Kind::Tail:
                if (k < s.r) return false;
                break;
            case SubalgebraSpec::Kind::Quotient:
                if (k < 0 || k > s.r) return false;
                break;
        }
    }
    return true;
}

OperatorWord x_word(long l, long m) {
    OperatorWord w;
    w.summands.push_back({Scalar(1), {l - m - 3, m + 3}});
    w.summands.push_back({Scalar(-3), {l - m - 2, m + 2}});
    w.summands.push_back({Scalar(3), {l - m - 1, m + 1}});
    w.summands.push_back({Scalar(-1), {l - m, m}});
    return w;
}

}  // namespace virmod
