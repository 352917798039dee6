#include "virmod/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace virmod {

VacuumSpec::VacuumSpec(int r_, std::vector<Scalar> mu) : r(r_), charges(std::move(mu)) {
    if (r < 0) throw std::invalid_argument("vacuum level r must be nonnegative");
    if (charges.size() != static_cast<std::size_t>(r) + 1)
        throw std::invalid_argument("vacuum spec needs exactly r+1 charges mu_r..mu_2r");
}

VacuumSpec VacuumSpec::verma(Scalar highest_weight) {
    return VacuumSpec(0, {std::move(highest_weight)});
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [i, e] : m) {
        (void)i;
        d += e;
    }
    return d;
}

int dminus1_degree(const Monomial& m) {
    return (!m.empty() && m.front().first == -1) ? m.front().second : 0;
}

Monomial mono_mul_gen(int idx, Monomial m) {
    if (!m.empty() && m.front().first < idx)
        throw std::logic_error("mono_mul_gen would break normal order");
    if (!m.empty() && m.front().first == idx)
        ++m.front().second;
    else
        m.insert(m.begin(), {idx, 1});
    return m;
}

Monomial mono_pow(int idx, int e) {
    Monomial m;
    if (e > 0) m.push_back({idx, e});
    return m;
}

ModuleElement ModuleElement::vacuum(Level lev, Scalar c) {
    return monomial(lev, Monomial{}, std::move(c));
}

ModuleElement ModuleElement::monomial(Level lev, Monomial m, Scalar c) {
    ModuleElement e(lev);
    e.add_term(std::move(m), c);
    return e;
}

Scalar ModuleElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int ModuleElement::max_dminus1_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, dminus1_degree(m));
    }
    return d;
}

void ModuleElement::add_term(Monomial m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(m), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
    if (level_ != o.level_) throw std::invalid_argument("mixed module levels");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
    if (level_ != o.level_) throw std::invalid_argument("mixed module levels");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ModuleElement ModuleElement::operator*(const Scalar& c) const {
    ModuleElement out(level_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

Scalar vacuum_charge(const VacuumSpec& spec, long j) {
    if (j < spec.r) throw std::invalid_argument("not a vacuum-level index");
    if (j > 2L * spec.r) return Scalar(0);
    return spec.charges[static_cast<std::size_t>(j - spec.r)];
}

// d_j applied to one normal-ordered monomial, accumulated into out.
// Rewrites with d_j d_i = d_i d_j + (i - j) d_{i+j}, moving d_j rightward until it
// is absorbed as a monomial generator or hits the vacuum. Both recursive calls act
// on a monomial with one generator removed, so the recursion terminates.
static void act_mono(const VacuumSpec& spec, Level lev, long j, const Monomial& m,
                     const Scalar& coeff, std::map<Monomial, Scalar>& out) {
    auto emit = [&out](Monomial key, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = out.try_emplace(std::move(key), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };

    if (m.empty()) {
        if (j <= spec.r - 1) {
            emit(mono_pow(static_cast<int>(j), 1), coeff);
        } else {
            Scalar c = vacuum_charge(spec, j);
            if (!c.is_zero()) emit(Monomial{}, coeff * c);
        }
        return;
    }

    const int i = m.front().first;
    if (j <= i) {
        emit(mono_mul_gen(static_cast<int>(j), m), coeff);
        return;
    }

    Monomial m2 = m;
    if (--m2.front().second == 0) m2.erase(m2.begin());

    std::map<Monomial, Scalar> tail;
    act_mono(spec, lev, j, m2, coeff, tail);
    for (auto& [key, c] : tail) emit(mono_mul_gen(i, key), c);

    act_mono(spec, lev, i + j, m2, coeff * Scalar(i - j), out);
}

ModuleElement act(const VacuumSpec& spec, long j, const ModuleElement& v) {
    if (j < level_lo(v.level()))
        throw std::invalid_argument("generator index below the module level bound");
    std::map<Monomial, Scalar> out;
    for (const auto& [m, c] : v.terms()) act_mono(spec, v.level(), j, m, c, out);
    ModuleElement res(v.level());
    for (auto& [m, c] : out) res.add_term(m, c);
    return res;
}

int ord(const VacuumSpec& spec, const ModuleElement& v) {
    if (v.is_zero()) throw std::invalid_argument("order undefined for zero");
    // d_j v = 0 for every j > 2r + (max d_{-1}-degree), so scan down from there.
    int bound = 2 * spec.r + v.max_dminus1_degree();
    for (int j = bound; j >= 1; --j)
        if (!act(spec, j, v).is_zero()) return j;
    return 0;
}

bool is_in_socle(const ModuleElement& v) {
    for (const auto& [m, c] : v.terms()) {
        (void)c;
        if (dminus1_degree(m) > 0) return false;
    }
    return true;
}

bool is_simple_induced(const VacuumSpec& spec) {
    if (spec.r == 0) return !spec.highest_weight().is_zero();
    return !spec.charges[spec.r].is_zero() || !spec.charges[spec.r - 1].is_zero();
}

}  // namespace virmod
