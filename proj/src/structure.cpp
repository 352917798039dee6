#include "virmod/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "virmod/linalg.hpp"

namespace virmod {

ModuleDescriptor ModuleDescriptor::of(ParityParams p) {
    if (p.index != 0 && p.index != 1) throw std::invalid_argument("parity index must be 0 or 1");
    if (p.bprime.is_zero()) throw std::invalid_argument("parity module needs b' != 0");
    return {std::move(p), false};
}

Family ModuleDescriptor::family() const {
    switch (params.index()) {
        case 0: return Family::L;
        case 1: return Family::N;
        case 2: return Family::A;
        default: return Family::Parity;
    }
}

static Scalar shift_into_unit(const Scalar& a) {
    return a - Scalar(mpq_class(floor_of(a.real())));
}

ModuleDescriptor ModuleDescriptor::normalize() const {
    ModuleDescriptor out = *this;
    switch (family()) {
        case Family::L: {
            auto& p = std::get<LParams>(out.params);
            p.a = shift_into_unit(p.a);
            break;
        }
        case Family::N: {
            auto& p = std::get<NParams>(out.params);
            p.a = shift_into_unit(p.a);
            break;
        }
        case Family::A: {
            auto& p = std::get<AParams>(out.params);
            p.a = shift_into_unit(p.a);
            break;
        }
        case Family::Parity: {
            auto& p = std::get<ParityParams>(out.params);
            if (p.index == 1) {  // L_1(a,b') = L_0(a+1,b')
                p.index = 0;
                p.a += Scalar(1);
            }
            mpq_class half = p.a.real() / 2;
            p.a -= Scalar(mpq_class(2 * floor_of(half)));
            break;
        }
    }
    out.normalized = true;
    return out;
}

bool in_filtration(int n, const LoopElement& v) {
    for (const auto& [key, c] : v.terms()) {
        (void)c;
        if (dminus1_degree(key.first) > n) return false;
    }
    return true;
}

LoopElement tau(const LParams& P, const LoopElement& v) {
    LoopElement out(Level::W);
    for (const auto& [key, c] : v.terms()) {
        const auto& [mono, n] = key;
        out.add_term(mono_mul_gen(-1, mono), n, c);
        out.add_term(mono, n, -c * (P.a + Scalar(n)));
    }
    return out;
}

// Strip the d_{-1}-part of a W-monomial, leaving the B-part.
static Monomial b_part(const Monomial& m) {
    Monomial out = m;
    if (!out.empty() && out.front().first == -1) out.erase(out.begin());
    return out;
}

bool in_lprime(const LParams& P, const LoopElement& v) {
    // Component at index n lies in (d_{-1} - a - n) W iff the B-valued polynomial
    // in d_{-1} vanishes at d_{-1} = a + n.
    for (long n : v.indices()) {
        const Scalar c = P.a + Scalar(n);
        std::map<Monomial, Scalar> value;
        for (const auto& [key, coeff] : v.terms()) {
            if (key.second != n) continue;
            const int e = dminus1_degree(key.first);
            auto [it, fresh] = value.try_emplace(b_part(key.first), Scalar(0));
            (void)fresh;
            it->second += coeff * c.pow(e);
        }
        for (const auto& [mono, x] : value) {
            (void)mono;
            if (!x.is_zero()) return false;
        }
    }
    return true;
}

// d_1^i . (|vac> (x) t^{n-i}), a degree-i polynomial in d_{-1} times w_0 at index n.
static LoopElement parity_basis_vector(const LParams& P, int i, long n) {
    LoopElement e = LoopElement::vacuum(n - i);
    for (int s = 0; s < i; ++s) e = l_act(P, 1, e);
    return e;
}

std::pair<LoopElement, LoopElement> parity_decompose(const LParams& P, const LoopElement& v,
                                                     const TruncationProfile& profile) {
    if (P.spec.r != 0 || P.spec.highest_weight().is_zero())
        throw std::invalid_argument("parity decomposition needs a highest weight module with b' != 0");
    if (!(P.lambda == Scalar(-1)) || !(P.b == P.spec.highest_weight() + Scalar(1)))
        throw std::invalid_argument("parity decomposition needs lambda = -1 and b = b' + 1");
    for (const auto& [key, c] : v.terms()) {
        (void)c;
        if (dminus1_degree(key.first) > profile.dmax || std::abs(key.second) > profile.win)
            throw std::invalid_argument("element exceeds truncation profile");
    }

    LoopElement even(Level::W), odd(Level::W);
    for (long n : v.indices()) {
        // Coefficients of the component as a polynomial in d_{-1}.
        std::vector<Scalar> g;
        for (const auto& [key, coeff] : v.terms()) {
            if (key.second != n) continue;
            const int e = dminus1_degree(key.first);
            if (static_cast<std::size_t>(e) >= g.size()) g.resize(e + 1, Scalar(0));
            g[e] = coeff;
        }
        // Triangular solve against the basis d_1^i . (w_0 (x) t^{n-i}), top degree first.
        for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) {
            if (g[i].is_zero()) continue;
            LoopElement basis = parity_basis_vector(P, i, n);
            const Scalar lead = basis.coeff(mono_pow(-1, i), n);
            const Scalar ci = g[i] / lead;
            for (const auto& [key, coeff] : basis.terms())
                g[dminus1_degree(key.first)] -= ci * coeff;
            if (((n - i) % 2 + 2) % 2 == 0)
                even += basis * ci;
            else
                odd += basis * ci;
        }
    }
    return {even, odd};
}

bool SliceScan::full() const {
    for (const auto& [n, dims] : slices) {
        (void)n;
        if (dims.first != dims.second) return false;
    }
    return true;
}

namespace {

// Monomials with d_{-1}-exponent <= dmax and total d_0..d_{r-1} exponent <= bmax.
std::vector<Monomial> slice_monomials(int r, int dmax, int bmax) {
    std::vector<Monomial> bparts{Monomial{}};
    for (int idx = 0; idx < r; ++idx) {
        std::vector<Monomial> next;
        for (const auto& m : bparts) {
            int used = total_degree(m);
            for (int e = 0; e + used <= bmax; ++e) {
                Monomial ext = m;
                if (e > 0) ext.push_back({idx, e});
                next.push_back(std::move(ext));
            }
        }
        bparts = std::move(next);
    }
    std::vector<Monomial> out;
    for (int e = 0; e <= dmax; ++e)
        for (const auto& b : bparts) {
            Monomial m = b;
            if (e > 0) m.insert(m.begin(), {-1, e});
            out.push_back(std::move(m));
        }
    return out;
}

struct SliceSpace {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t> index;

    explicit SliceSpace(const VacuumSpec& spec, const TruncationProfile& profile) {
        basis = slice_monomials(spec.r, profile.dmax, profile.bmax);
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    }

    bool holds(const Monomial& m) const { return index.count(m) != 0; }

    Vec to_vec(const LoopElement& v, long n) const {
        Vec out(basis.size(), Scalar(0));
        for (const auto& [key, c] : v.terms())
            if (key.second == n) out[index.at(key.first)] = c;
        return out;
    }
};

// Drop monomials outside the slice box and loop indices outside the window.
LoopElement project(const LoopElement& v, const SliceSpace& space, int win) {
    LoopElement out(v.level());
    for (const auto& [key, c] : v.terms())
        if (std::abs(key.second) <= win && space.holds(key.first)) out.add_term(key.first, key.second, c);
    return out;
}

}  // namespace

SliceScan cyclic_slice_dims(const LParams& P, const std::vector<LoopElement>& generators,
                            const TruncationProfile& profile) {
    if (generators.empty()) throw std::invalid_argument("empty generator list");
    SliceSpace space(P.spec, profile);
    for (const auto& g : generators) {
        if (g.is_zero()) throw std::invalid_argument("zero generator");
        if (!(project(g, space, profile.win) == g))
            throw std::invalid_argument("generator exceeds truncation profile");
    }

    std::map<long, SpanBasis> spans;
    for (long n = -profile.win; n <= profile.win; ++n) spans.emplace(n, SpanBasis(space.basis.size()));

    // Weight components of a generator lie in the submodule it generates.
    std::vector<LoopElement> frontier;
    auto offer = [&](const LoopElement& hom) {
        long n = hom.indices().front();
        if (spans.at(n).insert(space.to_vec(hom, n))) frontier.push_back(hom);
    };
    for (const auto& g : generators)
        for (long n : g.indices()) {
            LoopElement comp = LoopElement::pure(g.component(n), n);
            if (!comp.is_zero()) offer(comp);
        }

    for (int round = 0; round < profile.fuel && !frontier.empty(); ++round) {
        std::vector<LoopElement> current = std::move(frontier);
        frontier.clear();
        for (const auto& x : current)
            for (int k = -profile.kmax; k <= profile.kmax; ++k) {
                if (k == 0) continue;  // d_0 rescales weight vectors, never enlarging the span
                LoopElement y = project(l_act(P, k, x), space, profile.win);
                if (!y.is_zero()) offer(y);
            }
    }

    SliceScan scan;
    for (const auto& [n, span] : spans) scan.slices[n] = {span.rank(), space.basis.size()};
    return scan;
}

bool is_simple_L(const ModuleDescriptor& desc) {
    if (desc.family() != Family::L)
        throw std::invalid_argument("is_simple_L needs an L-family descriptor");
    const auto& P = std::get<LParams>(desc.params);
    if (!is_simple_induced(P.spec)) throw std::domain_error("requires simple W");
    const Scalar one(1), minus_one(-1);
    if (P.b == one) return false;
    if (P.lambda == one) return false;
    if (P.spec.is_highest_weight()) {
        if (P.lambda == minus_one) return !(P.b == P.spec.highest_weight() + one);
        return true;
    }
    return true;
}

ClassifyReport classify_E(const Scalar& lambda, const Scalar& b, const Scalar& gamma,
                          const Scalar& p) {
    if (lambda.is_zero()) throw std::invalid_argument("E-module needs lambda != 0");
    const Scalar one(1), minus_one(-1);
    auto L_of = [&](const Scalar& g, const Scalar& pp) {
        return ModuleDescriptor::of(LParams(VacuumSpec::verma(-g), lambda, b, g + pp));
    };
    auto A_of = [&](const Scalar& bb) { return ModuleDescriptor::of(AParams{b, bb}); };

    ClassifyReport rep;
    rep.simple = false;

    if (!gamma.is_zero()) {
        const bool b_not_one = !(gamma + p == one);
        if (lambda == one) {
            rep.case_id = 2;
            rep.parts.push_back({"filtration-quotient", A_of(p)});
            rep.note = "infinite filtration 0 = M(0) in M(1) in ..., each quotient A(b, p)";
            return rep;
        }
        if (!b_not_one) {  // p = 1 - gamma
            rep.case_id = 3;
            rep.parts.push_back({"submodule", L_of(gamma, -gamma)});
            rep.parts.push_back({"quotient", A_of(one - gamma)});
            rep.note = "proper submodule E(lambda; b; gamma; -gamma) with quotient A(b, 1-gamma)";
            return rep;
        }
        if (lambda == minus_one && gamma + p == one - gamma) {  // p = 1 - 2 gamma
            rep.case_id = 4;
            rep.parts.push_back({"summand", ModuleDescriptor::of(ParityParams{0, b, -gamma})});
            rep.parts.push_back({"summand", ModuleDescriptor::of(ParityParams{1, b, -gamma})});
            rep.note = "direct sum of the two non-isomorphic simple parity summands";
            return rep;
        }
        rep.case_id = 1;
        rep.simple = true;
        return rep;
    }

    // gamma = 0: the underlying W is the weight-0 Verma module with simple
    // submodule of highest weight -1, so E always has M = E(lambda; b; 1; p-1).
    const bool p_is_one = (p == one);
    if (lambda == minus_one) {
        if (p_is_one) {
            rep.case_id = 5;
            rep.parts.push_back({"submodule M1", L_of(one, Scalar(0))});
            rep.parts.push_back({"submodule M2", L_of(one, minus_one)});
            rep.parts.push_back({"quotient E/M1", A_of(one)});
            rep.parts.push_back({"quotient M1/M2", A_of(Scalar(0))});
            rep.parts.push_back({"summand of M2", ModuleDescriptor::of(ParityParams{0, b, minus_one})});
            rep.parts.push_back({"summand of M2", ModuleDescriptor::of(ParityParams{1, b, minus_one})});
            rep.note = "M2 in M1 in E with M2 = E(+) (+) E(-)";
            return rep;
        }
        if (p.is_zero()) {
            rep.case_id = 6;
            rep.parts.push_back({"submodule", L_of(one, minus_one)});
            rep.parts.push_back({"quotient", A_of(Scalar(0))});
            rep.parts.push_back({"summand of M", ModuleDescriptor::of(ParityParams{0, b, minus_one})});
            rep.parts.push_back({"summand of M", ModuleDescriptor::of(ParityParams{1, b, minus_one})});
            rep.note = "submodule E(lambda; b; 1; -1) = E(+) (+) E(-), quotient A(b, 0)";
            return rep;
        }
        rep.case_id = 7;
        rep.parts.push_back({"submodule", L_of(one, p - one)});
        rep.parts.push_back({"quotient", A_of(p)});
        rep.note = "simple submodule E(lambda; b; 1; p-1) with quotient A(b, p)";
        return rep;
    }
    if (lambda == one) {
        rep.case_id = 0;
        rep.parts.push_back({"submodule", L_of(one, p - one)});
        rep.parts.push_back({"quotient", A_of(p)});
        rep.note = "outside the catalogued cases: lambda = 1 and gamma = 0; the generic "
                   "submodule E(lambda; b; 1; p-1) (itself filtered) remains";
        return rep;
    }
    if (p_is_one) {
        rep.case_id = 8;
        rep.parts.push_back({"submodule M1", L_of(one, Scalar(0))});
        rep.parts.push_back({"submodule M2", L_of(one, minus_one)});
        rep.parts.push_back({"quotient E/M1", A_of(one)});
        rep.parts.push_back({"quotient M1/M2", A_of(Scalar(0))});
        rep.note = "M2 in M1 in E, M2 simple";
        return rep;
    }
    rep.case_id = 7;
    rep.parts.push_back({"submodule", L_of(one, p - one)});
    rep.parts.push_back({"quotient", A_of(p)});
    rep.note = "simple submodule E(lambda; b; 1; p-1) with quotient A(b, p)";
    return rep;
}

LoopElement phi(const Scalar& lambda, const Scalar& a, const LoopElement& v) {
    if (lambda.is_zero()) throw std::invalid_argument("phi needs lambda != 0");
    LoopElement out(Level::W);
    for (const auto& [key, coeff] : v.terms()) {
        const auto& [mono, l] = key;
        const int k = dminus1_degree(mono);
        if (total_degree(mono) != k)
            throw std::invalid_argument("phi is defined on highest weight loop modules");
        const Scalar base = a + Scalar(l);
        const Scalar scale = coeff * lambda.pow(-l);
        // (a + l - d_{-1})^k = sum_u C(k,u) (a+l)^{k-u} (-1)^u d_{-1}^u
        for (int u = 0; u <= k; ++u) {
            Scalar c = scale * binomial(static_cast<unsigned>(k), static_cast<unsigned>(u)) *
                       base.pow(k - u);
            if (u % 2 == 1) c = -c;
            out.add_term(mono_pow(-1, u), l, c);
        }
    }
    return out;
}

IsoVerdict are_isomorphic(const ModuleDescriptor& d1, const ModuleDescriptor& d2) {
    if (!d1.normalized || !d2.normalized)
        throw std::invalid_argument("descriptors must be normalized");
    if (d1.family() != d2.family()) return {false, IsoWitness::None};

    switch (d1.family()) {
        case Family::L: {
            if (!is_simple_L(d1) || !is_simple_L(d2))
                throw std::domain_error("are_isomorphic needs simple L-descriptors");
            const auto& p = std::get<LParams>(d1.params);
            const auto& q = std::get<LParams>(d2.params);
            if (p.spec == q.spec && p.lambda == q.lambda && p.a == q.a && p.b == q.b)
                return {true, IsoWitness::EqualParameters};
            if (p.spec.is_highest_weight() && q.spec.is_highest_weight() && p.a == q.a &&
                q.lambda == p.lambda.inverse() &&
                p.b == q.spec.highest_weight() + Scalar(1) &&
                q.b == p.spec.highest_weight() + Scalar(1))
                return {true, IsoWitness::Lemma13Dual};
            return {false, IsoWitness::None};
        }
        case Family::N: {
            const auto& p = std::get<NParams>(d1.params);
            const auto& q = std::get<NParams>(d2.params);
            if (p.spec == q.spec && p.a == q.a && p.twist == q.twist)
                return {true, IsoWitness::EqualParameters};
            return {false, IsoWitness::None};
        }
        case Family::A: {
            const auto& p = std::get<AParams>(d1.params);
            const auto& q = std::get<AParams>(d2.params);
            if (p.a == q.a && p.b == q.b) return {true, IsoWitness::EqualParameters};
            return {false, IsoWitness::None};
        }
        case Family::Parity: {
            const auto& p = std::get<ParityParams>(d1.params);
            const auto& q = std::get<ParityParams>(d2.params);
            if (p.index == q.index && p.a == q.a && p.bprime == q.bprime)
                return {true, IsoWitness::EqualParameters};
            return {false, IsoWitness::None};
        }
    }
    return {false, IsoWitness::None};
}

ProbeResult x_probe(const LParams& P, long l, long m, const LoopElement& v) {
    auto idx = v.indices();
    if (idx.size() != 1) throw std::invalid_argument("x_probe needs a loop-homogeneous element");
    const long k0 = idx.front();

    ProbeResult res{apply_word(x_word(l, m), P, v), std::nullopt};

    ModuleElement w = v.component(k0);
    if (!is_in_socle(w)) return res;

    // Expected d_{-1}^2-part: leading * d_{-1}^2 w (x) t^{l+k0}.
    LoopElement actual2(Level::W);
    for (const auto& [key, c] : res.image.terms())
        if (dminus1_degree(key.first) == 2) actual2.add_term(key.first, key.second, c);

    ModuleElement raised(Level::W);
    for (const auto& [mono, c] : w.terms())
        raised.add_term(mono_mul_gen(-1, mono_mul_gen(-1, mono)), c);

    const auto& probe_mono = raised.terms().begin()->first;
    Scalar lead = actual2.coeff(probe_mono, l + k0) / raised.terms().begin()->second;
    if (!(actual2 == LoopElement::pure(raised * lead, l + k0)))
        throw std::logic_error("x_probe: degree-2 part is not proportional to d_{-1}^2 w");

    const Scalar expected =
        (P.lambda - Scalar(1)).pow(3) * (P.lambda.pow(l - m - 3) - P.lambda.pow(m));
    if (!(lead == expected)) throw std::logic_error("x_probe: leading coefficient mismatch");
    res.leading = lead;
    return res;
}

Scalar omega3_on_A(const Scalar& a1, const Scalar& b1, long l, long m, long n) {
    Scalar out(0);
    for (long j = 0; j <= 3; ++j) {
        const Scalar sign = (j % 2 == 0) ? Scalar(1) : Scalar(-1);
        const Scalar first = a1 + Scalar(n) + b1 * Scalar(m + j);
        const Scalar second = a1 + Scalar(n + m + j) + b1 * Scalar(l - m - j);
        out += sign * binomial(3, static_cast<unsigned>(j)) * first * second;
    }
    return out;
}

}  // namespace virmod
