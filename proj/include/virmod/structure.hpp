#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "virmod/loopmod.hpp"
#include "virmod/pbw.hpp"
#include "virmod/scalar.hpp"

namespace virmod {

struct AParams {
    Scalar a, b;
};

// The summand L_index(a, b') of L(W, -1, a, b'+1), W highest weight b' != 0.
struct ParityParams {
    int index;  // 0 or 1
    Scalar a;
    Scalar bprime;
};

enum class Family { L, N, A, Parity };

struct ModuleDescriptor {
    std::variant<LParams, NParams, AParams, ParityParams> params;
    bool normalized = false;

    static ModuleDescriptor of(LParams p) { return {std::move(p), false}; }
    static ModuleDescriptor of(NParams p) { return {std::move(p), false}; }
    static ModuleDescriptor of(AParams p) { return {std::move(p), false}; }
    static ModuleDescriptor of(ParityParams p);

    Family family() const;
    // Shift a by an integer into 0 <= Re a < 1; parity descriptors reduce to
    // index 0 first (L_1(a,b') = L_0(a+1,b')) and then take Re a modulo 2.
    ModuleDescriptor normalize() const;
};

struct TruncationProfile {
    int dmax = 2;   // max d_{-1}-exponent
    int bmax = 2;   // max total exponent of d_0..d_{r-1}
    int win = 3;    // loop indices in [-win, win]
    int fuel = 4;   // closure rounds
    int kmax = 3;   // generators d_k with |k| <= kmax
};

// True iff every monomial of v has d_{-1}-exponent <= n. For lambda = 1 these
// spaces W^(n) (x) C[t,t^-1] are submodules.
bool in_filtration(int n, const LoopElement& v);

// tau(w (x) t^n) = ((d_{-1} - a - n) w) (x) t^n, from L(W,lambda,a,0) into
// L'(W,lambda,a,1). Only P.a is used.
LoopElement tau(const LParams& P, const LoopElement& v);

// Membership in L' = (+)_n ((d_{-1} - a - n) W) (x) t^n, decided per loop index
// by exact division of the d_{-1}-polynomial with coefficients in B.
bool in_lprime(const LParams& P, const LoopElement& v);

// Split v into its components along the even/odd basis d_1^i . (w_0 (x) t^j)
// of L(W, -1, a, b'+1); solved top-down since d_1^i has leading d_{-1}-coefficient (-2)^i.
std::pair<LoopElement, LoopElement> parity_decompose(const LParams& P, const LoopElement& v,
                                                     const TruncationProfile& profile);

struct SliceScan {
    // loop index -> (attained rank, full truncated slice dimension)
    std::map<long, std::pair<std::size_t, std::size_t>> slices;
    bool full() const;
};

// Truncated spanning evidence: close the span of the generators under l_act for
// |k| <= kmax over `fuel` rounds, projecting onto the profile box before every
// rank update.
SliceScan cyclic_slice_dims(const LParams& P, const std::vector<LoopElement>& generators,
                            const TruncationProfile& profile);

// Closed-form simplicity of L(W, lambda, a, b): highest weight W (b' != 0):
// (lambda not in {1,-1} and b != 1) or (lambda = -1, b != 1, b != b'+1);
// other W: lambda != 1 and b != 1. Throws unless W itself is simple.
bool is_simple_L(const ModuleDescriptor& desc);

struct ClassifyPart {
    std::string role;  // "submodule", "quotient", "summand", ...
    ModuleDescriptor descriptor;
};

struct ClassifyReport {
    int case_id;  // 1..8; 0 when outside the catalogued cases (lambda = 1, gamma = 0)
    bool simple;
    std::vector<ClassifyPart> parts;
    std::string note;
};

// Structure of E(lambda, b, gamma, p) through the dictionary
// E(lambda, b, gamma, p) = L(Verma(-gamma), lambda, b, gamma + p).
ClassifyReport classify_E(const Scalar& lambda, const Scalar& b, const Scalar& gamma,
                          const Scalar& p);

// (d_{-1}^k w) (x) t^l |-> lambda^{-l} ((a + l - d_{-1})^k w_0) (x) t^l, the
// isomorphism L(W, lambda, a, b'_0 + 1) -> L(W_0, lambda^{-1}, a, b' + 1).
LoopElement phi(const Scalar& lambda, const Scalar& a, const LoopElement& v);

enum class IsoWitness { EqualParameters, Lemma13Dual, None };

struct IsoVerdict {
    bool iso;
    IsoWitness witness;
};

// Both descriptors must be normalized; L-descriptors must be simple.
IsoVerdict are_isomorphic(const ModuleDescriptor& d1, const ModuleDescriptor& d2);

struct ProbeResult {
    LoopElement image;
    // Coefficient of the d_{-1}^2-leading part; set when v is a socle vector, in
    // which case it is checked against (lambda-1)^3 (lambda^{l-m-3} - lambda^m).
    std::optional<Scalar> leading;
};

ProbeResult x_probe(const LParams& P, long l, long m, const LoopElement& v);

// sum_{j=0}^{3} (-1)^j C(3,j) (a1+n+b1(m+j)) (a1+n+m+j+b1(l-m-j)); always zero,
// being the third difference of a degree-2 polynomial in j.
Scalar omega3_on_A(const Scalar& a1, const Scalar& b1, long l, long m, long n);

}  // namespace virmod
