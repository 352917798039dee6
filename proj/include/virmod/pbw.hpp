#pragma once

#include <map>
#include <utility>
#include <vector>

#include "virmod/scalar.hpp"

namespace virmod {

// The two induction levels. B is the b-module C[d_0..d_{r-1}]|vac>,
// W the Witt-module C[d_{-1}, d_0..d_{r-1}]|vac>.
enum class Level { B, W };

inline int level_lo(Level lev) { return lev == Level::B ? 0 : -1; }

// One-dimensional vacuum over the tail algebra span{d_i | i >= r}:
// d_j |vac> = mu_j for r <= j <= 2r, and 0 for j > 2r.
struct VacuumSpec {
    int r = 0;
    std::vector<Scalar> charges;  // mu_r .. mu_{2r}, exactly r+1 entries

    VacuumSpec(int r_, std::vector<Scalar> mu);
    static VacuumSpec verma(Scalar highest_weight);  // r = 0

    bool is_highest_weight() const { return r == 0; }
    const Scalar& highest_weight() const { return charges.front(); }

    friend bool operator==(const VacuumSpec& a, const VacuumSpec& b) {
        return a.r == b.r && a.charges == b.charges;
    }
};

// PBW monomial d_{-1}^{e_{-1}} d_0^{e_0} ... d_{r-1}^{e_{r-1}} |vac>, kept as
// (index, exponent) pairs sorted by index with every stored exponent >= 1.
using Monomial = std::vector<std::pair<int, int>>;

int total_degree(const Monomial& m);
int dminus1_degree(const Monomial& m);
// Left-multiply by d_idx; requires idx <= every index present in m.
Monomial mono_mul_gen(int idx, Monomial m);
Monomial mono_pow(int idx, int e);

class ModuleElement {
public:
    explicit ModuleElement(Level lev) : level_(lev) {}
    static ModuleElement vacuum(Level lev, Scalar c = Scalar(1));
    static ModuleElement monomial(Level lev, Monomial m, Scalar c = Scalar(1));

    Level level() const { return level_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Monomial& m) const;
    int max_dminus1_degree() const;  // 0 for the zero element

    void add_term(Monomial m, const Scalar& c);
    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement& operator-=(const ModuleElement& o);
    ModuleElement operator*(const Scalar& c) const;
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
        return a.level_ == b.level_ && a.terms_ == b.terms_;
    }

private:
    Level level_;
    std::map<Monomial, Scalar> terms_;
};

// mu_j for r <= j <= 2r, 0 for j > 2r; below r is not a vacuum-level index.
Scalar vacuum_charge(const VacuumSpec& spec, long j);

// d_j . v in canonical PBW form, j >= level lower bound (-1 on W, 0 on B).
ModuleElement act(const VacuumSpec& spec, long j, const ModuleElement& v);

// Minimal nonnegative rho with d_{rho+i} v = 0 for all i >= 1.
int ord(const VacuumSpec& spec, const ModuleElement& v);

// True iff every monomial of v has d_{-1}-exponent 0.
bool is_in_socle(const ModuleElement& v);

// Charge criterion: r >= 1: mu_{2r} != 0 or mu_{2r-1} != 0; r = 0: b' != 0.
bool is_simple_induced(const VacuumSpec& spec);

}  // namespace virmod
