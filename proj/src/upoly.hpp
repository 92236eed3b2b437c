#pragma once

#include "tower.hpp"

#include <vector>

namespace stubborn {

// Dense univariate polynomial over a quadratic-tower field. Invariant: the
// coefficient list is empty for the zero polynomial, and the leading
// coefficient is nonzero otherwise.
struct UPoly {
    std::vector<FieldElem> c; // c[i] multiplies t^i

    UPoly() = default;
    explicit UPoly(std::vector<FieldElem> coeffs) : c(std::move(coeffs)) { normalize(); }
    static UPoly constant(const FieldElem& v) { return UPoly({v}); }
    static UPoly from_q(const std::vector<Q>& qs);

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; } // -1 for zero
    const FieldElem& lc() const { return c.back(); }
    bool is_rational() const;

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const FieldElem& s) const;
    bool operator==(const UPoly& o) const;

    UPoly derivative() const;
    FieldElem eval(const FieldElem& x) const;
    QInterval eval_interval(const QInterval& x, unsigned prec) const;
    UPoly shift(const FieldElem& a) const;   // p(t + a)
    UPoly reverse() const;                   // t^deg * p(1/t)
    UPoly monic() const;
    std::string str(const std::string& var = "t") const;
};

// Euclidean division over the field: f = q*g + r, deg r < deg g.
void divmod_field(const UPoly& f, const UPoly& g, UPoly& q, UPoly& r);
UPoly gcd_field(UPoly a, UPoly b); // monic gcd
UPoly divexact_field(const UPoly& f, const UPoly& g);

// f with all repeated roots stripped.
UPoly squarefree_part(const UPoly& f);

// p[i] = squarefree polynomial whose roots are exactly the roots of f of
// multiplicity i (index 0 unused).
std::vector<UPoly> multiplicity_split(const UPoly& f);

// number of strict sign changes among nonzero entries
int sign_variations(const std::vector<FieldElem>& seq);
int descartes_bound(const UPoly& f); // bound on positive roots with multiplicity

struct SturmChain {
    // integer-mode chain (used when all coefficients are rational) or a
    // field-mode chain over the tower
    bool zmode = false;
    std::vector<std::vector<Z>> zs;
    std::vector<UPoly> fs;

    int var_at(const Q& x) const;
    int var_at_neg_inf() const;
    int var_at_pos_inf() const;
    // distinct roots in the half-open interval (a, b]
    int count(const Q& a, const Q& b) const;
    int count_all() const { return var_at_neg_inf() - var_at_pos_inf(); }
};
SturmChain sturm_chain(const UPoly& f);

// One isolated real root of a squarefree polynomial. If `iv` is a point the
// root is exactly rational; otherwise the open interval contains exactly one
// root of `sqfree` and neither endpoint is a root.
struct RootInterval {
    UPoly sqfree;
    QInterval iv;
    int multiplicity = 1;

    bool is_exact() const { return iv.is_point(); }
    void refine();                       // halve the width
    void refine_below(const Q& width);   // until iv.width() < width
    double approx() const { return iv.mid().get_d(); }
};

struct RootProfile {
    std::vector<RootInterval> real_roots; // sorted increasing
    int nonreal_multiplicity = 0;
    int degree = 0;
    int real_count_with_mult() const {
        int n = 0;
        for (auto& r : real_roots) n += r.multiplicity;
        return n;
    }
};

RootProfile root_profile(const UPoly& f);

// total number of real roots counted with multiplicity (no isolation)
int real_root_count_with_mult(const UPoly& f);
bool all_roots_real(const UPoly& f);

// isolate roots of a squarefree polynomial
std::vector<RootInterval> isolate_squarefree(const UPoly& f);

// exact sign of g at the root described by r
int sign_at_root(const UPoly& g, RootInterval& r);

// exact zero test of g at the root described by r
bool is_zero_at_root(const UPoly& g, RootInterval& r);

} // namespace stubborn
