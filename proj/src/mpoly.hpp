#pragma once

#include "upoly.hpp"

#include <map>
#include <vector>
#include <string>

namespace stubborn {

using Mono = std::vector<unsigned>; // exponent vector, length nvars

inline unsigned mono_tdeg(const Mono& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

// graded lexicographic, variable 0 highest priority
struct GrLexCmp {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned da = mono_tdeg(a), db = mono_tdeg(b);
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// Sparse multivariate polynomial over FieldElem. Canonical form: no zero
// coefficients stored.
class MPoly {
public:
    int nvars = 0;
    std::map<Mono, FieldElem, GrLexCmp> terms;

    MPoly() = default;
    explicit MPoly(int nv) : nvars(nv) {}
    static MPoly zero(int nv) { return MPoly(nv); }
    static MPoly constant(int nv, const FieldElem& c);
    static MPoly var(int nv, int i, unsigned e = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    FieldElem constant_value() const; // 0 if zero
    bool is_rational() const;
    int total_degree() const; // -1 for zero
    int degree_in(int v) const;
    bool is_homogeneous() const;
    bool uses_var(int v) const { return degree_in(v) > 0; }

    void add_term(const Mono& m, const FieldElem& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    bool operator==(const MPoly& o) const;
    MPoly scaled(const FieldElem& s) const;
    MPoly pow(unsigned e) const;

    MPoly derivative(int v) const;
    std::vector<MPoly> gradient() const;

    FieldElem eval(const std::vector<FieldElem>& x) const;
    QInterval eval_interval(const std::vector<QInterval>& x, unsigned prec) const;
    MPoly substitute(int v, const MPoly& g) const;
    MPoly subs_all(const std::vector<MPoly>& imgs, int out_nvars) const;

    MPoly set_var_one(int v) const;      // substitute var v = 1 (same nvars)
    MPoly drop_var(int v) const;         // remove an absent variable
    MPoly insert_var(int pos) const;     // add a fresh absent variable
    MPoly homogenize(int deg, int v) const;
    MPoly swap_vars(int a, int b) const;

    // F(M x): invertible linear change of coordinates with rational entries
    MPoly linear_change(const std::vector<std::vector<Q>>& M) const;

    // leading term in grlex
    const Mono& lead_mono() const;
    const FieldElem& lead_coeff() const;

    std::string str(const std::vector<std::string>& vars) const;
    std::string str() const; // default names x,y,z,w,...

    // view as univariate in v: coefficient polys have v-exponent zero
    std::vector<MPoly> as_univar(int v) const;
    static MPoly from_univar(const std::vector<MPoly>& cs, int v);
    // univariate polynomial in variable v (all other variables absent)
    UPoly to_upoly(int v) const;
    static MPoly of_upoly(const UPoly& p, int nv, int v);
};

// exact division: throws if not divisible
MPoly divexact(const MPoly& f, const MPoly& g);
bool divides(const MPoly& g, const MPoly& f, MPoly* quotient = nullptr);

// remainder of f under multivariate division by the single divisor g,
// using grlex with the given variable priority permutation
MPoly reduce_mod(const MPoly& f, const MPoly& g, const std::vector<int>& var_priority);

// resultant with respect to variable v via the subresultant PRS
MPoly resultant(const MPoly& f, const MPoly& g, int v);

// determinant of a square MPoly matrix (fraction-free Gauss-Bareiss)
MPoly mpoly_det(std::vector<std::vector<MPoly>> m);

// multivariate gcd (recursive primitive PRS); result has lead coefficient 1
MPoly mgcd(const MPoly& f, const MPoly& g);

// squarefree test helpers
MPoly multiple_factor_part(const MPoly& f); // gcd(f, all partials)
bool is_squarefree(const MPoly& f);

} // namespace stubborn
