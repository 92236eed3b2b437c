#pragma once

#include "mpoly.hpp"

namespace stubborn {

// Factorization over the rationals. Factors are primitive with integer
// coefficients and positive leading coefficient (grlex); content carries the
// rest. Trivariate inputs must be homogeneous (every caller here factors
// plane forms); bivariate and univariate inputs are unrestricted.
struct Factorization {
    Q content;
    std::vector<std::pair<MPoly, int>> factors;

    MPoly reassemble(int nvars) const {
        MPoly r = MPoly::constant(nvars, FieldElem(content));
        for (auto& [p, e] : factors) r = r * p.pow(unsigned(e));
        return r;
    }
};

Factorization factor_rational(const MPoly& f);

// monic irreducible factors with multiplicity of a rational UPoly
std::vector<std::pair<UPoly, int>> factor_upoly(const UPoly& f);

} // namespace stubborn
