#pragma once

#include "mpoly.hpp"

#include <optional>

namespace stubborn {

using FMatrix = std::vector<std::vector<FieldElem>>;
using QMatrix = std::vector<std::vector<Q>>;

int f_rank(FMatrix m);
FieldElem f_det(FMatrix m);

// one solution of m x = b if consistent
std::optional<std::vector<FieldElem>> f_solve(FMatrix m, std::vector<FieldElem> b);

// Exact LDL^T with symmetric (diagonal) pivoting for a rational symmetric
// matrix. psd is true iff the matrix is positive semidefinite; the factors
// satisfy P A P^T = L D L^T with unit lower-triangular L.
struct LDLResult {
    bool psd = false;
    std::vector<int> perm;
    QMatrix L;
    std::vector<Q> D;
};
LDLResult ldl_psd(const QMatrix& A);

// Macaulay resultant of three ternary forms of equal degree d >= 1.
// nullopt when the extraneous minor degenerates (retry after a coordinate
// change); otherwise zero iff the forms share a projective zero.
std::optional<FieldElem> macaulay_res3(const MPoly& f0, const MPoly& f1, const MPoly& f2);

} // namespace stubborn
