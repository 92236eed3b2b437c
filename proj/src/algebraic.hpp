#pragma once

#include "mpoly.hpp"

#include <optional>

namespace stubborn {

// real algebraic number = isolated root of a squarefree polynomial
using AlgReal = RootInterval;

// decidable equality of two real algebraic numbers
bool alg_equal(AlgReal& a, AlgReal& b);

// A certified common real zero of a pair of plane curves (affine chart).
struct AlgPoint2 {
    AlgReal x, y;
    int mult_x = 1; // multiplicity of the abscissa in the x-eliminant

    double ax() const { return x.iv.mid().get_d(); }
    double ay() const { return y.iv.mid().get_d(); }
};

// All real common zeros of A, B (polynomials in variables vx, vy of a common
// ambient ring; all other variables must be absent). Requires the system to
// be zero-dimensional. Returns nullopt when abscissa separation or box
// matching cannot be validated within the budget (caller changes
// coordinates and retries). Throws CommonComponent when gcd(A,B) is
// nonconstant.
std::optional<std::vector<AlgPoint2>> common_real_zeros_2(const MPoly& A, const MPoly& B,
                                                          int vx, int vy);

// coordinate-wise equality of boxed points
bool alg_point_equal(AlgPoint2& p, AlgPoint2& q);

// Try to express the point exactly over a quadratic tower: factor the
// defining polynomial of x (rational case), take the matching linear or
// quadratic factor, then solve for y in the fiber.
std::optional<std::pair<FieldElem, FieldElem>> exactify_point(const AlgPoint2& p, const MPoly& A,
                                                              const MPoly& B, int vx, int vy);

// exact sign of G (in vars vx,vy) at a certified point of the system (A,B):
// refinement with an exact zero fallback through coordinate resultants
int sign_at_point(const MPoly& G, AlgPoint2& p, const MPoly& A, const MPoly& B, int vx, int vy);

} // namespace stubborn
