#pragma once

#include "algebraic.hpp"
#include "qlinalg.hpp"

#include <optional>
#include <string>

namespace stubborn {

// A real point of the projective plane produced by elimination: certified
// box in a fixed affine chart of the original coordinates, plus exact tower
// coordinates whenever the defining data factors far enough.
struct RealPoint3 {
    int chart = 2; // index of the coordinate pinned to 1
    std::optional<std::vector<FieldElem>> exact; // 3 projective coords, chart coord = 1
    std::vector<QInterval> box;                  // 3 intervals, chart coord = [1,1]
    // provenance for refinement / equality decisions
    AlgPoint2 raw;
    QMatrix change; // coordinate change whose chart z'=1 contains raw

    void refine();
    std::string str() const;
};

bool real_point_equal(RealPoint3& a, RealPoint3& b);

struct IntersectionPoint {
    RealPoint3 point;
    int multiplicity = 0;
    bool smooth_on_F = true;
    bool smooth_on_H = true;
};

struct IntersectionProfile {
    QMatrix coordinate_change;
    uint64_t seed = 0;
    std::vector<IntersectionPoint> real_points;
    int nonreal_multiplicity = 0;
    int bezout = 0;
    int real_multiplicity() const {
        int s = 0;
        for (auto& p : real_points) s += p.multiplicity;
        return s;
    }
};

// Real/nonreal intersection multiplicities of two coprime plane forms,
// audited against the Bezout number.
IntersectionProfile intersection_profile(const MPoly& F, const MPoly& H, uint64_t seed = 0);

bool is_real_rooted_on(const MPoly& F, const MPoly& H, uint64_t seed = 0);

// All real points with F = grad F = 0; PositiveDimensional if F is not
// squarefree.
std::vector<RealPoint3> real_singular_zeros(const MPoly& F, uint64_t seed = 0);

// sign analysis of F on the curve H = 0
enum class SignKind { NONNEG_CERTIFIED_SAMPLES, SIGN_CHANGE, INDEFINITE_BY_ODD_MULT };

struct SignOnCurve {
    SignKind kind;
    bool exhaustive = false; // arc-complete slice set achieved (certificate grade)
    int samples = 0;
    std::string detail;
    std::optional<std::vector<QInterval>> witness; // a point with F < 0 (or odd-mult point)
};

SignOnCurve sign_on_curve(const MPoly& F, const MPoly& H, int slice_count, uint64_t seed = 0);

struct TwoTorsionReport {
    Q a, b;
    int real_nontrivial_count = 0; // 1 or 3
};
TwoTorsionReport two_torsion_real(const Q& a, const Q& b);

// global nonnegativity of a ternary form via critical-point elimination
enum class NonnegKind { NONNEG_CERTIFIED, NEGATIVE_WITNESS, UNDECIDED };
struct NonnegReport {
    NonnegKind kind;
    std::string detail;
    std::optional<std::vector<QInterval>> witness;
};
NonnegReport global_nonneg_ternary(const MPoly& F, uint64_t seed = 0);

// smoothness of the projective plane curve F = 0 (over C), by Macaulay
// resultant of the partials with coordinate-change retries
bool certify_smooth(const MPoly& F, uint64_t seed = 0);

// totally-real certification per rational irreducible factor
struct TotallyRealCheck {
    bool ok = false;
    bool squarefree = true;
    std::string reason;
};
TotallyRealCheck certify_totally_real(const MPoly& H, uint64_t seed = 0);

// signature of the symmetric matrix of a ternary quadratic form
struct QuadSignature {
    int pos = 0, neg = 0, zero = 0;
};
QuadSignature quadric_signature(const MPoly& Q2);

// classification of an irreducible (over Q) plane cubic
enum class IrredCubicClass {
    smooth,
    nodal_connected,
    cuspidal,
    solitary_node,
    concurrent_conjugate_lines, // three real concurrent lines over a cubic field
    triangle_conjugate_lines,   // three real lines in general position, conjugate
    not_totally_real,
};
IrredCubicClass classify_irreducible_cubic(const MPoly& H, uint64_t seed = 0);

} // namespace stubborn
