#pragma once

#include <stdexcept>
#include <string>
#include <cstddef>

namespace stubborn {

enum class ErrCode {
    syntax_error,
    negative_radicand,
    unsupported_coefficients,
    zero_polynomial,
    chart_mismatch,
    common_component,
    separation_failure,
    positive_dimensional,
    non_isolated_zero,
    recursion_budget,
    singular_curve,
    not_totally_real,
    not_tangent,
    unresolved_box,
    numerical_stall,
    identity_mismatch,
    precondition,
    internal,
};

const char* err_name(ErrCode c);

struct Error : std::runtime_error {
    ErrCode code;
    size_t offset; // byte offset for parse errors, npos otherwise
    Error(ErrCode c, const std::string& msg, size_t off = std::string::npos)
        : std::runtime_error(msg), code(c), offset(off) {}
};

[[noreturn]] inline void fail(ErrCode c, const std::string& msg, size_t off = std::string::npos) {
    throw Error(c, msg, off);
}

inline const char* err_name(ErrCode c) {
    switch (c) {
        case ErrCode::syntax_error: return "SyntaxError";
        case ErrCode::negative_radicand: return "NegativeRadicand";
        case ErrCode::unsupported_coefficients: return "UnsupportedCoefficients";
        case ErrCode::zero_polynomial: return "ZeroPolynomial";
        case ErrCode::chart_mismatch: return "ChartMismatch";
        case ErrCode::common_component: return "CommonComponent";
        case ErrCode::separation_failure: return "SeparationFailure";
        case ErrCode::positive_dimensional: return "PositiveDimensional";
        case ErrCode::non_isolated_zero: return "NonIsolatedZero";
        case ErrCode::recursion_budget: return "RecursionBudget";
        case ErrCode::singular_curve: return "SingularCurve";
        case ErrCode::not_totally_real: return "NotTotallyReal";
        case ErrCode::not_tangent: return "NotTangent";
        case ErrCode::unresolved_box: return "UnresolvedBox";
        case ErrCode::numerical_stall: return "NumericalStall";
        case ErrCode::identity_mismatch: return "IdentityMismatch";
        case ErrCode::precondition: return "Precondition";
        case ErrCode::internal: return "Internal";
    }
    return "Unknown";
}

} // namespace stubborn
