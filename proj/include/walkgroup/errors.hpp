#pragma once

#include <stdexcept>
#include <string>

namespace walkgroup {

enum class errc {
    parse_error,         // malformed rational string or input document
    negative_weight,     // weight entry < 0
    sum_not_one,         // weights do not sum to 1 (and normalization is off)
    all_mass_at_origin,  // p_{0,0} = 1: the walk never moves
    not_biquadratic,     // kernel is not quadratic in one of the variables
    invariant_mismatch,  // D or E disagree between the two partial discriminants
    not_on_curve,        // group-law input violates the curve equation
    singular_curve,      // group law requested on a disc = 0 curve
    division_by_zero_y,  // even-index division-polynomial recursion at y = 0
    method_disagreement, // the two torsion-order routes disagree
    out_of_mazur_range,  // order criterion beyond the torsion bound 12
    near_pole,           // QRT iteration hit a vanishing denominator
    all_seeds_degenerate // every orbit seed was discarded
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::parse_error: return "parse-error";
        case errc::negative_weight: return "negative-weight";
        case errc::sum_not_one: return "sum-not-one";
        case errc::all_mass_at_origin: return "all-mass-at-origin";
        case errc::not_biquadratic: return "not-biquadratic";
        case errc::invariant_mismatch: return "invariant-mismatch";
        case errc::not_on_curve: return "not-on-curve";
        case errc::singular_curve: return "singular-curve";
        case errc::division_by_zero_y: return "division-by-zero-y";
        case errc::method_disagreement: return "method-disagreement";
        case errc::out_of_mazur_range: return "out-of-mazur-range";
        case errc::near_pole: return "near-pole";
        case errc::all_seeds_degenerate: return "all-seeds-degenerate";
    }
    return "unknown";
}

class walk_error : public std::runtime_error {
public:
    walk_error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace walkgroup
