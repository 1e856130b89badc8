#pragma once

// Linear ODEs with polynomial coefficients for truncated power series.

#include "tca/rational.hpp"
#include "tca/series_forms.hpp"

#include <optional>
#include <string>

namespace tca {

/// Raised when a series is too short for the requested search bounds.
class InsufficientCoefficients : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

inline constexpr int kGuessMargin = 10;
inline constexpr int kDefaultMaxOrder = 6;
inline constexpr int kDefaultMaxDegree = 8;

struct GuessResult {
    std::optional<OdeOperator> op;
    std::string note;
    bool found() const noexcept { return op.has_value(); }
};

/// Searches orders 0..R and degrees 0..D in lexicographic order for an
/// operator annihilating every available coefficient of f. The hit is
/// scaled to primitive integer coefficients with positive leading
/// coefficient of p_R, and multiplied by t^{R - ord_0 p_R} when the origin is
/// a singular point (Euler form). Requires
/// f.size() >= (R+1)(D+1) + R + kGuessMargin.
GuessResult guess_ode(const CoeffSeries& f, int R = kDefaultMaxOrder, int D = kDefaultMaxDegree);

/// Coefficients of sum_i p_i(t) f^{(i)}(t) that the truncation determines.
CoeffSeries apply_ode(const OdeOperator& op, const CoeffSeries& f);

/// Termwise product, length min.
CoeffSeries hadamard(const CoeffSeries& f, const CoeffSeries& g);

/// n! for n = 0..length-1 (EGF -> OGF via hadamard).
CoeffSeries factorial_sequence(int length);
/// 1/n! for n = 0..length-1.
CoeffSeries inverse_factorial_sequence(int length);

}  // namespace tca
