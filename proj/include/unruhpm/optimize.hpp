#pragma once

#include "unruhpm/measures.hpp"

namespace unruhpm {

enum class MeasureKind { concurrence, scaled_discord };
enum class ReversalMethod { state_independent, state_dependent };

/// The reversal strength is confined to [0, 1 - kQUpperGuard]: q = 1 makes the
/// reversed branch impossible, and the supremum there is never attained.
inline constexpr double kQUpperGuard = 1e-9;

struct OptimalReversal {
    double q_opt;
    double value;   ///< Objective evaluated at q_opt.
    MeasureKind measure_kind;
    ReversalMethod method;
};

/// Reversal strength matched to the measurement and the acceleration but not
/// to the state: q = 1 - (1-p) cos^2 r, capped at 1 - kQUpperGuard.
double q_state_independent(double p, double r);

/// Maximizes the chosen measure of the protocol output over q by a coarse
/// 257-point scan followed by golden-section refinement to |dq| < 1e-9.
/// Deterministic; ties resolve toward the smaller q. Throws
/// DegenerateObjectiveError when alpha is 0 or 1 (the objective is constant).
OptimalReversal q_state_dependent(double alpha, double p, double r, MeasureKind kind);

}  // namespace unruhpm
