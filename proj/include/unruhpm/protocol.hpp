#pragma once

#include "unruhpm/channels.hpp"

namespace unruhpm {

/// Result of the measure / accelerate / reverse protocol, conditioned on both
/// measurements succeeding.
struct ProtocolOutcome {
    TwoQubitDensityMatrix rho;        ///< Normalized Alice / region-I state.
    double success_probability;       ///< Probability of the double success, equals n2.
    double n1;                        ///< Probability that the first measurement succeeds.
    double n2;                        ///< Cumulative probability after the reversal succeeds.
};

/// Unnormalized end of the pure-state pipeline, before tracing out region II.
struct PipelineTrace {
    ThreeModePureState final_state;   ///< Squared norm equals n2.
    double n1;
    double n2;
};

/// Runs the five pure-state steps in order: partial measurement on Rob,
/// accelerated-basis expansion, bit flip, reversing measurement, bit flip.
PipelineTrace run_pipeline_stages(const ProtocolParams& params);

/// Pipeline result as a normalized density matrix with region II traced out.
ProtocolOutcome run_pipeline(const ProtocolParams& params);

/// The same outcome from closed-form matrix elements, no simulation:
///   rho = diag(a^2 pbar c^2, a^2 pbar qbar s^2, 0, b^2 qbar) / N2
/// plus corners a b sqrt(pbar qbar) c / N2, with c = cos r, s = sin r and
///   N2 = a^2 pbar c^2 + a^2 pbar qbar s^2 + b^2 qbar.
/// Independent of run_pipeline by construction; the pair is a cross-check.
ProtocolOutcome closed_form_rho(const ProtocolParams& params);

/// Double-success probability when q is chosen state-independently,
/// q = 1 - (1-p) cos^2 r:
///   P = (1-p) cos^2 r (1 + alpha^2 (1-p) sin^2 r).
double success_probability_si(double alpha, double p, double r);

}  // namespace unruhpm
