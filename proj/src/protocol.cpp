#include "unruhpm/protocol.hpp"

#include <cmath>
#include <numbers>

namespace unruhpm {

PipelineTrace run_pipeline_stages(const ProtocolParams& params) {
    ThreeModePureState psi = initial_state(params.alpha(), params.beta());

    MeasuredBranch first =
        measure_branch(partial_measurement(params.p()).first, psi, Mode::rob);
    const double n1 = first.probability;
    if (n1 == 0.0) {
        throw ZeroSuccessProbabilityError(
            "run_pipeline_stages: the first measurement cannot succeed (alpha = 1, p = 1)");
    }

    // flip, bare strength-q success operator, flip back: together these act as
    // reversal_operator(q) on region I, but the stages stay observable here
    ThreeModePureState cur = unruh_expand(first.state, params.r());
    cur = apply_to_mode(qmath::pauli_x(), cur, Mode::rob);
    cur = measure_branch(partial_measurement(params.q()).first, cur, Mode::rob).state;
    cur = apply_to_mode(qmath::pauli_x(), cur, Mode::rob);

    const double n2 = cur.squared_norm();
    if (n2 == 0.0) {
        throw ZeroSuccessProbabilityError(
            "run_pipeline_stages: both measurements cannot succeed (beta = 0 with p = 1)");
    }
    return PipelineTrace{std::move(cur), n1, n2};
}

ProtocolOutcome run_pipeline(const ProtocolParams& params) {
    PipelineTrace trace = run_pipeline_stages(params);
    const qmath::ComplexMatrix raw = qmath::partial_trace_last(trace.final_state.amplitudes());
    TwoQubitDensityMatrix rho = validate_density(raw / trace.n2);
    return ProtocolOutcome{std::move(rho), trace.n2, trace.n1, trace.n2};
}

ProtocolOutcome closed_form_rho(const ProtocolParams& params) {
    const double a = params.alpha();
    const double b = params.beta();
    const double pb = params.p_bar();
    const double qb = params.q_bar();
    const double c = std::cos(params.r());
    const double s = std::sin(params.r());

    const double rho11 = a * a * pb * c * c;
    const double rho22 = a * a * pb * qb * s * s;
    const double rho44 = b * b * qb;
    const double corner = a * b * std::sqrt(pb * qb) * c;
    const double n2 = rho11 + rho22 + rho44;
    if (n2 == 0.0) {
        throw ZeroSuccessProbabilityError(
            "closed_form_rho: both measurements cannot succeed (beta = 0 with p = 1)");
    }

    qmath::ComplexMatrix rho = qmath::ComplexMatrix::Zero(4, 4);
    rho(0, 0) = rho11 / n2;
    rho(1, 1) = rho22 / n2;
    rho(3, 3) = rho44 / n2;
    rho(0, 3) = corner / n2;
    rho(3, 0) = corner / n2;

    const double n1 = a * a * pb + b * b;
    return ProtocolOutcome{validate_density(rho), n2, n1, n2};
}

double success_probability_si(double alpha, double p, double r) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
        throw ValidationError("success_probability_si: alpha must lie in [0, 1]");
    }
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw ValidationError("success_probability_si: p must lie in [0, 1]");
    }
    if (!std::isfinite(r) || r < 0.0 || r > std::numbers::pi / 4.0) {
        throw ValidationError("success_probability_si: r must lie in [0, pi/4]");
    }
    const double pb = 1.0 - p;
    const double c = std::cos(r);
    const double s = std::sin(r);
    return pb * c * c * (1.0 + alpha * alpha * pb * s * s);
}

}  // namespace unruhpm
