#include "unruhpm/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace unruhpm {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kCompletenessTol = 1e-12;

void require_strength(double strength, bool allow_one, const char* who) {
    if (!std::isfinite(strength)) {
        throw ValidationError(std::string(who) + ": strength must be finite");
    }
    if (!allow_one && strength == 1.0) {
        throw ValidationError(std::string(who) +
                              ": strength 1 is rejected, the surviving branch has probability 0");
    }
    if (strength < 0.0 || strength > 1.0) {
        throw ValidationError(std::string(who) + ": strength must lie in [0, 1" +
                              (allow_one ? "]" : ")"));
    }
}

}  // namespace

KrausChannel::KrausChannel(std::vector<qmath::ComplexMatrix> operators)
    : ops_(std::move(operators)) {
    if (ops_.empty()) {
        throw ValidationError("KrausChannel: at least one operator required");
    }
    qmath::ComplexMatrix sum = qmath::ComplexMatrix::Zero(2, 2);
    for (const auto& op : ops_) {
        if (op.rows() != 2 || op.cols() != 2) {
            throw DimensionError("KrausChannel: operators must be 2x2");
        }
        sum += op.adjoint() * op;
    }
    if ((sum - qmath::identity(2)).cwiseAbs().maxCoeff() > kCompletenessTol) {
        throw ValidationError("KrausChannel: completeness sum deviates from identity beyond 1e-12");
    }
}

KrausChannel unruh_channel(double r) {
    if (!std::isfinite(r) || r < 0.0 || r > kQuarterPi) {
        throw ValidationError("unruh_channel: r must lie in [0, pi/4]");
    }
    qmath::ComplexMatrix e1(2, 2);
    e1 << std::cos(r), 0, 0, 1;
    qmath::ComplexMatrix e2(2, 2);
    e2 << 0, 0, std::sin(r), 0;
    return KrausChannel({e1, e2});
}

TwoQubitDensityMatrix apply_channel_to_rob(const KrausChannel& channel,
                                           const TwoQubitDensityMatrix& rho) {
    qmath::ComplexMatrix out = qmath::ComplexMatrix::Zero(4, 4);
    for (const auto& op : channel.operators()) {
        const qmath::ComplexMatrix lifted = qmath::tensor_product(qmath::identity(2), op);
        out += lifted * rho.matrix() * lifted.adjoint();
    }
    return validate_density(out);
}

std::pair<MeasurementOperator, MeasurementOperator> partial_measurement(double strength) {
    require_strength(strength, true, "partial_measurement");
    qmath::ComplexMatrix m0(2, 2);
    m0 << std::sqrt(1.0 - strength), 0, 0, 1;
    qmath::ComplexMatrix m1(2, 2);
    m1 << std::sqrt(strength), 0, 0, 0;
    return {MeasurementOperator{m0, strength, MeasurementOutcome::success},
            MeasurementOperator{m1, strength, MeasurementOutcome::failure}};
}

qmath::ComplexMatrix reversal_operator(double strength) {
    require_strength(strength, false, "reversal_operator");
    qmath::ComplexMatrix m(2, 2);
    m << 1, 0, 0, std::sqrt(1.0 - strength);
    return m;
}

qmath::ComplexMatrix reversal_operator_composed(double strength) {
    require_strength(strength, false, "reversal_operator");
    return qmath::pauli_x() * partial_measurement(strength).first.matrix * qmath::pauli_x();
}

qmath::ComplexMatrix reversal_failure_operator(double strength) {
    require_strength(strength, false, "reversal_failure_operator");
    return qmath::pauli_x() * partial_measurement(strength).second.matrix * qmath::pauli_x();
}

ThreeModePureState apply_to_mode(const qmath::ComplexMatrix& op, const ThreeModePureState& s,
                                 Mode target) {
    if (op.rows() != 2 || op.cols() != 2) {
        throw DimensionError("apply_to_mode: operator must be 2x2");
    }
    const qmath::ComplexMatrix lifted =
        target == Mode::alice
            ? qmath::tensor_product(qmath::tensor_product(op, qmath::identity(2)),
                                    qmath::identity(2))
            : qmath::tensor_product(qmath::tensor_product(qmath::identity(2), op),
                                    qmath::identity(2));
    return ThreeModePureState(lifted * s.amplitudes());
}

MeasuredBranch measure_branch(const qmath::ComplexMatrix& op, const ThreeModePureState& s,
                              Mode target) {
    const double in2 = s.squared_norm();
    if (in2 == 0.0) {
        throw ValidationError("measure_branch: zero-norm input state");
    }
    ThreeModePureState out = apply_to_mode(op, s, target);
    const double prob = out.squared_norm() / in2;
    return MeasuredBranch{std::move(out), prob};
}

MeasuredBranch measure_branch(const MeasurementOperator& op, const ThreeModePureState& s,
                              Mode target) {
    return measure_branch(op.matrix, s, target);
}

double acceleration_to_r(const AccelerationSpec& spec) {
    if (!std::isfinite(spec.a) || spec.a < 0.0) {
        throw ValidationError("acceleration_to_r: a must be finite and >= 0");
    }
    if (!std::isfinite(spec.omega) || spec.omega <= 0.0) {
        throw ValidationError("acceleration_to_r: omega must be finite and > 0");
    }
    if (spec.a == 0.0) return 0.0;
    // arctangent form of arccos((1 + e^{-2 pi omega/a})^{-1/2}): the arccos
    // loses half the significant digits as r -> 0 and rounds to exactly 0
    // once e^{-2 pi omega/a} drops below 1 ulp; atan keeps full precision
    return std::atan(std::exp(-std::numbers::pi * spec.omega / spec.a));
}

}  // namespace unruhpm
