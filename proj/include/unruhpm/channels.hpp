#pragma once

#include <utility>
#include <vector>

#include "unruhpm/states.hpp"

namespace unruhpm {

enum class MeasurementOutcome { success, failure };

/// Single Kraus operator of a weak measurement, tagged with its strength and
/// which branch of the instrument it implements.
struct MeasurementOperator {
    qmath::ComplexMatrix matrix;
    double strength;
    MeasurementOutcome outcome;
};

/// Completely positive trace-preserving map on one qubit, given by Kraus
/// operators satisfying sum E_k^dagger E_k = I within 1e-12.
class KrausChannel {
public:
    explicit KrausChannel(std::vector<qmath::ComplexMatrix> operators);
    const std::vector<qmath::ComplexMatrix>& operators() const { return ops_; }

private:
    std::vector<qmath::ComplexMatrix> ops_;
};

/// Uniform proper acceleration a of a detector sensitive to a single Dirac
/// mode of frequency omega, both in natural units (c = 1).
struct AccelerationSpec {
    double a;
    double omega;
};

/// Unnormalized post-measurement state together with the probability of the
/// branch, |out|^2 / |in|^2.
struct MeasuredBranch {
    ThreeModePureState state;
    double probability;
};

/// Effective single-qubit channel seen by a static observer when the partner
/// mode beyond the horizon is traced out: amplitude damping toward |1>.
///   E1 = [[cos r, 0], [0, 1]],  E2 = [[0, 0], [sin r, 0]],  r in [0, pi/4].
KrausChannel unruh_channel(double r);

/// Applies a single-qubit channel to the second qubit of a two-qubit state.
TwoQubitDensityMatrix apply_channel_to_rob(const KrausChannel& channel,
                                           const TwoQubitDensityMatrix& rho);

/// Success / failure operator pair of the strength-p partial measurement
///   M0 = diag(sqrt(1-p), 1),  M1 = sqrt(p) |0><0|,  p in [0, 1].
/// M0 moves the state toward |1> without collapsing it; M1 is the collapse.
std::pair<MeasurementOperator, MeasurementOperator> partial_measurement(double strength);

/// Success operator of the reversing measurement, diag(1, sqrt(1-q)): the
/// strength-q partial measurement conjugated by bit flips. The diverging
/// 1/sqrt(1-q) normalization is deliberately absent; branch probabilities
/// carry it instead.
qmath::ComplexMatrix reversal_operator(double strength);

/// Same operator built literally as X * M0(q) * X. Bit-identical to
/// reversal_operator by construction; kept as an independent route.
qmath::ComplexMatrix reversal_operator_composed(double strength);

/// Failure branch of the reversing measurement, X * M1(q) * X = sqrt(q)|1><1|.
qmath::ComplexMatrix reversal_failure_operator(double strength);

/// Lifts a 2x2 operator to the 8-dimensional space and applies it to the
/// chosen slot (region II is never addressed directly).
ThreeModePureState apply_to_mode(const qmath::ComplexMatrix& op, const ThreeModePureState& s,
                                 Mode target);

/// Applies one measurement branch and reports its probability. Throws
/// ValidationError on a zero-norm input state.
MeasuredBranch measure_branch(const qmath::ComplexMatrix& op, const ThreeModePureState& s,
                              Mode target);
MeasuredBranch measure_branch(const MeasurementOperator& op, const ThreeModePureState& s,
                              Mode target);

/// Acceleration parameter of the channel:
///   r = arccos( (1 + e^{-2 pi omega / a})^{-1/2} ) = arctan( e^{-pi omega / a} ),
/// monotone in a, with r(0) = 0 and r -> pi/4 as a -> infinity.
/// Computed through the arctangent form, which stays fully conditioned at
/// small r. Requires a >= 0 and omega > 0.
double acceleration_to_r(const AccelerationSpec& spec);

}  // namespace unruhpm
