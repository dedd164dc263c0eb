#pragma once

#include "unruhpm/qmath.hpp"

namespace unruhpm {

/// Tolerance on state-vector and parameter normalization.
inline constexpr double kNormTol = 1e-12;

/// Tolerance on density-matrix Hermiticity, trace, and positivity checks.
inline constexpr double kDensityTol = 1e-10;

/// Which tensor slot a single-qubit operator acts on. The three-mode ordering
/// is Alice (x) region-I (x) region-II; "rob" addresses the region-I slot.
enum class Mode { alice, rob };

/**
 * Validated protocol parameter set.
 *
 * alpha, beta: input-state amplitudes, canonical gauge alpha, beta >= 0 with
 *              alpha^2 + beta^2 = 1.
 * p:           strength of the pre-acceleration partial measurement, in [0, 1].
 * q:           strength of the reversal measurement, in [0, 1). q = 1 is
 *              rejected separately: the reversed branch has probability 0.
 * r:           acceleration parameter, in [0, pi/4].
 */
class ProtocolParams {
public:
    ProtocolParams(double alpha, double beta, double p, double q, double r);

    /// beta is implied: sqrt(1 - alpha^2).
    static ProtocolParams from_alpha(double alpha, double p, double q, double r);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double p() const { return p_; }
    double q() const { return q_; }
    double r() const { return r_; }
    double p_bar() const { return 1.0 - p_; }
    double q_bar() const { return 1.0 - q_; }

private:
    double alpha_;
    double beta_;
    double p_;
    double q_;
    double r_;
};

/// Pure state of the Alice / region-I / region-II system, 8 amplitudes in the
/// computational basis with index a*4 + i*2 + ii. Not necessarily normalized:
/// conditional branches carry their probability in the squared norm.
class ThreeModePureState {
public:
    explicit ThreeModePureState(qmath::ComplexVector amplitudes);

    static Eigen::Index index(int a, int i, int ii) { return a * 4 + i * 2 + ii; }

    const qmath::ComplexVector& amplitudes() const { return amps_; }
    qmath::Complex amplitude(int a, int i, int ii) const { return amps_(index(a, i, ii)); }
    double squared_norm() const { return amps_.squaredNorm(); }

    /// True if every amplitude with the region-II qubit excited is negligible.
    bool region_ii_vacuum(double tol = kNormTol) const;

private:
    qmath::ComplexVector amps_;
};

/// 4x4 density matrix that passed validate_density. Immutable.
class TwoQubitDensityMatrix {
public:
    const qmath::ComplexMatrix& matrix() const { return rho_; }
    qmath::Complex at(Eigen::Index i, Eigen::Index j) const { return rho_(i, j); }

    friend TwoQubitDensityMatrix validate_density(const qmath::ComplexMatrix& rho);

private:
    explicit TwoQubitDensityMatrix(qmath::ComplexMatrix rho) : rho_(std::move(rho)) {}
    qmath::ComplexMatrix rho_;
};

/// Checks dimension, Hermiticity, unit trace, and positivity (tolerance
/// kDensityTol each), throwing the matching error type.
TwoQubitDensityMatrix validate_density(const qmath::ComplexMatrix& rho);

/// alpha|0 0 0> + beta|1 1 0>, Alice entangled with Rob, region II empty.
/// Amplitudes may carry any phase here; only |alpha|^2 + |beta|^2 = 1 is checked.
ThreeModePureState initial_state(qmath::Complex alpha, qmath::Complex beta);

/// Rewrites Rob's qubit in the uniformly accelerated basis:
///   |0>_R |0>_II -> cos r |0>_I |0>_II + sin r |1>_I |1>_II
///   |1>_R |0>_II -> |1>_I |0>_II
/// Requires the region-II slot of s to be in the vacuum and r in [0, pi/4].
ThreeModePureState unruh_expand(const ThreeModePureState& s, double r);

}  // namespace unruhpm
