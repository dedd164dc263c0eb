#pragma once

#include "unruhpm/states.hpp"

namespace unruhpm {

/// Bloch decomposition of a two-qubit state,
///   rho = (I + x.sigma (x) I + I (x) y.sigma + sum_ij W_ij sigma_i (x) sigma_j) / 4.
struct BlochDecomposition {
    Eigen::Vector3d x;   ///< First-qubit Bloch vector.
    Eigen::Vector3d y;   ///< Second-qubit Bloch vector.
    Eigen::Matrix3d w;   ///< Correlation matrix W_ij = tr(rho sigma_i (x) sigma_j).
};

/// Wootters concurrence of an arbitrary two-qubit density matrix,
///   C = max{0, s1 - s2 - s3 - s4},
/// where s_i are the descending singular values of sqrt(rho) S sqrt(rho)^T
/// with S = sigma_y (x) sigma_y. These equal the square roots of the
/// eigenvalues of rho S rho* S; the singular-value form avoids squaring and
/// keeps rank-deficient states accurate to machine precision.
double concurrence(const TwoQubitDensityMatrix& rho);

/// Concurrence of the protocol output from its matrix elements alone:
///   C = 2 alpha beta sqrt((1-p)(1-q)) cos r / N2,
/// N2 as in closed_form_rho. Throws ZeroSuccessProbabilityError when N2 = 0.
double concurrence_pm(const ProtocolParams& params);

/// Concurrence at the state-independent reversal strength q = 1 - (1-p) cos^2 r:
///   C = 2 alpha beta / (1 + alpha^2 (1-p) sin^2 r).
double concurrence_si_opt(double alpha, double p, double r);

BlochDecomposition bloch_decompose(const TwoQubitDensityMatrix& rho);

/// Rebuilds the 4x4 matrix from a decomposition. Round-trips bloch_decompose.
qmath::ComplexMatrix bloch_reconstruct(const BlochDecomposition& b);

/// Geometric quantum discord (nearest classical-quantum state, Hilbert-Schmidt
/// distance, measured side = first qubit):
///   D = ( |x|^2 + |W|_F^2 - lmax(x x^T + W W^T) ) / 4.
double geometric_discord(const TwoQubitDensityMatrix& rho);

/// 2 * geometric_discord, normalized so Bell states score 1.
double scaled_discord(const TwoQubitDensityMatrix& rho);

}  // namespace unruhpm
