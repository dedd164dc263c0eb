#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "unruhpm/errors.hpp"

namespace unruhpm::qmath {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest matrix dimension any operation here produces or consumes.
inline constexpr Eigen::Index kMaxDim = 8;

/// Tolerance for Hermiticity checks (max elementwise |m - m^dagger|).
inline constexpr double kHermitianTol = 1e-10;

/// Eigenvalues in [-kEigClampTol, 0) are treated as rounding noise and clamped to 0.
inline constexpr double kEigClampTol = 1e-10;

ComplexMatrix identity(Eigen::Index n);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Kronecker product a (x) b. Throws DimensionError if the result would exceed 8x8.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out the last qubit of an 8x8 operator on a 2x2x2 system, returning 4x4.
ComplexMatrix partial_trace_last(const ComplexMatrix& rho);

/// Same reduction for a pure state given by its 8 amplitudes, without forming
/// the 8x8 outer product.
ComplexMatrix partial_trace_last(const ComplexVector& psi);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// Eigenvalues of a Hermitian matrix (n <= 4), sorted descending.
/// With clamp_nonnegative, values in [-kEigClampTol, 0) become 0 and anything
/// below that throws NegativeEigenvalueError.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          bool clamp_nonnegative = false);

/// Positive semidefinite square root of a Hermitian PSD matrix (n <= 4).
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m);

}  // namespace unruhpm::qmath
