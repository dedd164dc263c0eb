#include "unruhpm/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace unruhpm::qmath {

namespace {

void require_square_small(const ComplexMatrix& m, const char* who) {
    if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > 4) {
        throw DimensionError(std::string(who) + ": expected a square matrix of dimension 1..4, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

}  // namespace

ComplexMatrix identity(Eigen::Index n) {
    if (n < 1 || n > kMaxDim) {
        throw DimensionError("identity: dimension must be in 1..8, got " + std::to_string(n));
    }
    return ComplexMatrix::Identity(n, n);
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.size() == 0 || b.size() == 0) {
        throw DimensionError("tensor_product: empty operand");
    }
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    if (rows > kMaxDim || cols > kMaxDim) {
        throw DimensionError("tensor_product: result " + std::to_string(rows) + "x" +
                             std::to_string(cols) + " exceeds the 8x8 limit");
    }
    ComplexMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace_last(const ComplexMatrix& rho) {
    if (rho.rows() != 8 || rho.cols() != 8) {
        throw DimensionError("partial_trace_last: expected 8x8, got " + std::to_string(rho.rows()) +
                             "x" + std::to_string(rho.cols()));
    }
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
        }
    }
    return out;
}

ComplexMatrix partial_trace_last(const ComplexVector& psi) {
    if (psi.size() != 8) {
        throw DimensionError("partial_trace_last: expected 8 amplitudes, got " +
                             std::to_string(psi.size()));
    }
    ComplexMatrix out(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            out(i, j) = psi(2 * i) * std::conj(psi(2 * j)) +
                        psi(2 * i + 1) * std::conj(psi(2 * j + 1));
        }
    }
    return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, bool clamp_nonnegative) {
    require_square_small(m, "hermitian_eigenvalues");
    if (!is_hermitian(m)) {
        throw NonHermitianError("hermitian_eigenvalues: deviation from Hermiticity exceeds " +
                                std::to_string(kHermitianTol));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> vals(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + m.rows());
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    if (clamp_nonnegative) {
        for (double& v : vals) {
            if (v < 0.0) {
                if (v < -kEigClampTol) {
                    throw NegativeEigenvalueError(
                        "hermitian_eigenvalues: eigenvalue " + std::to_string(v) +
                        " below the clamp window");
                }
                v = 0.0;
            }
        }
    }
    return vals;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
    require_square_small(m, "hermitian_sqrt");
    if (!is_hermitian(m)) {
        throw NonHermitianError("hermitian_sqrt: input is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    Eigen::VectorXd vals = solver.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) < 0.0) {
            if (vals(i) < -kEigClampTol) {
                throw NegativeEigenvalueError("hermitian_sqrt: eigenvalue " +
                                              std::to_string(vals(i)) + " below the clamp window");
            }
            vals(i) = 0.0;
        }
    }
    return solver.eigenvectors() * vals.cwiseSqrt().asDiagonal() *
           solver.eigenvectors().adjoint();
}

}  // namespace unruhpm::qmath
