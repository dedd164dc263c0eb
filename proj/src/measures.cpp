#include "unruhpm/measures.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace unruhpm {

namespace {

const std::array<qmath::ComplexMatrix, 3>& pauli_basis() {
    static const std::array<qmath::ComplexMatrix, 3> sigma = {
        qmath::pauli_x(), qmath::pauli_y(), qmath::pauli_z()};
    return sigma;
}

}  // namespace

double concurrence(const TwoQubitDensityMatrix& rho) {
    const qmath::ComplexMatrix sq = qmath::hermitian_sqrt(rho.matrix());
    const qmath::ComplexMatrix spin_flip =
        qmath::tensor_product(qmath::pauli_y(), qmath::pauli_y());
    const qmath::ComplexMatrix m = sq * spin_flip * sq.transpose();
    Eigen::JacobiSVD<qmath::ComplexMatrix> svd(m);
    const Eigen::VectorXd s = svd.singularValues();
    return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double concurrence_pm(const ProtocolParams& params) {
    const double a = params.alpha();
    const double b = params.beta();
    const double pb = params.p_bar();
    const double qb = params.q_bar();
    const double c = std::cos(params.r());
    const double s = std::sin(params.r());
    const double n2 = a * a * pb * c * c + a * a * pb * qb * s * s + b * b * qb;
    if (n2 == 0.0) {
        throw ZeroSuccessProbabilityError(
            "concurrence_pm: both measurements cannot succeed (beta = 0 with p = 1)");
    }
    return 2.0 * a * b * std::sqrt(pb * qb) * c / n2;
}

double concurrence_si_opt(double alpha, double p, double r) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
        throw ValidationError("concurrence_si_opt: alpha must lie in [0, 1]");
    }
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw ValidationError("concurrence_si_opt: p must lie in [0, 1]");
    }
    if (!std::isfinite(r) || r < 0.0 || r > std::numbers::pi / 4.0) {
        throw ValidationError("concurrence_si_opt: r must lie in [0, pi/4]");
    }
    const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    const double s = std::sin(r);
    return 2.0 * alpha * beta / (1.0 + alpha * alpha * (1.0 - p) * s * s);
}

BlochDecomposition bloch_decompose(const TwoQubitDensityMatrix& rho) {
    const auto& sigma = pauli_basis();
    const qmath::ComplexMatrix i2 = qmath::identity(2);
    BlochDecomposition b;
    for (int i = 0; i < 3; ++i) {
        b.x(i) = (rho.matrix() * qmath::tensor_product(sigma[i], i2)).trace().real();
        b.y(i) = (rho.matrix() * qmath::tensor_product(i2, sigma[i])).trace().real();
        for (int j = 0; j < 3; ++j) {
            b.w(i, j) = (rho.matrix() * qmath::tensor_product(sigma[i], sigma[j])).trace().real();
        }
    }
    return b;
}

qmath::ComplexMatrix bloch_reconstruct(const BlochDecomposition& b) {
    const auto& sigma = pauli_basis();
    const qmath::ComplexMatrix i2 = qmath::identity(2);
    qmath::ComplexMatrix out = qmath::identity(4);
    for (int i = 0; i < 3; ++i) {
        out += b.x(i) * qmath::tensor_product(sigma[i], i2);
        out += b.y(i) * qmath::tensor_product(i2, sigma[i]);
        for (int j = 0; j < 3; ++j) {
            out += b.w(i, j) * qmath::tensor_product(sigma[i], sigma[j]);
        }
    }
    return 0.25 * out;
}

double geometric_discord(const TwoQubitDensityMatrix& rho) {
    const BlochDecomposition b = bloch_decompose(rho);
    const Eigen::Matrix3d k = b.x * b.x.transpose() + b.w * b.w.transpose();
    const double lmax = qmath::hermitian_eigenvalues(k.cast<qmath::Complex>(), true).front();
    const double d = 0.25 * (b.x.squaredNorm() + b.w.squaredNorm() - lmax);
    return std::max(0.0, d);
}

double scaled_discord(const TwoQubitDensityMatrix& rho) {
    return 2.0 * geometric_discord(rho);
}

}  // namespace unruhpm
