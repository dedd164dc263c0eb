#include "unruhpm/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace unruhpm {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw ValidationError(std::string(name) + " must be finite");
    }
}

}  // namespace

ProtocolParams::ProtocolParams(double alpha, double beta, double p, double q, double r)
    : alpha_(alpha), beta_(beta), p_(p), q_(q), r_(r) {
    require_finite(alpha, "alpha");
    require_finite(beta, "beta");
    require_finite(p, "p");
    require_finite(q, "q");
    require_finite(r, "r");
    if (alpha < 0.0 || beta < 0.0) {
        throw ValidationError("alpha and beta must be nonnegative (canonical gauge)");
    }
    if (std::abs(alpha * alpha + beta * beta - 1.0) > kNormTol) {
        throw ValidationError("alpha^2 + beta^2 must equal 1 within " + std::to_string(kNormTol));
    }
    if (p < 0.0 || p > 1.0) {
        throw ValidationError("p must lie in [0, 1]");
    }
    if (q == 1.0) {
        throw ValidationError("q = 1 is rejected: the reversal succeeds with probability 0");
    }
    if (q < 0.0 || q > 1.0) {
        throw ValidationError("q must lie in [0, 1)");
    }
    if (r < 0.0 || r > kQuarterPi) {
        throw ValidationError("r must lie in [0, pi/4]");
    }
}

ProtocolParams ProtocolParams::from_alpha(double alpha, double p, double q, double r) {
    require_finite(alpha, "alpha");
    if (alpha < 0.0 || alpha > 1.0) {
        throw ValidationError("alpha must lie in [0, 1]");
    }
    const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    return ProtocolParams(alpha, beta, p, q, r);
}

ThreeModePureState::ThreeModePureState(qmath::ComplexVector amplitudes)
    : amps_(std::move(amplitudes)) {
    if (amps_.size() != 8) {
        throw DimensionError("ThreeModePureState: expected 8 amplitudes, got " +
                             std::to_string(amps_.size()));
    }
}

bool ThreeModePureState::region_ii_vacuum(double tol) const {
    for (int a = 0; a < 2; ++a) {
        for (int i = 0; i < 2; ++i) {
            if (std::abs(amps_(index(a, i, 1))) > tol) return false;
        }
    }
    return true;
}

TwoQubitDensityMatrix validate_density(const qmath::ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw DimensionError("validate_density: expected 4x4, got " + std::to_string(rho.rows()) +
                             "x" + std::to_string(rho.cols()));
    }
    if (!qmath::is_hermitian(rho, kDensityTol)) {
        throw NonHermitianError("validate_density: matrix is not Hermitian within " +
                                std::to_string(kDensityTol));
    }
    if (std::abs(rho.trace().real() - 1.0) > kDensityTol ||
        std::abs(rho.trace().imag()) > kDensityTol) {
        throw NonUnitTraceError("validate_density: trace deviates from 1 beyond " +
                                std::to_string(kDensityTol));
    }
    Eigen::SelfAdjointEigenSolver<qmath::ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -kDensityTol) {
        throw NegativeEigenvalueError("validate_density: eigenvalue " + std::to_string(min_eig) +
                                      " below -" + std::to_string(kDensityTol));
    }
    return TwoQubitDensityMatrix(rho);
}

ThreeModePureState initial_state(qmath::Complex alpha, qmath::Complex beta) {
    const double n2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(n2 - 1.0) > kNormTol) {
        throw ValidationError("initial_state: |alpha|^2 + |beta|^2 must equal 1");
    }
    qmath::ComplexVector amps = qmath::ComplexVector::Zero(8);
    amps(ThreeModePureState::index(0, 0, 0)) = alpha;
    amps(ThreeModePureState::index(1, 1, 0)) = beta;
    return ThreeModePureState(std::move(amps));
}

ThreeModePureState unruh_expand(const ThreeModePureState& s, double r) {
    if (!(r >= 0.0 && r <= kQuarterPi)) {
        throw ValidationError("unruh_expand: r must lie in [0, pi/4]");
    }
    if (!s.region_ii_vacuum()) {
        throw ValidationError("unruh_expand: region-II mode must be in the vacuum");
    }
    const double c = std::cos(r);
    const double sn = std::sin(r);
    qmath::ComplexVector out = qmath::ComplexVector::Zero(8);
    for (int a = 0; a < 2; ++a) {
        out(ThreeModePureState::index(a, 0, 0)) += c * s.amplitude(a, 0, 0);
        out(ThreeModePureState::index(a, 1, 1)) += sn * s.amplitude(a, 0, 0);
        out(ThreeModePureState::index(a, 1, 0)) += s.amplitude(a, 1, 0);
    }
    return ThreeModePureState(std::move(out));
}

}  // namespace unruhpm
