#include "unruhpm/optimize.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "unruhpm/protocol.hpp"

namespace unruhpm {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr int kCoarsePoints = 257;
constexpr double kRefineTol = 1e-9;

void require_pr(double p, double r, const char* who) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw ValidationError(std::string(who) + ": p must lie in [0, 1]");
    }
    if (!std::isfinite(r) || r < 0.0 || r > kQuarterPi) {
        throw ValidationError(std::string(who) + ": r must lie in [0, pi/4]");
    }
}

}  // namespace

double q_state_independent(double p, double r) {
    require_pr(p, r, "q_state_independent");
    const double c = std::cos(r);
    const double q = 1.0 - (1.0 - p) * c * c;
    return std::min(q, 1.0 - kQUpperGuard);
}

OptimalReversal q_state_dependent(double alpha, double p, double r, MeasureKind kind) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
        throw ValidationError("q_state_dependent: alpha must lie in [0, 1]");
    }
    require_pr(p, r, "q_state_dependent");
    const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    if (alpha * beta == 0.0) {
        throw DegenerateObjectiveError(
            "q_state_dependent: objective does not depend on q when alpha is 0 or 1");
    }

    const std::function<double(double)> objective = [&](double q) {
        const ProtocolParams params(alpha, beta, p, q, r);
        if (kind == MeasureKind::concurrence) return concurrence_pm(params);
        return scaled_discord(closed_form_rho(params).rho);
    };

    const double q_max = 1.0 - kQUpperGuard;
    int best = 0;
    double best_val = objective(0.0);
    for (int i = 1; i < kCoarsePoints; ++i) {
        const double q = q_max * i / (kCoarsePoints - 1);
        const double v = objective(q);
        if (v > best_val) {
            best = i;
            best_val = v;
        }
    }

    double lo = q_max * std::max(0, best - 1) / (kCoarsePoints - 1);
    double hi = q_max * std::min(kCoarsePoints - 1, best + 1) / (kCoarsePoints - 1);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - invphi * (hi - lo);
    double d = lo + invphi * (hi - lo);
    double fc = objective(c);
    double fd = objective(d);
    while (hi - lo > kRefineTol) {
        if (fc >= fd) {   // ties keep the left interval, biasing toward smaller q
            hi = d;
            d = c;
            fd = fc;
            c = hi - invphi * (hi - lo);
            fc = objective(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + invphi * (hi - lo);
            fd = objective(d);
        }
    }
    const double q_opt = 0.5 * (lo + hi);
    return OptimalReversal{q_opt, objective(q_opt), kind, ReversalMethod::state_dependent};
}

}  // namespace unruhpm
