#include "innerfn/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "innerfn/errors.hpp"

namespace innerfn {

namespace {

constexpr double kPi = std::numbers::pi;

void check_theta(double theta) {
    if (!(theta >= -kPi && theta <= kPi)) {
        throw DomainError("theta must lie in [-pi, pi]");
    }
}

// Fills in extrapolated/residual/converged from the estimates.
void finish(RecoveryResult& r, Extrapolation mode, double threshold) {
    const auto& e = r.estimates;
    const std::size_t n = e.size();
    r.extrapolated = e.back().u;
    r.residual = n >= 2 ? std::abs(e[n - 1].u - e[n - 2].u)
                        : std::numeric_limits<double>::infinity();
    if (mode == Extrapolation::richardson && n >= 3) {
        // Error model u = L + a (1 - rho); accept only if the last three agree with it.
        const double h1 = 1.0 - e[n - 3].rho;
        const double h2 = 1.0 - e[n - 2].rho;
        const double h3 = 1.0 - e[n - 1].rho;
        const double d1 = e[n - 2].u - e[n - 3].u;
        const double d2 = e[n - 1].u - e[n - 2].u;
        const double predicted = (h3 - h2) / (h2 - h1);
        if (d1 != 0.0 && std::isfinite(d1) && std::isfinite(d2)) {
            const double observed = d2 / d1;
            if (std::abs(observed - predicted) < 0.1 * std::abs(predicted)) {
                const double last = e[n - 1].u + h3 * d2 / (h2 - h3);
                const double previous = e[n - 2].u + h2 * d1 / (h1 - h2);
                r.extrapolated = last;
                r.residual = std::abs(last - previous);
                r.extrapolation_applied = true;
            }
        }
    }
    r.converged = std::isfinite(r.extrapolated) && r.residual < threshold;
}

}  // namespace

RhoLadder RhoLadder::geometric(int first, int last, Extrapolation extrapolation) {
    if (first < 1 || last < first || last > 52) {
        throw std::invalid_argument("geometric ladder needs 1 <= first <= last <= 52");
    }
    RhoLadder ladder;
    ladder.extrapolation = extrapolation;
    for (int j = first; j <= last; ++j) {
        ladder.rhos.push_back(1.0 - std::ldexp(1.0, -j));
    }
    return ladder;
}

void RhoLadder::validate() const {
    if (rhos.empty()) {
        throw std::invalid_argument("rho ladder is empty");
    }
    if (extrapolation == Extrapolation::richardson && rhos.size() < 2) {
        throw std::invalid_argument("Richardson extrapolation needs at least two radii");
    }
    for (std::size_t i = 0; i < rhos.size(); ++i) {
        if (!(rhos[i] > 0.0 && rhos[i] < 1.0)) {
            throw std::invalid_argument("ladder radii must lie in (0, 1)");
        }
        if (i > 0 && !(rhos[i] > rhos[i - 1])) {
            throw std::invalid_argument("ladder radii must be strictly increasing");
        }
    }
}

bool truncation_guard(const TaylorCoefficients& tc, double rho, double threshold) {
    return tc.tail_estimate(rho) < 0.1 * threshold;
}

RecoveryResult radial_recover(const TaylorCoefficients& tc, double theta, const RhoLadder& ladder,
                              const RecoveryOptions& options) {
    ladder.validate();
    check_theta(theta);
    RecoveryResult r;
    r.theta = theta;
    for (double rho : ladder.rhos) {
        r.estimates.push_back({rho, evaluate(tc, DiskPoint(rho, theta)).real()});
        if (!truncation_guard(tc, rho, options.threshold)) {
            r.truncation_limited = true;
        }
    }
    finish(r, ladder.extrapolation, options.threshold);
    return r;
}

RecoveryResult abel_sum(const FourierCoefficients& fc, double theta, const RhoLadder& ladder,
                        const RecoveryOptions& options) {
    fc.validate();
    ladder.validate();
    check_theta(theta);
    const int N = fc.order();
    std::vector<double> a(N + 1);
    a[0] = 0.5 * fc.alpha[0];
    for (int k = 1; k <= N; ++k) {
        const double kt = k * theta;
        a[k] = fc.alpha[k] * std::cos(kt) + fc.beta[k] * std::sin(kt);
    }
    RecoveryResult r;
    r.theta = theta;
    const double tail_scale = 4.0 * fc.M;
    for (double rho : ladder.rhos) {
        double u = a[N];
        for (int k = N - 1; k >= 0; --k) {
            u = u * rho + a[k];
        }
        r.estimates.push_back({rho, u});
        const double tail = tail_scale * std::pow(rho, N + 1) / (1.0 - rho);
        if (!(tail < 0.1 * options.threshold)) {
            r.truncation_limited = true;
        }
    }
    finish(r, ladder.extrapolation, options.threshold);
    return r;
}

GridError grid_error(const RealFunctionSpec& spec, const TaylorCoefficients& tc, double rho,
                     std::size_t grid_size, double exclusion_radius) {
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw DomainError("grid_error needs 0 <= rho < 1");
    }
    if (!(exclusion_radius >= 0.0)) {
        throw std::invalid_argument("exclusion radius must be non-negative");
    }
    GridError g;
    double sum = 0.0;
    for (std::size_t j = 0; j < grid_size; ++j) {
        const double theta = -kPi + 2.0 * kPi * static_cast<double>(j) / grid_size;
        bool excluded = false;
        for (const auto& sp : spec.singular_points) {
            const double d = circle_distance(sp.theta, theta);
            const bool undefined = sp.kind == SingularKind::log_divergence ||
                                   sp.kind == SingularKind::essential;
            if (d <= exclusion_radius || (undefined && d <= 1e-14)) {
                excluded = true;
                break;
            }
        }
        if (excluded) {
            continue;
        }
        const double err =
            std::abs(eval_real(spec, theta) - evaluate(tc, DiskPoint(rho, theta)).real());
        sum += err;
        g.linf = std::max(g.linf, err);
        ++g.points;
    }
    if (g.points == 0) {
        throw EmptyGridError("every grid point falls inside an excluded neighborhood");
    }
    g.l1 = sum / static_cast<double>(g.points);
    return g;
}

}  // namespace innerfn
