#pragma once

#include <cstddef>
#include <vector>

#include "innerfn/catalog.hpp"
#include "innerfn/fourier.hpp"
#include "innerfn/inner.hpp"

namespace innerfn {

enum class Extrapolation { none, richardson };

/// Increasing radii in (0, 1) along which u(rho, theta) is followed toward the circle.
struct RhoLadder {
    std::vector<double> rhos;
    Extrapolation extrapolation = Extrapolation::richardson;

    /// rho_j = 1 - 2^{-j} for j = first..last.
    static RhoLadder geometric(int first = 4, int last = 14,
                               Extrapolation extrapolation = Extrapolation::richardson);

    void validate() const;
};

struct RecoveryOptions {
    double threshold = 1e-6;  // converged <=> residual < threshold
};

struct RhoEstimate {
    double rho = 0.0;
    double u = 0.0;
};

struct RecoveryResult {
    double theta = 0.0;
    std::vector<RhoEstimate> estimates;
    double extrapolated = 0.0;
    bool converged = false;
    double residual = 0.0;
    bool extrapolation_applied = false;
    /// Some rung has a series tail bound >= 0.1 * threshold.
    bool truncation_limited = false;
};

/// True when tc's tail bound at rho is below 0.1 * threshold.
bool truncation_guard(const TaylorCoefficients& tc, double rho, double threshold);

/// Follows Re w(rho, theta) up the ladder. Divergence is reported, not thrown.
RecoveryResult radial_recover(const TaylorCoefficients& tc, double theta, const RhoLadder& ladder,
                              const RecoveryOptions& options = {});

/// Abel-Poisson means alpha_0/2 + sum_k (alpha_k cos k theta + beta_k sin k theta) rho^k.
RecoveryResult abel_sum(const FourierCoefficients& fc, double theta, const RhoLadder& ladder,
                        const RecoveryOptions& options = {});

struct GridError {
    double l1 = 0.0;
    double linf = 0.0;
    std::size_t points = 0;
};

/// Compares f with Re w(rho, .) on a uniform grid of `grid_size` angles
/// theta_j = -pi + 2 pi j / grid_size, skipping points within
/// `exclusion_radius` of a declared point. L1 is the mean over kept points.
GridError grid_error(const RealFunctionSpec& spec, const TaylorCoefficients& tc, double rho,
                     std::size_t grid_size, double exclusion_radius);

}  // namespace innerfn
