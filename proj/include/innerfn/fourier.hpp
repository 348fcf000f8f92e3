#pragma once

#include <string>
#include <vector>

#include "innerfn/catalog.hpp"
#include "innerfn/quadrature.hpp"

namespace innerfn {

/// Real Fourier coefficients of f on [-pi, pi] up to order N.
///
/// `alpha` and `beta` are indexed directly by k and have N + 1 entries;
/// alpha[0] is alpha_0 and beta[0] is always 0. M is the mean of |f| over
/// the period, so every |alpha_k| and |beta_k| is at most 2M.
struct FourierCoefficients {
    std::string name;
    std::vector<double> alpha;
    std::vector<double> beta;
    double M = 0.0;
    double achieved_error = 0.0;  // estimated bound on the error of any single coefficient
    bool converged = true;

    int order() const { return static_cast<int>(alpha.size()) - 1; }
    double alpha0() const { return alpha.empty() ? 0.0 : alpha[0]; }

    /// Throws std::invalid_argument unless N >= 1 and the arrays agree in size.
    void validate() const;
};

/// alpha_k = (1/pi) int f cos(k theta), beta_k = (1/pi) int f sin(k theta).
///
/// Panels start at every declared point of `spec` and shrink geometrically
/// toward log-divergence and essential points; each panel is refined until
/// its Gauss-Legendre interpolant of f is accurate, and the interpolant is
/// then integrated against e^{-ik theta} exactly. Declared parity restricts
/// the work to [0, pi] and zeroes the vanishing family.
///
/// Throws QuadratureError (with the worst k) when the panel budget runs out,
/// except for functions with an essential point, which return a best-effort
/// result with `converged == false`.
FourierCoefficients compute_coefficients(const RealFunctionSpec& spec, int N,
                                         const QuadConfig& quad = {});

struct BoundReport {
    double max_alpha_ratio = 0.0;  // max_k |alpha_k| / 2M, k >= 0
    double max_beta_ratio = 0.0;   // max_k |beta_k| / 2M
    bool violation = false;        // some ratio above 1 + 1e-8
};

BoundReport verify_bounds(const FourierCoefficients& fc);

}  // namespace innerfn
