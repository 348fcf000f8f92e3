#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace innerfn {

/// Tolerances and budget for the adaptive integrators.
///
/// `abs_tol` and `rel_tol` are stated on the scale of a Fourier coefficient,
/// i.e. after the 1/pi normalization. `panel_order` is the number of
/// Gauss-Legendre nodes per panel used by the coefficient integrator.
struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    std::size_t max_panels = std::size_t{1} << 16;
    int panel_order = 16;

    void validate() const;
};

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n nodes (Newton iteration on P_n). Cached per n.
const GaussRule& gauss_legendre(int n);

/// Spherical Bessel functions j_0(x) .. j_{out.size()-1}(x) for x >= 0.
///
/// Power series below 1, Miller's downward recurrence normalized by
/// sum (2n+1) j_n^2 = 1 up to the order, upward recurrence beyond it.
void spherical_bessel_j(double x, std::span<double> out);

/// Same as above when sin(x) and cos(x) are already known.
void spherical_bessel_j(double x, double sin_x, double cos_x, std::span<double> out);

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t panels = 0;
    bool converged = false;
};

/// Splits [a, b] into panels that shrink geometrically toward `a` (toward_a)
/// or `b`, stopping once the innermost panel's integral of |f| is below
/// `contribution_tol`. Returns the interior cut points in ascending order.
std::vector<double> geometric_cuts(const std::function<double(double)>& f, double a, double b,
                                   bool toward_a, double contribution_tol);

/// Adaptive Gauss-Kronrod (7/15) integration of f over [breaks.front(), breaks.back()].
///
/// Every entry of `breaks` is an initial panel boundary; entries listed in
/// `geometric` additionally get a geometric panel ladder on both sides.
/// Never evaluates f at a panel endpoint. Tolerances are absolute on the
/// integral: stops once error <= max(abs_tol, rel_tol * |value|).
QuadResult integrate(const std::function<double(double)>& f, std::span<const double> breaks,
                     double abs_tol, double rel_tol, std::size_t max_panels,
                     std::span<const double> geometric = {});

}  // namespace innerfn
