#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "innerfn/boundary.hpp"
#include "innerfn/catalog.hpp"
#include "innerfn/inner.hpp"

namespace innerfn {

/// Model-selection thresholds for radial probes.
struct ProbeConfig {
    double constant_range_fraction = 0.05;  // bounded if range/mean over the top half is below
    double log_power_ratio = 0.5;           // log wins if SS_log < ratio * SS_power
    double guard_threshold = 1e-6;          // truncation guard at the largest radius
};

struct ProbeResult {
    bool bounded = false;
    double growth_exponent = 0.0;  // 0 when bounded or logarithmic
    bool log_flag = false;

    // diagnostics
    double range_ratio = 0.0;
    double log_slope = 0.0;  // d|w| / d ln(1/(1-rho))
    double log_intercept = 0.0;
    double log_residual = 0.0;
    double power_exponent = 0.0;  // fitted p in |w| ~ (1-rho)^{-p}
    double power_residual = 0.0;
    std::vector<RhoEstimate> magnitudes;  // (rho, |w|)
};

/// Fits |w(rho, theta1)| along the ladder against constant, logarithmic and
/// power-law growth. Needs at least four radii; throws TruncationLimitedError
/// if the series tail is not negligible at the largest one.
ProbeResult probe_point(const TaylorCoefficients& tc, double theta1, const RhoLadder& ladder,
                        const ProbeConfig& config = {});

enum class Verdict { regular, soft, borderline_hard, hard };

std::string_view to_string(Verdict verdict);

struct SingularityReport {
    double theta1 = 0.0;
    Verdict verdict = Verdict::soft;
    double growth_exponent = 0.0;
    bool log_flag = false;
    std::optional<int> degree;
    /// Bounded at every probed step and nothing says otherwise: the point
    /// may be regular. Radial probes cannot tell the two apart.
    bool regular_not_excluded = false;
    std::vector<std::string> notes;
    ProbeResult probe;
    std::vector<ProbeResult> walk;  // probes after each chain step
};

struct ClassifyOptions {
    int max_steps = 6;
    ProbeConfig probe;
    /// Ground truth from a closed form, when one exists: true if analytic at theta1.
    std::optional<bool> known_regular;
};

/// Soft points are walked with angular derivatives until the probe turns
/// unbounded (degree of softness); hard points with angular primitives until
/// it turns bounded (one primitive = borderline hard, degree 0).
SingularityReport classify_point(const TaylorCoefficients& tc, double theta1,
                                 const RhoLadder& ladder, const ClassifyOptions& options = {});

/// Regularity at theta from the catalog's closed form, if it has one and is
/// not classifier-exempt.
std::optional<bool> catalog_regularity(const RealFunctionSpec& spec, double theta);

}  // namespace innerfn
