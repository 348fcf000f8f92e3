#include "innerfn/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "innerfn/chain.hpp"
#include "innerfn/errors.hpp"

namespace innerfn {

namespace {

struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
    return {my - slope * mx, slope};
}

}  // namespace

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::regular: return "regular";
    case Verdict::soft: return "soft";
    case Verdict::borderline_hard: return "borderline_hard";
    case Verdict::hard: return "hard";
    }
    return "soft";
}

ProbeResult probe_point(const TaylorCoefficients& tc, double theta1, const RhoLadder& ladder,
                        const ProbeConfig& config) {
    ladder.validate();
    if (ladder.rhos.size() < 4) {
        throw std::invalid_argument("probe needs a ladder of at least four radii");
    }
    const double rho_max = ladder.rhos.back();
    if (!truncation_guard(tc, rho_max, config.guard_threshold)) {
        throw TruncationLimitedError(
            "series tail bound " + std::to_string(tc.tail_estimate(rho_max)) + " at rho=" +
            std::to_string(rho_max) + " exceeds the guard; raise N (now " +
            std::to_string(tc.order()) + ")");
    }

    ProbeResult r;
    std::vector<double> t;
    std::vector<double> y;
    for (double rho : ladder.rhos) {
        const double mag = std::abs(evaluate(tc, DiskPoint(rho, theta1)));
        r.magnitudes.push_back({rho, mag});
        t.push_back(-std::log1p(-rho));
        y.push_back(mag);
    }

    const std::size_t n = y.size();
    const auto top = y.begin() + static_cast<std::ptrdiff_t>(n / 2);
    const auto [lo, hi] = std::minmax_element(top, y.end());
    const double mean = std::accumulate(top, y.end(), 0.0) / static_cast<double>(y.end() - top);
    r.range_ratio = mean > 0.0 ? (*hi - *lo) / mean : 0.0;

    const LineFit log_fit = least_squares(t, y);
    std::vector<double> log_y(n);
    constexpr double kTiny = std::numeric_limits<double>::min();
    for (std::size_t i = 0; i < n; ++i) {
        log_y[i] = std::log(std::max(y[i], kTiny));
    }
    const LineFit pow_fit = least_squares(t, log_y);
    r.log_slope = log_fit.slope;
    r.log_intercept = log_fit.intercept;
    r.power_exponent = pow_fit.slope;
    for (std::size_t i = 0; i < n; ++i) {
        const double scale = std::max(y[i], kTiny);
        const double e_log = (y[i] - (log_fit.intercept + log_fit.slope * t[i])) / scale;
        const double e_pow = (y[i] - std::exp(pow_fit.intercept + pow_fit.slope * t[i])) / scale;
        r.log_residual += e_log * e_log;
        r.power_residual += e_pow * e_pow;
    }

    r.bounded = r.range_ratio < config.constant_range_fraction;
    if (!r.bounded) {
        r.log_flag = r.log_residual < config.log_power_ratio * r.power_residual;
        r.growth_exponent = r.log_flag ? 0.0 : r.power_exponent;
    }
    return r;
}

SingularityReport classify_point(const TaylorCoefficients& tc, double theta1,
                                 const RhoLadder& ladder, const ClassifyOptions& options) {
    if (options.max_steps < 1) {
        throw std::invalid_argument("classify needs max_steps >= 1");
    }
    SingularityReport report;
    report.theta1 = theta1;
    report.probe = probe_point(tc, theta1, ladder, options.probe);
    report.growth_exponent = report.probe.growth_exponent;
    report.log_flag = report.probe.log_flag;

    TaylorCoefficients link = tc;
    if (report.probe.bounded) {
        if (options.known_regular == true) {
            report.verdict = Verdict::regular;
            report.notes.push_back("bounded, and the closed form is analytic at this point");
            return report;
        }
        report.verdict = Verdict::soft;
        for (int step = 1; step <= options.max_steps; ++step) {
            link = angular_derivative(link);
            try {
                report.walk.push_back(probe_point(link, theta1, ladder, options.probe));
            } catch (const TruncationLimitedError&) {
                report.notes.push_back("truncation-limited after " + std::to_string(step - 1) +
                                       " angular derivatives; degree of softness is at least " +
                                       std::to_string(step));
                report.regular_not_excluded = options.known_regular != false;
                return report;
            }
            if (!report.walk.back().bounded) {
                report.degree = step;
                return report;
            }
        }
        report.regular_not_excluded = options.known_regular != false;
        report.notes.push_back("still bounded after " + std::to_string(options.max_steps) +
                               " angular derivatives: regular or possibly infinitely soft");
        return report;
    }

    for (int step = 1; step <= options.max_steps; ++step) {
        link = angular_primitive(link);
        report.walk.push_back(probe_point(link, theta1, ladder, options.probe));
        if (report.walk.back().bounded) {
            if (step == 1) {
                report.verdict = Verdict::borderline_hard;
                report.degree = 0;
            } else {
                report.verdict = Verdict::hard;
                report.degree = step - 1;
            }
            return report;
        }
    }
    report.verdict = Verdict::hard;
    report.notes.push_back("still unbounded after " + std::to_string(options.max_steps) +
                           " angular primitives: possibly infinitely hard");
    return report;
}

std::optional<bool> catalog_regularity(const RealFunctionSpec& spec, double theta) {
    if (spec.classifier_exempt || !spec.known_closed_form) {
        return std::nullopt;
    }
    return !closed_form_get(*spec.known_closed_form).singular_at(theta);
}

}  // namespace innerfn
