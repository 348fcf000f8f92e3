#include "innerfn/fourier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "innerfn/errors.hpp"

namespace innerfn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kReseed = 32;

struct Panel {
    double a = 0.0;
    double b = 0.0;
    std::vector<double> legendre;
    double error = 0.0;
};

// Maps samples at Gauss nodes to Legendre coefficients of the interpolant.
class LegendreTransform {
public:
    explicit LegendreTransform(int order) : order_(order), rule_(gauss_legendre(order)) {
        matrix_.assign(static_cast<std::size_t>(order) * order, 0.0);
        for (int j = 0; j < order; ++j) {
            const double x = rule_.nodes[j];
            double p_prev = 1.0;
            double p = x;
            for (int n = 0; n < order; ++n) {
                double pn = 1.0;
                if (n == 1) {
                    pn = x;
                } else if (n >= 2) {
                    const double next = ((2.0 * n - 1.0) * x * p - (n - 1.0) * p_prev) / n;
                    p_prev = p;
                    p = next;
                    pn = next;
                }
                matrix_[static_cast<std::size_t>(n) * order + j] =
                    0.5 * (2.0 * n + 1.0) * rule_.weights[j] * pn;
            }
        }
    }

    Panel fit(const std::function<double(double)>& f, double a, double b) const {
        Panel panel{a, b, std::vector<double>(order_, 0.0), 0.0};
        const double c = 0.5 * (a + b);
        const double h = 0.5 * (b - a);
        std::array<double, 128> samples{};
        for (int j = 0; j < order_; ++j) {
            samples[j] = f(c + h * rule_.nodes[j]);
        }
        for (int n = 0; n < order_; ++n) {
            const double* row = &matrix_[static_cast<std::size_t>(n) * order_];
            double acc = 0.0;
            for (int j = 0; j < order_; ++j) {
                acc += row[j] * samples[j];
            }
            panel.legendre[n] = acc;
        }
        const double tail =
            std::abs(panel.legendre[order_ - 1]) + std::abs(panel.legendre[order_ - 2]);
        panel.error = (b - a) * tail;
        if (!std::isfinite(panel.error)) {
            panel.error = std::numeric_limits<double>::infinity();
        }
        return panel;
    }

private:
    int order_;
    const GaussRule& rule_;
    std::vector<double> matrix_;
};

bool too_narrow(double a, double b) {
    return (b - a) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a));
}

// Adds int_panel P(theta) e^{-ik theta} d theta for k = 0..N, where P is the
// panel's Legendre interpolant: h e^{-ikm} sum_n a_n 2 (-i)^n j_n(kh).
// When `tail` is given, also accumulates the magnitude of the two highest
// Legendre terms per k.
void accumulate_panel(const Panel& panel, int N, std::vector<double>& re, std::vector<double>& im,
                      std::vector<double>* tail) {
    const int p = static_cast<int>(panel.legendre.size());
    const double* a = panel.legendre.data();
    const double h = 0.5 * (panel.b - panel.a);
    const double m = 0.5 * (panel.a + panel.b);
    const double step_c = std::cos(m);
    const double step_s = std::sin(m);
    const double step_hc = std::cos(h);
    const double step_hs = std::sin(h);
    double em_c = 1.0;  // cos(k m)
    double em_s = 0.0;  // sin(k m)
    double eh_c = 1.0;  // cos(k h)
    double eh_s = 0.0;  // sin(k h)
    std::array<double, 128> j{};
    const std::span<double> jspan(j.data(), static_cast<std::size_t>(p));
    for (int k = 0; k <= N; ++k) {
        if (k % kReseed == 0 && k > 0) {
            em_c = std::cos(k * m);
            em_s = std::sin(k * m);
            eh_c = std::cos(k * h);
            eh_s = std::sin(k * h);
        }
        spherical_bessel_j(k * h, eh_s, eh_c, jspan);
        double s_re = 0.0;
        double s_im = 0.0;
        for (int n = 0; n < p; n += 4) {
            s_re += a[n] * j[n];
            if (n + 1 < p) s_im -= a[n + 1] * j[n + 1];
            if (n + 2 < p) s_re -= a[n + 2] * j[n + 2];
            if (n + 3 < p) s_im += a[n + 3] * j[n + 3];
        }
        // (em_c - i em_s) * (s_re + i s_im) * 2h
        re[k] += 2.0 * h * (em_c * s_re + em_s * s_im);
        im[k] += 2.0 * h * (em_c * s_im - em_s * s_re);
        if (tail != nullptr) {
            const double t = std::abs(a[p - 1] * j[p - 1]) + std::abs(a[p - 2] * j[p - 2]);
            (*tail)[k] += 2.0 * h * t;
        }

        const double nc = em_c * step_c - em_s * step_s;
        em_s = em_s * step_c + em_c * step_s;
        em_c = nc;
        const double nhc = eh_c * step_hc - eh_s * step_hs;
        eh_s = eh_s * step_hc + eh_c * step_hs;
        eh_c = nhc;
    }
}

bool has_essential(const RealFunctionSpec& spec) {
    return std::any_of(spec.singular_points.begin(), spec.singular_points.end(),
                       [](const auto& sp) { return sp.kind == SingularKind::essential; });
}

}  // namespace

void FourierCoefficients::validate() const {
    if (alpha.size() < 2) {
        throw std::invalid_argument("Fourier coefficients need order N >= 1");
    }
    if (alpha.size() != beta.size()) {
        throw std::invalid_argument("alpha and beta must have the same length");
    }
    if (!(M >= 0.0)) {
        throw std::invalid_argument("M must be non-negative");
    }
}

FourierCoefficients compute_coefficients(const RealFunctionSpec& spec, int N,
                                         const QuadConfig& quad) {
    quad.validate();
    if (N < 1) {
        throw std::invalid_argument("truncation order N must be >= 1");
    }
    if (!spec.rule) {
        throw std::invalid_argument("function '" + spec.name + "' has no evaluation rule");
    }

    const bool pruned = spec.parity != Parity::none;
    const double lo = pruned ? 0.0 : -kPi;
    const double hi = kPi;

    std::vector<double> breaks{lo, hi};
    std::vector<double> geometric;
    for (const auto& sp : spec.singular_points) {
        double t = sp.theta;
        if (std::abs(std::abs(t) - kPi) <= 1e-14) {
            t = kPi;
        }
        if (pruned) {
            t = std::abs(t);
        }
        const bool at_pi = t == kPi;
        if (t > lo && t < hi) {
            breaks.push_back(t);
        }
        if (sp.kind == SingularKind::log_divergence || sp.kind == SingularKind::essential) {
            geometric.push_back(t);
            if (at_pi && !pruned) {
                geometric.push_back(-kPi);
            }
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const bool best_effort = has_essential(spec);
    const double period_scale = pruned ? 2.0 : 1.0;

    const auto abs_f = [&spec](double t) { return std::abs(spec.rule(t)); };
    const QuadResult abs_integral = integrate(abs_f, breaks, quad.abs_tol * kPi, quad.rel_tol,
                                              quad.max_panels, geometric);
    if (!abs_integral.converged && !best_effort) {
        throw QuadratureError("integral of |" + spec.name + "| did not converge within " +
                                  std::to_string(quad.max_panels) + " panels",
                              0, abs_integral.error / kPi);
    }

    FourierCoefficients fc;
    fc.name = spec.name;
    fc.M = period_scale * abs_integral.value / (2.0 * kPi);

    // Initial panels: declared points, plus geometric ladders toward singular ones.
    std::vector<double> edges = breaks;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i];
        const double b = breaks[i + 1];
        const double mid = 0.5 * (a + b);
        const auto geometric_at = [&](double t) {
            return std::find(geometric.begin(), geometric.end(), t) != geometric.end();
        };
        if (geometric_at(a)) {
            auto cuts = geometric_cuts(spec.rule, a, mid, true, 0.1 * quad.abs_tol * kPi);
            edges.insert(edges.end(), cuts.begin(), cuts.end());
            edges.push_back(mid);
        }
        if (geometric_at(b)) {
            auto cuts = geometric_cuts(spec.rule, mid, b, false, 0.1 * quad.abs_tol * kPi);
            edges.insert(edges.end(), cuts.begin(), cuts.end());
            edges.push_back(mid);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const LegendreTransform transform(quad.panel_order);
    std::vector<Panel> panels;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        panels.push_back(transform.fit(spec.rule, edges[i], edges[i + 1]));
    }

    const double target = kPi * std::max(quad.abs_tol, quad.rel_tol * fc.M) / period_scale;
    const auto by_error = [&](std::size_t l, std::size_t r) {
        return panels[l].error < panels[r].error;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_error)> heap(by_error);
    double total_err = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        total_err += panels[i].error;
        heap.push(i);
    }
    while (total_err > target && panels.size() < quad.max_panels && !heap.empty()) {
        const std::size_t worst = heap.top();
        heap.pop();
        const double a = panels[worst].a;
        const double b = panels[worst].b;
        if (too_narrow(a, b)) {
            continue;
        }
        const double mid = 0.5 * (a + b);
        const double parent_err = panels[worst].error;
        panels[worst] = transform.fit(spec.rule, a, mid);
        panels.push_back(transform.fit(spec.rule, mid, b));
        total_err += panels[worst].error + panels.back().error - parent_err;
        heap.push(worst);
        heap.push(panels.size() - 1);
    }

    std::sort(panels.begin(), panels.end(),
              [](const Panel& l, const Panel& r) { return l.a < r.a; });
    total_err = 0.0;
    for (const auto& p : panels) {
        total_err += p.error;
    }
    const bool converged = total_err <= target && abs_integral.converged;

    std::vector<double> re(N + 1, 0.0);
    std::vector<double> im(N + 1, 0.0);
    std::vector<double> tail;
    if (!converged) {
        tail.assign(N + 1, 0.0);
    }
    for (const auto& p : panels) {
        accumulate_panel(p, N, re, im, converged ? nullptr : &tail);
    }

    if (!converged && !best_effort) {
        const auto worst = std::max_element(tail.begin(), tail.end());
        const int worst_k = static_cast<int>(worst - tail.begin());
        throw QuadratureError("Fourier coefficients of '" + spec.name + "' did not reach tolerance " +
                                  "within " + std::to_string(quad.max_panels) +
                                  " panels (worst k = " + std::to_string(worst_k) + ")",
                              worst_k, period_scale * *worst / kPi);
    }

    fc.alpha.assign(N + 1, 0.0);
    fc.beta.assign(N + 1, 0.0);
    for (int k = 0; k <= N; ++k) {
        const double c_re = period_scale * re[k] / kPi;
        const double c_im = period_scale * im[k] / kPi;
        if (spec.parity != Parity::odd) {
            fc.alpha[k] = c_re;
        }
        if (spec.parity != Parity::even && k > 0) {
            fc.beta[k] = -c_im;
        }
    }
    fc.achieved_error = period_scale * total_err / kPi;
    fc.converged = converged;
    return fc;
}

BoundReport verify_bounds(const FourierCoefficients& fc) {
    fc.validate();
    const double two_m = 2.0 * fc.M;
    const auto ratio = [two_m](double v) {
        if (two_m > 0.0) {
            return std::abs(v) / two_m;
        }
        return std::abs(v) <= 1e-8 ? 0.0 : std::numeric_limits<double>::infinity();
    };
    BoundReport report;
    for (int k = 0; k <= fc.order(); ++k) {
        report.max_alpha_ratio = std::max(report.max_alpha_ratio, ratio(fc.alpha[k]));
        report.max_beta_ratio = std::max(report.max_beta_ratio, ratio(fc.beta[k]));
    }
    report.violation = report.max_alpha_ratio > 1.0 + 1e-8 || report.max_beta_ratio > 1.0 + 1e-8;
    return report;
}

}  // namespace innerfn
