#include "innerfn/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>

namespace innerfn {

void QuadConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol >= 0.0)) {
        throw std::invalid_argument("quadrature tolerances must be positive");
    }
    if (max_panels < 2) {
        throw std::invalid_argument("quadrature budget must allow at least two panels");
    }
    if (panel_order < 4 || panel_order > 128) {
        throw std::invalid_argument("panel_order must lie in [4, 128], got " +
                                    std::to_string(panel_order));
    }
}

namespace {

GaussRule build_gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi's initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkPanel {
    double a;
    double b;
    double value;
    double error;
};

GkPanel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double fsum = f(c - dx) + f(c + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * fsum;
        }
    }
    return {a, b, kronrod * h, std::abs((kronrod - gauss) * h)};
}

bool too_narrow(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return (b - a) <= 8.0 * std::numeric_limits<double>::epsilon() * scale ||
           (b - a) < 1e3 * std::numeric_limits<double>::min();
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) {
        throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
    }
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, build_gauss_legendre(n)).first;
    }
    return it->second;
}

void spherical_bessel_j(double x, std::span<double> out) {
    spherical_bessel_j(x, std::sin(x), std::cos(x), out);
}

void spherical_bessel_j(double x, double sin_x, double cos_x, std::span<double> out) {
    const int n_out = static_cast<int>(out.size());
    if (n_out == 0) {
        return;
    }
    if (x == 0.0) {
        std::fill(out.begin(), out.end(), 0.0);
        out[0] = 1.0;
        return;
    }
    if (x < 1.0) {
        const double half_x2 = -0.5 * x * x;
        double lead = 1.0;  // x^n / (2n+1)!!
        for (int n = 0; n < n_out; ++n) {
            if (n > 0) {
                lead *= x / (2.0 * n + 1.0);
            }
            double term = 1.0;
            double sum = 1.0;
            for (int m = 1; m < 40; ++m) {
                term *= half_x2 / (m * (2.0 * n + 2.0 * m + 1.0));
                sum += term;
                if (std::abs(term) < 1e-17 * std::abs(sum)) {
                    break;
                }
            }
            out[n] = lead * sum;
        }
        return;
    }
    if (x >= static_cast<double>(n_out)) {
        out[0] = sin_x / x;
        if (n_out > 1) {
            out[1] = sin_x / (x * x) - cos_x / x;
        }
        for (int n = 1; n + 1 < n_out; ++n) {
            out[n + 1] = (2.0 * n + 1.0) / x * out[n] - out[n - 1];
        }
        return;
    }
    // Miller: downward recurrence from well above the largest requested order.
    const int start = n_out + 25 + static_cast<int>(x);
    std::array<double, 320> buf{};
    if (start >= static_cast<int>(buf.size())) {
        throw std::invalid_argument("spherical_bessel_j: order too large");
    }
    double f_next = 0.0;
    double f = 1.0;
    double norm = 0.0;
    for (int n = start; n >= 0; --n) {
        buf[n] = f;
        norm += (2.0 * n + 1.0) * f * f;
        if (n == 0) {
            break;
        }
        const double f_prev = (2.0 * n + 1.0) / x * f - f_next;
        f_next = f;
        f = f_prev;
        if (std::abs(f) > 1e120) {
            constexpr double s = 1e-120;
            f *= s;
            f_next *= s;
            norm *= s * s;
            for (int m = n; m <= start; ++m) {
                buf[m] *= s;
            }
        }
    }
    double scale = 1.0 / std::sqrt(norm);
    const double j0 = sin_x / x;
    const double j1 = sin_x / (x * x) - cos_x / x;
    const bool use_j0 = std::abs(j0) >= std::abs(j1);
    const double ref = use_j0 ? j0 : j1;
    const double raw = use_j0 ? buf[0] : buf[1];
    if ((ref < 0.0) != (raw < 0.0)) {
        scale = -scale;
    }
    for (int n = 0; n < n_out; ++n) {
        out[n] = buf[n] * scale;
    }
}

std::vector<double> geometric_cuts(const std::function<double(double)>& f, double a, double b,
                                   bool toward_a, double contribution_tol) {
    const GaussRule& rule = gauss_legendre(16);
    std::vector<double> cuts;
    double width = b - a;
    for (int level = 0; level < 200; ++level) {
        width *= 0.5;
        const double lo = toward_a ? a : b - width;
        const double hi = toward_a ? a + width : b;
        if (too_narrow(lo, hi)) {
            break;
        }
        cuts.push_back(toward_a ? hi : lo);
        const double c = 0.5 * (lo + hi);
        const double h = 0.5 * (hi - lo);
        double contribution = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            contribution += rule.weights[j] * std::abs(f(c + h * rule.nodes[j]));
        }
        if (contribution * h < contribution_tol) {
            break;
        }
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

QuadResult integrate(const std::function<double(double)>& f, std::span<const double> breaks,
                     double abs_tol, double rel_tol, std::size_t max_panels,
                     std::span<const double> geometric) {
    if (breaks.size() < 2) {
        throw std::invalid_argument("integrate needs at least two break points");
    }
    std::vector<double> edges(breaks.begin(), breaks.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<double> all_edges = edges;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double a = edges[i];
        const double b = edges[i + 1];
        const auto is_geometric = [&](double p) {
            return std::any_of(geometric.begin(), geometric.end(),
                               [p](double g) { return g == p; });
        };
        if (is_geometric(a)) {
            auto cuts = geometric_cuts(f, a, 0.5 * (a + b), true, 0.1 * abs_tol);
            all_edges.insert(all_edges.end(), cuts.begin(), cuts.end());
            all_edges.push_back(0.5 * (a + b));
        }
        if (is_geometric(b)) {
            auto cuts = geometric_cuts(f, 0.5 * (a + b), b, false, 0.1 * abs_tol);
            all_edges.insert(all_edges.end(), cuts.begin(), cuts.end());
            all_edges.push_back(0.5 * (a + b));
        }
    }
    std::sort(all_edges.begin(), all_edges.end());
    all_edges.erase(std::unique(all_edges.begin(), all_edges.end()), all_edges.end());

    std::vector<GkPanel> panels;
    panels.reserve(std::min<std::size_t>(max_panels, 1 << 12) + all_edges.size());
    for (std::size_t i = 0; i + 1 < all_edges.size(); ++i) {
        panels.push_back(gk15(f, all_edges[i], all_edges[i + 1]));
    }

    const auto by_error = [&](std::size_t l, std::size_t r) {
        return panels[l].error < panels[r].error;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_error)> heap(by_error);
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        total += panels[i].value;
        total_err += panels[i].error;
        heap.push(i);
    }

    bool converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total));
    while (!converged && panels.size() < max_panels && !heap.empty()) {
        const std::size_t worst = heap.top();
        heap.pop();
        const GkPanel parent = panels[worst];
        if (too_narrow(parent.a, parent.b)) {
            continue;  // keep its error; nothing more to resolve here
        }
        const double mid = 0.5 * (parent.a + parent.b);
        panels[worst] = gk15(f, parent.a, mid);
        panels.push_back(gk15(f, mid, parent.b));
        total += panels[worst].value + panels.back().value - parent.value;
        total_err += panels[worst].error + panels.back().error - parent.error;
        heap.push(worst);
        heap.push(panels.size() - 1);
        converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total));
    }

    // Resum in position order so the result does not depend on refinement history.
    std::sort(panels.begin(), panels.end(),
              [](const GkPanel& l, const GkPanel& r) { return l.a < r.a; });
    QuadResult result;
    for (const auto& p : panels) {
        result.value += p.value;
        result.error += p.error;
    }
    result.panels = panels.size();
    result.converged = result.error <= std::max(abs_tol, rel_tol * std::abs(result.value));
    return result;
}

}  // namespace innerfn
