#include "innerfn/inner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "innerfn/errors.hpp"

namespace innerfn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr complex kI{0.0, 1.0};

double max_abs(const std::vector<complex>& c) {
    double m = 0.0;
    for (const auto& v : c) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace

TaylorCoefficients::TaylorCoefficients() : c_{complex{}}, tail_{0.0, 0} {}

TaylorCoefficients::TaylorCoefficients(std::vector<complex> c, std::string provenance,
                                       std::optional<TailBound> tail)
    : c_(std::move(c)), provenance_(std::move(provenance)) {
    if (c_.empty()) {
        throw std::invalid_argument("Taylor coefficients need at least c_0");
    }
    tail_ = tail.value_or(TailBound{max_abs(c_), 0});
}

double TaylorCoefficients::tail_estimate(double rho) const {
    if (tail_.scale == 0.0 || rho == 0.0) {
        return 0.0;
    }
    const double n1 = static_cast<double>(c_.size());  // N + 1
    const double first = tail_.scale * std::pow(n1, tail_.growth) * std::pow(rho, n1);
    const double ratio = rho * std::pow((n1 + 1.0) / n1, std::max(tail_.growth, 0));
    if (ratio >= 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    return first / (1.0 - ratio);
}

TaylorCoefficients operator+(const TaylorCoefficients& l, const TaylorCoefficients& r) {
    if (l.order() != r.order()) {
        throw std::invalid_argument("cannot add Taylor coefficients of different order");
    }
    std::vector<complex> c(l.c_.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = l.c_[k] + r.c_[k];
    }
    return TaylorCoefficients(std::move(c), "(" + l.provenance_ + ") + (" + r.provenance_ + ")",
                              TailBound{l.tail_.scale + r.tail_.scale,
                                        std::max(l.tail_.growth, r.tail_.growth)});
}

TaylorCoefficients operator-(const TaylorCoefficients& l, const TaylorCoefficients& r) {
    return l + complex{-1.0, 0.0} * r;
}

TaylorCoefficients operator*(complex a, const TaylorCoefficients& t) {
    std::vector<complex> c(t.c_.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a * t.c_[k];
    }
    return TaylorCoefficients(std::move(c), t.provenance_,
                              TailBound{std::abs(a) * t.tail_.scale, t.tail_.growth});
}

DiskPoint::DiskPoint(double rho, double theta) : rho_(rho), theta_(theta) {
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw DomainError("disk point needs 0 <= rho < 1");
    }
    if (!(theta >= -kPi && theta <= kPi)) {
        throw DomainError("disk point needs theta in [-pi, pi]");
    }
    z_ = complex{rho * std::cos(theta), rho * std::sin(theta)};
}

TaylorCoefficients from_fourier(const FourierCoefficients& fc) {
    fc.validate();
    std::vector<complex> c(fc.alpha.size());
    c[0] = complex{0.5 * fc.alpha[0], 0.0};
    for (std::size_t k = 1; k < c.size(); ++k) {
        c[k] = complex{fc.alpha[k], -fc.beta[k]};
    }
    std::ostringstream prov;
    prov << "from_fourier(" << fc.name << ", N=" << fc.order() << ")";
    return TaylorCoefficients(std::move(c), prov.str(), TailBound{4.0 * fc.M, 0});
}

complex evaluate(const TaylorCoefficients& tc, complex z) {
    if (!(std::norm(z) < 1.0)) {
        throw DomainError("evaluation point must lie in the open unit disk");
    }
    const auto& c = tc.c();
    const double zr = z.real();
    const double zi = z.imag();
    double acc_r = c.back().real();
    double acc_i = c.back().imag();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        const double r = acc_r * zr - acc_i * zi + c[k].real();
        acc_i = acc_r * zi + acc_i * zr + c[k].imag();
        acc_r = r;
    }
    return {acc_r, acc_i};
}

complex evaluate(const TaylorCoefficients& tc, const DiskPoint& p) {
    return evaluate(tc, p.z());
}

TaylorCoefficients conjugate(const TaylorCoefficients& tc) {
    std::vector<complex> c(tc.c().size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        // -i (a + ib) = b - ia, written out so that zeros keep their sign pattern
        c[k] = complex{tc[k].imag(), -tc[k].real()};
    }
    return TaylorCoefficients(std::move(c), tc.provenance() + " |> conjugate", tc.tail());
}

bool ClosedFormInner::singular_at(double theta) const {
    return std::any_of(boundary_singularities.begin(), boundary_singularities.end(),
                       [theta](double s) { return circle_distance(s, theta) <= 1e-12; });
}

const ClosedFormInner& closed_form_get(std::string_view name) {
    static const std::vector<ClosedFormInner> registry = {
        {"zero", [](complex) { return complex{}; }, {}},
        {"one", [](complex) { return complex{1.0, 0.0}; }, {}},
        {"sawtooth_w", [](complex z) { return -2.0 * kI * std::log(1.0 + z); }, {kPi}},
        {"square_wave_w",
         [](complex z) { return -(2.0 * kI / kPi) * (std::log(1.0 + z) - std::log(1.0 - z)); },
         {0.0, kPi}},
        {"neg_log_one_minus_z", [](complex z) { return -std::log(1.0 - z); }, {0.0}},
        {"exp_z", [](complex z) { return std::exp(z); }, {}},
        {"iz_exp_z", [](complex z) { return kI * z * std::exp(z); }, {}},
        {"geometric", [](complex z) { return 1.0 / (1.0 - z); }, {0.0}},
    };
    for (const auto& cf : registry) {
        if (cf.name == name) {
            return cf;
        }
    }
    std::ostringstream msg;
    msg << "unknown closed form '" << name << "'; available:";
    for (const auto& cf : registry) {
        msg << ' ' << cf.name;
    }
    throw UnknownNameError(msg.str());
}

complex closed_form_eval(const ClosedFormInner& cf, const DiskPoint& p) {
    return cf.w(p.z());
}

}  // namespace innerfn
