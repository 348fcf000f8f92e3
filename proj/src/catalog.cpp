#include "innerfn/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "innerfn/errors.hpp"

namespace innerfn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPointTol = 1e-14;

SingularPoint jump(double theta, double left, double right) {
    return {theta, SingularKind::jump, left, right};
}

SingularPoint point(double theta, SingularKind kind) {
    return {theta, kind, 0.0, 0.0};
}

std::vector<RealFunctionSpec> build_registry() {
    std::vector<RealFunctionSpec> r;

    r.push_back({"constant_one", [](double) { return 1.0; }, {}, "one", Parity::even, false});
    r.push_back({"constant_zero", [](double) { return 0.0; }, {}, "zero", Parity::even, false});
    r.push_back({"sawtooth",
                 [](double t) { return t; },
                 {jump(kPi, kPi, -kPi)},
                 "sawtooth_w",
                 Parity::odd,
                 false});
    r.push_back({"square_wave",
                 [](double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); },
                 {jump(0.0, -1.0, 1.0), jump(kPi, 1.0, -1.0)},
                 "square_wave_w",
                 Parity::odd,
                 false});
    r.push_back({"abs_theta",
                 [](double t) { return std::abs(t); },
                 {point(0.0, SingularKind::none), point(kPi, SingularKind::none)},
                 std::nullopt,
                 Parity::even,
                 false});
    r.push_back({"log_sine",
                 [](double t) { return -std::log(2.0 * std::abs(std::sin(0.5 * t))); },
                 {point(0.0, SingularKind::log_divergence)},
                 "neg_log_one_minus_z",
                 Parity::even,
                 false});
    r.push_back({"exp_cos",
                 [](double t) { return std::exp(std::cos(t)) * std::cos(std::sin(t)); },
                 {},
                 "exp_z",
                 Parity::even,
                 false});
    // d/dtheta of exp_cos, differentiated by hand.
    r.push_back({"exp_cos_derivative",
                 [](double t) { return -std::exp(std::cos(t)) * std::sin(t + std::sin(t)); },
                 {},
                 "iz_exp_z",
                 Parity::odd,
                 false});
    r.push_back({"pathological_1",
                 [](double t) { return t * std::sin(kPi * kPi / t); },
                 {point(0.0, SingularKind::essential)},
                 std::nullopt,
                 Parity::even,
                 true});
    r.push_back({"pathological_2",
                 [](double t) { return std::sin(kPi * kPi / t); },
                 {point(0.0, SingularKind::essential)},
                 std::nullopt,
                 Parity::odd,
                 true});
    return r;
}

const std::vector<RealFunctionSpec>& registry() {
    static const std::vector<RealFunctionSpec> entries = build_registry();
    return entries;
}

double horner(const std::vector<double>& coeffs, double t) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

}  // namespace

std::string_view to_string(SingularKind kind) {
    switch (kind) {
    case SingularKind::none: return "none";
    case SingularKind::jump: return "jump";
    case SingularKind::log_divergence: return "log-divergence";
    case SingularKind::essential: return "essential";
    }
    return "none";
}

std::string_view to_string(Parity parity) {
    switch (parity) {
    case Parity::none: return "none";
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    }
    return "none";
}

SingularKind singular_kind_from_string(std::string_view text) {
    for (auto k : {SingularKind::none, SingularKind::jump, SingularKind::log_divergence,
                   SingularKind::essential}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw std::invalid_argument("unknown singular point kind '" + std::string(text) + "'");
}

Parity parity_from_string(std::string_view text) {
    for (auto p : {Parity::none, Parity::even, Parity::odd}) {
        if (to_string(p) == text) {
            return p;
        }
    }
    throw std::invalid_argument("unknown parity '" + std::string(text) + "'");
}

const RealFunctionSpec& catalog_get(std::string_view name) {
    for (const auto& spec : registry()) {
        if (spec.name == name) {
            return spec;
        }
    }
    std::ostringstream msg;
    msg << "unknown function '" << name << "'; available:";
    for (const auto& spec : registry()) {
        msg << ' ' << spec.name;
    }
    throw UnknownNameError(msg.str());
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& spec : registry()) {
        names.push_back(spec.name);
    }
    return names;
}

double circle_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * kPi);
    return std::min(d, 2.0 * kPi - d);
}

const SingularPoint* singular_point_at(const RealFunctionSpec& spec, double theta) {
    for (const auto& sp : spec.singular_points) {
        if (circle_distance(sp.theta, theta) <= kPointTol) {
            return &sp;
        }
    }
    return nullptr;
}

double eval_real(const RealFunctionSpec& spec, double theta) {
    if (!(theta >= -kPi && theta <= kPi)) {
        throw DomainError("theta must lie in [-pi, pi]");
    }
    if (const SingularPoint* sp = singular_point_at(spec, theta)) {
        switch (sp->kind) {
        case SingularKind::jump:
            return 0.5 * (sp->left_limit + sp->right_limit);
        case SingularKind::log_divergence:
        case SingularKind::essential:
            throw SingularityError(spec.name + " is undefined at its singular point theta=" +
                                   std::to_string(sp->theta));
        case SingularKind::none:
            break;
        }
    }
    return spec.rule(theta);
}

RealFunctionSpec make_piecewise(std::string name, std::vector<PiecewiseInterval> intervals,
                                std::vector<SingularPoint> extra_points, Parity parity) {
    constexpr double kTileTol = 1e-9;
    if (intervals.empty()) {
        throw std::invalid_argument("piecewise function needs at least one interval");
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const auto& l, const auto& r) { return l.lo < r.lo; });
    if (std::abs(intervals.front().lo + kPi) > kTileTol ||
        std::abs(intervals.back().hi - kPi) > kTileTol) {
        throw std::invalid_argument("piecewise intervals must start at -pi and end at pi");
    }
    intervals.front().lo = -kPi;
    intervals.back().hi = kPi;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        auto& iv = intervals[i];
        if (!(iv.hi > iv.lo)) {
            throw std::invalid_argument("piecewise interval with hi <= lo");
        }
        if (iv.coeffs.empty()) {
            iv.coeffs.push_back(0.0);
        }
        if (i + 1 < intervals.size()) {
            if (std::abs(iv.hi - intervals[i + 1].lo) > kTileTol) {
                throw std::invalid_argument("piecewise intervals overlap or leave a gap near theta=" +
                                            std::to_string(iv.hi));
            }
            intervals[i + 1].lo = iv.hi;
        }
    }

    std::vector<SingularPoint> points;
    const auto add_break = [&](double theta, double left, double right) {
        const double scale = std::max({1.0, std::abs(left), std::abs(right)});
        if (std::abs(left - right) > 1e-14 * scale) {
            points.push_back(jump(theta, left, right));
        } else {
            points.push_back(point(theta, SingularKind::none));
        }
    };
    for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
        const double t = intervals[i].hi;
        add_break(t, horner(intervals[i].coeffs, t), horner(intervals[i + 1].coeffs, t));
    }
    add_break(kPi, horner(intervals.back().coeffs, kPi), horner(intervals.front().coeffs, -kPi));
    for (const auto& sp : extra_points) {
        const bool duplicate = std::any_of(points.begin(), points.end(), [&](const auto& p) {
            return circle_distance(p.theta, sp.theta) <= kPointTol;
        });
        if (!duplicate) {
            points.push_back(sp);
        }
    }

    auto rule = [pieces = intervals](double t) {
        auto it = std::upper_bound(pieces.begin(), pieces.end(), t,
                                   [](double v, const PiecewiseInterval& iv) { return v < iv.lo; });
        if (it != pieces.begin()) {
            --it;
        }
        return horner(it->coeffs, t);
    };

    RealFunctionSpec spec{std::move(name), rule, std::move(points), std::nullopt, parity, false};
    if (parity != Parity::none) {
        const double sign = parity == Parity::even ? 1.0 : -1.0;
        for (int j = 1; j <= 64; ++j) {
            const double t = kPi * (j - 0.5) / 64.0;
            if (singular_point_at(spec, t) || singular_point_at(spec, -t)) {
                continue;
            }
            const double lhs = spec.rule(-t);
            const double rhs = sign * spec.rule(t);
            if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(rhs))) {
                throw std::invalid_argument("declared parity does not hold for piecewise function");
            }
        }
    }
    return spec;
}

}  // namespace innerfn
