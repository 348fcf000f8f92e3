#include <doctest.h>

#include "oracles.hpp"

#include <innerfn/catalog.hpp>
#include <innerfn/errors.hpp>
#include <innerfn/quadrature.hpp>

#include <cmath>
#include <random>
#include <string>

using namespace innerfn;
using oracle::pi;

TEST_CASE("catalog_get returns registered entries") {
    const RealFunctionSpec& one = catalog_get("constant_one");
    CHECK(one.name == "constant_one");
    CHECK(one.singular_points.empty());
    CHECK(eval_real(one, 0.3) == 1.0);

    const RealFunctionSpec& sq = catalog_get("square_wave");
    REQUIRE(sq.singular_points.size() == 2);
    for (const auto& sp : sq.singular_points) {
        CHECK(sp.kind == SingularKind::jump);
    }
    CHECK(singular_point_at(sq, 0.0) != nullptr);
    CHECK(singular_point_at(sq, pi) != nullptr);
    CHECK(singular_point_at(sq, -pi) != nullptr);

    const RealFunctionSpec& ls = catalog_get("log_sine");
    REQUIRE(ls.singular_points.size() == 1);
    CHECK(ls.singular_points[0].theta == 0.0);
    CHECK(ls.singular_points[0].kind == SingularKind::log_divergence);
}

TEST_CASE("catalog_get rejects unknown names and lists the registry") {
    try {
        (void)catalog_get("no_such_function");
        FAIL("expected UnknownNameError");
    } catch (const UnknownNameError& e) {
        const std::string what = e.what();
        for (const auto& name : catalog_names()) {
            CHECK(what.find(name) != std::string::npos);
        }
    }
}

TEST_CASE("the registry holds the required minimum set") {
    const auto names = catalog_names();
    for (const char* required : {"constant_one", "sawtooth", "square_wave", "abs_theta", "log_sine",
                                 "exp_cos", "pathological_1", "pathological_2"}) {
        CHECK(std::find(names.begin(), names.end(), required) != names.end());
    }
    CHECK(catalog_get("pathological_1").classifier_exempt);
    CHECK(catalog_get("pathological_2").classifier_exempt);
    CHECK_FALSE(catalog_get("log_sine").classifier_exempt);
}

TEST_CASE("eval_real examples") {
    const auto& sq = catalog_get("square_wave");
    CHECK(eval_real(sq, pi / 2) == 1.0);
    CHECK(eval_real(sq, 0.0) == 0.0);
    CHECK(eval_real(sq, -0.5) == -1.0);
    CHECK(eval_real(sq, pi) == 0.0);
    CHECK(eval_real(sq, -pi) == 0.0);

    // -ln 2 in extended precision.
    const double neg_ln2 = static_cast<double>(-std::log(2.0L));
    CHECK(std::abs(eval_real(catalog_get("log_sine"), pi) - neg_ln2) <= 1e-15);

    CHECK(eval_real(catalog_get("sawtooth"), 1.25) == 1.25);
    CHECK(eval_real(catalog_get("sawtooth"), pi) == 0.0);
    CHECK(eval_real(catalog_get("abs_theta"), -2.0) == 2.0);
    CHECK(eval_real(catalog_get("exp_cos"), 0.0) == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("eval_real errors") {
    const auto& sq = catalog_get("square_wave");
    CHECK_THROWS_AS((void)eval_real(sq, 3.2), DomainError);
    CHECK_THROWS_AS((void)eval_real(sq, -4.0), DomainError);
    CHECK_THROWS_AS((void)eval_real(sq, std::nan("")), DomainError);
    CHECK_THROWS_AS((void)eval_real(catalog_get("log_sine"), 0.0), SingularityError);
    CHECK_THROWS_AS((void)eval_real(catalog_get("pathological_2"), 0.0), SingularityError);
    CHECK_NOTHROW((void)eval_real(catalog_get("log_sine"), 1e-12));
}

TEST_CASE("parity flags hold at 64 random angles") {
    std::mt19937_64 rng(20261015);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (const auto& name : catalog_names()) {
        const auto& spec = catalog_get(name);
        if (spec.parity == Parity::none) {
            continue;
        }
        const double sign = spec.parity == Parity::even ? 1.0 : -1.0;
        for (int i = 0; i < 64; ++i) {
            const double t = angle(rng);
            INFO(name << " at " << t);
            CHECK(std::abs(eval_real(spec, -t) - sign * eval_real(spec, t)) <= 1e-12);
        }
    }
}

TEST_CASE("integral of |f| away from singular points is stable under refinement") {
    constexpr double radius = 0.05;
    for (const auto& name : catalog_names()) {
        const auto& spec = catalog_get(name);
        // Integrate over [-pi, pi] with the neighborhoods of log and essential
        // points cut out; other declared points are plain breaks.
        std::vector<std::pair<double, double>> pieces = {{-pi, pi}};
        std::vector<double> breaks;
        for (const auto& sp : spec.singular_points) {
            if (sp.kind == SingularKind::log_divergence || sp.kind == SingularKind::essential) {
                std::vector<std::pair<double, double>> next;
                for (auto [a, b] : pieces) {
                    if (sp.theta - radius > a) next.emplace_back(a, std::min(b, sp.theta - radius));
                    if (sp.theta + radius < b) next.emplace_back(std::max(a, sp.theta + radius), b);
                }
                pieces = next;
            } else if (std::abs(sp.theta) < pi) {
                breaks.push_back(sp.theta);
            }
        }
        const auto f = [&](double t) { return std::abs(spec.rule(t)); };
        double previous = 0.0;
        for (double tol : {1e-8, 1e-10, 1e-12}) {
            double total = 0.0;
            for (auto [a, b] : pieces) {
                std::vector<double> edges = {a, b};
                for (double t : breaks) {
                    if (t > a && t < b) edges.push_back(t);
                }
                const QuadResult r = integrate(f, edges, tol, tol, 1 << 16);
                REQUIRE(std::isfinite(r.value));
                total += r.value;
            }
            INFO(name << " tol " << tol);
            if (tol < 1e-8) {
                CHECK(std::abs(total - previous) <= 1e-6 * std::max(total, 1e-300));
            }
            previous = total;
        }
    }
}

TEST_CASE("log-divergence points are absolutely integrable") {
    const auto& spec = catalog_get("log_sine");
    const auto f = [&](double t) { return std::abs(spec.rule(t)); };
    // Right neighborhood (0, 0.1]; f is even so the left one matches.
    const double reference = oracle::tanh_sinh(f, 0.0, 0.1);
    const std::vector<double> edges = {0.0, 0.1};
    const std::vector<double> geo = {0.0};
    const QuadResult r = integrate(f, edges, 1e-12, 1e-12, 1 << 14, geo);
    CHECK(r.converged);
    CHECK(std::isfinite(reference));
    CHECK(std::abs(r.value - reference) < 1e-10);
    // -ln(2 sin(t/2)) ~ -ln t near 0: int_0^d -ln t = d (1 - ln d)
    CHECK(reference == doctest::Approx(0.1 * (1.0 - std::log(0.1))).epsilon(1e-3));
}

TEST_CASE("circle_distance wraps around") {
    CHECK(circle_distance(pi, -pi) == doctest::Approx(0.0));
    CHECK(circle_distance(3.0, -3.0) == doctest::Approx(2 * pi - 6.0));
    CHECK(circle_distance(0.25, -0.25) == doctest::Approx(0.5));
}

TEST_CASE("make_piecewise builds jumps and kinks from the pieces") {
    // sign(theta) on two pieces
    const RealFunctionSpec sq = make_piecewise("sq", {{-pi, 0.0, {-1.0}}, {0.0, pi, {1.0}}});
    REQUIRE(sq.singular_points.size() == 2);
    const SingularPoint* zero = singular_point_at(sq, 0.0);
    REQUIRE(zero != nullptr);
    CHECK(zero->kind == SingularKind::jump);
    CHECK(zero->left_limit == -1.0);
    CHECK(zero->right_limit == 1.0);
    CHECK(eval_real(sq, 0.0) == 0.0);
    CHECK(eval_real(sq, 2.0) == 1.0);

    // |theta|: continuous everywhere, so only plain break points
    const RealFunctionSpec abs = make_piecewise("abs", {{-pi, 0.0, {0.0, -1.0}}, {0.0, pi, {0.0, 1.0}}},
                                                {}, Parity::even);
    for (const auto& sp : abs.singular_points) {
        CHECK(sp.kind == SingularKind::none);
    }
    CHECK(eval_real(abs, -1.5) == 1.5);
}

TEST_CASE("make_piecewise validates tiling and parity") {
    CHECK_THROWS_AS(make_piecewise("gap", {{-pi, 0.0, {1.0}}, {0.1, pi, {1.0}}}), std::invalid_argument);
    CHECK_THROWS_AS(make_piecewise("short", {{-pi, 3.0, {1.0}}}), std::invalid_argument);
    CHECK_THROWS_AS(make_piecewise("empty", {}), std::invalid_argument);
    CHECK_THROWS_AS(make_piecewise("inverted", {{-pi, 1.0, {1.0}}, {1.0, 1.0, {1.0}}, {1.0, pi, {1.0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_piecewise("odd?", {{-pi, pi, {1.0}}}, {}, Parity::odd), std::invalid_argument);
    CHECK_NOTHROW(make_piecewise("odd", {{-pi, pi, {0.0, 1.0}}}, {}, Parity::odd));
}

TEST_CASE("enum string round trips") {
    for (auto kind : {SingularKind::none, SingularKind::jump, SingularKind::log_divergence,
                      SingularKind::essential}) {
        CHECK(singular_kind_from_string(to_string(kind)) == kind);
    }
    for (auto parity : {Parity::none, Parity::even, Parity::odd}) {
        CHECK(parity_from_string(to_string(parity)) == parity);
    }
    CHECK(to_string(SingularKind::log_divergence) == "log-divergence");
    CHECK_THROWS(singular_kind_from_string("pole"));
}
