#include <doctest.h>

#include "oracles.hpp"

#include <innerfn/catalog.hpp>
#include <innerfn/errors.hpp>
#include <innerfn/fourier.hpp>
#include <innerfn/inner.hpp>

#include <cmath>
#include <random>

using namespace innerfn;
using oracle::pi;
using namespace std::complex_literals;

namespace {

TaylorCoefficients taylor_of(const char* name, int N) {
    return from_fourier(compute_coefficients(catalog_get(name), N));
}

// Second-order Cauchy-Riemann residual at (rho, theta) with step h.
double cr_residual(const std::function<complex(double, double)>& w, double rho, double theta,
                   double h) {
    const complex dr = (w(rho + h, theta) - w(rho - h, theta)) / (2 * h);
    const complex dt = (w(rho, theta + h) - w(rho, theta - h)) / (2 * h);
    return std::max(std::abs(dr.real() - dt.imag() / rho), std::abs(dr.imag() + dt.real() / rho));
}

}  // namespace

TEST_CASE("from_fourier examples") {
    const auto one = taylor_of("constant_one", 4);
    CHECK(std::abs(one[0] - 1.0) <= 1e-14);
    for (int k = 1; k <= 4; ++k) {
        CHECK(std::abs(one[k]) <= 1e-14);
    }

    const auto saw = taylor_of("sawtooth", 16);
    CHECK(std::abs(saw[0]) <= 1e-14);
    for (int k = 1; k <= 16; ++k) {
        const complex expected = -2.0i * (k % 2 == 1 ? 1.0 : -1.0) / double(k);
        CHECK(std::abs(saw[k] - expected) <= 1e-12);
    }

    const auto ls = taylor_of("log_sine", 16);
    CHECK(ls[0].imag() == 0.0);
    CHECK(std::abs(ls[0]) <= 1e-10);
    for (int k = 1; k <= 16; ++k) {
        CHECK(std::abs(ls[k] - 1.0 / k) <= 1e-10);
    }
    CHECK(ls.provenance().find("log_sine") != std::string::npos);
}

TEST_CASE("evaluate examples") {
    const TaylorCoefficients null;
    CHECK(evaluate(null, DiskPoint(0.7, -2.0)) == complex{0.0, 0.0});

    const TaylorCoefficients identity({0.0, 1.0});
    const complex w = evaluate(identity, DiskPoint(0.5, 0.0));
    CHECK(w.real() == 0.5);
    CHECK(w.imag() == 0.0);

    const auto saw = taylor_of("sawtooth", 200);
    const DiskPoint p(0.9, 1.0);
    const complex exact = -2.0i * std::log(1.0 + p.z());
    CHECK(std::abs(evaluate(saw, p) - exact) <= 1e-8);
    // The stated tail bound for this case.
    double tail = 0.0;
    for (int k = 201; k < 5000; ++k) {
        tail += 2.0 * std::pow(0.9, k) / k;
    }
    CHECK(tail < 1e-8);
}

TEST_CASE("evaluate agrees with a term-by-term power sum") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const TaylorCoefficients tc(oracle::random_proper(rng, 64));
    for (int i = 0; i < 20; ++i) {
        const DiskPoint p(0.95 * u(rng), pi * (2 * u(rng) - 1));
        CHECK(std::abs(evaluate(tc, p) - oracle::power_sum(tc.c(), p.z())) <= 1e-12);
        CHECK(evaluate(tc, p) == evaluate(tc, p.z()));
    }
}

TEST_CASE("disk points stay inside the disk") {
    CHECK_THROWS_AS(DiskPoint(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(DiskPoint(-0.1, 0.0), DomainError);
    CHECK_THROWS_AS(DiskPoint(0.5, 3.5), DomainError);
    CHECK_NOTHROW(DiskPoint(0.0, pi));
    CHECK_THROWS_AS(evaluate(TaylorCoefficients({1.0}), complex{0.6, 0.8}), DomainError);
}

TEST_CASE("conjugation examples") {
    const auto c = conjugate(TaylorCoefficients({1.0}));
    CHECK(c[0] == complex{0.0, -1.0});

    std::mt19937_64 rng(11);
    const TaylorCoefficients tc(oracle::random_proper(rng, 32));
    const auto twice = conjugate(conjugate(tc));
    for (int k = 0; k <= 32; ++k) {
        CHECK(twice[k] == -tc[k]);
    }

    const auto saw = taylor_of("sawtooth", 200);
    const auto saw_conj = conjugate(saw);
    for (double theta : {-3.0, -1.0, 0.0, 0.5, 2.0, pi}) {
        const DiskPoint p(0.99, theta);
        const complex w = evaluate(saw, p);
        const complex wc = evaluate(saw_conj, p);
        CHECK(std::abs(wc.real() - w.imag()) <= 1e-12);
        CHECK(std::abs(wc - (-1.0i) * w) <= 1e-12);
    }
}

TEST_CASE("closed-form oracles") {
    CHECK(closed_form_eval(closed_form_get("neg_log_one_minus_z"), DiskPoint(0.0, 0.0)) ==
          complex{0.0, 0.0});

    // e^{0.5} from its series.
    double series = 0.0;
    double term = 1.0;
    for (int k = 0; k < 30; ++k) {
        series += term;
        term *= 0.5 / (k + 1);
    }
    const complex e = closed_form_eval(closed_form_get("exp_z"), DiskPoint(0.5, 0.0));
    CHECK(std::abs(e.real() - series) <= 1e-15);
    CHECK(e.real() == doctest::Approx(1.648721).epsilon(1e-6));

    const DiskPoint p(0.999, 1.0);
    const complex s = closed_form_eval(closed_form_get("sawtooth_w"), p);
    CHECK(std::abs(s.real() - 2.0 * std::arg(1.0 + p.z())) <= 1e-14);
    const double by_hand = 2.0 * std::atan(0.999 * std::sin(1.0) / (1.0 + 0.999 * std::cos(1.0)));
    CHECK(std::abs(s.real() - by_hand) <= 1e-14);
    CHECK(s.real() == doctest::Approx(0.999453).epsilon(1e-6));
    CHECK(std::abs(s.real() - 1.0) < 1e-3);

    const complex q = closed_form_eval(closed_form_get("square_wave_w"), p);
    const complex z = p.z();
    CHECK(std::abs(q - (-2.0i / pi) * std::log((1.0 + z) / (1.0 - z))) <= 1e-13);

    CHECK_THROWS_AS(closed_form_get("nope"), UnknownNameError);
    CHECK(closed_form_get("square_wave_w").singular_at(0.0));
    CHECK(closed_form_get("square_wave_w").singular_at(-pi));
    CHECK_FALSE(closed_form_get("exp_z").singular_at(0.0));
}

TEST_CASE("closed forms satisfy Cauchy-Riemann at random interior points") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const char* name : {"sawtooth_w", "square_wave_w", "neg_log_one_minus_z", "exp_z",
                             "iz_exp_z", "geometric"}) {
        const auto& cf = closed_form_get(name);
        const auto w = [&](double r, double t) { return cf.w(std::polar(r, t)); };
        for (int i = 0; i < 8; ++i) {
            const double rho = 0.1 + 0.7 * u(rng);
            const double theta = pi * (2 * u(rng) - 1) * 0.99;
            INFO(name << " at " << rho << ", " << theta);
            const double e1 = cr_residual(w, rho, theta, 1e-2);
            const double e2 = cr_residual(w, rho, theta, 5e-3);
            CHECK(e2 <= 1e-3);
            if (e1 > 1e-9) {
                CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
            }
        }
    }
}

TEST_CASE("truncated series satisfy Cauchy-Riemann with second-order convergence") {
    const auto tc = taylor_of("exp_cos", 40);
    const auto w = [&](double r, double t) { return evaluate(tc, std::polar(r, t)); };
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        const double rho = 0.2 + 0.6 * u(rng);
        const double theta = pi * (2 * u(rng) - 1) * 0.99;
        const double e1 = cr_residual(w, rho, theta, 2e-2);
        const double e2 = cr_residual(w, rho, theta, 1e-2);
        CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.125));
    }
}

TEST_CASE("coefficient bound 4M for every catalog entry") {
    for (const auto& name : catalog_names()) {
        const auto fc = compute_coefficients(catalog_get(name), 128);
        const auto tc = from_fourier(fc);
        INFO(name);
        CHECK(tc[0].imag() == 0.0);
        for (int k = 0; k <= 128; ++k) {
            CHECK(std::abs(tc[k]) <= 4 * fc.M + 1e-8);
        }
        CHECK(tc.tail().scale == doctest::Approx(4 * fc.M));
        CHECK(tc.tail().growth == 0);
    }
}

TEST_CASE("geometric majorant of the partial sums") {
    for (const auto& name : catalog_names()) {
        const auto fc = compute_coefficients(catalog_get(name), 256);
        const auto tc = from_fourier(fc);
        for (double rho : {0.5, 0.9, 0.99}) {
            double sum = 0.0;
            double rk = 1.0;
            for (int k = 0; k <= 256; ++k) {
                sum += std::abs(tc[k]) * rk;
                rk *= rho;
            }
            INFO(name << " rho " << rho);
            CHECK(sum <= 4 * fc.M * (1 - std::pow(rho, 257)) / (1 - rho) + 1e-8);
        }
    }
}

TEST_CASE("tail estimate for a Fourier-built series") {
    const auto fc = compute_coefficients(catalog_get("square_wave"), 100);
    const auto tc = from_fourier(fc);
    CHECK(tc.tail_estimate(0.9) ==
          doctest::Approx(4 * fc.M * std::pow(0.9, 101) / 0.1).epsilon(1e-12));
    TaylorCoefficients growing({0.0, 1.0, 1.0}, "", TailBound{1.0, 1});
    CHECK(std::isfinite(growing.tail_estimate(0.5)));
    CHECK(growing.tail_estimate(0.5) > 3 * std::pow(0.5, 3));
}

TEST_CASE("linearity of evaluation") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const TaylorCoefficients a(oracle::random_proper(rng, 48));
        const TaylorCoefficients b(oracle::random_proper(rng, 48));
        const complex s{u(rng), u(rng)};
        const complex t{u(rng), u(rng)};
        const DiskPoint p(0.9 * std::abs(u(rng)), pi * u(rng));
        const complex lhs = evaluate(s * a + t * b, p);
        const complex rhs = s * evaluate(a, p) + t * evaluate(b, p);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
        CHECK(std::abs(evaluate(a - b, p) - (evaluate(a, p) - evaluate(b, p))) <= 1e-12);
    }
    CHECK_THROWS_AS(TaylorCoefficients({1.0}) + TaylorCoefficients({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("coefficients re-extracted on two circles agree") {
    for (const char* name : {"exp_cos", "sawtooth", "log_sine", "square_wave"}) {
        const auto tc = taylor_of(name, 200);
        const auto w = [&](complex z) { return evaluate(tc, z); };
        const auto inner_circle = oracle::circle_projection(w, 0.5, 16, 512);
        const auto outer_circle = oracle::circle_projection(w, 0.8, 16, 512);
        for (int k = 0; k <= 16; ++k) {
            INFO(name << " k " << k);
            CHECK(std::abs(inner_circle[k] - outer_circle[k]) <= 1e-8);
            CHECK(std::abs(outer_circle[k] - tc[k]) <= 1e-8);
        }
    }
}
