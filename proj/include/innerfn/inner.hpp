#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "innerfn/fourier.hpp"

namespace innerfn {

using complex = std::complex<double>;

/// Assumed majorant for the coefficients beyond the truncation order:
/// |c_k| <= scale * k^growth for k > N. Coefficients built from Fourier data
/// start at {4M, 0}; each angular derivative raises growth by one and each
/// angular primitive lowers it.
struct TailBound {
    double scale = 0.0;
    int growth = 0;
};

/// Truncated Taylor series sum_{k=0}^{N} c_k z^k of an inner analytic function.
/// Immutable once built; N = size - 1 >= 0.
class TaylorCoefficients {
public:
    TaylorCoefficients();

    /// Tail defaults to {max_k |c_k|, 0}.
    explicit TaylorCoefficients(std::vector<complex> c, std::string provenance = {},
                                std::optional<TailBound> tail = std::nullopt);

    const std::vector<complex>& c() const noexcept { return c_; }
    const complex& operator[](std::size_t k) const { return c_[k]; }
    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::string& provenance() const noexcept { return provenance_; }
    const TailBound& tail() const noexcept { return tail_; }
    bool is_proper() const noexcept { return c_[0] == complex{0.0, 0.0}; }

    /// Bound on sum_{k>N} |c_k| rho^k implied by tail(); infinity when it diverges.
    double tail_estimate(double rho) const;

    friend TaylorCoefficients operator+(const TaylorCoefficients& l, const TaylorCoefficients& r);
    friend TaylorCoefficients operator-(const TaylorCoefficients& l, const TaylorCoefficients& r);
    friend TaylorCoefficients operator*(complex a, const TaylorCoefficients& t);

private:
    std::vector<complex> c_;
    std::string provenance_;
    TailBound tail_;
};

/// z = rho e^{i theta} with 0 <= rho < 1 and theta in [-pi, pi].
class DiskPoint {
public:
    DiskPoint(double rho, double theta);

    double rho() const noexcept { return rho_; }
    double theta() const noexcept { return theta_; }
    complex z() const noexcept { return z_; }

private:
    double rho_;
    double theta_;
    complex z_;
};

/// c_0 = alpha_0 / 2, c_k = alpha_k - i beta_k.
TaylorCoefficients from_fourier(const FourierCoefficients& fc);

/// Horner evaluation of the truncated series at p: returns u + i v.
complex evaluate(const TaylorCoefficients& tc, const DiskPoint& p);

/// Same, at an arbitrary |z| < 1.
complex evaluate(const TaylorCoefficients& tc, complex z);

/// Fourier conjugation w -> -i w.
TaylorCoefficients conjugate(const TaylorCoefficients& tc);

/// Closed-form inner analytic function, used as an oracle.
struct ClosedFormInner {
    std::string name;
    std::function<complex(complex)> w;
    std::vector<double> boundary_singularities;  // angles of singular boundary points

    bool singular_at(double theta) const;
};

/// Registered: zero, one, sawtooth_w, square_wave_w, neg_log_one_minus_z,
/// exp_z, iz_exp_z, geometric.
const ClosedFormInner& closed_form_get(std::string_view name);

complex closed_form_eval(const ClosedFormInner& cf, const DiskPoint& p);

}  // namespace innerfn
