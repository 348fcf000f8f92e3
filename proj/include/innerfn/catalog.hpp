#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace innerfn {

enum class SingularKind { none, jump, log_divergence, essential };
enum class Parity { none, even, odd };

std::string_view to_string(SingularKind kind);
std::string_view to_string(Parity parity);
SingularKind singular_kind_from_string(std::string_view text);
Parity parity_from_string(std::string_view text);

/// A distinguished point of f on the circle. `none` marks a plain break point
/// (a kink, or a piece boundary) that quadrature should still respect.
/// Jump points carry both lateral limits; theta = pi stands for +-pi.
struct SingularPoint {
    double theta = 0.0;
    SingularKind kind = SingularKind::none;
    double left_limit = 0.0;   // f(theta^-), jump points only
    double right_limit = 0.0;  // f(theta^+); at pi this is the limit from -pi^+
};

/// A real function on [-pi, pi] together with what is known about its structure.
struct RealFunctionSpec {
    std::string name;
    std::function<double(double)> rule;  // valid away from singular points
    std::vector<SingularPoint> singular_points;
    std::optional<std::string> known_closed_form;  // a name in the closed-form registry
    Parity parity = Parity::none;
    bool classifier_exempt = false;
};

/// Immutable lookup; throws UnknownNameError listing the registered names.
const RealFunctionSpec& catalog_get(std::string_view name);

/// Registered names in registration order.
std::vector<std::string> catalog_names();

/// f(theta). Jump points give the midpoint of the lateral limits.
double eval_real(const RealFunctionSpec& spec, double theta);

/// Distance between two angles measured along the circle.
double circle_distance(double a, double b);

/// The declared point at theta (within 1e-14 on the circle), if any.
const SingularPoint* singular_point_at(const RealFunctionSpec& spec, double theta);

struct PiecewiseInterval {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> coeffs;  // polynomial in theta, lowest degree first
};

/// Builds a spec from polynomial pieces tiling [-pi, pi]. Piece boundaries
/// become break points: jumps where the lateral values differ, `none` otherwise.
RealFunctionSpec make_piecewise(std::string name, std::vector<PiecewiseInterval> intervals,
                                std::vector<SingularPoint> extra_points = {},
                                Parity parity = Parity::none);

}  // namespace innerfn
