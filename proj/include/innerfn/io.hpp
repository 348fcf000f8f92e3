#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "innerfn/boundary.hpp"
#include "innerfn/catalog.hpp"
#include "innerfn/classify.hpp"
#include "innerfn/fourier.hpp"
#include "innerfn/inner.hpp"

namespace innerfn::io {

using nlohmann::json;

/// {name, N, M, alpha0, alpha: [a_1..a_N], beta: [b_1..b_N]}; with
/// `with_taylor`, also c_re and c_im of from_fourier(fc).
json to_json(const FourierCoefficients& fc, bool with_taylor = false);

/// {name, N, c_re, c_im, provenance, tail: {scale, growth}}.
json to_json(const TaylorCoefficients& tc, std::string_view name);

struct CoefficientData {
    std::string name;
    std::optional<FourierCoefficients> fourier;
    TaylorCoefficients taylor;
};

/// Accepts the Fourier form, the Taylor form, or both (Taylor wins).
CoefficientData coefficients_from_json(const json& j);

json to_json(const RecoveryResult& r);

/// theta,rho,u rows, one per ladder rung, with a header line.
std::string recovery_csv(const RecoveryResult& r);

json to_json(const ProbeResult& p);
json to_json(const SingularityReport& r);

/// [{name, singular_points: [{theta, kind}], parity}, ...]
json catalog_json();

/// {name?, intervals: [{lo, hi, coeffs}], singular_points?: [{theta, kind, left?, right?}],
///  parity?}. Endpoints may be given as the strings "pi" and "-pi".
RealFunctionSpec piecewise_from_json(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Two-space indented JSON followed by a newline. Doubles are written in the
/// shortest form that reads back to the identical binary value.
std::string dump(const json& j);

}  // namespace innerfn::io
