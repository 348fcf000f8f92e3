#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <innerfn/innerfn.hpp>
#include <innerfn/io.hpp>

namespace py = pybind11;
using namespace innerfn;

namespace {

const RealFunctionSpec& spec_of(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) {
        return catalog_get(obj.cast<std::string>());
    }
    return obj.cast<const RealFunctionSpec&>();
}

std::string repr_verdict(const SingularityReport& r) {
    std::string s = "<SingularityReport theta1=" + std::to_string(r.theta1) + " verdict=" +
                    std::string(to_string(r.verdict));
    if (r.degree) {
        s += " degree=" + std::to_string(*r.degree);
    }
    return s + ">";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Inner analytic functions built from real functions on the unit circle";

    // errors
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SingularityError>(m, "SingularityError", PyExc_ValueError);
    py::register_exception<UnknownNameError>(m, "UnknownNameError", PyExc_KeyError);
    py::register_exception<TruncationLimitedError>(m, "TruncationLimitedError", PyExc_RuntimeError);
    py::register_exception<OffsetBoundError>(m, "OffsetBoundError", PyExc_IndexError);
    py::register_exception<EmptyGridError>(m, "EmptyGridError", PyExc_RuntimeError);
    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> quadrature_error;
    quadrature_error.call_once_and_store_result(
        [&]() { return py::exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const QuadratureError& e) {
            const py::object& type = quadrature_error.get_stored();
            py::object err = type(e.what());
            err.attr("worst_k") = e.worst_k();
            err.attr("achieved_error") = e.achieved_error();
            PyErr_SetObject(type.ptr(), err.ptr());
        }
    });

    // catalog
    py::enum_<SingularKind>(m, "SingularKind")
        .value("none", SingularKind::none)
        .value("jump", SingularKind::jump)
        .value("log_divergence", SingularKind::log_divergence)
        .value("essential", SingularKind::essential);
    py::enum_<Parity>(m, "Parity")
        .value("none", Parity::none)
        .value("even", Parity::even)
        .value("odd", Parity::odd);

    py::class_<SingularPoint>(m, "SingularPoint")
        .def(py::init<double, SingularKind, double, double>(), py::arg("theta"),
             py::arg("kind") = SingularKind::none, py::arg("left_limit") = 0.0,
             py::arg("right_limit") = 0.0)
        .def_readonly("theta", &SingularPoint::theta)
        .def_readonly("kind", &SingularPoint::kind)
        .def_readonly("left_limit", &SingularPoint::left_limit)
        .def_readonly("right_limit", &SingularPoint::right_limit);

    py::class_<RealFunctionSpec>(m, "RealFunctionSpec")
        .def_readonly("name", &RealFunctionSpec::name)
        .def_readonly("singular_points", &RealFunctionSpec::singular_points)
        .def_readonly("known_closed_form", &RealFunctionSpec::known_closed_form)
        .def_readonly("parity", &RealFunctionSpec::parity)
        .def_readonly("classifier_exempt", &RealFunctionSpec::classifier_exempt)
        .def("__call__", [](const RealFunctionSpec& s, double theta) { return eval_real(s, theta); })
        .def("__repr__", [](const RealFunctionSpec& s) { return "<RealFunctionSpec " + s.name + ">"; });

    m.def("catalog_names", &catalog_names);
    m.def("catalog_get", &catalog_get, py::arg("name"), py::return_value_policy::reference);
    m.def("eval_real", [](const py::object& spec, double theta) { return eval_real(spec_of(spec), theta); },
          py::arg("spec"), py::arg("theta"));
    m.def(
        "make_piecewise",
        [](std::string name, const std::vector<std::tuple<double, double, std::vector<double>>>& pieces,
           std::vector<SingularPoint> extra, Parity parity) {
            std::vector<PiecewiseInterval> intervals;
            for (const auto& [lo, hi, coeffs] : pieces) {
                intervals.push_back({lo, hi, coeffs});
            }
            return make_piecewise(std::move(name), std::move(intervals), std::move(extra), parity);
        },
        py::arg("name"), py::arg("intervals"), py::arg("singular_points") = std::vector<SingularPoint>{},
        py::arg("parity") = Parity::none,
        "Polynomial pieces (lo, hi, coeffs) tiling [-pi, pi]; coeffs lowest degree first.");

    // fourier
    py::class_<QuadConfig>(m, "QuadConfig")
        .def(py::init([](double abs_tol, double rel_tol, std::size_t max_panels, int panel_order) {
                 QuadConfig q{abs_tol, rel_tol, max_panels, panel_order};
                 q.validate();
                 return q;
             }),
             py::arg("abs_tol") = 1e-10, py::arg("rel_tol") = 1e-8,
             py::arg("max_panels") = std::size_t{1} << 16, py::arg("panel_order") = 16)
        .def_readwrite("abs_tol", &QuadConfig::abs_tol)
        .def_readwrite("rel_tol", &QuadConfig::rel_tol)
        .def_readwrite("max_panels", &QuadConfig::max_panels)
        .def_readwrite("panel_order", &QuadConfig::panel_order);

    py::class_<FourierCoefficients>(m, "FourierCoefficients")
        .def_readonly("name", &FourierCoefficients::name)
        .def_readonly("alpha", &FourierCoefficients::alpha)
        .def_readonly("beta", &FourierCoefficients::beta)
        .def_readonly("M", &FourierCoefficients::M)
        .def_readonly("achieved_error", &FourierCoefficients::achieved_error)
        .def_readonly("converged", &FourierCoefficients::converged)
        .def_property_readonly("N", &FourierCoefficients::order)
        .def_property_readonly("alpha0", &FourierCoefficients::alpha0);

    m.def(
        "compute_coefficients",
        [](const py::object& spec, int N, const QuadConfig& quad) {
            const RealFunctionSpec& s = spec_of(spec);
            py::gil_scoped_release release;
            return compute_coefficients(s, N, quad);
        },
        py::arg("spec"), py::arg("N"), py::arg("quad") = QuadConfig{},
        "Fourier coefficients of a catalog name or RealFunctionSpec up to order N.");

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("max_alpha_ratio", &BoundReport::max_alpha_ratio)
        .def_readonly("max_beta_ratio", &BoundReport::max_beta_ratio)
        .def_readonly("violation", &BoundReport::violation);
    m.def("verify_bounds", &verify_bounds);

    // inner
    py::class_<TailBound>(m, "TailBound")
        .def(py::init<double, int>(), py::arg("scale"), py::arg("growth") = 0)
        .def_readonly("scale", &TailBound::scale)
        .def_readonly("growth", &TailBound::growth);

    py::class_<TaylorCoefficients>(m, "TaylorCoefficients")
        .def(py::init<>())
        .def(py::init<std::vector<complex>, std::string, std::optional<TailBound>>(), py::arg("c"),
             py::arg("provenance") = "", py::arg("tail") = py::none())
        .def_property_readonly("c", &TaylorCoefficients::c)
        .def_property_readonly("N", &TaylorCoefficients::order)
        .def_property_readonly("provenance", &TaylorCoefficients::provenance)
        .def_property_readonly("tail", &TaylorCoefficients::tail)
        .def("is_proper", &TaylorCoefficients::is_proper)
        .def("tail_estimate", &TaylorCoefficients::tail_estimate, py::arg("rho"))
        .def("__len__", [](const TaylorCoefficients& t) { return t.c().size(); })
        .def("__getitem__",
             [](const TaylorCoefficients& t, std::size_t k) {
                 if (k >= t.c().size()) {
                     throw py::index_error();
                 }
                 return t[k];
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("__rmul__", [](const TaylorCoefficients& t, complex a) { return a * t; })
        .def("__mul__", [](const TaylorCoefficients& t, complex a) { return a * t; })
        .def("__repr__", [](const TaylorCoefficients& t) {
            return "<TaylorCoefficients N=" + std::to_string(t.order()) + " " + t.provenance() + ">";
        });

    m.def("from_fourier", &from_fourier);
    m.def("evaluate",
          [](const TaylorCoefficients& tc, double rho, double theta) {
              return evaluate(tc, DiskPoint(rho, theta));
          },
          py::arg("tc"), py::arg("rho"), py::arg("theta"));
    m.def("evaluate_z", [](const TaylorCoefficients& tc, complex z) { return evaluate(tc, z); },
          py::arg("tc"), py::arg("z"));
    m.def("conjugate", &conjugate);
    m.def("closed_form_names", [] {
        return std::vector<std::string>{"zero", "one", "sawtooth_w", "square_wave_w",
                                        "neg_log_one_minus_z", "exp_z", "iz_exp_z", "geometric"};
    });
    m.def("closed_form_eval",
          [](const std::string& name, double rho, double theta) {
              return closed_form_eval(closed_form_get(name), DiskPoint(rho, theta));
          },
          py::arg("name"), py::arg("rho"), py::arg("theta"));

    // chain
    m.def("angular_derivative", &angular_derivative);
    m.def("angular_primitive", &angular_primitive);
    m.def("proper_projection", &proper_projection);
    py::class_<ChainPosition>(m, "ChainPosition")
        .def(py::init<const TaylorCoefficients&, int, int>(), py::arg("link"), py::arg("offset") = 0,
             py::arg("max_offset") = kDefaultMaxOffset)
        .def_property_readonly("base", &ChainPosition::base)
        .def_property_readonly("offset", &ChainPosition::offset)
        .def_property_readonly("max_offset", &ChainPosition::max_offset);
    m.def("navigate", &navigate, py::arg("pos"), py::arg("steps"));
    m.def("walk", &walk, py::arg("pos"), py::arg("steps"));

    // boundary
    py::enum_<Extrapolation>(m, "Extrapolation")
        .value("none", Extrapolation::none)
        .value("richardson", Extrapolation::richardson);
    py::class_<RhoLadder>(m, "RhoLadder")
        .def(py::init([](std::vector<double> rhos, Extrapolation mode) {
                 RhoLadder l{std::move(rhos), mode};
                 l.validate();
                 return l;
             }),
             py::arg("rhos"), py::arg("extrapolation") = Extrapolation::richardson)
        .def_static("geometric", &RhoLadder::geometric, py::arg("first") = 4, py::arg("last") = 14,
                    py::arg("extrapolation") = Extrapolation::richardson)
        .def_readonly("rhos", &RhoLadder::rhos)
        .def_readonly("extrapolation", &RhoLadder::extrapolation);
    py::class_<RhoEstimate>(m, "RhoEstimate")
        .def_readonly("rho", &RhoEstimate::rho)
        .def_readonly("u", &RhoEstimate::u);
    py::class_<RecoveryResult>(m, "RecoveryResult")
        .def_readonly("theta", &RecoveryResult::theta)
        .def_readonly("estimates", &RecoveryResult::estimates)
        .def_readonly("extrapolated", &RecoveryResult::extrapolated)
        .def_readonly("converged", &RecoveryResult::converged)
        .def_readonly("residual", &RecoveryResult::residual)
        .def_readonly("extrapolation_applied", &RecoveryResult::extrapolation_applied)
        .def_readonly("truncation_limited", &RecoveryResult::truncation_limited);
    m.def("radial_recover",
          [](const TaylorCoefficients& tc, double theta, const RhoLadder& ladder, double threshold) {
              return radial_recover(tc, theta, ladder, {threshold});
          },
          py::arg("tc"), py::arg("theta"), py::arg("ladder") = RhoLadder::geometric(),
          py::arg("threshold") = 1e-6);
    m.def("abel_sum",
          [](const FourierCoefficients& fc, double theta, const RhoLadder& ladder, double threshold) {
              return abel_sum(fc, theta, ladder, {threshold});
          },
          py::arg("fc"), py::arg("theta"), py::arg("ladder") = RhoLadder::geometric(),
          py::arg("threshold") = 1e-6);
    m.def("truncation_guard", &truncation_guard, py::arg("tc"), py::arg("rho"),
          py::arg("threshold") = 1e-6);
    py::class_<GridError>(m, "GridError")
        .def_readonly("l1", &GridError::l1)
        .def_readonly("linf", &GridError::linf)
        .def_readonly("points", &GridError::points);
    m.def("grid_error",
          [](const py::object& spec, const TaylorCoefficients& tc, double rho, std::size_t grid_size,
             double exclusion_radius) {
              return grid_error(spec_of(spec), tc, rho, grid_size, exclusion_radius);
          },
          py::arg("spec"), py::arg("tc"), py::arg("rho"), py::arg("grid_size") = 4096,
          py::arg("exclusion_radius") = 0.0);

    // classify
    py::class_<ProbeConfig>(m, "ProbeConfig")
        .def(py::init<double, double, double>(), py::arg("constant_range_fraction") = 0.05,
             py::arg("log_power_ratio") = 0.5, py::arg("guard_threshold") = 1e-6)
        .def_readwrite("constant_range_fraction", &ProbeConfig::constant_range_fraction)
        .def_readwrite("log_power_ratio", &ProbeConfig::log_power_ratio)
        .def_readwrite("guard_threshold", &ProbeConfig::guard_threshold);
    py::class_<ProbeResult>(m, "ProbeResult")
        .def_readonly("bounded", &ProbeResult::bounded)
        .def_readonly("growth_exponent", &ProbeResult::growth_exponent)
        .def_readonly("log_flag", &ProbeResult::log_flag)
        .def_readonly("range_ratio", &ProbeResult::range_ratio)
        .def_readonly("log_slope", &ProbeResult::log_slope)
        .def_readonly("log_residual", &ProbeResult::log_residual)
        .def_readonly("power_exponent", &ProbeResult::power_exponent)
        .def_readonly("power_residual", &ProbeResult::power_residual)
        .def_readonly("magnitudes", &ProbeResult::magnitudes);
    py::enum_<Verdict>(m, "Verdict")
        .value("regular", Verdict::regular)
        .value("soft", Verdict::soft)
        .value("borderline_hard", Verdict::borderline_hard)
        .value("hard", Verdict::hard);
    py::class_<SingularityReport>(m, "SingularityReport")
        .def_readonly("theta1", &SingularityReport::theta1)
        .def_readonly("verdict", &SingularityReport::verdict)
        .def_readonly("growth_exponent", &SingularityReport::growth_exponent)
        .def_readonly("log_flag", &SingularityReport::log_flag)
        .def_readonly("degree", &SingularityReport::degree)
        .def_readonly("regular_not_excluded", &SingularityReport::regular_not_excluded)
        .def_readonly("notes", &SingularityReport::notes)
        .def_readonly("probe", &SingularityReport::probe)
        .def_readonly("walk", &SingularityReport::walk)
        .def("__repr__", &repr_verdict);
    m.def("probe_point", &probe_point, py::arg("tc"), py::arg("theta1"),
          py::arg("ladder") = RhoLadder::geometric(), py::arg("config") = ProbeConfig{});
    m.def(
        "classify_point",
        [](const TaylorCoefficients& tc, double theta1, const RhoLadder& ladder, int max_steps,
           std::optional<bool> known_regular, const ProbeConfig& probe) {
            ClassifyOptions options;
            options.max_steps = max_steps;
            options.known_regular = known_regular;
            options.probe = probe;
            py::gil_scoped_release release;
            return classify_point(tc, theta1, ladder, options);
        },
        py::arg("tc"), py::arg("theta1"), py::arg("ladder") = RhoLadder::geometric(),
        py::arg("max_steps") = 6, py::arg("known_regular") = py::none(),
        py::arg("probe") = ProbeConfig{});
    m.def("catalog_regularity",
          [](const py::object& spec, double theta) { return catalog_regularity(spec_of(spec), theta); });

    // persistence
    m.def("to_json", [](const FourierCoefficients& fc, bool with_taylor) {
        return io::dump(io::to_json(fc, with_taylor));
    }, py::arg("fc"), py::arg("with_taylor") = false);
    m.def("to_json", [](const TaylorCoefficients& tc, const std::string& name) {
        return io::dump(io::to_json(tc, name));
    }, py::arg("tc"), py::arg("name"));
    m.def("taylor_from_json", [](const std::string& text) {
        return io::coefficients_from_json(io::json::parse(text)).taylor;
    }, py::arg("text"), "Reads either coefficient form and returns the Taylor coefficients.");
}
