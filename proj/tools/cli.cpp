#include "cli.hpp"

#include <algorithm>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "innerfn/errors.hpp"
#include "innerfn/innerfn.hpp"
#include "innerfn/io.hpp"

namespace innerfn::cli {

namespace {

using io::json;

struct Settings {
    std::string function;
    std::string piecewise;
    std::string coeffs;
    int n = 256;
    QuadConfig quad;
    double rho = 0.5;
    double theta = 0.0;
    int steps = 0;
    int max_steps = 6;
    double threshold = 1e-6;
    std::string ladder = "default";
    std::string extrapolation = "richardson";
    std::string output;
    bool taylor = false;
};

struct Input {
    std::string name;
    std::optional<RealFunctionSpec> spec;
    std::optional<FourierCoefficients> fourier;
    TaylorCoefficients taylor;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Input load_input(const Settings& s, bool allow_coeff_file) {
    const int given = !s.function.empty() + !s.piecewise.empty() + !s.coeffs.empty();
    if (given != 1) {
        throw UsageError(allow_coeff_file
                             ? "give exactly one of --function, --piecewise, --coeffs"
                             : "give exactly one of --function, --piecewise");
    }
    Input in;
    if (!s.coeffs.empty()) {
        if (!allow_coeff_file) {
            throw UsageError("--coeffs is not accepted by this command");
        }
        auto data = io::coefficients_from_json(io::read_json_file(s.coeffs));
        in.name = data.name;
        in.fourier = data.fourier;
        in.taylor = data.taylor;
        return in;
    }
    if (!s.function.empty()) {
        in.spec = catalog_get(s.function);
    } else {
        in.spec = io::piecewise_from_json(io::read_json_file(s.piecewise));
    }
    in.name = in.spec->name;
    in.fourier = compute_coefficients(*in.spec, s.n, s.quad);
    in.taylor = from_fourier(*in.fourier);
    return in;
}

RhoLadder parse_ladder(const Settings& s) {
    Extrapolation mode = Extrapolation::richardson;
    if (s.extrapolation == "none") {
        mode = Extrapolation::none;
    } else if (s.extrapolation != "richardson") {
        throw UsageError("--extrapolation must be none or richardson");
    }
    if (s.ladder == "default") {
        return RhoLadder::geometric(4, 14, mode);
    }
    if (s.ladder.rfind("geometric:", 0) == 0) {
        int first = 0;
        int last = 0;
        char sep = 0;
        std::istringstream in(s.ladder.substr(10));
        if (!(in >> first >> sep >> last) || sep != ':') {
            throw UsageError("geometric ladder syntax is geometric:FIRST:LAST");
        }
        return RhoLadder::geometric(first, last, mode);
    }
    RhoLadder ladder;
    ladder.extrapolation = mode;
    std::istringstream in(s.ladder);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            ladder.rhos.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw UsageError("cannot parse ladder entry '" + item + "'");
        }
    }
    ladder.validate();
    return ladder;
}

void check_theta(double theta) {
    if (!(theta >= -std::numbers::pi && theta <= std::numbers::pi)) {
        throw DomainError("--theta must lie in [-pi, pi]");
    }
}

json error_json(std::string_view type, const std::string& message) {
    return {{"error", {{"type", std::string(type)}, {"message", message}}}};
}

void add_input_options(CLI::App* sub, Settings& s, bool with_coeffs) {
    sub->add_option("--function", s.function, "catalog entry (see `list`)");
    sub->add_option("--piecewise", s.piecewise, "piecewise-polynomial JSON file");
    if (with_coeffs) {
        sub->add_option("--coeffs", s.coeffs, "coefficient JSON file (Fourier or Taylor form)");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Inner analytic functions from real functions on the circle"};
    app.name("innerfn");
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file; flags override it");

    app.add_option("--n", s.n, "truncation order N")->check(CLI::PositiveNumber);
    app.add_option("--abs-tol", s.quad.abs_tol, "quadrature absolute tolerance");
    app.add_option("--rel-tol", s.quad.rel_tol, "quadrature relative tolerance");
    app.add_option("--max-panels", s.quad.max_panels, "quadrature panel budget");
    app.add_option("--panel-order", s.quad.panel_order, "Gauss nodes per panel");
    app.add_option("--threshold", s.threshold, "convergence / truncation-guard threshold");
    app.add_option("--ladder", s.ladder,
                   "rho ladder: default | geometric:FIRST:LAST | comma-separated radii");
    app.add_option("--extrapolation", s.extrapolation, "none | richardson");
    app.add_option("--max-steps", s.max_steps, "chain steps tried by classify");
    app.add_option("--output", s.output,
                   "recover: CSV path (columns theta,rho,u); other commands: also write JSON here");

    auto* list = app.add_subcommand("list", "catalog entries as JSON");
    auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficients as JSON");
    add_input_options(coeffs, s, false);
    coeffs->add_flag("--taylor", s.taylor, "include c_re/c_im");
    auto* eval = app.add_subcommand("eval", "evaluate w = u + iv at (rho, theta)");
    add_input_options(eval, s, true);
    eval->add_option("--rho", s.rho)->required();
    eval->add_option("--theta", s.theta)->required();
    auto* recover = app.add_subcommand(
        "recover", "follow u(rho, theta) up the ladder; JSON summary, CSV via --output");
    add_input_options(recover, s, true);
    recover->add_option("--theta", s.theta)->required();
    auto* chain = app.add_subcommand("chain", "walk the integral-differential chain");
    add_input_options(chain, s, true);
    chain->add_option("--steps", s.steps, "signed: >0 differentiates, <0 integrates")->required();
    auto* classify = app.add_subcommand("classify", "classify the boundary point at --theta");
    add_input_options(classify, s, true);
    classify->add_option("--theta", s.theta)->required();
    auto* conj = app.add_subcommand("conjugate", "Fourier conjugate w -> -i w");
    add_input_options(conj, s, true);
    for (auto* sub : {list, coeffs, eval, recover, chain, classify, conj}) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "innerfn: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    json result;
    try {
        if (*list) {
            result = io::catalog_json();
        } else if (*coeffs) {
            const Input in = load_input(s, false);
            result = io::to_json(*in.fourier, s.taylor);
        } else if (*eval) {
            const Input in = load_input(s, true);
            check_theta(s.theta);
            const complex w = evaluate(in.taylor, DiskPoint(s.rho, s.theta));
            result = {{"name", in.name}, {"N", in.taylor.order()}, {"rho", s.rho},
                      {"theta", s.theta}, {"u", w.real()},         {"v", w.imag()}};
        } else if (*recover) {
            const Input in = load_input(s, true);
            const RhoLadder ladder = parse_ladder(s);
            const RecoveryResult r = radial_recover(in.taylor, s.theta, ladder, {s.threshold});
            result = io::to_json(r);
            if (!s.output.empty()) {
                io::write_text_file(s.output, io::recovery_csv(r));
            }
        } else if (*chain) {
            const Input in = load_input(s, true);
            const ChainPosition start(in.taylor);
            result = io::to_json(navigate(start, s.steps), in.name);
        } else if (*classify) {
            const Input in = load_input(s, true);
            check_theta(s.theta);
            ClassifyOptions options;
            options.max_steps = s.max_steps;
            options.probe.guard_threshold = s.threshold;
            if (in.spec) {
                options.known_regular = catalog_regularity(*in.spec, s.theta);
            }
            result = io::to_json(classify_point(in.taylor, s.theta, parse_ladder(s), options));
            result["name"] = in.name;
        } else if (*conj) {
            const Input in = load_input(s, true);
            result = io::to_json(conjugate(in.taylor), in.name);
        }
    } catch (const UsageError& e) {
        err << "innerfn: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureError& e) {
        json j = error_json("quadrature", e.what());
        j["error"]["worst_k"] = e.worst_k();
        j["error"]["achieved_error"] = e.achieved_error();
        out << io::dump(j);
        return 1;
    } catch (const TruncationLimitedError& e) {
        out << io::dump(error_json("truncation_limited", e.what()));
        return 1;
    } catch (const OffsetBoundError& e) {
        out << io::dump(error_json("offset_bound", e.what()));
        return 1;
    } catch (const UnknownNameError& e) {
        out << io::dump(error_json("unknown_name", e.what()));
        return 1;
    } catch (const std::domain_error& e) {
        out << io::dump(error_json("domain", e.what()));
        return 1;
    } catch (const std::exception& e) {
        out << io::dump(error_json("computation", e.what()));
        return 1;
    }

    const std::string text = io::dump(result);
    out << text;
    if (!s.output.empty() && !*recover) {
        io::write_text_file(s.output, text);
    }
    return 0;
}

}  // namespace innerfn::cli
