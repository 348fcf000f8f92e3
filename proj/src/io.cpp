#include "innerfn/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace innerfn::io {

namespace {

double angle_value(const json& v) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "pi") return std::numbers::pi;
        if (s == "-pi") return -std::numbers::pi;
        if (s == "0") return 0.0;
        throw std::invalid_argument("angle string must be \"pi\", \"-pi\" or a number, got " + s);
    }
    return v.get<double>();
}

std::vector<double> tail_of(const std::vector<double>& v) {
    return std::vector<double>(v.begin() + 1, v.end());
}

}  // namespace

json to_json(const FourierCoefficients& fc, bool with_taylor) {
    json j;
    j["name"] = fc.name;
    j["N"] = fc.order();
    j["M"] = fc.M;
    j["alpha0"] = fc.alpha0();
    j["alpha"] = tail_of(fc.alpha);
    j["beta"] = tail_of(fc.beta);
    j["converged"] = fc.converged;
    j["achieved_error"] = fc.achieved_error;
    if (with_taylor) {
        const TaylorCoefficients tc = from_fourier(fc);
        std::vector<double> re;
        std::vector<double> im;
        for (const auto& c : tc.c()) {
            re.push_back(c.real());
            im.push_back(c.imag());
        }
        j["c_re"] = re;
        j["c_im"] = im;
    }
    return j;
}

json to_json(const TaylorCoefficients& tc, std::string_view name) {
    std::vector<double> re;
    std::vector<double> im;
    for (const auto& c : tc.c()) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    json j;
    j["name"] = std::string(name);
    j["N"] = tc.order();
    j["c_re"] = re;
    j["c_im"] = im;
    j["provenance"] = tc.provenance();
    j["tail"] = {{"scale", tc.tail().scale}, {"growth", tc.tail().growth}};
    return j;
}

CoefficientData coefficients_from_json(const json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("coefficient file must hold a JSON object");
    }
    CoefficientData data;
    data.name = j.value("name", std::string("unnamed"));

    if (j.contains("alpha0") && j.contains("alpha") && j.contains("beta")) {
        FourierCoefficients fc;
        fc.name = data.name;
        fc.M = j.value("M", 0.0);
        const auto alpha = j.at("alpha").get<std::vector<double>>();
        const auto beta = j.at("beta").get<std::vector<double>>();
        fc.alpha.push_back(j.at("alpha0").get<double>());
        fc.alpha.insert(fc.alpha.end(), alpha.begin(), alpha.end());
        fc.beta.push_back(0.0);
        fc.beta.insert(fc.beta.end(), beta.begin(), beta.end());
        fc.converged = j.value("converged", true);
        fc.achieved_error = j.value("achieved_error", 0.0);
        fc.validate();
        if (j.contains("N") && j.at("N").get<int>() != fc.order()) {
            throw std::invalid_argument("N does not match the length of alpha/beta");
        }
        data.fourier = fc;
    }

    if (j.contains("c_re") && j.contains("c_im")) {
        const auto re = j.at("c_re").get<std::vector<double>>();
        const auto im = j.at("c_im").get<std::vector<double>>();
        if (re.size() != im.size() || re.empty()) {
            throw std::invalid_argument("c_re and c_im must be non-empty and of equal length");
        }
        std::vector<complex> c(re.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            c[k] = complex{re[k], im[k]};
        }
        std::optional<TailBound> tail;
        if (j.contains("tail")) {
            tail = TailBound{j.at("tail").at("scale").get<double>(),
                             j.at("tail").at("growth").get<int>()};
        } else if (data.fourier) {
            tail = TailBound{4.0 * data.fourier->M, 0};
        }
        data.taylor = TaylorCoefficients(std::move(c), j.value("provenance", data.name), tail);
    } else if (data.fourier) {
        data.taylor = from_fourier(*data.fourier);
    } else {
        throw std::invalid_argument(
            "coefficient file needs either alpha0/alpha/beta or c_re/c_im");
    }
    return data;
}

json to_json(const RecoveryResult& r) {
    json j;
    j["theta"] = r.theta;
    j["extrapolated"] = r.extrapolated;
    j["converged"] = r.converged;
    j["residual"] = r.residual;
    j["extrapolation_applied"] = r.extrapolation_applied;
    j["truncation_limited"] = r.truncation_limited;
    return j;
}

std::string recovery_csv(const RecoveryResult& r) {
    std::ostringstream out;
    out << "theta,rho,u\n" << std::setprecision(17);
    for (const auto& e : r.estimates) {
        out << r.theta << ',' << e.rho << ',' << e.u << '\n';
    }
    return out.str();
}

json to_json(const ProbeResult& p) {
    json samples = json::array();
    for (const auto& m : p.magnitudes) {
        samples.push_back({{"rho", m.rho}, {"abs_w", m.u}});
    }
    return {{"bounded", p.bounded},
            {"growth_exponent", p.growth_exponent},
            {"log_flag", p.log_flag},
            {"range_ratio", p.range_ratio},
            {"log_slope", p.log_slope},
            {"log_residual", p.log_residual},
            {"power_exponent", p.power_exponent},
            {"power_residual", p.power_residual},
            {"samples", samples}};
}

json to_json(const SingularityReport& r) {
    json j;
    j["theta1"] = r.theta1;
    j["verdict"] = std::string(to_string(r.verdict));
    j["growth_exponent"] = r.growth_exponent;
    j["log_flag"] = r.log_flag;
    j["degree"] = r.degree ? json(*r.degree) : json(nullptr);
    j["regular_not_excluded"] = r.regular_not_excluded;
    j["notes"] = r.notes;
    json walk = json::array();
    for (const auto& p : r.walk) {
        walk.push_back(to_json(p));
    }
    j["diagnostics"] = {{"probe", to_json(r.probe)}, {"walk", walk}};
    return j;
}

json catalog_json() {
    json list = json::array();
    for (const auto& name : catalog_names()) {
        const auto& spec = catalog_get(name);
        json points = json::array();
        for (const auto& sp : spec.singular_points) {
            points.push_back({{"theta", sp.theta}, {"kind", std::string(to_string(sp.kind))}});
        }
        list.push_back({{"name", spec.name},
                        {"singular_points", points},
                        {"parity", std::string(to_string(spec.parity))}});
    }
    return list;
}

RealFunctionSpec piecewise_from_json(const json& j) {
    if (!j.is_object() || !j.contains("intervals")) {
        throw std::invalid_argument("piecewise file needs an \"intervals\" array");
    }
    std::vector<PiecewiseInterval> intervals;
    for (const auto& iv : j.at("intervals")) {
        intervals.push_back({angle_value(iv.at("lo")), angle_value(iv.at("hi")),
                             iv.at("coeffs").get<std::vector<double>>()});
    }
    std::vector<SingularPoint> points;
    if (j.contains("singular_points")) {
        for (const auto& sp : j.at("singular_points")) {
            points.push_back({angle_value(sp.at("theta")),
                              singular_kind_from_string(sp.at("kind").get<std::string>()),
                              sp.value("left", 0.0), sp.value("right", 0.0)});
        }
    }
    const Parity parity = parity_from_string(j.value("parity", std::string("none")));
    return make_piecewise(j.value("name", std::string("piecewise")), std::move(intervals),
                          std::move(points), parity);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return json::parse(in);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace innerfn::io
