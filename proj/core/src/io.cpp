#include "zeroflip/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace zeroflip {
namespace io {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

ordered complex_to_json(Complex z) { return ordered::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string zero_product_to_json(const ZeroProductSpec& spec) {
    ordered j;
    j["zeros"] = ordered::array();
    for (Complex z : spec.zeros) j["zeros"].push_back(complex_to_json(z));
    j["m"] = spec.m;
    j["c"] = spec.c;
    if (spec.amplitude) j["amplitude"] = complex_to_json(*spec.amplitude);
    return j.dump();
}

ZeroProductSpec zero_product_from_json(const std::string& text) {
    const json j = json::parse(text);
    ZeroProductSpec spec;
    if (j.contains("zeros"))
        for (const auto& z : j.at("zeros")) spec.zeros.push_back(complex_from_json(z));
    spec.m = j.value("m", 1);
    spec.c = j.value("c", 1.0);
    if (j.contains("amplitude")) spec.amplitude = complex_from_json(j.at("amplitude"));
    spec.validate();
    return spec;
}

std::string sweep_config_to_json(const SweepConfig& c) {
    ordered j;
    if (c.function.spec)
        j["function"] = ordered::parse(zero_product_to_json(*c.function.spec));
    else
        j["function"] = {{"preset", c.function.preset}};
    j["grid"] = {{"re_min", c.grid.re_min}, {"re_max", c.grid.re_max},
                 {"im_min", c.grid.im_min}, {"im_max", c.grid.im_max},
                 {"nx", c.grid.nx},         {"ny", c.grid.ny}};
    if (c.checks) j["checks"] = *c.checks;
    j["seed"] = c.seed;
    j["trials"] = c.trials;
    j["tolerances"] = c.tolerances;
    j["out"] = c.out;
    j["threads"] = c.threads;
    return j.dump(2) + "\n";
}

SweepConfig sweep_config_from_json(const std::string& text) {
    const json j = json::parse(text);
    SweepConfig c;
    if (j.contains("function")) {
        const json& f = j.at("function");
        if (f.contains("preset"))
            c.function.preset = f.at("preset").get<std::string>();
        else
            c.function.spec = zero_product_from_json(f.dump());
    }
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        c.grid.re_min = g.value("re_min", c.grid.re_min);
        c.grid.re_max = g.value("re_max", c.grid.re_max);
        c.grid.im_min = g.value("im_min", c.grid.im_min);
        c.grid.im_max = g.value("im_max", c.grid.im_max);
        c.grid.nx = g.value("nx", c.grid.nx);
        c.grid.ny = g.value("ny", c.grid.ny);
    }
    if (j.contains("checks")) c.checks = j.at("checks").get<std::vector<std::string>>();
    else c.checks.reset();
    c.seed = j.value("seed", std::uint64_t(1));
    c.trials = j.value("trials", 0);
    if (j.contains("tolerances"))
        c.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
    c.out = j.value("out", std::string());
    c.threads = j.value("threads", 1);
    return c;
}

std::string verify_report_to_json(const VerifyReport& report, std::uint64_t seed) {
    ordered j;
    j["seed"] = seed;
    j["checks"] = ordered::array();
    for (const auto& c : report.checks) {
        ordered e;
        e["check"] = c.name;
        e["trials"] = c.trials;
        e["worst_margin"] = c.worst_margin;
        e["failures"] = c.failures;
        e["tolerance"] = c.tolerance;
        e["errors"] = c.errors;
        j["checks"].push_back(e);
    }
    j["total_failures"] = report.total_failures;
    j["total_errors"] = report.total_errors;
    return j.dump(2) + "\n";
}

std::string stability_report_to_json(const StabilityReport& r) {
    ordered j;
    j["distance_sq"] = r.distance_sq;
    j["optimal_phase"] = complex_to_json(r.optimal_phase);
    j["phase_defined"] = r.phase_defined;
    j["inner_value"] = complex_to_json(r.inner_value);
    if (r.decomposition) {
        const auto& d = *r.decomposition;
        j["decomposition"] = {{"a_term", complex_to_json(d[0])},
                              {"b_diff", complex_to_json(d[1])},
                              {"c_diff", complex_to_json(d[2])},
                              {"d_diff", complex_to_json(d[3])}};
    }
    return j.dump(2) + "\n";
}

std::string piecewise_to_json(const PiecewisePolySpectrum& F) {
    ordered j;
    j["breakpoints"] = F.breakpoints();
    j["pieces"] = ordered::array();
    for (const auto& p : F.pieces()) {
        ordered piece = ordered::array();
        for (const auto& coeff : p.coeffs()) piece.push_back(complex_to_json(coeff));
        j["pieces"].push_back(piece);
    }
    return j.dump();
}

PiecewisePolySpectrum piecewise_from_json(const std::string& text) {
    const json j = json::parse(text);
    std::vector<double> bp = j.at("breakpoints").get<std::vector<double>>();
    std::vector<Poly> pieces;
    for (const auto& arr : j.at("pieces")) {
        std::vector<Complex> coeffs;
        for (const auto& c : arr) coeffs.push_back(complex_from_json(c));
        pieces.emplace_back(std::move(coeffs));
    }
    return PiecewisePolySpectrum(std::move(bp), std::move(pieces));
}

namespace {

void append_row(std::string& out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out += ',';
        out += c;
        first = false;
    }
    out += '\n';
}

std::string fd(double v) { return format_double(v); }

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "re_a,im_a,beta_a,region,distance_sq,inner_re,inner_im,coarse_rhs,sharp_rhs,"
        "margin_coarse,margin_sharp,flag\n";
    for (const auto& r : rows)
        append_row(out, {fd(r.re_a), fd(r.im_a), fd(r.beta), region_name(r.region),
                         fd(r.distance_sq), fd(r.inner.real()), fd(r.inner.imag()),
                         fd(r.coarse_rhs), fd(r.sharp_rhs), fd(r.margin_coarse),
                         fd(r.margin_sharp), r.extreme ? "extreme" : ""});
    return out;
}

std::string region_csv(const std::vector<RegionRow>& rows) {
    std::string out = "re_a,im_a,beta_a,region\n";
    for (const auto& r : rows)
        append_row(out, {fd(r.re_a), fd(r.im_a), fd(r.beta), region_name(r.region)});
    return out;
}

std::string converge_csv(const std::vector<ConvergeRow>& rows) {
    std::string out = "k,re_a,im_a,beta_a,distance_sq,rhs,ratio,margin\n";
    for (const auto& r : rows)
        append_row(out, {std::to_string(r.k), fd(r.re_a), fd(r.im_a), fd(r.beta_a),
                         fd(r.distance_sq), fd(r.rhs), fd(r.ratio), fd(r.margin)});
    return out;
}

std::string bound_csv_header() {
    return "name,regime,lhs,rhs,margin,re_a,im_a,re_b,im_b,L,lambda\n";
}

std::string bound_csv_row(const BoundReport& r) {
    std::string out;
    append_row(out, {r.name, r.regime, fd(r.lhs), fd(r.rhs), fd(r.margin), fd(r.re_a),
                     fd(r.im_a), fd(r.re_b), fd(r.im_b), fd(r.L), fd(r.lambda)});
    return out;
}

std::string stability_csv_header() {
    return "re_a,im_a,re_b,im_b,beta_a,beta_b,distance_sq,inner_re,inner_im,flag\n";
}

std::string stability_csv_row(const FlipPoint& a, const FlipPoint& b,
                              const StabilityReport& r) {
    std::string out;
    std::string flag;
    if (!r.phase_defined) flag = "phase_undefined";
    if (a.beta > kExtremeBeta || b.beta > kExtremeBeta)
        flag += flag.empty() ? "extreme" : "+extreme";
    append_row(out, {fd(a.re), fd(a.im), fd(b.re), fd(b.im), fd(a.beta), fd(b.beta),
                     fd(r.distance_sq), fd(r.inner_value.real()), fd(r.inner_value.imag()),
                     flag});
    return out;
}

std::string exp_poly_samples_csv(const ExpPolySpectrum& F, double lo, double hi, int n) {
    std::string out = "xi,re,im,piece_index\n";
    for (int i = 0; i < n; ++i) {
        const double xi = lo + (hi - lo) * double(i) / double(std::max(1, n - 1));
        const Complex v = F(xi);
        append_row(out, {fd(xi), fd(v.real()), fd(v.imag()),
                         std::to_string(F.segment_index(xi))});
    }
    return out;
}

std::string piecewise_samples_csv(const PiecewisePolySpectrum& F, double lo, double hi, int n) {
    std::string out = "xi,re,im\n";
    for (int i = 0; i < n; ++i) {
        const double xi = lo + (hi - lo) * double(i) / double(std::max(1, n - 1));
        const Complex v = F(xi);
        append_row(out, {fd(xi), fd(v.real()), fd(v.imag())});
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace io
}  // namespace zeroflip
