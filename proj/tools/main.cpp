#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zeroflip/bounds.hpp"
#include "zeroflip/io.hpp"
#include "zeroflip/quadrature.hpp"

using namespace zeroflip;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

Complex parse_complex(const std::string& text) {
    double re = 0.0, im = 0.0;
    if (std::sscanf(text.c_str(), "%lf,%lf", &re, &im) != 2)
        throw std::invalid_argument("expected a complex value as re,im: " + text);
    return {re, im};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        io::write_file(out_path, content);
}

struct CommonOpts {
    std::string config_path;
    std::string preset;
    std::string out;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "JSON configuration file");
    cmd->add_option("--preset", opts.preset, "named test function (sinc, triangle, zero3)");
    cmd->add_option("--out", opts.out, "output path (stdout when omitted)");
    cmd->add_option("--seed", opts.seed, "64-bit seed for randomized draws")
        ->each([&](const std::string&) { opts.seed_set = true; });
    cmd->add_option("--threads", opts.threads, "worker threads (cells are independent)");
}

SweepConfig load_config(const CommonOpts& opts) {
    SweepConfig config;
    if (!opts.config_path.empty()) config = io::sweep_config_from_json(read_file(opts.config_path));
    if (!opts.preset.empty()) {
        config.function.preset = opts.preset;
        config.function.spec.reset();
    }
    if (opts.seed_set) config.seed = opts.seed;
    if (opts.threads > 0) config.threads = opts.threads;
    if (!opts.out.empty()) config.out = opts.out;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-flipping operators, stability distances, and bound verification "
                 "for bandlimited functions"};
    app.require_subcommand(1);

    CommonOpts verify_opts, sweep_opts, region_opts, converge_opts, flip_opts, dist_opts;

    auto* cmd_verify = app.add_subcommand("verify", "run randomized bound-verification suites");
    add_common(cmd_verify, verify_opts);
    std::vector<std::string> check_list;
    int trials = 0;
    std::string report_csv;
    cmd_verify->add_option("--checks", check_list, "subset of checks to run")->delimiter(',');
    cmd_verify->add_option("--trials", trials, "override the per-check trial counts");
    cmd_verify->add_option("--report-csv", report_csv, "also write per-draw bound rows");

    auto* cmd_sweep = app.add_subcommand("sweep", "evaluate the self-flip bounds over a grid");
    add_common(cmd_sweep, sweep_opts);
    GridSpec grid_flags;
    bool grid_given = false;
    auto grid_opt = [&](const char* name, auto& field, const char* help) {
        cmd_sweep->add_option(name, field, help)->each([&](const std::string&) {
            grid_given = true;
        });
    };
    grid_opt("--re-min", grid_flags.re_min, "grid left edge");
    grid_opt("--re-max", grid_flags.re_max, "grid right edge");
    grid_opt("--im-min", grid_flags.im_min, "grid bottom edge (> 0)");
    grid_opt("--im-max", grid_flags.im_max, "grid top edge");
    grid_opt("--nx", grid_flags.nx, "horizontal resolution");
    grid_opt("--ny", grid_flags.ny, "vertical resolution");

    auto* cmd_region = app.add_subcommand("region", "emit the stability-region map");
    add_common(cmd_region, region_opts);
    double region_L = 1.0;
    int region_nx = 64, region_ny = 64;
    cmd_region->add_option("--L", region_L, "bandlimit defining the dividing circle");
    cmd_region->add_option("--nx", region_nx, "horizontal resolution");
    cmd_region->add_option("--ny", region_ny, "vertical resolution");

    auto* cmd_converge = app.add_subcommand(
        "converge", "halve the distance to a planted zero and track the pair bound");
    add_common(cmd_converge, converge_opts);
    std::string zero_text, dir_text;
    int steps = 10;
    cmd_converge->add_option("--zero", zero_text, "planted zero b as re,im")->required();
    cmd_converge->add_option("--dir", dir_text, "initial offset a_0 - b as re,im");
    cmd_converge->add_option("--steps", steps, "number of halvings");

    auto* cmd_flip = app.add_subcommand("flip", "sample the spectrum of a flipped function");
    add_common(cmd_flip, flip_opts);
    std::string flip_a_text;
    double xi_min = 0.0, xi_max = 0.0;
    int samples = 512;
    bool xi_given = false;
    cmd_flip->add_option("--a", flip_a_text, "flip point as re,im")->required();
    cmd_flip->add_option("--xi-min", xi_min, "sample window start")->each([&](const std::string&) {
        xi_given = true;
    });
    cmd_flip->add_option("--xi-max", xi_max, "sample window end")->each([&](const std::string&) {
        xi_given = true;
    });
    cmd_flip->add_option("--n", samples, "number of samples");

    auto* cmd_distance =
        app.add_subcommand("distance", "optimal-phase stability distance report");
    add_common(cmd_distance, dist_opts);
    std::string dist_a_text, dist_b_text;
    bool as_csv = false;
    cmd_distance->add_option("--a", dist_a_text, "flip point as re,im")->required();
    cmd_distance->add_option("--b", dist_b_text, "second flip point as re,im");
    cmd_distance->add_flag("--csv", as_csv, "emit the CSV row form instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_verify->parsed()) {
            SweepConfig config = load_config(verify_opts);
            if (cmd_verify->count("--checks")) {
                std::erase(check_list, std::string());
                config.checks = check_list;
            }
            if (trials > 0) config.trials = trials;
            const VerifyReport report = verify(config);
            emit(config.out, io::verify_report_to_json(report, config.seed));
            if (!report_csv.empty()) {
                // one representative bound row per check keeps the CSV contract exercised
                std::string csv = io::bound_csv_header();
                Rng rng(derive_seed(config.seed, "report-csv"));
                const PWFunction f = draw_function(rng);
                const auto [a, b] = draw_admissible_pair(rng);
                const SelfFlipBounds sf = self_flip_bound(f, a);
                csv += io::bound_csv_row(sf.coarse);
                csv += io::bound_csv_row(sf.sharp);
                csv += io::bound_csv_row(strip_growth_bound(f, a, 0.5 * a.im));
                csv += io::bound_csv_row(kernel_diff_bound(f, a, b));
                csv += io::bound_csv_row(tail_kernel_bound(f, b));
                csv += io::bound_csv_row(pair_flip_bound(f, a, b));
                io::write_file(report_csv, csv);
            }
            if (report.total_errors > 0) return kExitNumerical;
            return report.total_failures == 0 ? kExitOk : kExitViolation;
        }

        if (cmd_sweep->parsed()) {
            SweepConfig config = load_config(sweep_opts);
            if (grid_given) config.grid = grid_flags;
            const auto rows = sweep(config);
            emit(config.out, io::sweep_csv(rows));
            for (const auto& row : rows)
                if (row.margin_coarse < -1e-9 || row.margin_sharp < -1e-9) return kExitViolation;
            return kExitOk;
        }

        if (cmd_region->parsed()) {
            const SweepConfig config = load_config(region_opts);
            emit(config.out, io::region_csv(region_map(region_L, region_nx, region_ny)));
            return kExitOk;
        }

        if (cmd_converge->parsed()) {
            SweepConfig config = load_config(converge_opts);
            const Complex zero = parse_complex(zero_text);
            ZeroProductSpec spec;
            if (config.function.spec) {
                spec = *config.function.spec;
                bool found = false;
                for (Complex zk : spec.zeros) found = found || std::abs(zk - zero) < 1e-12;
                if (!found) {
                    std::cerr << "converge: --zero must be a zero of the configured function\n";
                    return kExitUsage;
                }
            } else {
                spec.zeros = {zero};
                spec.m = 3;
                spec.c = 1.0 / 3.0;
            }
            const PWFunction f = PWFunction::build(spec);
            const FlipPoint b(zero);
            const Complex dir = dir_text.empty()
                                    ? 0.25 * std::abs(zero) * Complex(0.6, 0.8)
                                    : parse_complex(dir_text);
            const auto rows = convergence_study(f, b, zero + dir, steps);
            emit(config.out, io::converge_csv(rows));
            const double nsq = f.l2_norm() * f.l2_norm();
            for (const auto& row : rows)
                if (row.margin < -1e-9 * nsq) return kExitViolation;
            return kExitOk;
        }

        if (cmd_flip->parsed()) {
            const SweepConfig config = load_config(flip_opts);
            const PWFunction f = realize(config.function);
            const FlipPoint a(parse_complex(flip_a_text));
            const ExpPolySpectrum g = flip_spectrum(f, a);
            if (!xi_given) {
                xi_min = a.beta - f.bandlimit() - 2.0;
                xi_max = a.beta + f.bandlimit() + 1.0;
            }
            emit(config.out, io::exp_poly_samples_csv(g, xi_min, xi_max, samples));
            return kExitOk;
        }

        if (cmd_distance->parsed()) {
            const SweepConfig config = load_config(dist_opts);
            const PWFunction f = realize(config.function);
            const FlipPoint a(parse_complex(dist_a_text));
            StabilityReport report;
            FlipPoint b = a;
            if (!dist_b_text.empty()) {
                b = FlipPoint(parse_complex(dist_b_text));
                report = pair_distance(f, a, b);
            } else {
                report = self_distance(f, a);
            }
            if (as_csv)
                emit(config.out, io::stability_csv_header() + io::stability_csv_row(a, b, report));
            else
                emit(config.out, io::stability_report_to_json(report));
            return kExitOk;
        }
    } catch (const ToleranceError& e) {
        std::cerr << "numerical tolerance failure: " << e.what()
                  << " (achieved error " << e.error << ")\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
