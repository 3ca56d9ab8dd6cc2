#include "zeroflip/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "zeroflip/quadrature.hpp"

namespace zeroflip {

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
    const double u = double(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int Rng::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % std::uint64_t(hi - lo + 1));
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a offset
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    Rng mix(seed ^ h);
    return mix.next();
}

// ---- presets ----------------------------------------------------------------

ZeroProductSpec preset_spec(const std::string& name) {
    ZeroProductSpec s;
    if (name == "sinc") {
        s.m = 1;
        s.c = 1.0;
    } else if (name == "triangle") {
        s.m = 2;
        s.c = 0.5;
    } else if (name == "zero3") {
        s.zeros = {Complex(0.7, 0.6), Complex(-0.5, 0.9), Complex(0.2, -0.8)};
        s.m = 5;
        s.c = 0.2;
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
    return s;
}

std::vector<std::string> preset_names() { return {"sinc", "triangle", "zero3"}; }

PWFunction realize(const FunctionSpec& fn) {
    if (fn.spec) return PWFunction::build(*fn.spec);
    return PWFunction::build(preset_spec(fn.preset));
}

// ---- draws ------------------------------------------------------------------

ZeroProductSpec draw_function_spec(Rng& rng, int max_zeros) {
    ZeroProductSpec s;
    const int nz = rng.uniform_int(0, max_zeros);
    for (int i = 0; i < nz; ++i) {
        const double sign = rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
        s.zeros.emplace_back(rng.uniform(-1.5, 1.5), sign * rng.uniform(0.3, 1.5));
    }
    s.m = (nz == 0 ? 2 : nz + 2) + rng.uniform_int(0, 1);
    const double L = rng.uniform(0.6, 1.6);
    s.c = L / s.m;
    return s;
}

PWFunction draw_function(Rng& rng, int max_zeros) {
    return PWFunction::build(draw_function_spec(rng, max_zeros));
}

FlipPoint draw_flip_point(Rng& rng, double im_min, double im_max) {
    return FlipPoint(rng.uniform(-1.5, 1.5), rng.uniform(im_min, im_max));
}

FlipPoint draw_stable_point(Rng& rng, double L) {
    for (int tries = 0; tries < 200; ++tries) {
        FlipPoint p = draw_flip_point(rng, 0.02, 1.2);
        if (p.beta <= 2.0 * L * 0.999) return p;
    }
    return FlipPoint(std::max(2.0, 2.0 / L), 0.1);
}

FlipPoint draw_unstable_point(Rng& rng, double L) {
    const double center = 1.0 / (2.0 * L), radius = 1.0 / (2.0 * L);
    const double u = rng.uniform(0.15, 0.85);
    const double theta = rng.uniform(0.0, 2.0 * M_PI);
    return FlipPoint(u * radius * std::cos(theta), center + u * radius * std::sin(theta));
}

std::pair<FlipPoint, FlipPoint> draw_admissible_pair(Rng& rng) {
    const FlipPoint b = draw_flip_point(rng, 0.3, 1.1);
    const double bmag = std::abs(b.value());
    for (int tries = 0; tries < 400; ++tries) {
        const double r = rng.uniform(0.0, 0.45) * bmag;
        const double theta = rng.uniform(0.0, 2.0 * M_PI);
        const Complex a = b.value() + r * std::exp(Complex(0.0, theta));
        // The pair constants are derived through Im b/2 <= Im a <= 3 Im b/2,
        // which |a - b| <= |b|/2 does not enforce on its own once Re b != 0.
        if (a.imag() >= std::max(0.05, 0.55 * b.im) && a.imag() <= 1.45 * b.im)
            return {FlipPoint(a), b};
    }
    return {FlipPoint(b.value() + bmag / 4.0), b};
}

// ---- verification checks ----------------------------------------------------

namespace {

struct CheckSpec {
    std::string name;
    int default_trials;
    double default_tol;
    std::function<double(Rng&, int)> run;  // one (seeded rng, trial index) -> margin
};

PWFunction draw_with_zero(Rng& rng, Complex zero) {
    ZeroProductSpec s;
    s.zeros = {zero};
    if (rng.uniform(0.0, 1.0) < 0.5)
        s.zeros.emplace_back(rng.uniform(-1.2, 1.2), rng.uniform(-1.0, 1.0));
    s.m = static_cast<int>(s.zeros.size()) + 2 + rng.uniform_int(0, 1);
    s.c = rng.uniform(0.7, 1.4) / s.m;
    return PWFunction::build(s);
}

double check_unimodular(Rng& rng) {
    const PWFunction f = draw_function(rng);
    const FlipPoint a = draw_flip_point(rng);
    const double n = f.l2_norm();
    const double spectral = flip_spectrum(f, a).norm();
    const double dev_spec = std::abs(spectral - n) / n;
    const double time_norm = std::sqrt(std::max(0.0, time_oracle_inner(f, a, a, 1e-8).real()));
    const double dev_time = std::abs(time_norm - n) / n;
    return std::min(1.0 - dev_spec / 1e-8, 1.0 - dev_time / 1e-6);
}

double check_parseval(Rng& rng) {
    const PWFunction f = draw_function(rng);
    const FlipPoint a = draw_flip_point(rng);
    const FlipPoint b = draw_flip_point(rng);
    const double nsq = f.l2_norm() * f.l2_norm();
    const PairInnerResult pi = pair_inner(f, a, b);
    const Complex av = a.value(), bv = b.value();
    const Complex corrected = pi.total * (av * std::conj(bv)) / (std::conj(av) * bv);
    const Complex oracle = time_oracle_inner(f, a, b, 1e-8);
    const double rel = std::abs(corrected - oracle) / std::max(nsq, std::abs(oracle));
    return 1.0 - rel / 1e-6;
}

double check_bandlimit(Rng& rng) {
    const FlipPoint a(rng.uniform(-1.5, 1.5), rng.uniform(0.3, 1.2));
    const PWFunction f = draw_with_zero(rng, a.value());
    const ExpPolySpectrum g = flip_spectrum(f, a);
    const double n = f.l2_norm();
    const double L = f.bandlimit();
    // A genuine zero keeps the flip compactly supported: the wide-band tail
    // must vanish and samples outside the band window must be ~0.
    double sup = std::abs(g.tail() ? g.tail()->amp : Complex(0.0));
    const double eps = 1e-6;
    const double band_lo = a.beta - L - eps, band_hi = a.beta + L + eps;
    for (int i = 0; i < 256; ++i) {
        const double below = band_lo - 2.0 * double(i) / 255.0;
        const double above = band_hi + 2.0 * double(i) / 255.0;
        sup = std::max({sup, std::abs(g(below)), std::abs(g(above))});
    }
    return 1.0 - sup / (1e-8 * n);
}

double check_self_flip(Rng& rng, bool unstable) {
    const PWFunction f = draw_function(rng);
    const FlipPoint a =
        unstable ? draw_unstable_point(rng, f.bandlimit()) : draw_stable_point(rng, f.bandlimit());
    const SelfFlipBounds b = self_flip_bound(f, a);
    const double nsq = f.l2_norm() * f.l2_norm();
    const double tighten = (b.coarse.rhs - b.sharp.rhs) / std::max(b.coarse.rhs, 1e-300);
    return std::min({b.coarse.margin / nsq, b.sharp.margin / nsq, tighten});
}

double check_strip_growth(Rng& rng, int trial) {
    const PWFunction f = draw_function(rng, 1);
    const FlipPoint a = draw_flip_point(rng, 0.3, 1.2);
    const double frac = 0.25 * (1 + trial % 3);
    const BoundReport r = strip_growth_bound(f, a, frac * a.im);
    return r.margin / r.rhs;
}

double check_kernel_diff(Rng& rng) {
    const PWFunction f = draw_function(rng);
    auto [a, b] = draw_admissible_pair(rng);
    const BoundReport r = kernel_diff_bound(f, a, b);
    const KernelDiffConstant c = kernel_diff_constant(a, b);
    const double scale = std::max(r.rhs, f.l2_norm());
    const double tighten = (c.coarse - c.exact) / std::max(c.coarse, 1e-300);
    return std::min(r.margin / scale, tighten);
}

double check_tail_kernel(Rng& rng) {
    const PWFunction f = draw_function(rng);
    const FlipPoint b = draw_flip_point(rng, 0.3, 1.2);
    const BoundReport r = tail_kernel_bound(f, b);
    return r.margin / r.rhs;
}

double check_pair_flip(Rng& rng) {
    const PWFunction f = draw_function(rng);
    auto [a, b] = draw_admissible_pair(rng);
    const BoundReport r = pair_flip_bound(f, a, b);
    const double nsq = f.l2_norm() * f.l2_norm();
    return r.margin / std::max(r.rhs, nsq);
}

double check_pair_convergence(Rng& rng) {
    const Complex zero(rng.uniform(-1.2, 1.2), rng.uniform(0.4, 1.1));
    const PWFunction f = draw_with_zero(rng, zero);
    const FlipPoint b(zero);
    Complex a_start;
    for (int tries = 0;; ++tries) {
        const double r = rng.uniform(0.25, 0.45) * std::abs(zero);
        const double theta = rng.uniform(0.0, 2.0 * M_PI);
        a_start = zero + r * std::exp(Complex(0.0, theta));
        if (a_start.imag() >= 0.05) break;
        if (tries > 200) {
            a_start = zero + std::abs(zero) / 4.0;
            break;
        }
    }
    const auto rows = convergence_study(f, b, a_start, 10);
    const double nsq = f.l2_norm() * f.l2_norm();
    double margin = 1e300;
    for (const auto& row : rows) margin = std::min(margin, row.margin / nsq);
    margin = std::min(margin, (0.01 * rows[1].rhs - rows[10].rhs) / std::max(rows[1].rhs, 1e-300));
    margin = std::min(margin, (rows[1].distance_sq - rows[10].distance_sq) / nsq);
    return margin;
}

std::vector<CheckSpec> make_checks() {
    auto plain = [](double (*fn)(Rng&)) {
        return [fn](Rng& r, int) { return fn(r); };
    };
    std::vector<CheckSpec> out;
    out.push_back({"unimodular", 200, 0.0, plain(check_unimodular)});
    out.push_back({"parseval", 100, 0.0, plain(check_parseval)});
    out.push_back({"bandlimit", 50, 0.0, plain(check_bandlimit)});
    out.push_back({"self_flip", 100, 1e-9,
                   [](Rng& r, int i) { return check_self_flip(r, i % 2 == 1); }});
    out.push_back({"strip_growth", 50, 1e-6, check_strip_growth});
    out.push_back({"kernel_diff", 100, 1e-9, plain(check_kernel_diff)});
    out.push_back({"tail_kernel", 100, 1e-9, plain(check_tail_kernel)});
    out.push_back({"pair_flip", 100, 1e-9, plain(check_pair_flip)});
    out.push_back({"pair_convergence", 3, 1e-9, plain(check_pair_convergence)});
    return out;
}

}  // namespace

std::vector<std::string> all_check_names() {
    std::vector<std::string> names;
    for (const auto& c : make_checks()) names.push_back(c.name);
    return names;
}

VerifyReport verify(const SweepConfig& config) {
    const auto specs = make_checks();
    std::vector<std::string> wanted;
    if (config.checks)
        wanted = *config.checks;
    else
        for (const auto& c : specs) wanted.push_back(c.name);

    VerifyReport report;
    for (const auto& name : wanted) {
        auto it = std::find_if(specs.begin(), specs.end(),
                               [&](const CheckSpec& c) { return c.name == name; });
        if (it == specs.end()) throw std::invalid_argument("unknown check: " + name);

        CheckOutcome outcome;
        outcome.name = name;
        outcome.trials = config.trials > 0 ? config.trials : it->default_trials;
        outcome.tolerance = it->default_tol;
        if (auto t = config.tolerances.find(name); t != config.tolerances.end())
            outcome.tolerance = t->second;

        const std::uint64_t check_seed = derive_seed(config.seed, name);
        std::vector<double> margins(outcome.trials, 0.0);
        std::vector<int> errors(outcome.trials, 0);
        parallel_for(outcome.trials, config.threads, [&](int i) {
            Rng rng(derive_seed(check_seed, std::to_string(i)));
            try {
                margins[i] = it->run(rng, i);
            } catch (const ToleranceError&) {
                errors[i] = 1;
                margins[i] = 0.0;
            }
        });
        outcome.worst_margin = 1e300;
        for (int i = 0; i < outcome.trials; ++i) {
            if (errors[i]) {
                ++outcome.errors;
                continue;
            }
            outcome.worst_margin = std::min(outcome.worst_margin, margins[i]);
            if (margins[i] < -outcome.tolerance) ++outcome.failures;
        }
        if (outcome.worst_margin == 1e300) outcome.worst_margin = 0.0;
        report.total_failures += outcome.failures;
        report.total_errors += outcome.errors;
        report.checks.push_back(std::move(outcome));
    }
    return report;
}

std::vector<SweepRow> sweep(const SweepConfig& config) {
    const GridSpec& g = config.grid;
    if (g.nx < 2 || g.ny < 2) throw std::invalid_argument("sweep: resolution must be >= 2x2");
    if (!(g.im_min > 0.0)) throw std::invalid_argument("sweep: grid must lie in Im a > 0");
    const PWFunction f = realize(config.function);
    const double n = f.l2_norm();
    const double nsq = n * n;

    std::vector<SweepRow> rows(std::size_t(g.nx) * g.ny);
    parallel_for(g.nx * g.ny, config.threads, [&](int idx) {
        const int iy = idx / g.nx, ix = idx % g.nx;
        const double re = g.re_min + (g.re_max - g.re_min) * double(ix) / double(g.nx - 1);
        const double im = g.im_min + (g.im_max - g.im_min) * double(iy) / double(g.ny - 1);
        const FlipPoint a(re, im);
        const SelfFlipBounds b = self_flip_bound(f, a);
        const StabilityReport d = self_distance(f, a);
        SweepRow& row = rows[idx];
        row.re_a = re;
        row.im_a = im;
        row.beta = a.beta;
        row.region = b.region;
        row.distance_sq = d.distance_sq;
        row.inner = d.inner_value;
        row.coarse_rhs = b.coarse.rhs;
        row.sharp_rhs = b.sharp.rhs;
        row.margin_coarse = b.coarse.margin / nsq;
        row.margin_sharp = b.sharp.margin / nsq;
        row.extreme = a.beta > kExtremeBeta;
    });
    return rows;
}

std::vector<RegionRow> region_map(double L, int nx, int ny) {
    if (!(L > 0.0)) throw std::invalid_argument("region_map: L must be > 0");
    if (nx < 2 || ny < 2) throw std::invalid_argument("region_map: resolution must be >= 2x2");
    std::vector<RegionRow> rows;
    rows.reserve(std::size_t(nx) * ny);
    for (int j = 1; j <= ny; ++j) {
        const double im = (2.0 / L) * double(j) / double(ny);
        for (int i = 0; i < nx; ++i) {
            const double re = -2.0 / L + (4.0 / L) * double(i) / double(nx - 1);
            const FlipPoint a(re, im);
            rows.push_back({re, im, a.beta, region_classify(a, L).region});
        }
    }
    return rows;
}

std::vector<ConvergeRow> convergence_study(const PWFunction& f, const FlipPoint& b,
                                           Complex a_start, int steps) {
    if (std::abs(a_start - b.value()) > 0.5 * std::abs(b.value()) * (1.0 + 1e-12))
        throw std::domain_error("convergence_study: a_start violates |a - b| <= |b|/2");
    const double n = f.l2_norm();
    std::vector<ConvergeRow> rows;
    rows.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        const Complex av = b.value() + std::ldexp(1.0, -k) * (a_start - b.value());
        ConvergeRow row;
        row.k = k;
        row.re_a = av.real();
        row.im_a = av.imag();
        if (av == b.value()) {
            row.beta_a = b.beta;
            row.distance_sq = 0.0;
            row.rhs = 0.0;
            row.ratio = 0.0;
            row.margin = 0.0;
        } else {
            const FlipPoint a(av);
            row.beta_a = a.beta;
            row.distance_sq = pair_distance(f, a, b).distance_sq;
            const PairConstants c = pair_constants(a, b, f.bandlimit());
            row.rhs = c.c1 * omega2(f.spectrum(), std::abs(b.beta - a.beta)) * n + c.c2 * n * n;
            row.ratio = row.rhs > 0.0 ? row.distance_sq / row.rhs : 0.0;
            row.margin = row.rhs - row.distance_sq;
        }
        rows.push_back(row);
    }
    return rows;
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([=, &fn] {
            for (int i = t; i < n; i += threads) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace zeroflip
