#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zeroflip/bounds.hpp"

namespace zeroflip {

/// Deterministic splitmix64 stream; the verification contract is
/// byte-identical output for identical seeds, so the generator is pinned
/// here rather than delegated to the standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive bounds

  private:
    std::uint64_t state_;
};

/// Seed stream decorrelated by check name, so adding or reordering checks
/// never changes another check's draws.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag);

struct GridSpec {
    double re_min = -2.0;
    double re_max = 2.0;
    double im_min = 0.03125;
    double im_max = 2.0;
    int nx = 64;
    int ny = 64;
};

/// Either a named preset or an explicit zero-product recipe.
struct FunctionSpec {
    std::string preset = "sinc";
    std::optional<ZeroProductSpec> spec;
};

PWFunction realize(const FunctionSpec& fn);
ZeroProductSpec preset_spec(const std::string& name);
std::vector<std::string> preset_names();

struct SweepConfig {
    FunctionSpec function;
    GridSpec grid;
    /// Absent = run every check; an explicitly empty list runs none.
    std::optional<std::vector<std::string>> checks;
    std::uint64_t seed = 1;
    int trials = 0;  // 0 = per-check default
    std::map<std::string, double> tolerances;
    std::string out;
    int threads = 1;
};

// ---- randomized draws ------------------------------------------------------

ZeroProductSpec draw_function_spec(Rng& rng, int max_zeros = 2);
PWFunction draw_function(Rng& rng, int max_zeros = 2);
FlipPoint draw_flip_point(Rng& rng, double im_min = 0.15, double im_max = 1.2);
FlipPoint draw_stable_point(Rng& rng, double L);
FlipPoint draw_unstable_point(Rng& rng, double L);
/// (a, b) with Im b > 0 and |a - b| <= |b|/2 (rejection sampled).
std::pair<FlipPoint, FlipPoint> draw_admissible_pair(Rng& rng);

// ---- verification ----------------------------------------------------------

struct CheckOutcome {
    std::string name;
    int trials = 0;
    double worst_margin = 0.0;
    int failures = 0;
    double tolerance = 0.0;
    int errors = 0;  // numerical-tolerance errors (quadrature stalls etc.)
};

struct VerifyReport {
    std::vector<CheckOutcome> checks;
    int total_failures = 0;
    int total_errors = 0;
};

std::vector<std::string> all_check_names();

/// Runs every configured check with seeded draws. A trial fails when its
/// margin drops below -tolerance; quadrature stalls are counted separately
/// as numerical errors. Identical config and seed give identical reports.
VerifyReport verify(const SweepConfig& config);

// ---- sweeps ----------------------------------------------------------------

struct SweepRow {
    double re_a, im_a, beta;
    Region region;
    double distance_sq;
    Complex inner;
    double coarse_rhs, sharp_rhs, margin_coarse, margin_sharp;
    bool extreme;  // beta above the numerically-extreme threshold
};

/// beta above this is flagged as numerically extreme in sweep output.
constexpr double kExtremeBeta = 1e6;

/// One row per grid point in row-major grid order (im outer, re inner),
/// independent of the number of worker threads.
std::vector<SweepRow> sweep(const SweepConfig& config);

struct RegionRow {
    double re_a, im_a, beta;
    Region region;
};

/// The dichotomy map over [-2/L, 2/L] x (0, 2/L].
std::vector<RegionRow> region_map(double L, int nx, int ny);

struct ConvergeRow {
    int k;
    double re_a, im_a, beta_a;
    double distance_sq;
    double rhs;
    double ratio;  // distance_sq / rhs
    double margin;
};

/// Distance and pair bound along the ray a_k = b + 2^{-k} (a_start - b),
/// k = 0..steps. b should be a planted zero of f for the genuine-solution
/// comparison; a_start must satisfy the pair admissibility.
std::vector<ConvergeRow> convergence_study(const PWFunction& f, const FlipPoint& b,
                                           Complex a_start, int steps);

/// Index-parallel helper used by sweep and verify; results must be written
/// to caller-owned slots so output order never depends on scheduling.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace zeroflip
