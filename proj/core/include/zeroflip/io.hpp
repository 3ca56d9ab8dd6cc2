#pragma once

#include <string>
#include <vector>

#include "zeroflip/exp_poly.hpp"
#include "zeroflip/harness.hpp"

namespace zeroflip {
namespace io {

/// Shortest round-trip decimal form; all CSV numbers go through this so
/// reruns are byte-identical.
std::string format_double(double v);

// ---- JSON -------------------------------------------------------------------

/// {"zeros": [[re, im], ...], "m": int, "c": float, "amplitude": [re, im]}.
/// Finite values round-trip bit-exactly; an absent amplitude means
/// "normalize to unit norm" and stays absent.
std::string zero_product_to_json(const ZeroProductSpec& spec);
ZeroProductSpec zero_product_from_json(const std::string& text);

std::string sweep_config_to_json(const SweepConfig& config);
SweepConfig sweep_config_from_json(const std::string& text);

std::string verify_report_to_json(const VerifyReport& report, std::uint64_t seed);

std::string stability_report_to_json(const StabilityReport& report);

std::string piecewise_to_json(const PiecewisePolySpectrum& F);
PiecewisePolySpectrum piecewise_from_json(const std::string& text);

// ---- CSV --------------------------------------------------------------------
// '.' decimal separator, '\n' line endings, mandatory header row.

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string region_csv(const std::vector<RegionRow>& rows);
std::string converge_csv(const std::vector<ConvergeRow>& rows);

std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& r);

std::string stability_csv_header();
std::string stability_csv_row(const FlipPoint& a, const FlipPoint& b, const StabilityReport& r);

/// Uniform sampling of a wide-band spectrum: xi, re, im, piece_index
/// (piece_index -1 = tail region, -2 = outside the support).
std::string exp_poly_samples_csv(const ExpPolySpectrum& F, double lo, double hi, int n);

/// Uniform sampling of a compact spectrum: xi, re, im.
std::string piecewise_samples_csv(const PiecewisePolySpectrum& F, double lo, double hi, int n);

void write_file(const std::string& path, const std::string& content);

}  // namespace io
}  // namespace zeroflip
