#pragma once

#include <span>
#include <string>
#include <vector>

#include "rindler/analysis.hpp"
#include "rindler/output.hpp"

namespace rindler {

inline constexpr const char* kSpectrumColumns[] = {"n",           "s",        "a",        "m",       "eps_plus",
                                                   "eps_minus",   "eps_numeric", "abs_diff", "rel_diff", "nodes"};

/// spectrum_<a>_<s>.csv body: one row per level, closed form beside the numeric oracle.
output::CsvTable spectrum_csv(const SpectrumReport& report, output::Metadata metadata);

/// wf_n<k>.csv body for one level of a dataset: x, xi, y, g, f.
output::CsvTable wavefunction_csv(const WavefunctionDataset& data, std::size_t level_index,
                                  output::Metadata metadata);

output::CsvTable truncation_csv(const TruncationReport& report, output::Metadata metadata);

/// One row per (a, level) of a sweep with the per-level monotonicity flag.
output::CsvTable truncation_sweep_csv(const TruncationSweep& sweep, output::Metadata metadata);

/// x, xi, y, z, V of the chosen kind for one frame and sector.
output::CsvTable potential_csv(const RindlerFrame& frame, Sector sector, PotentialKind kind, const Grid& grid,
                               output::Metadata metadata);

/// Scatter of +-eps against n, one series per acceleration, one panel per sector.
std::string spectrum_svg(std::span<const SpectrumReport> reports, const std::string& comment);

/// g(x) panels in a two-column grid, one panel per level, one curve per frame.
std::string wavefunction_svg(std::span<const WavefunctionDataset> datasets, const std::string& comment);

std::string truncation_svg(std::span<const TruncationReport> reports, const std::string& comment);

std::string potential_svg(std::span<const RindlerFrame> frames, std::span<const Sector> sectors, PotentialKind kind,
                          std::span<const Grid> grids, const std::string& comment);

/// Metadata lines joined for an SVG comment block.
std::string metadata_comment(const output::Metadata& metadata);

}  // namespace rindler
