#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rindler/geometry.hpp"
#include "rindler/grid.hpp"
#include "rindler/reduction.hpp"

namespace rindler::cli {

enum ExitCode : int { success = 0, usage_error = 2, solver_failure = 3 };

/// `auto` (oscillator box per frame), `window` (expansion window of the largest
/// a, shared) or an explicit `lo:hi:N`.
struct GridSpec
{
    enum class Mode { automatic, window, explicit_box };
    Mode mode = Mode::automatic;
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t interior_points = 0;

    /// Throws std::invalid_argument on malformed text.
    static GridSpec parse(const std::string& text);
    std::string str() const;
    Grid resolve(const RindlerFrame& frame, double a_max) const;
};

enum class Format { csv, svg, json };

struct RunConfig
{
    std::string command;
    std::vector<double> accelerations;
    double mass = 1.0;
    bool mass_from_default = true;
    std::vector<Sector> sectors;
    PotentialKind kind = PotentialKind::harmonic_truncation;
    int n_max = 0;
    GridSpec grid;
    std::filesystem::path out_dir;
    std::vector<Format> formats;
    double tolerance = 1e-4;
    double decay_y = 6.0;
    std::optional<std::string> json_target;  // validate only; "-" is standard output

    bool wants(Format f) const;
};

/// Entry point shared by the executable and the tests. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rindler::cli
