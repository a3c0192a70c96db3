#include "rindler/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "rindler/analysis.hpp"
#include "rindler/datasets.hpp"
#include "rindler/output.hpp"
#include "rindler/validation.hpp"

namespace rindler::cli {

namespace {

using output::format_compact;
using output::Metadata;
using output::PendingFile;

constexpr const char* kProgram = "rindler_dirac";
constexpr const char* kOutEnv = "RINDLER_DIRAC_OUT";
constexpr const char* kVersion = "1.0.0";

std::string join_numbers(const std::vector<double>& values)
{
    std::string out;
    for (double v : values) out += (out.empty() ? "" : ",") + format_compact(v);
    return out;
}

std::string join_sectors(const std::vector<Sector>& sectors)
{
    std::string out;
    for (Sector s : sectors) out += (out.empty() ? "" : ",") + std::to_string(sign(s));
    return out;
}

std::string format_name(Format f)
{
    switch (f) {
        case Format::csv: return "csv";
        case Format::svg: return "svg";
        case Format::json: return "json";
    }
    return "?";
}

Metadata run_metadata(const RunConfig& cfg)
{
    std::string formats;
    for (Format f : cfg.formats) formats += (formats.empty() ? "" : ",") + format_name(f);
    return {{"generator", std::string(kProgram) + " " + kVersion},
            {"command", cfg.command},
            {"a", join_numbers(cfg.accelerations)},
            {"m", format_compact(cfg.mass) + (cfg.mass_from_default ? " (default)" : "")},
            {"s", join_sectors(cfg.sectors)},
            {"kind", std::string(to_string(cfg.kind))},
            {"nmax", std::to_string(cfg.n_max)},
            {"grid", cfg.grid.str()},
            {"format", formats},
            {"tolerance", format_compact(cfg.tolerance)}};
}

Metadata with(Metadata base, std::initializer_list<std::pair<std::string, std::string>> extra)
{
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
}

std::string grid_text(const Grid& g)
{
    return format_compact(g.x_min()) + ":" + format_compact(g.x_max()) + ":" + std::to_string(g.interior_points()) +
           " (h=" + output::format_number(g.spacing()) + ")";
}

std::vector<RindlerFrame> frames_of(const RunConfig& cfg)
{
    std::vector<RindlerFrame> frames;
    for (double a : cfg.accelerations) frames.emplace_back(a, cfg.mass);
    return frames;
}

double max_acceleration(const RunConfig& cfg)
{
    return *std::max_element(cfg.accelerations.begin(), cfg.accelerations.end());
}

std::vector<Grid> grids_of(const RunConfig& cfg, std::span<const RindlerFrame> frames)
{
    std::vector<Grid> grids;
    for (const auto& f : frames) grids.push_back(cfg.grid.resolve(f, max_acceleration(cfg)));
    return grids;
}

/// Creates the output directory and proves it writable before any solver runs.
void prepare_output_dir(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) throw std::invalid_argument("cannot create output directory " + dir.string());
    const auto probe = dir / ".rindler_dirac_probe";
    {
        std::ofstream os(probe);
        if (!os) throw std::invalid_argument("output directory " + dir.string() + " is not writable");
    }
    std::filesystem::remove(probe, ec);
}

// --- commands -------------------------------------------------------------

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.kind != PotentialKind::harmonic_truncation)
        throw std::invalid_argument("spectrum compares with the closed form of the truncated kind; use compare for --kind exact");
    if (cfg.n_max > 6) throw std::invalid_argument("spectrum supports --nmax up to 6");
    prepare_output_dir(cfg.out_dir);

    const auto frames = frames_of(cfg);
    const auto grids = grids_of(cfg, frames);
    const auto reports = compare_spectra_sweep(frames, cfg.sectors, cfg.n_max, grids, cfg.tolerance);

    std::vector<PendingFile> files;
    const auto base = run_metadata(cfg);
    nlohmann::json doc = nlohmann::json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        const std::string a = format_compact(r.frame.acceleration());
        const std::string s = std::to_string(sign(r.sector));
        const auto meta = with(base, {{"file_a", a}, {"file_s", s}, {"grid_resolved", grid_text(r.grid)}});
        if (cfg.wants(Format::csv))
            files.push_back({cfg.out_dir / ("spectrum_" + a + "_" + s + ".csv"), spectrum_csv(r, meta).str()});
        if (cfg.wants(Format::json)) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : r.rows)
                rows.push_back({{"n", row.n},
                                {"eps_plus", row.eps_analytic},
                                {"eps_minus", -row.eps_analytic},
                                {"eps_numeric", row.eps_numeric},
                                {"abs_diff", row.abs_diff},
                                {"rel_diff", row.rel_diff},
                                {"nodes", row.nodes},
                                {"lambda_grid", row.lambda_grid},
                                {"lambda_extrapolated", row.lambda_extrapolated},
                                {"error_bar", row.error_bar}});
            doc.push_back({{"a", r.frame.acceleration()},
                           {"m", r.frame.mass()},
                           {"s", sign(r.sector)},
                           {"grid", grid_text(r.grid)},
                           {"passed", r.passed},
                           {"failures", r.failures},
                           {"rows", rows}});
        }
    }
    if (cfg.wants(Format::svg))
        files.push_back({cfg.out_dir / "spectrum.svg", spectrum_svg(reports, metadata_comment(base))});
    if (cfg.wants(Format::json)) {
        nlohmann::json meta = nlohmann::json::object();
        for (const auto& [k, v] : base) meta[k] = v;
        files.push_back({cfg.out_dir / "spectrum.json", nlohmann::json{{"metadata", meta}, {"reports", doc}}.dump(2) + "\n"});
    }
    output::write_all(files);

    int status = success;
    for (const auto& r : reports) {
        out << "a=" << format_compact(r.frame.acceleration()) << " s=" << sign(r.sector)
            << " max rel_diff=" << r.max_rel_diff() << (r.passed ? "" : "  FAILED") << "\n";
        for (const auto& f : r.failures) err << "  " << f << "\n";
        if (!r.passed) status = solver_failure;
    }
    out << "wrote " << files.size() << " file(s) to " << cfg.out_dir.string() << "\n";
    return status;
}

int cmd_wavefunction(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    prepare_output_dir(cfg.out_dir);
    const auto frames = frames_of(cfg);
    const auto grids = grids_of(cfg, frames);
    std::vector<int> levels;
    for (int n = 0; n <= cfg.n_max; ++n) levels.push_back(n);

    std::vector<WavefunctionDataset> data;
    for (std::size_t i = 0; i < frames.size(); ++i) data.push_back(wavefunction_dataset(frames[i], grids[i], levels));

    std::vector<PendingFile> files;
    const auto base = run_metadata(cfg);
    const bool several = frames.size() > 1;
    for (const auto& d : data) {
        const std::string a = format_compact(d.frame.acceleration());
        const auto meta = with(base, {{"file_a", a}, {"grid_resolved", grid_text(d.grid)}});
        for (std::size_t k = 0; k < d.levels.size(); ++k) {
            const std::string name = (several ? "wf_a" + a + "_n" : "wf_n") + std::to_string(d.levels[k].n) + ".csv";
            if (cfg.wants(Format::csv)) files.push_back({cfg.out_dir / name, wavefunction_csv(d, k, meta).str()});
        }
    }
    if (cfg.wants(Format::svg))
        files.push_back({cfg.out_dir / "wavefunction.svg", wavefunction_svg(data, metadata_comment(base))});
    output::write_all(files);

    for (const auto& d : data)
        for (const auto& level : d.levels)
            out << "a=" << format_compact(d.frame.acceleration()) << " n=" << level.n << " eps=" << level.energy
                << " norm=" << output::format_number(level.norm) << " nodes=" << level.nodes << "\n";
    out << "wrote " << files.size() << " file(s) to " << cfg.out_dir.string() << "\n";
    return success;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    prepare_output_dir(cfg.out_dir);
    const auto frames = frames_of(cfg);
    const auto grids = grids_of(cfg, frames);
    const auto k = static_cast<std::size_t>(cfg.n_max + 1);

    std::vector<std::future<TruncationReport>> jobs;
    for (std::size_t i = 0; i < frames.size(); ++i)
        for (Sector s : cfg.sectors)
            jobs.push_back(std::async(std::launch::async,
                                      [&, i, s] { return truncation_error_report(frames[i], s, grids[i], k); }));
    std::vector<TruncationReport> reports;
    for (auto& j : jobs) reports.push_back(j.get());

    std::vector<PendingFile> files;
    const auto base = run_metadata(cfg);
    for (const auto& r : reports) {
        const std::string a = format_compact(r.frame.acceleration());
        const std::string s = std::to_string(sign(r.sector));
        const auto meta = with(base, {{"file_a", a}, {"file_s", s}, {"grid_resolved", grid_text(r.grid)}});
        if (cfg.wants(Format::csv))
            files.push_back({cfg.out_dir / ("truncation_" + a + "_" + s + ".csv"), truncation_csv(r, meta).str()});
    }

    // A sweep needs one shared grid so that gaps at different a are comparable.
    const bool shared_grid = std::all_of(grids.begin(), grids.end(), [&](const Grid& g) { return g == grids.front(); });
    if (frames.size() > 1 && shared_grid && cfg.wants(Format::csv)) {
        for (Sector s : cfg.sectors) {
            std::vector<TruncationReport> cells;
            for (const auto& r : reports)
                if (r.sector == s) cells.push_back(r);
            const auto sorted = assemble_sweep(std::move(cells), k);
            const std::string tag = std::to_string(sign(s));
            files.push_back({cfg.out_dir / ("truncation_sweep_" + tag + ".csv"),
                             truncation_sweep_csv(sorted, with(base, {{"file_s", tag}})).str()});
            out << "s=" << tag << " gap shrinks with a at every level: " << (sorted.all_monotone() ? "yes" : "no")
                << "\n";
        }
    }
    if (cfg.wants(Format::svg))
        files.push_back({cfg.out_dir / "truncation.svg", truncation_svg(reports, metadata_comment(base))});
    output::write_all(files);

    for (const auto& r : reports) {
        out << "a=" << format_compact(r.frame.acceleration()) << " s=" << sign(r.sector) << ":";
        for (const auto& row : r.rows)
            out << " gap" << row.level << "=" << output::format_number(row.gap) << (row.box_artifact ? "*" : "");
        out << "\n";
    }
    out << "(* box-sensitive exact level)\nwrote " << files.size() << " file(s) to " << cfg.out_dir.string() << "\n";
    return success;
}

int cmd_potential(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    prepare_output_dir(cfg.out_dir);
    const auto frames = frames_of(cfg);
    const auto grids = grids_of(cfg, frames);
    std::vector<PendingFile> files;
    const auto base = run_metadata(cfg);
    for (std::size_t i = 0; i < frames.size(); ++i)
        for (Sector s : cfg.sectors) {
            const std::string a = format_compact(frames[i].acceleration());
            const std::string tag = std::to_string(sign(s));
            const auto meta = with(base, {{"file_a", a}, {"file_s", tag}, {"grid_resolved", grid_text(grids[i])}});
            if (cfg.wants(Format::csv))
                files.push_back({cfg.out_dir / ("potential_" + a + "_" + tag + ".csv"),
                                 potential_csv(frames[i], s, cfg.kind, grids[i], meta).str()});
        }
    if (cfg.wants(Format::svg))
        files.push_back(
            {cfg.out_dir / "potential.svg", potential_svg(frames, cfg.sectors, cfg.kind, grids, metadata_comment(base))});
    output::write_all(files);
    out << "wrote " << files.size() << " file(s) to " << cfg.out_dir.string() << "\n";
    return success;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    ValidationOptions options;
    options.mass = cfg.mass;
    options.accelerations = cfg.accelerations;
    options.spectrum_tolerance = cfg.tolerance;
    options.decay_y = cfg.decay_y;
    const auto results = run_validation(options);
    const auto report = validation_report(results, options);

    if (cfg.json_target && *cfg.json_target == "-") {
        out << report.dump(2) << "\n";
    } else {
        if (cfg.json_target) output::write_file_atomic(*cfg.json_target, report.dump(2) + "\n");
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (r.criterion > 0) out << " (criterion " << r.criterion << ")";
            out << ": " << r.detail << "\n";
        }
    }
    int status = success;
    for (const auto& r : results)
        if (!r.passed) {
            err << "failed check: " << r.name << "\n";
            status = solver_failure;
        }
    return status;
}

// --- parsing --------------------------------------------------------------

/// CLI11 reads "--grid -2000:500:4000" as two options; glue such values on.
std::vector<std::string> attach_dash_values(const std::vector<std::string>& args)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--grid" && i + 1 < args.size() && !args[i + 1].empty() && args[i + 1][0] == '-') {
            out.push_back("--grid=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

struct RawOptions
{
    std::vector<double> a;
    double m = 1.0;
    std::vector<int> s;
    std::string kind = "truncated";
    std::optional<int> nmax;
    std::optional<std::string> grid;
    std::optional<std::string> out;
    std::vector<std::string> format{"csv", "svg"};
    double tolerance = kSpectrumTolerance;
    std::optional<std::string> json;
    double decay_y = 6.0;
};

RunConfig finish_config(const std::string& command, const RawOptions& raw, bool mass_given)
{
    RunConfig cfg;
    cfg.command = command;

    const bool figure_set = command == "spectrum" || command == "potential" || command == "validate";
    cfg.accelerations = raw.a.empty() ? (figure_set ? std::vector<double>{0.01, 0.02, 0.03} : std::vector<double>{0.01})
                                      : raw.a;
    for (double a : cfg.accelerations)
        if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("--a values must be positive (got " + format_compact(a) + ")");
    if (!(raw.m > 0.0) || !std::isfinite(raw.m)) throw std::invalid_argument("--m must be positive");
    cfg.mass = raw.m;
    cfg.mass_from_default = !mass_given;

    const std::vector<int> s = raw.s.empty() ? std::vector<int>{-1, 1} : raw.s;
    for (int v : s) cfg.sectors.push_back(sector_from_int(v));
    cfg.kind = potential_kind_from_string(raw.kind);

    const int default_nmax = command == "spectrum" ? 5 : 3;
    cfg.n_max = raw.nmax.value_or(default_nmax);
    if (cfg.n_max < 0) throw std::invalid_argument("--nmax must be non-negative");

    cfg.grid = GridSpec::parse(raw.grid.value_or(command == "compare" ? "window" : "auto"));

    if (raw.out)
        cfg.out_dir = *raw.out;
    else if (const char* env = std::getenv(kOutEnv); env && *env)
        cfg.out_dir = env;
    else
        cfg.out_dir = ".";

    for (const auto& f : raw.format) {
        if (f == "csv")
            cfg.formats.push_back(Format::csv);
        else if (f == "svg")
            cfg.formats.push_back(Format::svg);
        else if (f == "json")
            cfg.formats.push_back(Format::json);
        else
            throw std::invalid_argument("unknown --format " + f + " (csv, svg, json)");
    }
    if (!(raw.tolerance > 0.0)) throw std::invalid_argument("--tolerance must be positive");
    cfg.tolerance = raw.tolerance;
    if (!(raw.decay_y > 0.0)) throw std::invalid_argument("--decay-y must be positive");
    cfg.decay_y = raw.decay_y;
    cfg.json_target = raw.json;
    if (cfg.json_target && command != "validate") throw std::invalid_argument("--json belongs to validate");
    return cfg;
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text)
{
    GridSpec spec;
    if (text == "auto") return spec;
    if (text == "window") {
        spec.mode = Mode::window;
        return spec;
    }
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos) throw std::invalid_argument("--grid expects auto, window or lo:hi:N");
    try {
        std::size_t used = 0;
        const std::string lo = text.substr(0, first), hi = text.substr(first + 1, second - first - 1),
                          n = text.substr(second + 1);
        spec.x_min = std::stod(lo, &used);
        if (used != lo.size()) throw std::invalid_argument(lo);
        spec.x_max = std::stod(hi, &used);
        if (used != hi.size()) throw std::invalid_argument(hi);
        const long long count = std::stoll(n, &used);
        if (used != n.size() || count < 3) throw std::invalid_argument(n);
        spec.interior_points = static_cast<std::size_t>(count);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed --grid " + text + " (lo:hi:N with lo < hi and N >= 3)");
    }
    if (!(spec.x_min < spec.x_max)) throw std::invalid_argument("--grid needs lo < hi");
    spec.mode = Mode::explicit_box;
    return spec;
}

std::string GridSpec::str() const
{
    switch (mode) {
        case Mode::automatic: return "auto";
        case Mode::window: return "window";
        case Mode::explicit_box:
            return format_compact(x_min) + ":" + format_compact(x_max) + ":" + std::to_string(interior_points);
    }
    return "?";
}

Grid GridSpec::resolve(const RindlerFrame& frame, double a_max) const
{
    switch (mode) {
        case Mode::automatic: return Grid::oscillator_box(frame);
        case Mode::window: return expansion_window(a_max);
        case Mode::explicit_box: return Grid(x_min, x_max, interior_points);
    }
    throw std::logic_error("unknown grid mode");
}

bool RunConfig::wants(Format f) const
{
    return std::find(formats.begin(), formats.end(), f) != formats.end();
}

namespace {

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dirac particle in a uniformly accelerated frame: spectra, spinors and checks", kProgram};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file; command-line flags take precedence");

    RawOptions raw;
    app.add_option("--a", raw.a, "accelerations, comma separated")->delimiter(',');
    auto* m_opt = app.add_option("--m", raw.m, "mass (default 1)");
    app.add_option("--s", raw.s, "sectors, comma separated subset of -1,1")->delimiter(',');
    app.add_option("--kind", raw.kind, "potential kind: truncated or exact");
    app.add_option("--nmax", raw.nmax, "highest level n");
    app.add_option("--grid", raw.grid, "auto, window or lo:hi:N");
    app.add_option("--out", raw.out, std::string("output directory (default $") + kOutEnv + " or .)");
    app.add_option("--format", raw.format, "csv, svg, json (comma separated)")->delimiter(',');
    app.add_option("--tolerance", raw.tolerance, "rel_diff tolerance for numeric spectra");
    app.add_option("--json", raw.json, "validate: write the JSON report here ('-' for standard output)");
    app.add_option("--decay-y", raw.decay_y, "validate: |y| beyond which components must be negligible");

    const char* commands[][2] = {{"spectrum", "closed-form levels beside the finite-difference oracle"},
                                 {"wavefunction", "analytic spinor components on a grid"},
                                 {"compare", "exact against truncated potential in a box"},
                                 {"potential", "effective potential samples"},
                                 {"validate", "run every acceptance check and report"}};
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << kProgram << ": " << e.what() << "\n";
        return usage_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    RunConfig cfg;
    try {
        cfg = finish_config(command, raw, m_opt->count() > 0);
    } catch (const std::exception& e) {
        err << kProgram << ": " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (command == "spectrum") return cmd_spectrum(cfg, out, err);
        if (command == "wavefunction") return cmd_wavefunction(cfg, out, err);
        if (command == "compare") return cmd_compare(cfg, out, err);
        if (command == "potential") return cmd_potential(cfg, out, err);
        return cmd_validate(cfg, out, err);
    } catch (const std::invalid_argument& e) {
        err << kProgram << ": " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << kProgram << ": " << e.what() << "\n";
        return solver_failure;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    const auto fixed = attach_dash_values(args);
    std::vector<const char*> argv;
    for (const auto& a : fixed) argv.push_back(a.c_str());
    return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace rindler::cli
