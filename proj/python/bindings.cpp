#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "rindler/analysis.hpp"
#include "rindler/cli.hpp"

namespace py = pybind11;
using namespace rindler;

namespace {

py::dict level_dict(const AnalyticLevel& l)
{
    py::dict d;
    d["n"] = l.n;
    d["s"] = sign(l.sector);
    d["a"] = l.acceleration;
    d["m"] = l.mass;
    d["eps_plus"] = l.eps_plus();
    d["eps_minus"] = l.eps_minus();
    return d;
}

Grid grid_or_default(const std::optional<Grid>& grid, const RindlerFrame& frame)
{
    return grid ? *grid : Grid::oscillator_box(frame);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Dirac equation in Rindler spacetime";
    m.attr("__version__") = "1.0.0";

    py::enum_<Sector>(m, "Sector").value("upper", Sector::upper).value("lower", Sector::lower);
    py::enum_<PotentialKind>(m, "PotentialKind")
        .value("exact", PotentialKind::exact)
        .value("truncated", PotentialKind::harmonic_truncation);

    py::class_<Grid>(m, "Grid")
        .def(py::init<double, double, std::size_t>(), py::arg("x_min"), py::arg("x_max"), py::arg("interior_points"))
        .def_property_readonly("x_min", &Grid::x_min)
        .def_property_readonly("x_max", &Grid::x_max)
        .def_property_readonly("interior_points", &Grid::interior_points)
        .def_property_readonly("spacing", &Grid::spacing)
        .def("nodes", &Grid::nodes)
        .def_static(
            "oscillator_box",
            [](double a, double m, double half_width_y, std::size_t n) {
                return Grid::oscillator_box(RindlerFrame(a, m), half_width_y, n);
            },
            py::arg("a"), py::arg("m") = 1.0, py::arg("half_width_y") = 10.0, py::arg("interior_points") = 4000)
        .def("__repr__", [](const Grid& g) {
            std::ostringstream os;
            os << "Grid(" << g.x_min() << ", " << g.x_max() << ", " << g.interior_points() << ")";
            return os.str();
        });

    m.def(
        "proper_to_conformal", [](double xi, double a) { return proper_to_conformal(xi, RindlerFrame(a, 1.0)); },
        py::arg("xi"), py::arg("a"));
    m.def(
        "conformal_to_proper", [](double x, double a) { return conformal_to_proper(x, RindlerFrame(a, 1.0)); },
        py::arg("x"), py::arg("a"));

    m.def(
        "energy", [](int n, int s, double a, double mass) { return level_dict(energy(n, sector_from_int(s), RindlerFrame(a, mass))); },
        py::arg("n"), py::arg("s"), py::arg("a"), py::arg("m") = 1.0);

    m.def(
        "spectrum_table",
        [](const std::vector<double>& accelerations, int n_max, int s, double mass) {
            std::vector<RindlerFrame> frames;
            for (double a : accelerations) frames.emplace_back(a, mass);
            py::list out;
            for (const auto& l : spectrum_table(frames, n_max, sector_from_int(s)))
                out.append(py::make_tuple(l.acceleration, l.n, l.energy));
            return out;
        },
        py::arg("accelerations"), py::arg("n_max"), py::arg("s"), py::arg("m") = 1.0,
        "(a, n, eps) tuples sorted by |eps|");

    m.def(
        "hermite_coefficients", [](int n) { return hermite(n).coefficients(); }, py::arg("n"));
    m.def(
        "series_coefficients",
        [](double eta, int s, double a0, double a1, int j_max) {
            const auto sol = series_coefficients(eta, sector_from_int(s), a0, a1, j_max);
            return py::make_tuple(sol.coefficients, sol.termination_index);
        },
        py::arg("eta"), py::arg("s"), py::arg("a0"), py::arg("a1"), py::arg("j_max"));

    m.def(
        "effective_potential",
        [](double a, double mass, int s, PotentialKind kind, const std::vector<double>& x) {
            const auto v = effective_potential(build_mass_function(RindlerFrame(a, mass), kind), s);
            std::vector<double> out;
            out.reserve(x.size());
            for (double xi : x) out.push_back(v(xi));
            return out;
        },
        py::arg("a"), py::arg("m"), py::arg("s"), py::arg("kind"), py::arg("x"));

    m.def(
        "spinor",
        [](int n, double a, double mass, std::optional<Grid> grid, int energy_sign) {
            const RindlerFrame frame(a, mass);
            const auto sp = spinor(n, frame, grid_or_default(grid, frame), energy_sign);
            py::dict d;
            d["n"] = sp.n;
            d["energy"] = sp.energy;
            d["x"] = sp.x;
            d["y"] = sp.y;
            d["g"] = sp.lower;
            d["f"] = sp.upper;
            d["B1"] = sp.upper_norm_constant;
            d["B2"] = sp.lower_norm_constant;
            return d;
        },
        py::arg("n"), py::arg("a"), py::arg("m") = 1.0, py::arg("grid") = py::none(), py::arg("energy_sign") = 1);

    m.def(
        "lowest_eigenvalues",
        [](double a, double mass, int s, PotentialKind kind, std::size_t k, std::optional<Grid> grid) {
            const RindlerFrame frame(a, mass);
            const auto v = effective_potential(build_mass_function(frame, kind), s);
            std::vector<double> out;
            for (const auto& sol : eigen_lowest_k(discretize(v, grid_or_default(grid, frame)), k))
                out.push_back(sol.eigenvalue);
            return out;
        },
        py::arg("a"), py::arg("m"), py::arg("s"), py::arg("kind"), py::arg("k"), py::arg("grid") = py::none(),
        "lowest k eigenvalues eps^2 of the discretized second-order problem");

    m.def(
        "compare_spectra",
        [](double a, double mass, int s, int n_max, std::optional<Grid> grid, double tolerance) {
            const RindlerFrame frame(a, mass);
            const auto r = compare_spectra(frame, sector_from_int(s), n_max, grid_or_default(grid, frame), tolerance);
            py::list rows;
            for (const auto& row : r.rows) {
                py::dict d;
                d["n"] = row.n;
                d["eps_analytic"] = row.eps_analytic;
                d["eps_numeric"] = row.eps_numeric;
                d["abs_diff"] = row.abs_diff;
                d["rel_diff"] = row.rel_diff;
                d["nodes"] = row.nodes;
                rows.append(d);
            }
            py::dict out;
            out["passed"] = r.passed;
            out["failures"] = r.failures;
            out["rows"] = rows;
            return out;
        },
        py::arg("a"), py::arg("m"), py::arg("s"), py::arg("n_max"), py::arg("grid") = py::none(),
        py::arg("tolerance") = kSpectrumTolerance);

    m.def(
        "truncation_report",
        [](double a, double mass, int s, std::size_t k, std::optional<Grid> grid) {
            const RindlerFrame frame(a, mass);
            const auto r = truncation_error_report(frame, sector_from_int(s), grid ? *grid : expansion_window(a), k);
            py::list rows;
            for (const auto& row : r.rows) {
                py::dict d;
                d["level"] = row.level;
                d["lambda_truncated"] = row.lambda_truncated;
                d["lambda_exact"] = row.lambda_exact;
                d["gap"] = row.gap;
                d["relative_drift"] = row.relative_drift;
                d["box_artifact"] = row.box_artifact;
                rows.append(d);
            }
            return rows;
        },
        py::arg("a"), py::arg("m"), py::arg("s"), py::arg("k"), py::arg("grid") = py::none());

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "rindler_dirac");
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "runs the command-line front end in-process; returns (exit_code, stdout, stderr)");
}
