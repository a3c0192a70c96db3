#include <clocale>
#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "rindler/datasets.hpp"
#include "rindler/output.hpp"
#include "rindler/svg.hpp"

using namespace rindler;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p)
{
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

fs::path scratch_dir(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / ("rindler_output_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("number formatting")
{
    using output::format_number;
    CHECK(format_number(0.1) == "0.100000000000");
    CHECK(format_number(-0.1) == "-0.100000000000");
    CHECK(format_number(0.0) == "0.00000000000");
    CHECK(format_number(-0.0) == "0.00000000000");
    CHECK(format_number(1.0) == "1.00000000000");
    CHECK(format_number(0.141421356237309) == "0.141421356237");
    CHECK(format_number(1.5e-9) == "1.50000000000e-09");
    CHECK(format_number(-283.0) == "-283.000000000");

    CHECK(output::format_compact(0.01) == "0.01");
    CHECK(output::format_compact(-1.0) == "-1");
    CHECK(output::format_compact(-0.0) == "0");
    CHECK(output::format_compact(4000.0) == "4000");
}

TEST_CASE("formatting ignores the global locale")
{
    const std::locale before;
    try {
        std::locale::global(std::locale("de_DE.UTF-8"));
    } catch (const std::runtime_error&) {
        // locale not installed; the classic-locale path is still exercised below
    }
    std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
    CHECK(output::format_number(1234.5) == "1234.50000000");
    std::locale::global(before);
    std::setlocale(LC_NUMERIC, "C");
}

TEST_CASE("CSV table")
{
    output::CsvTable t({{"generator", "test"}, {"a", "0.01"}}, {"n", "label"});
    t.add_row({"0", "plain"});
    t.add_row({"1", "with, comma"});
    t.add_row({"2", "say \"hi\""});
    CHECK(t.row_count() == 3);
    CHECK(t.str() ==
          "# generator: test\n# a: 0.01\nn,label\n0,plain\n1,\"with, comma\"\n2,\"say \"\"hi\"\"\"\n");
    CHECK_THROWS_AS(t.add_row({"only one"}), std::invalid_argument);
    CHECK(output::csv_escape("a\nb") == "\"a\nb\"");
}

TEST_CASE("atomic writes")
{
    const auto dir = scratch_dir("atomic");
    output::write_file_atomic(dir / "x.txt", "hello");
    CHECK(slurp(dir / "x.txt") == "hello");
    CHECK_FALSE(fs::exists(dir / "x.txt.tmp"));
    output::write_all({{dir / "a.txt", "1"}, {dir / "b.txt", "2"}});
    CHECK(slurp(dir / "b.txt") == "2");
    CHECK_THROWS_AS(output::write_file_atomic(dir / "missing" / "x.txt", "nope"), std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("SVG rendering")
{
    svg::Figure fig;
    fig.title = "levels <a & b>";
    fig.comment = "a: 0.01 -- m: 1";
    fig.columns = 2;
    svg::Panel p{"panel", "n", "eps", {}};
    p.series.push_back({"a = 0.01", {0, 1, 2}, {0.0, 0.1, 0.14}, svg::Style::markers});
    p.series.push_back({"curve", {0, 1, 2}, {0.0, -0.1, -0.14}, svg::Style::line});
    fig.panels = {p, p, p};

    const auto text = svg::render(fig);
    CHECK(text == svg::render(fig));
    CHECK(text.rfind("<?xml", 0) == 0);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("version=\"1.1\"") != std::string::npos);
    CHECK(text.find("levels &lt;a &amp; b&gt;") != std::string::npos);
    CHECK(text.find("<polyline") != std::string::npos);
    CHECK(text.find("<circle") != std::string::npos);
    // the comment must not contain a double hyphen
    const auto open = text.find("<!--");
    const auto close = text.find("-->", open);
    REQUIRE(open != std::string::npos);
    CHECK(text.substr(open + 4, close - open - 4).find("--") == std::string::npos);
    CHECK(text.substr(text.size() - 7) == "</svg>\n");

    CHECK(svg::xml_escape("\"'<>&") == "&quot;&apos;&lt;&gt;&amp;");
}

TEST_CASE("tick placement")
{
    const auto t = svg::nice_ticks(0.0, 1.0);
    REQUIRE_FALSE(t.empty());
    CHECK(t.front() >= 0.0);
    CHECK(t.back() <= 1.0 + 1e-12);
    CHECK(t.size() >= 3);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] > t[i - 1]);
    const auto flat = svg::nice_ticks(2.0, 2.0);
    CHECK_FALSE(flat.empty());
}

TEST_CASE("spectrum CSV content and determinism")
{
    const RindlerFrame f(0.01, 1.0);
    const auto report = compare_spectra(f, Sector::lower, 5, Grid::oscillator_box(f));
    const auto csv = spectrum_csv(report, {{"generator", "test"}}).str();
    CHECK(csv == spectrum_csv(report, {{"generator", "test"}}).str());
    CHECK(csv.find("n,s,a,m,eps_plus,eps_minus,eps_numeric,abs_diff,rel_diff,nodes\n") != std::string::npos);
    CHECK(csv.find("\n1,-1,0.0100000000000,1.00000000000,0.100000000000,-0.100000000000,") != std::string::npos);
    CHECK(csv.find("\n0,-1,0.0100000000000,1.00000000000,0.00000000000,0.00000000000,") != std::string::npos);
    CHECK(csv.find("# status: pass\n") != std::string::npos);
    CHECK(csv.find("# solver: ") != std::string::npos);
}

TEST_CASE("wavefunction and potential CSVs")
{
    const RindlerFrame f(0.01, 1.0);
    const Grid grid = Grid::oscillator_box(f, 10.0, 400);
    const std::vector<int> levels{0, 1};
    const auto data = wavefunction_dataset(f, grid, levels);
    const auto csv = wavefunction_csv(data, 1, {}).str();
    CHECK(csv.find("# level: 1\n") != std::string::npos);
    CHECK(csv.find("# energy: 0.100000000000\n") != std::string::npos);
    CHECK(csv.find("\nx,xi,y,g,f\n") != std::string::npos);
    CHECK(csv.find("# decay_y: ") != std::string::npos);
    CHECK_THROWS_AS(wavefunction_csv(data, 2, {}), std::out_of_range);

    const auto pot = potential_csv(f, Sector::upper, PotentialKind::harmonic_truncation, Grid(-1.0, 1.0, 3), {});
    CHECK(pot.row_count() == 5);
    CHECK(pot.str().find("\n0.00000000000,0.00000000000,") != std::string::npos);
    CHECK(pot.str().find(",1.00000000000,1.00500000000\n") != std::string::npos);
}

TEST_CASE("dataset SVGs are deterministic")
{
    const std::vector<RindlerFrame> frames{RindlerFrame(0.01, 1.0), RindlerFrame(0.02, 1.0)};
    std::vector<SpectrumReport> reports;
    for (const auto& fr : frames)
        reports.push_back(compare_spectra(fr, Sector::upper, 2, Grid::oscillator_box(fr, 10.0, 600)));
    const auto a = spectrum_svg(reports, "meta");
    CHECK(a == spectrum_svg(reports, "meta"));
    CHECK(a.find("<!--") != std::string::npos);

    std::vector<WavefunctionDataset> datasets;
    const std::vector<int> levels{0, 1, 2, 3};
    for (const auto& fr : frames) datasets.push_back(wavefunction_dataset(fr, Grid::oscillator_box(fr, 10.0, 600), levels));
    CHECK(wavefunction_svg(datasets, "m") == wavefunction_svg(datasets, "m"));

    const output::Metadata md{{"a", "0.01"}, {"m", "1"}};
    CHECK(metadata_comment(md) == "a: 0.01\nm: 1");
}
