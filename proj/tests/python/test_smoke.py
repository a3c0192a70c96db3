import math

import pytest

import rindler_dirac as rd


def test_closed_form_levels():
    level = rd.energy(1, -1, 0.01)
    assert level["eps_plus"] == pytest.approx(0.1, rel=1e-15)
    assert level["eps_minus"] == pytest.approx(-0.1, rel=1e-15)
    assert rd.energy(0, -1, 0.37, 4.2)["eps_plus"] == 0.0
    assert rd.energy(0, 1, 0.02)["eps_plus"] == pytest.approx(math.sqrt(0.02))


def test_spectrum_table_is_sign_symmetric():
    table = rd.spectrum_table([0.01, 0.02, 0.03], 5, 1)
    energies = sorted(e for _, _, e in table)
    assert energies == sorted(-e for e in energies)
    mags = [abs(e) for _, _, e in table]
    assert mags == sorted(mags)


def test_coordinates_round_trip():
    assert rd.conformal_to_proper(50.0, 0.02) == pytest.approx(85.9140914229523, rel=1e-13)
    for x in (-300.0, -1.0, 0.0, 12.5):
        assert rd.proper_to_conformal(rd.conformal_to_proper(x, 0.01), 0.01) == pytest.approx(x, abs=1e-10)
    with pytest.raises(ValueError):
        rd.proper_to_conformal(-50.0, 0.02)


def test_hermite_and_series():
    assert rd.hermite_coefficients(2) == [-2.0, 0.0, 4.0]
    coeffs, stop = rd.series_coefficients(2.0, -1, 0.0, 1.0, 8)
    assert stop == 1
    assert coeffs[1] == 1.0 and all(c == 0.0 for c in coeffs[2:])
    _, never = rd.series_coefficients(3.0, -1, 1.0, 1.0, 30)
    assert never is None


def test_numeric_spectrum_matches_closed_form():
    report = rd.compare_spectra(0.01, 1.0, -1, 3)
    assert report["passed"]
    assert [row["nodes"] for row in report["rows"]] == [0, 1, 2, 3]
    lam = rd.lowest_eigenvalues(0.02, 1.0, 1, rd.PotentialKind.truncated, 3)
    for n, value in enumerate(lam):
        assert value == pytest.approx(0.02 * (n + 1), rel=1e-4)


def test_spinor_is_normalized():
    sp = rd.spinor(2, 0.01)
    h = sp["x"][1] - sp["x"][0]
    density = [g * g + f * f for g, f in zip(sp["g"], sp["f"])]
    norm = h * (sum(density) - 0.5 * (density[0] + density[-1]))
    assert norm == pytest.approx(1.0, abs=1e-10)
    with pytest.raises(ValueError):
        rd.spinor(0, 0.01, grid=rd.Grid.oscillator_box(0.01, half_width_y=4.0, interior_points=100))


def test_truncation_report_rows():
    rows = rd.truncation_report(0.01, 1.0, 1, 3, rd.Grid(-50.0, 50.0, 600))
    assert len(rows) == 3
    for row in rows:
        assert row["gap"] == pytest.approx(abs(row["lambda_exact"] - row["lambda_truncated"]))


def test_cli_exit_codes(tmp_path):
    code, _, err = rd.run_cli(["spectrum", "--a", "0", "--out", str(tmp_path / "bad")])
    assert code == 2 and "--a" in err
    code, _, _ = rd.run_cli(["spectrum", "--a", "0.01", "--s", "1", "--nmax", "2", "--out", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "spectrum_0.01_1.csv").exists()
