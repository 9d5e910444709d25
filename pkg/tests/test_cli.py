import csv
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from covosc.cli import main
from covosc.covariant import boosted_wavefunction
from covosc.errors import DomainError
from covosc.figures import read_csv
from covosc.grid import GridSpec


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_modes(capsys):
    code, out, _ = run(capsys, "modes", "--m", "1", "--a", "5", "--c", "3")
    assert code == 0
    cols, data = read_csv(out)
    row = dict(zip(cols, data[0]))
    assert row["K"] == 4.0 and row["omega"] == 2.0
    assert row["eta"] == pytest.approx(-math.log(2) / 2, abs=1e-15)
    assert row["oracle_delta"] < 1e-12


def test_modes_decoupled_json(capsys):
    code, out, _ = run(capsys, "modes", "--m", "1", "--a", "1", "--c", "0", "--format", "json")
    assert code == 0
    assert json.loads(out)["rows"][0]["eta"] == 0.0


def test_modes_overdamped(capsys):
    code, _, err = run(capsys, "modes", "--m", "1", "--a", "1", "--c", "2")
    assert code == 2
    assert "overdamped coupling" in err
    assert len(err.strip().splitlines()) == 1


def test_domain_error_from_grid(capsys):
    code, _, err = run(capsys, "squeeze", "--grid-n", "1")
    assert code == 2


def test_range_error(capsys):
    code, _, _ = run(capsys, "entangle", "--eta", "30")
    assert code == 2


def test_unwritable_output(capsys, tmp_path):
    code, _, _ = run(capsys, "entangle", "--output", str(tmp_path / "missing" / "x.csv"))
    assert code == 3


def test_squeeze_files(capsys, tmp_path):
    out = tmp_path / "sq.csv"
    code, _, _ = run(capsys, "squeeze", "--eta", "0,1,2", "--output", str(out))
    assert code == 0
    cols, data = read_csv(out.read_text())
    assert cols == ["eta", "z", "t", "density"]
    grid = GridSpec.square(6.0, 201)
    for eta in (0.0, 1.0, 2.0):
        block = data[data[:, 0] == eta]
        assert len(block) == 201 * 201
        assert block[:, 3].sum() * grid.dz * grid.dt == pytest.approx(1.0, abs=1e-4)
    rest = data[data[:, 0] == 0.0]
    assert rest[:, 3].max() == pytest.approx(1 / math.pi, abs=1e-15)
    origin = rest[(rest[:, 1] == 0) & (rest[:, 2] == 0)]
    assert origin[0, 3] == rest[:, 3].max()

    cols, ell = read_csv((tmp_path / "sq.ellipse.csv").read_text())
    row = dict(zip(cols, ell[ell[:, 0] == 2.0][0]))
    assert (row["semi_u"], row["semi_v"]) == pytest.approx((math.e, 1 / math.e), abs=1e-15)
    assert row["area"] == pytest.approx(math.pi)


def test_csv_round_trip(capsys, tmp_path):
    out = tmp_path / "sq.csv"
    main(["squeeze", "--eta", "0,1.5,-3", "--grid-n", "41", "--output", str(out)])
    _, data = read_csv(out.read_text())
    for eta in (0.0, 1.5, -3.0):
        block = data[data[:, 0] == eta]
        again = boosted_wavefunction(eta, block[:, 1], block[:, 2]) ** 2
        np.testing.assert_allclose(again, block[:, 3], rtol=1e-12, atol=0)


@pytest.mark.parametrize("command", ["squeeze", "entangle", "parton", "fourier-check"])
@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_deterministic_output(tmp_path, command, fmt):
    extra = ["--grid-n", "256", "--extent", "8", "--eta", "0,1"] if command == "fourier-check" else []
    if command in ("squeeze", "parton"):
        extra = ["--grid-n", "51"]
    a, b = tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"
    main([command, "--format", fmt, "--output", str(a), *extra])
    main([command, "--format", fmt, "--output", str(b), *extra])
    assert a.read_bytes() == b.read_bytes()
    if fmt == "csv":
        text = a.read_text()
        assert text.startswith("# command=")


def test_entangle(capsys):
    code, out, _ = run(capsys, "entangle", "--eta", "0,1", "--kmax", "60", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    rows = doc["rows"]
    rest = [r for r in rows if r["eta"] == 0.0]
    assert rest[0]["c_k"] == 1.0
    one = [r for r in rows if r["eta"] == 1.0]
    assert one[3]["c_k"] == pytest.approx(0.08751675609931022, abs=1e-15)
    summary = {s["eta"]: s for s in doc["summary"]}
    assert summary[0.0]["entropy"] == 0.0
    total = sum(r["p_k"] for r in one)
    assert abs(1 - total) <= summary[1.0]["truncation_deficit"] + 1e-15


def test_parton(capsys):
    code, out, _ = run(capsys, "parton", "--format", "json")
    assert code == 0
    sigmas = [s["sigma_z"] for s in json.loads(out)["summary"]]
    assert sigmas[0] == pytest.approx(math.sqrt(0.5), abs=1e-10)
    assert sigmas[3] == pytest.approx(math.sqrt(math.cosh(3) / 2), abs=1e-9)
    assert all(b > a for a, b in zip(sigmas, sigmas[1:]))


def test_fourier_check_exit_codes(capsys):
    code, out, _ = run(capsys, "fourier-check")
    assert code == 0
    code, out, _ = run(capsys, "fourier-check", "--eta", "0,1", "--grid-n", "256", "--extent", "8")
    assert code == 0
    code, _, _ = run(capsys, "fourier-check", "--grid-n", "128")
    assert code == 2


def test_validate_clean(capsys):
    code, out, err = run(capsys, "validate")
    assert code == 0, err
    rows = list(csv.reader(ln for ln in out.splitlines() if not ln.startswith("#")))
    assert rows[0] == ["check", "measured", "tolerance", "passed"]
    assert len(rows) > 10 and all(r[3] == "true" for r in rows[1:])


def test_validate_prefactor_fault(capsys):
    code, _, err = run(capsys, "validate", "--inject", "prefactor")
    assert code == 1
    assert "schmidt_projection" in err
    assert "fourier" not in err


def test_validate_fourier_fault(capsys):
    code, _, err = run(capsys, "validate", "--inject", "fourier-sign")
    assert code == 1
    assert "fourier_duality" in err and "schmidt" not in err
    code, _, _ = run(capsys, "validate", "--inject", "fourier-sign", "--eta", "0")
    assert code == 0


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "covosc.cli", "modes", "--m", "1", "--a", "1", "--c", "2"], capture_output=True, text=True)
    assert res.returncode == 2


@pytest.mark.parametrize("args", [(1, 0, 0, 1, 5, 5), (0, 1, 0, 1, 1, 5), (0, 1, 0, 1, 5, 5000)])
def test_grid_guard(args):
    with pytest.raises(DomainError):
        GridSpec(*args)


def test_grid_spacing():
    g = GridSpec.with_spacing(4.0, 0.02)
    assert g.n_z == 401 and g.dz == pytest.approx(0.02)
    assert g.z[200] == 0.0
