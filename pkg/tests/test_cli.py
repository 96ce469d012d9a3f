import json

import pytest

from colouredhopf.cli import (
    DEFAULT_TOLERANCES,
    format_complex,
    main,
    parse_complex,
    run_verification,
)


def test_parse_complex_literals():
    assert parse_complex("2") == 2.0
    assert parse_complex("-1.5") == -1.5
    assert parse_complex("1+2i") == 1 + 2j
    assert parse_complex("1-2i") == 1 - 2j
    assert parse_complex("2i") == 2j
    assert parse_complex("-i") == -1j
    assert parse_complex("0.5+0.25i") == 0.5 + 0.25j


def test_parse_complex_rejects_garbage():
    import argparse

    with pytest.raises(argparse.ArgumentTypeError):
        parse_complex("two")


def test_format_complex_roundtrip():
    for z in (2.0 + 0j, -1.5 + 0j, 1 + 2j, 1 - 2j, 0.25j):
        assert parse_complex(format_complex(z)) == z


def test_verify_report_schema_and_exit(capsys):
    rc = main(["verify", "--seed", "7", "--draws", "3"])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report) == {"suite", "seed", "draws", "checks", "pass", "duration_ms"}
    assert report["seed"] == 7 and report["draws"] == 3 and report["pass"] is True
    assert {c["name"] for c in report["checks"]} == set(DEFAULT_TOLERANCES)
    for check in report["checks"]:
        assert set(check) == {"name", "paper_ref", "max_residual", "tolerance", "pass"}
        assert check["pass"] is True


def test_verify_zero_draws_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--draws", "0"])
    assert exc.value.code == 2


def test_verify_unknown_tolerance_is_usage_error(capsys):
    rc = main(["verify", "--draws", "2", "--tolerance", "nonsense=1"])
    assert rc == 2


def test_verify_sub_noise_tolerance_fails(capsys):
    # double-precision noise exceeds 1e-15, demonstrating tolerance plumbing
    rc = main(["verify", "--seed", "0", "--draws", "3", "--tolerance", "ybe=1e-15"])
    assert rc == 1
    report = json.loads(capsys.readouterr().out)
    ybe = next(c for c in report["checks"] if c["name"] == "ybe")
    assert not ybe["pass"] and ybe["tolerance"] == 1e-15


def test_verify_writes_output_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = main(["verify", "--seed", "1", "--draws", "2", "--output", str(out)])
    assert rc == 0
    report = json.loads(out.read_text())
    assert report["pass"] is True
    assert capsys.readouterr().out == ""


def test_run_verification_tolerance_override_only_affects_named_check():
    report = run_verification(seed=3, draws=2, tolerances={"hexagons": 2.0})
    hexagons = next(c for c in report["checks"] if c["name"] == "hexagons")
    assert hexagons["tolerance"] == 2.0
    others = [c for c in report["checks"] if c["name"] != "hexagons"]
    assert all(c["tolerance"] == DEFAULT_TOLERANCES[c["name"]] for c in others)


def test_rmatrix_reference_values(capsys):
    rc = main(["rmatrix", "--q", "2", "--s", "1", "--lambda", "1", "--mu", "1"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    entries = payload["entries"]
    assert entries[0][0] == [2.0, 0.0]
    assert entries[1][1] == [1.0, 0.0]
    assert entries[1][2] == [1.5, 0.0]
    assert entries[3][3] == [0.5, 0.0]
    assert payload["crossval_residual"] <= 1e-12
    assert "branch" in payload["branch_note"]


def test_rmatrix_singular_q_fails(capsys):
    rc = main(["rmatrix", "--q", "1", "--s", "1"])
    assert rc == 1
    assert "error" in capsys.readouterr().err


def test_rmatrix_csv_shape(capsys):
    rc = main(["rmatrix", "--q", "2", "--s", "1", "--format", "csv"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    for line in lines:
        cells = line.split(",")
        assert len(cells) == 8
        [float(c) for c in cells]


def test_ybe_admissible_point(capsys):
    rc = main(["ybe", "--q", "2", "--s", "1.5",
               "--lambda", "1.3+0.2i", "--mu", "0.8-0.5i", "--nu", "1.1+0.3i"])
    assert rc == 0
    assert float(capsys.readouterr().out) <= 1e-10


def test_ybe_identity_colours(capsys):
    rc = main(["ybe", "--q", "2", "--s", "1"])
    assert rc == 0


def test_ybe_perturbed_fails(capsys):
    rc = main(["ybe", "--q", "2", "--s", "1", "--perturb", "0.01"])
    assert rc == 1
    assert float(capsys.readouterr().out) > 1e-6


def test_sweep_grid_shape_and_determinism(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    argv = ["sweep", "--q", "2", "--s", "1.5",
            "--lambda", "1,2,0.5+0.5i", "--mu", "1,1.5,2i", "--nu", "1.2",
            "--output"]
    assert main(argv + [str(out1)]) == 0
    assert main(argv + [str(out2)]) == 0
    text1 = out1.read_bytes()
    assert text1 == out2.read_bytes()
    lines = text1.decode().strip().splitlines()
    assert lines[0] == "q,s,lambda,mu,nu,ybe_residual,crossval_residual"
    assert len(lines) == 10  # header + 3*3*1 grid points
    for line in lines[1:]:
        cells = line.split(",")
        assert len(cells) == 7
        assert float(cells[5]) <= 1e-10


def test_sweep_unwritable_output_fails(tmp_path, capsys):
    rc = main(["sweep", "--q", "2", "--s", "1",
               "--output", str(tmp_path / "missing" / "out.csv")])
    assert rc == 1
    assert "error" in capsys.readouterr().err
