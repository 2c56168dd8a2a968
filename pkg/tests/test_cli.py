import json

import pytest

from agler_lab import cli


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


DISC_PICK = {
    "family": {"domain": "disc"},
    "points": [[[0.0, 0.0]], [[0.5, 0.0]]],
    "targets": [[0.0, 0.0], [0.6, 0.0]],
}

SEQ = {
    "family": {"domain": "disc"},
    "sequence": {"family": "exponential_radial", "depth": 4},
}


def test_pick_minimal_norm(tmp_path, capsys):
    cfg = write(tmp_path, "p.json", DISC_PICK)
    assert cli.main(["pick", "--config", cfg]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["schema_version"] == 1
    assert out["minimal_norm"] == pytest.approx(1.2, abs=1e-5)


def test_pick_feasible_and_infeasible(tmp_path):
    feasible = dict(DISC_PICK, C=2.0)
    cfg = write(tmp_path, "f.json", feasible)
    assert cli.main(["pick", "--config", cfg, "--out", str(tmp_path / "o1")]) == 0
    report = json.loads((tmp_path / "o1" / "pick.json").read_text())
    assert report["status"] == "feasible"
    assert "certificate" in report and "wall_time" not in report

    infeasible = dict(DISC_PICK, C=1.0)
    cfg2 = write(tmp_path, "i.json", infeasible)
    assert cli.main(["pick", "--config", cfg2, "--out", str(tmp_path / "o2")]) == 1
    report2 = json.loads((tmp_path / "o2" / "pick.json").read_text())
    assert report2["status"] == "infeasible"
    assert "witness" in report2


def test_analyze(tmp_path):
    cfg = write(tmp_path, "s.json", SEQ)
    assert cli.main(["analyze", "--config", cfg, "--out", str(tmp_path / "a")]) == 0
    report = json.loads((tmp_path / "a" / "analyze.json").read_text())
    assert report["admissible"] is True
    assert report["route"] == "EXACT"


def test_grammian_csv_columns(tmp_path):
    cfg = write(tmp_path, "s.json", SEQ)
    assert (
        cli.main(
            ["grammian", "--config", cfg, "--out", str(tmp_path / "g"), "--samples", "3"]
        )
        == 0
    )
    header = (tmp_path / "g" / "grammian.csv").read_text().splitlines()[0]
    assert header == "n,lambda_min,lambda_max,N_estimate,M_estimate,provenance"
    report = json.loads((tmp_path / "g" / "grammian.json").read_text())
    assert report["route"] == "EXACT"
    assert len(report["trend"]) == 4


def test_carleson(tmp_path):
    cfg = write(tmp_path, "s.json", SEQ)
    assert cli.main(["carleson", "--config", cfg, "--out", str(tmp_path / "c")]) == 0
    report = json.loads((tmp_path / "c" / "carleson.json").read_text())
    assert report["verdict"] is True
    assert len(report["per_index"]) == 4


def test_realize(tmp_path):
    cfg = write(
        tmp_path,
        "r.json",
        {"family": {"domain": "disc"}, "state_dim": 3, "n_points": 50},
    )
    assert cli.main(["realize", "--config", cfg, "--out", str(tmp_path / "r")]) == 0
    report = json.loads((tmp_path / "r" / "realize.json").read_text())
    assert report["contractive"] is True
    assert report["max_modulus"] <= 1.0 + 1e-10


def test_verify_theorem(tmp_path):
    cfg = write(tmp_path, "s.json", SEQ)
    assert (
        cli.main(
            [
                "verify-theorem",
                "--config",
                cfg,
                "--out",
                str(tmp_path / "v"),
                "--samples",
                "3",
            ]
        )
        == 0
    )
    report = json.loads((tmp_path / "v" / "verify_theorem.json").read_text())
    assert report["consistent"] is True


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["pick", "--config", str(bad)]) == 2
    assert cli.main(["pick", "--config", str(tmp_path / "missing.json")]) == 2

    no_points = write(tmp_path, "np.json", {"family": {"domain": "disc"}})
    assert cli.main(["pick", "--config", no_points]) == 2

    bad_domain = write(tmp_path, "bd.json", dict(DISC_PICK, family={"domain": "ball"}))
    assert cli.main(["pick", "--config", bad_domain]) == 2


def test_byte_identical_reruns(tmp_path):
    cfg = write(tmp_path, "s.json", SEQ)
    for d in ("r1", "r2"):
        for cmd in ("analyze", "grammian", "carleson", "verify-theorem"):
            assert (
                cli.main(
                    [
                        cmd,
                        "--config",
                        cfg,
                        "--out",
                        str(tmp_path / d),
                        "--samples",
                        "3",
                    ]
                )
                == 0
            )
    names = sorted(p.name for p in (tmp_path / "r1").iterdir())
    assert names
    for name in names:
        assert (tmp_path / "r1" / name).read_bytes() == (
            tmp_path / "r2" / name
        ).read_bytes()
