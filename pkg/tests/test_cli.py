import json

import pytest

from f2modforms import checks, cli
from f2modforms.subspaces import fixture_dir


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_census_m1(capsys):
    code, out = run(capsys, "census", "--m", "1", "--json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["isotropic"], doc["anisotropic"]) == (3, 1)
    assert doc["schema"] == cli.SCHEMA_VERSION


def test_subspaces_diff_against_table(capsys):
    code, out = run(capsys, "subspaces", "--m", "3", "--k", "3", "--diff", str(fixture_dir() / "table30.txt"))
    assert code == 0
    assert "equal as sets" in out


def test_subspaces_diff_reports_missing(capsys, tmp_path):
    lines = (fixture_dir() / "table30.txt").read_text().splitlines()
    short = tmp_path / "short.txt"
    short.write_text("\n".join(lines[:-1]) + "\n")
    code, out = run(capsys, "subspaces", "--m", "3", "--diff", str(short), "--json")
    assert code == 1
    assert len(json.loads(out)["missing"]) == 1


def test_subspaces_listing(capsys):
    code, out = run(capsys, "subspaces", "--m", "2", "--k", "2")
    assert code == 0 and len(out.splitlines()) == 6


def test_stars(capsys):
    code, out = run(capsys, "stars", "--m", "3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["stars"] == 105 and doc["sign_flip_ok"]


def test_ideal_quartic_writes_certificate(capsys, tmp_path):
    out_file = tmp_path / "cert.json"
    code, out = run(capsys, "ideal", "--m", "3", "--quartic", "--out", str(out_file))
    assert code == 0
    assert "quadratic relation rank modulo linear ones: 14" in out
    assert json.loads(out_file.read_text())


def test_ideal_quartic_needs_m3(capsys):
    code, _ = run(capsys, "ideal", "--m", "2", "--quartic")
    assert code == 2


def test_weil_dims(capsys):
    code, out = run(capsys, "weil", "--m", "3", "--dims", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["invariant_dimension"] == 15 and doc["ti_span"]["rank"] == 15
    assert doc["restriction"]["rank"] == 14


def test_qseries(capsys):
    code, out = run(capsys, "qseries", "--order", "10")
    assert code == 0
    assert "-1/2 + 252 q + 8316 q^2" in out


def test_lattice_avoid(capsys):
    code, out = run(capsys, "lattice", "--avoid", "0011;010000 00")
    assert code == 0
    assert "123 classes" in out


def test_lattice_bad_alpha(capsys):
    code, _ = run(capsys, "lattice", "--avoid", "0011;000000 00")
    assert code == 2


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        cli.main(["census", "--m", "9"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        cli.main([])


def test_only_filter_gives_three_eisenstein_reports(capsys):
    code, out = run(capsys, "verify-all", "--only", "eisenstein", "--json")
    ids = [r["check_id"] for r in json.loads(out)["reports"]]
    assert code == 0
    assert ids == ["eisenstein-6", "eisenstein-10", "eisenstein-14"]


def test_only_unknown(capsys):
    code, _ = run(capsys, "verify-all", "--only", "nonsense")
    assert code == 2


def test_json_is_deterministic(capsys):
    argv = ["verify-all", "--only", "counting", "--only", "cusp", "--json"]
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second


def test_exit_codes():
    def rep(status):
        return checks.CheckReport("x", "g", status, 1, 1, "derived")

    assert checks.exit_code([rep("pass"), rep("discrepancy"), rep("heuristic")]) == 0
    assert checks.exit_code([rep("pass"), rep("resource")]) == 2
    assert checks.exit_code([rep("fail"), rep("resource")]) == 1


def test_parallel_run_keeps_order():
    cfg = checks.Config(samples=3, searches=2)
    serial = checks.verify_all(cfg, only=["census", "tables", "cusp"])
    parallel = checks.verify_all(cfg, only=["census", "tables", "cusp"], jobs=3)
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]


def test_search_budget_surfaces_as_resource():
    cfg = checks.Config(budget=1, searches=1, samples=1)
    reports = checks.verify_all(cfg, only=["avoid-all-orbits"])
    assert [r.status for r in reports] == ["resource"]
