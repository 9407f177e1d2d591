import json

import pytest

from rotatlas.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_orbit_cycle(capsys):
    code, out, _ = run(capsys, "orbit", "--a0", "-1", "--a1", "-1", "--lambda", "8/5")
    assert code == 0
    assert "outcome: cycle" in out and "period 38" in out


def test_orbit_word_rendering(capsys):
    code, out, _ = run(capsys, "orbit", "--a0", "-1", "--a1", "1", "--lambda", "-3/4")
    assert code == 0
    assert "(-1, 1, 2, 1, -1)" in out


def test_orbit_one_sided_divergence(capsys):
    # a divergence certificate is a definitive verdict, not a failure
    code, out, _ = run(
        capsys, "orbit", "--a0", "0", "--a1", "1", "--lambda", "-2", "--side", "plus"
    )
    assert code == 0
    assert "outcome: diverged" in out


def test_orbit_cap(capsys):
    code, out, _ = run(
        capsys, "orbit", "--a0", "5", "--a1", "7", "--lambda", "0", "--cap", "2"
    )
    assert code == 1 and "cap_exceeded" in out


def test_cycle_interval(capsys):
    code, out, _ = run(capsys, "cycle-interval", "--word", "-1,1,2,1,-1")
    assert code == 0 and out.strip() == "(-1,-1/2)"
    code, out, _ = run(capsys, "cycle-interval", "--word", "(0, 0, 1)")
    assert code == 0 and out.strip() == "infeasible"


def test_tail_command(capsys):
    code, out, _ = run(capsys, "tail", "--a0", "-1", "--a1", "-1", "--k-max", "2")
    assert code == 0
    assert "label: s=0 d=1 K=1" in out
    assert "tail interval: (-2,-1)" in out
    assert "[-3/2,-1)" in out and "(0, 1, 2, 2, 1, 0, -1, -1)" in out


def test_tail_constant_case(capsys):
    code, out, _ = run(capsys, "tail", "--a0", "1", "--a1", "1")
    assert code == 0 and "(-2,-1) -> (1)" in out


def test_partition_table(capsys):
    code, out, err = run(capsys, "partition", "--a0", "-1", "--a1", "-1")
    assert code == 0
    assert "22 intervals, 11 singletons" in out
    assert "verification passed" in err


def test_partition_json(capsys, tmp_path):
    code, out, err = run(
        capsys, "partition", "--a0", "-1", "--a1", "-1", "--json",
        "--out", str(tmp_path),
    )
    assert code == 0
    data = json.loads(out)
    assert data["a0"] == -1 and len(data["body"]) == 22
    assert (tmp_path / "atlas_-1_-1.json").exists()


def test_partition_out_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("ROTATLAS_OUT", str(tmp_path))
    code, _, _ = run(capsys, "partition", "--a0", "0", "--a1", "1")
    assert code == 0
    assert (tmp_path / "atlas_0_1.json").exists()


def test_sweep_command(capsys, tmp_path):
    code, out, err = run(capsys, "sweep", "--max-m", "1", "--out", str(tmp_path))
    assert code == 0
    assert "periodicity verified for all points up to 1" in out
    assert (tmp_path / "sweep_m1.csv").exists()
    assert len(list(tmp_path.glob("atlas_*.json"))) == 9


def test_tables_command(capsys):
    code, out, _ = run(capsys, "tables", "--max-m", "1", "--format", "csv")
    assert code == 0
    assert "22,11" in out.replace('"', "")


def test_diagram_command(capsys, tmp_path):
    target = tmp_path / "pair.svg"
    code, _, err = run(capsys, "diagram", "--a0", "0", "--a1", "0", "--out", str(target))
    assert code == 0
    assert target.read_text().startswith("<svg ")
    code, out, _ = run(capsys, "diagram", "--a0", "0", "--a1", "1")
    assert code == 0 and out.startswith("<svg ")


def test_usage_errors_exit_two():
    for argv in (
        [],
        ["orbit", "--a0", "1"],
        ["partition", "--a0", "0", "--a1", "0", "--json", "--table"],
        ["sweep", "--max-m", "1", "--unknown-flag"],
        ["orbit", "--a0", "1", "--a1", "1", "--lambda", "x/y"],
    ):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_out_of_range_parameter_exits_two(capsys):
    # side/value combinations rejected by the parameter model
    code = main(["orbit", "--a0", "0", "--a1", "1", "--lambda", "2", "--side", "plus"])
    assert code == 2
    assert "error:" in capsys.readouterr().err
