import numpy as np
import pytest
from numpy.testing import assert_allclose

from hjsweep import cli
from hjsweep.report import read_delta_csv, read_field_dump, read_table_csv


def _solve_args(tmp_path, *extra, pid="ex1", n=40):
    return ["solve", "--problem", pid, "--n", str(n), "--out", str(tmp_path), *extra]


# ---------------------------------------------------------------------------
# happy paths


def test_solve_writes_table_and_delta(tmp_path, capsys, warm):
    assert cli.run_command(_solve_args(tmp_path)) == 0
    data = read_table_csv(tmp_path / "ex1_a1_n40_table.csv")
    assert np.array_equal(data["N"], [40])
    assert data["iter"][0] > 0
    assert data["L1"][0] < 1e-5
    it, d = read_delta_csv(tmp_path / "ex1_a1_n40_delta.csv")
    assert it[-1] == data["iter"][0]
    assert d[-1] < 1e-14
    out = capsys.readouterr().out
    assert "L1" in out and "40" in out


def test_study_ladder_artifacts(tmp_path, warm):
    rc = cli.run_command(
        ["study", "--problem", "ex1", "--meshes", "40,80", "--out", str(tmp_path)]
    )
    assert rc == 0
    data = read_table_csv(tmp_path / "ex1_a1_table.csv")
    assert np.array_equal(data["N"], [40, 80])
    assert data["L1_order"][1] > 4.0
    for cells in (40, 80):
        it, d = read_delta_csv(tmp_path / f"ex1_a1_n{cells}_delta.csv")
        assert it.size > 0 and d[-1] < 1e-14


def test_dump_writes_field(tmp_path, capsys, warm):
    rc = cli.run_command(
        ["dump", "--problem", "ex1", "--n", "40", "--out", str(tmp_path)]
    )
    assert rc == 0
    path = tmp_path / "ex1_a1_n40_field.csv"
    assert str(path) in capsys.readouterr().out
    data = read_field_dump(path)
    assert data["x"].size == 41 * 41
    assert np.all(np.isfinite(data["phi"]))
    assert set(np.unique(data["category"])) <= {1, 2, 3, 4, 5}
    assert data["x"].min() == -1.0 and data["x"].max() == 1.0


def test_transport_artifact_name(tmp_path, warm):
    rc = cli.run_command(_solve_args(tmp_path, "--approach", "2"))
    assert rc == 0
    assert (tmp_path / "ex1_a2_n40_table.csv").exists()


def test_automatic_epsilon_from_problem_defaults(tmp_path, warm):
    rc = cli.run_command(_solve_args(tmp_path, pid="ex6a"))
    assert rc == 0
    data = read_table_csv(tmp_path / "ex6a_a1_n40_table.csv")
    assert_allclose(data["epsilon"][0], 1e-2, rtol=1e-12)


def test_epsilon_schedule_applied(tmp_path, warm):
    rc = cli.run_command(
        [
            "study", "--problem", "ex1", "--meshes", "40,80",
            "--epsilon", "1e-4,1e-6", "--out", str(tmp_path),
        ]
    )
    assert rc == 0
    data = read_table_csv(tmp_path / "ex1_a1_table.csv")
    assert np.array_equal(data["epsilon"], [1e-4, 1e-6])


def test_rerun_identical_modulo_wall_time(tmp_path, warm):
    a = tmp_path / "a"
    b = tmp_path / "b"
    assert cli.run_command(_solve_args(a)) == 0
    assert cli.run_command(_solve_args(b)) == 0
    da = read_table_csv(a / "ex1_a1_n40_table.csv")
    db = read_table_csv(b / "ex1_a1_n40_table.csv")
    for key in da:
        if key == "wall_s":
            continue
        assert np.array_equal(da[key], db[key], equal_nan=True), key
    with open(a / "ex1_a1_n40_delta.csv", "rb") as fa:
        with open(b / "ex1_a1_n40_delta.csv", "rb") as fb:
            assert fa.read() == fb.read()


def test_iteration_cap_warns_but_exits_zero(tmp_path, capsys, warm):
    rc = cli.run_command(_solve_args(tmp_path, "--max-iterations", "3"))
    assert rc == 0
    assert "iteration cap" in capsys.readouterr().err
    assert (tmp_path / "ex1_a1_n40_table.csv").exists()


# ---------------------------------------------------------------------------
# option resolution


def test_config_file_sections_and_flag_precedence(tmp_path):
    ini = tmp_path / "run.ini"
    ini.write_text(
        "[solver]\nomega = 0.9\napproach = 2\n\n[ex1]\nomega = 0.85\n"
    )
    parser = cli._build_parser()
    args = parser.parse_args(
        ["solve", "--problem", "ex1", "--n", "40", "--config", str(ini)]
    )
    rc = cli._resolve_run(args)
    assert rc.approach == 2  # from [solver]
    assert rc.omega == 0.85  # problem section beats [solver]

    args = parser.parse_args(
        [
            "solve", "--problem", "ex1", "--n", "40",
            "--config", str(ini), "--omega", "0.8", "--approach", "1",
        ]
    )
    rc = cli._resolve_run(args)
    assert rc.approach == 1  # flag beats file
    assert rc.omega == 0.8


def test_out_dir_resolution(tmp_path, monkeypatch):
    parser = cli._build_parser()
    base = ["solve", "--problem", "ex1", "--n", "40"]

    monkeypatch.delenv("HJ_SWEEP_OUT", raising=False)
    assert cli._resolve_run(parser.parse_args(base)).out_dir == "."

    monkeypatch.setenv("HJ_SWEEP_OUT", str(tmp_path / "env"))
    assert cli._resolve_run(parser.parse_args(base)).out_dir == str(tmp_path / "env")

    ini = tmp_path / "run.ini"
    ini.write_text(f"[solver]\nout = {tmp_path / 'file'}\n")
    args = parser.parse_args([*base, "--config", str(ini)])
    assert cli._resolve_run(args).out_dir == str(tmp_path / "file")

    args = parser.parse_args(
        [*base, "--config", str(ini), "--out", str(tmp_path / "flag")]
    )
    assert cli._resolve_run(args).out_dir == str(tmp_path / "flag")


def test_unknown_config_key_rejected(tmp_path):
    ini = tmp_path / "run.ini"
    ini.write_text("[solver]\nomgea = 0.9\n")
    parser = cli._build_parser()
    args = parser.parse_args(
        ["solve", "--problem", "ex1", "--n", "40", "--config", str(ini)]
    )
    with pytest.raises(cli.UsageError):
        cli._resolve_run(args)


# ---------------------------------------------------------------------------
# failure exits


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--problem", "nope", "--n", "40"],
        ["solve", "--problem", "ex1", "--n", "10"],
        ["study", "--problem", "ex1", "--meshes", "40,80", "--epsilon", "1,2,3"],
        ["solve", "--problem", "ex1", "--n", "40", "--gamma", "0.5,0.5"],
        ["study", "--problem", "ex1", "--meshes", ""],
        ["solve", "--problem", "ex1", "--n", "40", "--omega", "5.0"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert cli.run_command(argv) == 2
    assert capsys.readouterr().err != ""


def test_missing_required_flag_exits_two(capsys):
    assert cli.run_command(["solve", "--problem", "ex1"]) == 2
    capsys.readouterr()


def test_unwritable_out_dir_exits_four(tmp_path, capsys, warm):
    blocker = tmp_path / "blocker"
    blocker.write_text("a file, not a directory")
    rc = cli.run_command(_solve_args(blocker / "sub"))
    assert rc == 4
    assert "error" in capsys.readouterr().err


def test_help_exits_zero(capsys):
    assert cli.run_command(["--help"]) == 0
    assert "solve" in capsys.readouterr().out
