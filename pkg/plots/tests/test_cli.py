import pytest

from hjplots import cli


def test_delta_history_happy_path(delta_csv, tmp_path, capsys):
    out = tmp_path / "delta.png"
    rc = cli.run_command(["delta_history", str(delta_csv), "--out", str(out)])
    assert rc == 0
    assert str(out) in capsys.readouterr().out
    assert out.stat().st_size > 0


def test_contour_happy_path(field_csv, tmp_path):
    out = tmp_path / "contour.png"
    assert cli.run_command(["contour", str(field_csv), "--out", str(out)]) == 0
    assert out.exists()


def test_comparison_multiple_inputs(table_csv, second_table_csv, tmp_path):
    out = tmp_path / "cmp.png"
    rc = cli.run_command(
        ["comparison", str(table_csv), str(second_table_csv), "--out", str(out)]
    )
    assert rc == 0
    assert out.exists()


def test_malformed_csv_exits_one_with_line(delta_csv, tmp_path, capsys):
    lines = delta_csv.read_text().splitlines()
    lines[4] = "4,oops"
    delta_csv.write_text("\n".join(lines) + "\n")
    rc = cli.run_command(["delta_history", str(delta_csv), "--out", str(tmp_path / "x.png")])
    assert rc == 1
    err = capsys.readouterr().err
    assert ":5:" in err and "delta" in err


def test_unknown_kind_exits_two(delta_csv, tmp_path, capsys):
    rc = cli.run_command(["pie", str(delta_csv), "--out", str(tmp_path / "x.png")])
    assert rc == 2
    capsys.readouterr()


def test_missing_input_exits_two(tmp_path, capsys):
    rc = cli.run_command(
        ["delta_history", str(tmp_path / "absent.csv"), "--out", str(tmp_path / "x.png")]
    )
    assert rc == 2
    assert "missing input" in capsys.readouterr().err


def test_missing_out_flag_exits_two(delta_csv, capsys):
    assert cli.run_command(["delta_history", str(delta_csv)]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert cli.run_command(["--help"]) == 0
    assert "delta_history" in capsys.readouterr().out
