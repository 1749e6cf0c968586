from __future__ import annotations

import pytest

from walkcoach.cli import main


def test_catalog_lists_every_style(capsys):
    assert main(["catalog"]) == 0
    out = capsys.readouterr().out
    for token in ("moderate", "interval_a", "interval_b", "brisk", "750"):
        assert token in out


def test_schedule_prints_a_week(capsys):
    assert main(["schedule", "--exercise", "brisk", "--duration", "25",
                 "--frequency", "5"]) == 0
    out = capsys.readouterr().out
    assert out.count("25 min brisk") == 5
    assert out.count("rest") == 2


def test_schedule_rejects_off_grid_input(capsys):
    assert main(["schedule", "--exercise", "brisk", "--duration", "7",
                 "--frequency", "5"]) == 2


def test_sim_writes_csv_to_stdout(capsys):
    assert main(["sim", "--profile", "A", "--weeks", "4", "--seed", "2"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0].startswith("week,goal_type")
    assert len(lines) == 5
    assert lines[1].split(",")[4] == "90"


def test_sim_writes_files(tmp_path, capsys):
    csv_path = tmp_path / "out.csv"
    events_path = tmp_path / "events.ndjson"
    assert main(["sim", "--profile", "B", "--weeks", "3", "--seed", "1",
                 "--out", str(csv_path), "--events", str(events_path)]) == 0
    assert csv_path.read_text().startswith("week,")
    assert events_path.read_text().count("\n") > 10


def test_sim_unknown_profile_fails(capsys):
    assert main(["sim", "--profile", "nope"]) == 2
    assert "unusable profile" in capsys.readouterr().err


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
