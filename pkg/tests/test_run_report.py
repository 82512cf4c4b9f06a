from __future__ import annotations

import json

from lam.log.jsonl import JsonlLogger
from lam.log.run_report import RunStats, inputs_digest, tool_version


def test_run_report_flush(tmp_path) -> None:
    path = tmp_path / "lam.jsonl"
    logger = JsonlLogger(str(path), command="solve")
    stats = RunStats(["lam", "solve", "p.json"], logger=logger)

    stats.record_inputs(bound=10)
    stats.record_inputs(problem={"system": "t"})
    stats.record_steps(120)
    stats.record_steps(30)
    stats.record_candidates(3)
    report = stats.flush({"status": "found", "witness": 2}, 0)

    assert report["command"] == ["lam", "solve", "p.json"]
    assert report["steps"] == {"total": 150, "normalizations": 2, "candidates": 3}
    assert report["result"] == {"status": "found", "witness": 2}
    assert report["exit_code"] == 0
    assert report["inputs_digest"] == inputs_digest({"problem": {"system": "t"}, "bound": 10})
    assert report["wall_time_sec"] >= 0.0
    assert report["version"] == tool_version()

    record = json.loads(path.read_text(encoding="utf-8").strip())
    assert record["event"] == "run_report"
    assert record["reason"] == "exit"
    assert record["res"]["steps"] == 150


def test_failed_run_reason(tmp_path) -> None:
    path = tmp_path / "lam.jsonl"
    stats = RunStats(["lam", "norm"], logger=JsonlLogger(str(path)))

    stats.flush({"error": "fuel"}, 3)

    assert json.loads(path.read_text(encoding="utf-8"))["reason"] == "exit_3"


def test_inputs_digest_ignores_key_order() -> None:
    assert inputs_digest({"a": 1, "b": [1, 2]}) == inputs_digest({"b": [1, 2], "a": 1})
    assert inputs_digest({"a": 1}) != inputs_digest({"a": 2})
    assert len(inputs_digest({})) == 64
