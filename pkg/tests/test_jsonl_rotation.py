from __future__ import annotations

import json

from lam.log.jsonl import REQUIRED_FIELDS, JsonlLogger, log_event


def test_jsonl_logger_rotates_by_size(tmp_path) -> None:
    path = tmp_path / "lam.jsonl"
    logger = JsonlLogger(str(path), max_bytes=300)

    logger.log({"event": "first", "data": {"payload": "x" * 180}})
    logger.log({"event": "second", "data": {"payload": "y" * 180}})

    rotated = list(tmp_path.glob("lam.*.jsonl"))
    assert len(rotated) == 1
    assert json.loads(rotated[0].read_text(encoding="utf-8").strip())["event"] == "first"
    current = json.loads(path.read_text(encoding="utf-8").strip())
    assert current["event"] == "second"


def test_jsonl_logger_without_rotation(tmp_path) -> None:
    path = tmp_path / "lam.jsonl"
    logger = JsonlLogger(str(path), max_bytes=0)

    for index in range(5):
        logger.event("tick", data={"index": index})

    assert not list(tmp_path.glob("lam.*.jsonl"))
    assert len(path.read_text(encoding="utf-8").splitlines()) == 5


def test_records_carry_required_fields(tmp_path) -> None:
    path = tmp_path / "nested" / "lam.jsonl"
    logger = JsonlLogger(str(path), command="norm")

    logger.event("normalize_done", res=3)

    record = json.loads(path.read_text(encoding="utf-8").strip())
    assert set(REQUIRED_FIELDS) <= set(record)
    assert record["command"] == "norm"
    assert record["system"] == "unknown"
    assert record["data"] == {}
    assert record["res"] == {"value": 3}
    assert isinstance(record["ts"], int)


def test_log_event_accepts_missing_logger(tmp_path) -> None:
    log_event(None, "ignored")
    logger = JsonlLogger(str(tmp_path / "lam.jsonl"))

    log_event(logger, "kept", reason="test")

    assert json.loads((tmp_path / "lam.jsonl").read_text(encoding="utf-8"))["reason"] == "test"
