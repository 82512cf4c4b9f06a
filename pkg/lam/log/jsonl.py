from __future__ import annotations

import os
import threading
import time
from pathlib import Path
from typing import Any

import orjson

REQUIRED_FIELDS = (
    "ts",
    "event",
    "command",
    "system",
    "reason",
    "data",
    "res",
)


def _coerce_dict(value: object) -> dict:
    # data/res は必ず dict にする
    if value is None:
        return {}
    if isinstance(value, dict):
        return value
    return {"value": value}


def _ensure_required_fields(rec: dict) -> dict:
    rec = dict(rec)

    rec.setdefault("ts", int(time.time() * 1000))
    rec.setdefault("event", "unknown")
    rec.setdefault("command", "unknown")
    rec.setdefault("system", "unknown")
    rec.setdefault("reason", "unknown")

    rec["data"] = _coerce_dict(rec.get("data"))
    rec["res"] = _coerce_dict(rec.get("res"))

    for k in REQUIRED_FIELDS:
        rec.setdefault(k, None)

    return rec


class JsonlLogger:
    """Append-only JSONL event log with size-based rotation."""

    def __init__(self, path: str, *, max_bytes: int | None = None, command: str | None = None):
        self._path = path
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        self._max_bytes = 64 * 1024 * 1024 if max_bytes is None else max_bytes
        self._command = command
        self._lock = threading.Lock()

    @property
    def path(self) -> str:
        return self._path

    def log(self, record: dict[str, Any]) -> None:
        if self._command is not None:
            record = {"command": self._command, **record}
        record = _ensure_required_fields(record)
        line = orjson.dumps(record, default=_default) + b"\n"
        with self._lock:
            self._rotate_if_needed(len(line))
            with open(self._path, "ab") as handle:
                handle.write(line)

    def event(self, event: str, **fields: Any) -> None:
        self.log({"event": event, **fields})

    def _rotate_if_needed(self, incoming_bytes: int) -> None:
        path = Path(self._path)
        if self._max_bytes <= 0 or not path.exists():
            return
        if path.stat().st_size + incoming_bytes <= self._max_bytes:
            return
        path.replace(_rotated_path(path, time.time()))


def _default(value: object) -> object:
    enum_value = getattr(value, "value", None)
    if enum_value is not None:
        return enum_value
    return str(value)


def _rotated_path(path: Path, ts: float) -> Path:
    stamp = time.strftime("%Y%m%d-%H%M%S", time.localtime(ts))
    for index in range(1000):
        candidate = path.with_name(f"{path.stem}.{stamp}.{index:03d}.jsonl")
        if not candidate.exists():
            return candidate
    return path.with_name(f"{path.stem}.{stamp}.{os.getpid()}.jsonl")


def log_event(logger: JsonlLogger | None, event: str, **fields: Any) -> None:
    if logger is None:
        return
    logger.event(event, **fields)
