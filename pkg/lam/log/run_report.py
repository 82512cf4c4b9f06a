from __future__ import annotations

import hashlib
import threading
import time
from importlib import metadata
from typing import Any, Optional

import orjson

from .jsonl import JsonlLogger

PACKAGE_NAME = "lambda-matching-workbench"
FALLBACK_VERSION = "0.1.0"


def tool_version() -> str:
    try:
        return metadata.version(PACKAGE_NAME)
    except metadata.PackageNotFoundError:
        return FALLBACK_VERSION


def inputs_digest(inputs: dict[str, Any]) -> str:
    payload = orjson.dumps(inputs, option=orjson.OPT_SORT_KEYS, default=str)
    return hashlib.sha256(payload).hexdigest()


class RunStats:
    """Collects step counts and timing for one CLI run and renders the RunReport."""

    def __init__(self, command: list[str], *, logger: Optional[JsonlLogger] = None):
        self._command = list(command)
        self._logger = logger
        self._lock = threading.Lock()
        self._started = time.perf_counter()
        self._inputs: dict[str, Any] = {}
        self.steps = 0
        self.normalizations = 0
        self.candidates = 0

    def record_inputs(self, **inputs: Any) -> None:
        with self._lock:
            self._inputs.update(inputs)

    def record_steps(self, steps: int) -> None:
        with self._lock:
            self.steps += int(steps)
            self.normalizations += 1

    def record_candidates(self, count: int) -> None:
        with self._lock:
            self.candidates += int(count)

    def flush(self, result: dict[str, Any], exit_code: int) -> dict[str, Any]:
        elapsed = time.perf_counter() - self._started
        report = {
            "command": self._command,
            "inputs_digest": inputs_digest(self._inputs),
            "result": result,
            "steps": {
                "total": self.steps,
                "normalizations": self.normalizations,
                "candidates": self.candidates,
            },
            "wall_time_sec": round(elapsed, 6),
            "version": tool_version(),
            "exit_code": exit_code,
        }
        if self._logger is not None:
            self._logger.log(
                {
                    "event": "run_report",
                    "reason": "exit" if exit_code == 0 else f"exit_{exit_code}",
                    "data": {"inputs_digest": report["inputs_digest"]},
                    "res": {"steps": self.steps, "exit_code": exit_code, "wall_time_sec": report["wall_time_sec"]},
                }
            )
        return report
