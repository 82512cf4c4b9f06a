import argparse
import json
import os
from collections import defaultdict

REQUIRED = ["ts", "event", "command", "system", "reason", "data", "res"]
KNOWN_EVENTS = {
    "normalize_done",
    "fuel_exhausted",
    "problem_generated",
    "candidate_checked",
    "solver_found",
    "solver_exhausted",
    "solution_verified",
    "run_report",
}
EXIT_CODES = {0, 1, 2, 3, 4}


def iter_paths(path: str):
    if os.path.isdir(path):
        for root, _, files in os.walk(path):
            for name in files:
                if name.endswith(".jsonl"):
                    yield os.path.join(root, name)
    else:
        yield path


def load_records(paths):
    for path in paths:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                for line in handle:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        yield path, json.loads(line)
                    except json.JSONDecodeError:
                        yield path, {"_bad_json": line[:200]}
        except FileNotFoundError:
            yield path, {"_missing_file": True}


def as_int(value) -> int | None:
    if value is None or isinstance(value, bool):
        return None
    try:
        return int(value)
    except (TypeError, ValueError):
        return None


def main() -> int:
    parser = argparse.ArgumentParser(description="Validate lam JSONL event logs")
    parser.add_argument("path", help="Log file or directory")
    parser.add_argument("--max-details", type=int, default=5)
    parser.add_argument("--json-out", default=None)
    parser.add_argument(
        "--require-events",
        default=None,
        help="Comma-separated event names that must appear at least once.",
    )
    parser.add_argument("--allow-fuel", action="store_true", help="do not fail on fuel_exhausted events")
    args = parser.parse_args()

    paths = list(iter_paths(args.path))
    loaded_files = sorted({os.path.basename(path) for path in paths if os.path.exists(path)})

    missing_key = defaultdict(int)
    bad_json = 0
    missing_file = 0
    event_counts = defaultdict(int)
    exit_codes = defaultdict(int)
    unknown_events: list[str] = []
    bad_records: list[dict] = []
    steps_total = 0
    found_witnesses: list[int] = []

    for path, rec in load_records(paths):
        if rec.get("_missing_file"):
            missing_file += 1
            continue
        if rec.get("_bad_json"):
            bad_json += 1
            continue

        for key in REQUIRED:
            if key not in rec:
                missing_key[key] += 1

        event = str(rec.get("event"))
        event_counts[event] += 1
        if event not in KNOWN_EVENTS:
            unknown_events.append(event)

        res = rec.get("res") if isinstance(rec.get("res"), dict) else {}
        if event == "normalize_done":
            steps = as_int(res.get("steps"))
            if steps is None or steps < 0:
                bad_records.append({"path": path, "event": event, "problem": "steps"})
            else:
                steps_total += steps
        elif event == "solver_found":
            witness = as_int(res.get("witness"))
            bound = as_int(res.get("bound"))
            if witness is None or bound is None or not 0 <= witness <= bound:
                bad_records.append({"path": path, "event": event, "problem": "witness_outside_bound"})
            else:
                found_witnesses.append(witness)
        elif event == "run_report":
            code = as_int(res.get("exit_code"))
            if code not in EXIT_CODES:
                bad_records.append({"path": path, "event": event, "problem": "exit_code"})
            else:
                exit_codes[str(code)] += 1

    required_events = [name.strip() for name in (args.require_events or "").split(",") if name.strip()]
    missing_events = [name for name in required_events if event_counts.get(name, 0) == 0]

    errors: list[str] = []
    if missing_file:
        errors.append(f"missing_files={missing_file}")
    if bad_json:
        errors.append(f"bad_json_lines={bad_json}")
    if missing_key:
        errors.append("missing_required_keys")
    if unknown_events:
        errors.append(f"unknown_events={len(unknown_events)}")
    if bad_records:
        errors.append(f"bad_records={len(bad_records)}")
    if missing_events:
        errors.append("missing_events=" + ",".join(missing_events))
    if event_counts.get("fuel_exhausted") and not args.allow_fuel:
        errors.append(f"fuel_exhausted={event_counts['fuel_exhausted']}")

    report = {
        "status": "FAIL" if errors else "PASS",
        "missing_key_counts": dict(missing_key),
        "bad_json_lines": bad_json,
        "missing_files": missing_file,
        "loaded_files_count": len(loaded_files),
        "loaded_files": loaded_files,
        "event_counts": dict(event_counts),
        "exit_codes": dict(exit_codes),
        "normalize_steps_total": steps_total,
        "found_witnesses": found_witnesses[: args.max_details],
        "unknown_events_sample": sorted(set(unknown_events))[: args.max_details],
        "bad_records_sample": bad_records[: args.max_details],
        "required_events": required_events,
        "missing_events": missing_events,
        "errors": errors,
    }
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as handle:
            json.dump(report, handle, ensure_ascii=True, indent=2)

    if errors:
        print("FAIL:", errors)
        return 1
    print("PASS")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
