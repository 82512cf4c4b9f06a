from __future__ import annotations

import argparse
import csv
from collections import Counter
from pathlib import Path
import sys

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from lam.calculus import numeral, probe, recognize_numeral, typecheck  # noqa: E402
from lam.corpus import normal_nat_corpus, well_typed_corpus  # noqa: E402
from lam.errors import FuelExhaustedError  # noqa: E402
from lam.kernel.reduce import classify_shape, normalize  # noqa: E402
from lam.types import Strategy, SystemTag  # noqa: E402

REPORT_DIR = Path("reports")


def sweep(system: SystemTag, size: int, seed: int) -> tuple[list[dict[str, object]], Counter[str]]:
    rows: list[dict[str, object]] = []
    failures: Counter[str] = Counter()

    for index, (ctx, term) in enumerate(well_typed_corpus(system, size, seed=seed)):
        try:
            outer = normalize(term, system, strategy=Strategy.LEFTMOST_OUTERMOST)
            inner = normalize(term, system, strategy=Strategy.RIGHTMOST_INNERMOST)
        except FuelExhaustedError:
            failures["fuel"] += 1
            continue
        confluent = outer.term == inner.term
        preserved = typecheck(ctx, outer.term) == typecheck(ctx, term)
        if not confluent:
            failures["confluence"] += 1
        if not preserved:
            failures["subject_reduction"] += 1
        rows.append(
            {
                "system": system.value,
                "index": index,
                "open": len(ctx) > 0,
                "outermost_steps": outer.steps,
                "innermost_steps": inner.steps,
                "shape": classify_shape(outer.term).value,
                "confluent": confluent,
                "type_preserved": preserved,
            }
        )

    for ctx, term in normal_nat_corpus(system, size, seed=seed):
        accepted = recognize_numeral(term, system, ctx) is not None
        reaches_zero = normalize(probe(term, system), system).term == numeral(0, system)
        if accepted != reaches_zero:
            failures["recognition"] += 1

    return rows, failures


def main() -> int:
    parser = argparse.ArgumentParser(description="confluence / subject reduction / recognition sweep")
    parser.add_argument("--size", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    REPORT_DIR.mkdir(parents=True, exist_ok=True)
    all_rows: list[dict[str, object]] = []
    summary: list[tuple[str, str, int]] = []
    for system in SystemTag:
        rows, failures = sweep(system, args.size, args.seed)
        all_rows.extend(rows)
        for check in ("confluence", "subject_reduction", "recognition", "fuel"):
            summary.append((system.value, check, failures[check]))

    with (REPORT_DIR / "property_sweep_terms.csv").open("w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(
            f,
            fieldnames=[
                "system",
                "index",
                "open",
                "outermost_steps",
                "innermost_steps",
                "shape",
                "confluent",
                "type_preserved",
            ],
        )
        writer.writeheader()
        writer.writerows(all_rows)

    with (REPORT_DIR / "property_sweep_summary.csv").open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(["system", "check", "failures"])
        writer.writerows(summary)

    failed = sum(count for _, check, count in summary if check != "fuel")
    print("done" if failed == 0 else f"failures: {failed}")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
