#!/usr/bin/env python3
"""Classify every registered operator on the default corpus.

Writes one JSON report per operator into the output directory and prints
a one-line summary of the Table 1 verdicts for each.
"""

import argparse
import time
from pathlib import Path

from modelalg import build_universe, classify, default_corpus
from modelalg.operators import OPERATORS
from modelalg.report import report_to_json


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--out", type=Path, default=Path("reports"))
    args = parser.parse_args()

    corpus = default_corpus(seed=args.seed)
    universe = build_universe(corpus.models)
    print(f"corpus: {len(corpus.models)} models; universe: {universe.system_count} systems")

    args.out.mkdir(parents=True, exist_ok=True)
    for op in sorted(OPERATORS):
        start = time.monotonic()
        report = classify(op, corpus, universe, seed=args.seed)
        elapsed = time.monotonic() - start
        path = args.out / f"{op}.json"
        path.write_text(report_to_json(report), encoding="utf-8")
        summary = " ".join(
            f"{p}{'+' if v.holds else '-'}" for p, v in report.table1.items()
        )
        audit = "ok" if not report.implication_audit else "FAILED"
        print(f"{op:9s} {summary}  audit={audit}  ({elapsed:.1f}s) -> {path}")


if __name__ == "__main__":
    main()
