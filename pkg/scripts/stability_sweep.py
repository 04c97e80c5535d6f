#!/usr/bin/env python3
"""Run the padding-stability check for every operator on the default corpus.

A stable operator reports identical property verdicts whether the universe
is padded with one or with two fresh class/attr/type names.
"""

import argparse
import time

from modelalg import default_corpus, stability_check
from modelalg.operators import OPERATORS


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    corpus = default_corpus(seed=args.seed)
    unstable = 0
    for op in sorted(OPERATORS):
        start = time.monotonic()
        report = stability_check(op, corpus, seed=args.seed)
        elapsed = time.monotonic() - start
        if report.stable:
            print(f"{op:9s} stable    ({elapsed:.1f}s)")
        else:
            unstable += 1
            print(f"{op:9s} UNSTABLE  ({elapsed:.1f}s): {', '.join(report.differing)}")
    raise SystemExit(1 if unstable else 0)


if __name__ == "__main__":
    main()
