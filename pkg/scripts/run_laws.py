#!/usr/bin/env python3
"""Sweep every law family and print a per-family summary.

Equivalent to ``omegatt laws`` but with tunable bounds from the command line,
plus a wall-clock figure per family so you can see where enumeration time goes
when pushing ``--max-nodes`` past the defaults.
"""

from __future__ import annotations

import argparse
import sys
import time

from omegatt.laws import (
    law_cell_action,
    law_counit_squares,
    law_eh_identities,
    law_hom_roundtrip,
    law_hom_transport,
    law_pushout_counts,
    law_suspension,
    law_tree_action,
    law_tree_boundary,
    law_typecheck,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-nodes", type=int, default=5, help="tree size bound")
    parser.add_argument("--dims-upto", type=int, default=3, help="reversal dimension bound")
    args = parser.parse_args()

    families = [
        lambda: law_tree_boundary(args.max_nodes, args.dims_upto),
        lambda: law_tree_action(args.max_nodes, args.dims_upto),
        law_suspension,
        law_pushout_counts,
        lambda: law_typecheck(args.dims_upto),
        lambda: law_cell_action(args.dims_upto),
        law_hom_roundtrip,
        lambda: law_hom_transport(args.dims_upto),
        lambda: law_eh_identities(args.dims_upto),
        law_counit_squares,
    ]

    total = 0
    bad = 0
    for family in families:
        start = time.monotonic()
        report = family()
        elapsed = time.monotonic() - start
        status = "ok" if not report.failures else f"{len(report.failures)} FAILED"
        print(f"{report.name:<18} {report.checks:>6} checks  {elapsed:6.2f}s  {status}")
        for failure in report.failures[:5]:
            print(f"    {failure}")
        total += report.checks
        bad += len(report.failures)

    print(f"{'total':<18} {total:>6} checks")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
