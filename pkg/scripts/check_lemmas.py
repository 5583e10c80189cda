"""Exhaustive sweep of the derivative laws, the peel round trip and the amenability equivalence.

Prints a count of failures per check; all should be zero.
"""

import argparse
import time
from collections import Counter

from tshape.blowup import BlowUpSpec, blow_up, peel
from tshape.calculus import (
    derivative,
    derivative_delete,
    derivative_runs,
    is_amenable,
    is_amenable_via_definition,
    is_power,
    iterate,
)
from tshape.census import necklaces
from tshape.core import cyclic_equal


def sweep(max_width):
    fails = Counter()
    for width in range(1, max_width + 1):
        for t in necklaces(width):
            d = derivative(t)
            flat = is_power(t)
            fails["degree"] += d.degree != t.degree
            fails["width"] += (d.width < t.width) == flat
            end = iterate(t, width // 2 + 1)
            fails["stabilises"] += not (end.width == 0 or is_power(end))
            fails["deletion rule"] += not cyclic_equal(derivative_delete(t), d)
            if not flat:
                fails["run rule"] += not cyclic_equal(derivative_runs(t), d)
            if d.width:
                base, blocks = peel(t)
                fails["peel"] += not cyclic_equal(blow_up(BlowUpSpec(base, 1, tuple(blocks))), t)
            fails["amenable"] += is_amenable(t) != is_amenable_via_definition(t)
    return fails


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-width", type=int, default=16)
    args = ap.parse_args()
    t0 = time.perf_counter()
    fails = sweep(args.max_width)
    for name in ("degree", "width", "stabilises", "deletion rule", "run rule", "peel", "amenable"):
        print(f"{name:14s} {fails[name]} failures")
    print(f"done in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
