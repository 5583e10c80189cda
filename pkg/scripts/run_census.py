"""Write the census table to a CSV and print the widths where CG-good and amenable split."""

import argparse
import time
from pathlib import Path

from tshape.census import census_table, find_witnesses, to_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-width", type=int, default=18)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="census.csv")
    ap.add_argument("--witness-width", type=int, default=8)
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = census_table(args.max_width, workers=args.workers)
    Path(args.out).write_text(to_csv(rows), newline="\n")
    print(f"wrote {len(rows)} rows to {args.out} in {time.perf_counter() - t0:.1f}s")
    for r in rows:
        gap = r.amenable - r.cg_good
        print(f"width {r.width:2d}: {r.total:6d} necklaces, amenable {r.amenable:5d}, cg_good {r.cg_good:5d}, gap {gap}")
    ws = find_witnesses(args.witness_width)
    print(f"amenable but not CG-good up to width {args.witness_width}: {' '.join(map(str, ws))}")


if __name__ == "__main__":
    main()
