"""Exhaustive census of cyclic shapes by width."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import Callable, Iterator

from .calculus import classify, is_tt_inverse, reaches_tt_inverse
from .core import Shape, canonical, invert


def necklaces(width: int) -> Iterator[Shape]:
    """Least-rotation representatives of {+,-}^width, in increasing order.

    Fredricksen-Kessler-Maiorana generation over the alphabet 0='+' < 1='-'.
    """
    if width < 1:
        return
    a = [0] * (width + 1)
    p = 1
    while True:
        if width % p == 0:
            yield Shape("".join("+-"[x] for x in a[1:]))
        t = width
        while t > 0 and a[t] == 1:
            t -= 1
        if t == 0:
            return
        a[t] += 1
        for j in range(t + 1, width + 1):
            a[j] = a[j - t]
        p = t


def bracelet_rep(t: Shape) -> bool:
    """True if t is the chosen representative of its rotation+inversion class."""
    return t.signs <= canonical(invert(t)).signs


@dataclass
class CensusRow:
    width: int
    total: int = 0
    power: int = 0
    one_clump: int = 0
    suitable: int = 0
    cg_good: int = 0
    amenable: int = 0
    amenable_not_cg: int = 0
    degree_pm1: int = 0
    unknown: int = 0

    def add(self, other: "CensusRow") -> None:
        for f in fields(self)[1:]:
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))


CSV_HEADER = [f.name for f in fields(CensusRow)]


def _count(width: int, part: int = 0, parts: int = 1, inversion: bool = False) -> CensusRow:
    row = CensusRow(width)
    for k, t in enumerate(necklaces(width)):
        if k % parts != part:
            continue
        if inversion and not bracelet_rep(t):
            continue
        c = classify(t)
        row.total += 1
        row.power += c.is_power
        row.one_clump += c.is_one_clump
        row.suitable += c.is_suitable
        row.cg_good += c.is_cg_good
        row.amenable += c.is_amenable
        row.amenable_not_cg += c.is_amenable and not c.is_cg_good and not is_tt_inverse(t)
        row.degree_pm1 += abs(c.degree) == 1
        row.unknown += not c.known_good
    return row


def _count_args(args):
    return _count(*args)


def census_row(width: int, inversion: bool = False) -> CensusRow:
    return _count(width, inversion=inversion)


def census_table(max_width: int, workers: int = 1, inversion: bool = False) -> list[CensusRow]:
    """One row per width 1..max_width.

    With ``workers > 1`` each width is split into ``workers`` strided slices
    that are counted in separate processes and summed.
    """
    if workers <= 1:
        return [_count(w, inversion=inversion) for w in range(1, max_width + 1)]
    jobs = [(w, part, workers, inversion) for w in range(1, max_width + 1) for part in range(workers)]
    rows = {w: CensusRow(w) for w in range(1, max_width + 1)}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for partial in pool.map(_count_args, jobs, chunksize=1):
            rows[partial.width].add(partial)
    return [rows[w] for w in sorted(rows)]


def to_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(astuple(row))
    return buf.getvalue()


# --- witnesses ---------------------------------------------------------------

_ATOMS: dict[str, Callable] = {
    "power": lambda c, t: c.is_power,
    "one_clump": lambda c, t: c.is_one_clump,
    "suitable": lambda c, t: c.is_suitable,
    "cg_good": lambda c, t: c.is_cg_good,
    "amenable": lambda c, t: c.is_amenable,
    "amenable_not_cg": lambda c, t: c.is_amenable and not c.is_cg_good and not is_tt_inverse(t),
    "degree_pm1": lambda c, t: abs(c.degree) == 1,
    "unknown": lambda c, t: not c.known_good,
    "reaches_tt_inverse": lambda c, t: reaches_tt_inverse(t),
}

PREDICATES = tuple(_ATOMS)


def parse_predicate(text: str) -> Callable[[Shape], bool]:
    """Conjunction of atoms joined by '&', each optionally negated with '!'.

    e.g. ``amenable_not_cg``, ``suitable&!cg_good``.
    """
    terms = []
    for raw in text.split("&"):
        atom = raw.strip()
        negate = atom.startswith("!")
        atom = atom.lstrip("!").strip()
        if atom not in _ATOMS:
            raise ValueError(f"unknown predicate {atom!r}; choose from {', '.join(PREDICATES)}")
        terms.append((_ATOMS[atom], negate))

    def pred(t: Shape) -> bool:
        c = classify(t)
        return all(f(c, t) != negate for f, negate in terms)

    return pred


def find_witnesses(max_width: int, predicate: str | Callable[[Shape], bool] = "amenable_not_cg") -> list[Shape]:
    if isinstance(predicate, str):
        predicate = parse_predicate(predicate)
    return [t for w in range(1, max_width + 1) for t in necklaces(w) if predicate(t)]
