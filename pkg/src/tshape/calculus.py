"""Magnus differentiation, derivative orbits and the shape classes.

``derivative`` uses the pair rule: one output letter for every cyclically
adjacent pair of equal signs. ``derivative_runs`` and ``derivative_delete``
are independent formulations kept as cross-checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .core import Shape, canonical, format_shape, runs

LABELS = ("power-Levin", "degree1-Klyachko", "tt-inverse-HNN", "cg-good", "amenable")


def _pair_rule(signs: str) -> str:
    n = len(signs)
    return "".join(signs[i] for i in range(n) if signs[i] == signs[(i + 1) % n])


@lru_cache(maxsize=1 << 18)
def _derivative_str(signs: str) -> str:
    return canonical(Shape(_pair_rule(signs))).signs


def derivative(t: Shape) -> Shape:
    return Shape(_derivative_str(t.signs))


def derivative_runs(t: Shape) -> Shape:
    """Decrement every cyclic run, drop empty runs, merge neighbours of equal sign.

    Only meaningful for non-power shapes with at least two runs.
    """
    rf = runs(t)
    if len(rf) < 2:
        raise ValueError("run rule needs a non-power, non-empty shape")
    out = []
    for r in rf.signed:
        k = abs(r) - 1
        if k:
            out.append(("+" if r > 0 else "-") * k)
    # Merging is implicit once the runs are concatenated back into a word.
    return canonical(Shape("".join(out)))


def _delete_minima(signs: str) -> str:
    n = len(signs)
    doomed = set()
    for i in range(n):
        j = (i + 1) % n
        if signs[i] == "-" and signs[j] == "+" and i != j:
            doomed.update((i, j))
    return "".join(c for i, c in enumerate(signs) if i not in doomed)


def derivative_delete(t: Shape) -> Shape:
    """Delete every cyclically adjacent (-, +) pair, i.e. every local minimum."""
    return canonical(Shape(_delete_minima(t.signs)))


def iterate(t: Shape, n: int) -> Shape:
    for _ in range(n):
        t = derivative(t)
    return t


def orbit(t: Shape) -> list[Shape]:
    """``[t, D t, D^2 t, ...]`` up to and including the first fixed point.

    The first entry is ``t`` as given; every later entry is canonical.
    """
    out = [t]
    cur = canonical(t)
    while True:
        nxt = derivative(cur)
        if nxt == cur:
            return out
        out.append(nxt)
        cur = nxt


# --- predicates -------------------------------------------------------------


def is_power(t: Shape) -> bool:
    s = t.signs
    return bool(s) and (s.count("+") == 0 or s.count("-") == 0)


def _clumps(t: Shape) -> list[int]:
    """Signed orders of the clumps (cyclic runs of length > 1)."""
    return [r for r in runs(t).signed if abs(r) > 1]


def is_one_clump(t: Shape) -> bool:
    return not is_power(t) and len(_clumps(t)) == 1


def is_suitable(t: Shape) -> bool:
    if not t.signs or is_power(t):
        return False
    clumps = _clumps(t)
    up = sum(1 for r in clumps if r > 0)
    down = len(clumps) - up
    return up == 1 or down == 1


def is_tt_inverse(t: Shape) -> bool:
    return t.signs in ("+-", "-+")


def is_cg_good(t: Shape) -> bool:
    return any(is_one_clump(u) for u in orbit(t))


def is_amenable(t: Shape) -> bool:
    return any(is_one_clump(u) or is_tt_inverse(u) for u in orbit(t))


def reaches_tt_inverse(t: Shape) -> bool:
    """Some derivative D^n t with n >= 1 is tt^-1."""
    return any(is_tt_inverse(u) for u in orbit(t)[1:])


def is_amenable_not_cg(t: Shape) -> bool:
    """Amenable but not CG-good, leaving out the honorary member tt^-1 itself."""
    return is_amenable(t) and not is_cg_good(t) and not is_tt_inverse(t)


# Blow-up definition of amenability. Deliberately shares nothing with the code
# above: its own derivative (minimum deletion), its own clump scan.


def _suitable_scan(signs: str) -> bool:
    n = len(signs)
    if n == 0 or "+" not in signs or "-" not in signs:
        return False
    # rotate so that position 0 starts a run
    k = next(i for i in range(n) if signs[i] != signs[i - 1])
    s = signs[k:] + signs[:k]
    up = down = 0
    i = 0
    while i < n:
        j = i
        while j < n and s[j] == s[i]:
            j += 1
        if j - i > 1:
            if s[i] == "+":
                up += 1
            else:
                down += 1
        i = j
    return up == 1 or down == 1


def is_amenable_via_definition(t: Shape) -> bool:
    """Some iterated derivative is suitable (or the shape is tt^-1 itself)."""
    signs = t.signs
    if len(signs) == 2 and signs[0] != signs[1]:
        return True
    while True:
        if _suitable_scan(signs):
            return True
        nxt = _delete_minima(signs)
        if len(nxt) == len(signs):
            return False
        signs = nxt


# --- classification ---------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    width: int
    degree: int
    is_power: bool
    is_one_clump: bool
    is_suitable: bool
    is_cg_good: bool
    is_amenable: bool
    orbit_length: int
    terminal: Shape
    known_good: frozenset[str] = field(default_factory=frozenset)

    def as_dict(self) -> dict:
        return {
            "width": self.width,
            "degree": self.degree,
            "power": self.is_power,
            "one_clump": self.is_one_clump,
            "suitable": self.is_suitable,
            "cg_good": self.is_cg_good,
            "amenable": self.is_amenable,
            "orbit_length": self.orbit_length,
            "terminal": format_shape(self.terminal),
            "known_good": sorted(self.known_good),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"), sort_keys=True)


def classify(t: Shape) -> Classification:
    orb = orbit(t)
    power = is_power(t)
    one_clump = is_one_clump(t)
    cg_good = any(is_one_clump(u) for u in orb)
    amenable = cg_good or any(is_tt_inverse(u) for u in orb)
    labels = set()
    if power:
        labels.add("power-Levin")
    if abs(t.degree) == 1:
        labels.add("degree1-Klyachko")
    if is_tt_inverse(t):
        labels.add("tt-inverse-HNN")
    if cg_good:
        labels.add("cg-good")
    if amenable:
        labels.add("amenable")
    return Classification(
        width=t.width,
        degree=t.degree,
        is_power=power,
        is_one_clump=one_clump,
        is_suitable=is_suitable(t),
        is_cg_good=cg_good,
        is_amenable=amenable,
        orbit_length=len(orb),
        terminal=orb[-1] if len(orb) > 1 else canonical(t),
        known_good=frozenset(labels),
    )

