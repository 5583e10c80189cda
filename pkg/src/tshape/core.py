"""Cyclic t-shapes: the value type, canonical forms, measures, runs and graphs.

A shape is stored as a string over ``'+'`` and ``'-'`` (``t`` and ``t^-1``).
ASCII order already puts ``'+'`` before ``'-'``, so the canonical form is just
the least rotation under plain string comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import NotReducedError, ParseError

EMPTY_SPELLING = "0"

_COMPACT_RE = re.compile(r"[+-]+")
_TLETTER_RE = re.compile(r"t(?:\^(-?\d+))?")
_COEFF_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True, slots=True)
class Shape:
    """A finite sign sequence read cyclically. Equality is literal, not cyclic."""

    signs: str = ""

    def __post_init__(self):
        if self.signs.strip("+-"):
            raise ParseError(f"shape letters must be '+' or '-': {self.signs!r}")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "Shape":
        out = []
        for e in exponents:
            if e == 1:
                out.append("+")
            elif e == -1:
                out.append("-")
            else:
                raise ParseError(f"exponent must be +1 or -1, got {e}")
        return cls("".join(out))

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(1 if c == "+" else -1 for c in self.signs)

    @property
    def width(self) -> int:
        return len(self.signs)

    @property
    def degree(self) -> int:
        return self.signs.count("+") - self.signs.count("-")

    def __len__(self):
        return len(self.signs)

    def __str__(self):
        return self.signs or EMPTY_SPELLING


EMPTY = Shape("")
TT_INVERSE = Shape("+-")


@dataclass(frozen=True)
class RunForm:
    """Cyclic run decomposition ``t^{r1} t^{-r2} ...`` with wrap-around merged."""

    start_sign: int
    run_lengths: tuple[int, ...]

    @property
    def signed(self) -> tuple[int, ...]:
        """Run lengths with alternating signs, e.g. (4, -1, 1, -2)."""
        sign = self.start_sign
        out = []
        for r in self.run_lengths:
            out.append(sign * r)
            sign = -sign
        return tuple(out)

    def __len__(self):
        return len(self.run_lengths)


@dataclass(frozen=True)
class GraphTrace:
    points: tuple[tuple[int, int], ...]

    @property
    def levels(self) -> tuple[int, ...]:
        return tuple(level for _, level in self.points)

    def min_level(self) -> int:
        return min(self.levels)

    def to_csv(self) -> str:
        lines = ["i,level"]
        lines.extend(f"{i},{level}" for i, level in self.points)
        return "\n".join(lines) + "\n"

    def to_svg(self, scale: int = 20) -> str:
        # Single polyline on the integer lattice; y grows downward in SVG.
        levels = self.levels
        top, bottom = max(levels), min(levels)
        pad = scale
        width = (len(self.points) - 1) * scale + 2 * pad
        height = (top - bottom) * scale + 2 * pad
        pts = " ".join(f"{pad + i * scale},{pad + (top - level) * scale}" for i, level in self.points)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">\n'
            f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2"/>\n'
            "</svg>\n"
        )


# --- parsing and formatting -------------------------------------------------


def _t_exponent(token: str) -> int | None:
    """Exponent of a ``t``/``t^k`` token, or None if the token is not a t-letter."""
    m = _TLETTER_RE.fullmatch(token)
    if m is None:
        return None
    k = 1 if m.group(1) is None else int(m.group(1))
    if k == 0:
        raise ParseError(f"zero exponent in {token!r}")
    return k


def parse_shape(text: str) -> Shape:
    """Parse compact (``++-``) or run (``t^2 t^-1``) notation; ``0`` is empty."""
    text = text.strip()
    if text == EMPTY_SPELLING:
        return EMPTY
    if _COMPACT_RE.fullmatch(text):
        return Shape(text)
    tokens = text.split()
    if not tokens:
        raise ParseError("empty input (use '0' for the empty shape)")
    out = []
    for tok in tokens:
        k = _t_exponent(tok)
        if k is None:
            raise ParseError(f"unrecognised token {tok!r}")
        out.append(("+" if k > 0 else "-") * abs(k))
    return Shape("".join(out))


def _linear_runs(signs: str) -> list[tuple[str, int]]:
    runs: list[tuple[str, int]] = []
    for c in signs:
        if runs and runs[-1][0] == c:
            runs[-1] = (c, runs[-1][1] + 1)
        else:
            runs.append((c, 1))
    return runs


def format_shape(s: Shape, style: str = "compact") -> str:
    if not s.signs:
        return EMPTY_SPELLING
    if style == "compact":
        return s.signs
    if style == "runs":
        parts = []
        for c, n in _linear_runs(s.signs):
            k = n if c == "+" else -n
            parts.append("t" if k == 1 else f"t^{k}")
        return " ".join(parts)
    raise ValueError(f"unknown style {style!r}")


# --- cyclic structure -------------------------------------------------------


def _least_rotation(signs: str) -> str:
    n = len(signs)
    if n < 2:
        return signs
    doubled = signs + signs
    return min(doubled[i : i + n] for i in range(n))


def canonical(s: Shape) -> Shape:
    """Lexicographically least rotation, '+' < '-'."""
    return Shape(_least_rotation(s.signs))


def rotate(s: Shape, j: int) -> Shape:
    n = len(s.signs)
    if n == 0:
        return s
    j %= n
    return Shape(s.signs[j:] + s.signs[:j])


def cyclic_equal(a: Shape, b: Shape) -> bool:
    return len(a) == len(b) and _least_rotation(a.signs) == _least_rotation(b.signs)


def invert(s: Shape) -> Shape:
    """Inverse word: reverse the letters and negate every exponent."""
    return Shape(s.signs[::-1].translate(_FLIP))


_FLIP = str.maketrans("+-", "-+")


def measures(s: Shape) -> tuple[int, int]:
    return s.width, s.degree


def runs(s: Shape) -> RunForm:
    signs = s.signs
    if not signs:
        return RunForm(1, ())
    linear = _linear_runs(signs)
    if len(linear) > 1 and linear[0][0] == linear[-1][0]:
        c, n = linear.pop()
        linear[0] = (c, linear[0][1] + n)
    start = 1 if linear[0][0] == "+" else -1
    return RunForm(start, tuple(n for _, n in linear))


def graph_trace(s: Shape) -> GraphTrace:
    level = 0
    points = [(0, 0)]
    for i, c in enumerate(s.signs, 1):
        level += 1 if c == "+" else -1
        points.append((i, level))
    return GraphTrace(tuple(points))


# --- equations --------------------------------------------------------------


@dataclass(frozen=True)
class EquationWord:
    """Tokens of ``g1 t^e1 g2 t^e2 ...``: coefficient names (str) or exponents (+1/-1)."""

    tokens: tuple[str | int, ...]

    @classmethod
    def parse(cls, text: str) -> "EquationWord":
        tokens: list[str | int] = []
        for tok in text.split():
            k = _t_exponent(tok)
            if k is not None:
                tokens.extend([1 if k > 0 else -1] * abs(k))
            elif _COEFF_RE.fullmatch(tok):
                tokens.append(tok)
            else:
                raise ParseError(f"unrecognised token {tok!r}")
        if not any(isinstance(t, int) for t in tokens):
            raise ParseError("equation has no t-letter")
        return cls(tuple(tokens))

    def check_reduced(self) -> None:
        """Raise NotReducedError if some t, t^-1 pair is cyclically adjacent."""
        toks = self.tokens
        n = len(toks)
        letters = [i for i, t in enumerate(toks) if isinstance(t, int)]
        for a, b in zip(letters, letters[1:] + letters[:1]):
            if toks[a] + toks[b] != 0:
                continue
            gap = b - a - 1 if b > a else n - a - 1 + b
            if gap == 0:
                raise NotReducedError(f"t-letters at tokens {a} and {b} cancel")


def extract_shape(w: EquationWord | str) -> Shape:
    if isinstance(w, str):
        w = EquationWord.parse(w)
    w.check_reduced()
    return Shape.from_exponents(t for t in w.tokens if isinstance(t, int))


def all_shapes(width: int) -> Iterable[Shape]:
    """Every linear spelling of the given width (2**width of them)."""
    from itertools import product

    for letters in product("+-", repeat=width):
        yield Shape("".join(letters))
