"""m-blow-ups of cyclic shapes and their inverse.

Gap ``i`` sits between letter ``i`` and letter ``i + 1`` (cyclically), and a
blow-up is spelled ``s_0 b_0 s_1 b_1 ... s_{w-1} b_{w-1}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .blocks import Block, block_words
from .calculus import iterate
from .core import Shape, canonical, cyclic_equal, parse_shape
from .errors import BlockError, DerivativeEmptyError, FullnessError, ParseError, ShapeError


class GapKind(str, Enum):
    TOP = "top"
    MIDDLE = "middle"
    BOTTOM = "bottom"


def gap_kind(a: str, b: str) -> GapKind:
    if a == b:
        return GapKind.MIDDLE
    return GapKind.TOP if a == "+" else GapKind.BOTTOM


def gap_kinds(t: Shape) -> list[GapKind]:
    s = t.signs
    if not s:
        raise ShapeError("the empty shape has no gaps")
    n = len(s)
    return [gap_kind(s[i], s[(i + 1) % n]) for i in range(n)]


@dataclass(frozen=True)
class BlowUpSpec:
    base: Shape
    m: int
    gap_blocks: tuple[Block, ...]

    def validate(self) -> None:
        kinds = gap_kinds(self.base)
        if len(self.gap_blocks) != len(kinds):
            raise BlockError(f"base has {len(kinds)} gaps but {len(self.gap_blocks)} blocks were given")
        for i, (kind, b) in enumerate(zip(kinds, self.gap_blocks)):
            if b.m != self.m:
                raise BlockError(f"gap {i}: block depth {b.m} != m={self.m}")
            if kind is GapKind.BOTTOM and not b.is_full:
                raise FullnessError(f"gap {i} is a local minimum but block {b} is not full")

    def to_text(self) -> str:
        lines = [f"base={self.base}", f"m={self.m}"]
        lines += [f"gap{i}={b.signs}" for i, b in enumerate(self.gap_blocks)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BlowUpSpec":
        fields = _read_fields(text)
        base, m = fields.pop("base"), fields.pop("m")
        blocks = [_block_field(v, m) for v in _gap_values(fields, base.width)]
        return cls(base, m, tuple(blocks))


def _read_fields(text: str) -> dict:
    fields: dict = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {line!r}")
        fields[key.strip()] = value.strip()
    try:
        fields["base"] = parse_shape(fields["base"])
        fields["m"] = int(fields["m"])
    except KeyError as e:
        raise ParseError(f"missing field {e.args[0]!r}") from None
    except ValueError as e:
        raise ParseError(str(e)) from None
    return fields


def _gap_values(fields: dict, width: int) -> list[str]:
    try:
        values = [fields.pop(f"gap{i}") for i in range(width)]
    except KeyError as e:
        raise ParseError(f"missing field {e.args[0]!r}") from None
    if fields:
        raise ParseError(f"unexpected fields {sorted(fields)}")
    return values


def _block_field(value: str, m: int) -> Block:
    value = value.strip()
    return Block("" if value == "0" else value, m)


def splice(base: Shape, blocks: Sequence[str]) -> Shape:
    """Raw interleaving ``s_0 b_0 s_1 b_1 ...`` with no validation or canonicalisation."""
    return Shape("".join(c + b for c, b in zip(base.signs, blocks)))


def blow_up(spec: BlowUpSpec) -> Shape:
    spec.validate()
    return canonical(splice(spec.base, [b.signs for b in spec.gap_blocks]))


_POOL_WEIGHT = 0.5


def draw_block(rng: random.Random, m: int, max_width: int, full: bool) -> Block:
    widths = [w for w in range(0, max_width + 1, 2) if block_words(m, w, full)]
    # truncated geometric preference for short blocks
    weights = [_POOL_WEIGHT**k for k in range(len(widths))]
    w = rng.choices(widths, weights)[0]
    return Block(rng.choice(block_words(m, w, full)), m)


def random_blow_up(t: Shape, m: int, max_block_width: int, seed) -> tuple[Shape, BlowUpSpec]:
    """Seeded random m-blow-up of ``t``; returns the shape and the BlowUpSpec that built it."""
    if m < 0:
        raise BlockError(f"m must be non-negative, got {m}")
    kinds = gap_kinds(t)
    if GapKind.BOTTOM in kinds and max_block_width < 2 * m:
        raise BlockError(f"a full {m}-block needs width {2 * m} > {max_block_width}")
    rng = random.Random(seed)
    blocks = tuple(draw_block(rng, m, max_block_width, k is GapKind.BOTTOM) for k in kinds)
    spec = BlowUpSpec(t, m, blocks)
    return blow_up(spec), spec


def peel(u: Shape) -> tuple[Shape, list[Block]]:
    """Undo a 1-blow-up: strip every (-, +) pair; survivors spell the base.

    The base is spelled from ``u``'s own surviving letters, starting with the
    first survivor; each run of removed letters goes to the gap of the survivor
    it follows.
    """
    s = u.signs
    n = len(s)
    doomed = [False] * n
    for i in range(n):
        j = (i + 1) % n
        if s[i] == "-" and s[j] == "+" and i != j:
            doomed[i] = doomed[j] = True
    if all(doomed) or n == 0:
        raise DerivativeEmptyError(f"{u} differentiates to the empty shape")
    first = doomed.index(False)
    base: list[str] = []
    blocks: list[str] = []
    for k in range(n):
        i = (first + k) % n
        if doomed[i]:
            blocks[-1] += s[i]
        else:
            base.append(s[i])
            blocks.append("")
    return Shape("".join(base)), [Block(b, 1) for b in blocks]


def is_blow_up_of(u: Shape, t: Shape, n: int) -> bool:
    return cyclic_equal(iterate(u, n), t)


def blow_up_depth(u: Shape, t: Shape) -> int | None:
    """Smallest n with D^n(u) cyclically equal to t, searched up to the stabilisation bound."""
    cur = u
    for n in range(u.width // 2 + 2):
        if cyclic_equal(cur, t):
            return n
        cur = iterate(cur, 1)
    return None
