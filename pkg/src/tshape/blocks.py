"""m-blocks: linear sign words whose graph runs from 0 to 0 inside [-m, 0]."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import BlockError, FullnessError


def levels(signs: str) -> list[int]:
    out = [0]
    for c in signs:
        out.append(out[-1] + (1 if c == "+" else -1))
    return out


def _check(signs: str, m: int) -> None:
    if m < 0:
        raise BlockError(f"depth bound must be non-negative, got {m}")
    if signs.strip("+-"):
        raise BlockError(f"block letters must be '+' or '-': {signs!r}")
    lv = levels(signs)
    if max(lv) > 0 or min(lv) < -m:
        raise BlockError(f"{signs or '0'} leaves the band [-{m}, 0]")
    if lv[-1] != 0:
        raise BlockError(f"{signs} ends at level {lv[-1]}, not 0")


@dataclass(frozen=True)
class Block:
    """An m-block. The declared bound ``m`` is kept even when it is not attained."""

    signs: str
    m: int

    def __post_init__(self):
        _check(self.signs, self.m)

    @property
    def width(self) -> int:
        return len(self.signs)

    @property
    def is_full(self) -> bool:
        return min(levels(self.signs)) == -self.m

    def local_minima(self) -> list[int]:
        """Interior vertices i with signs[i-1] == '-' and signs[i] == '+'."""
        s = self.signs
        return [i for i in range(1, len(s)) if s[i - 1] == "-" and s[i] == "+"]

    def __str__(self):
        return self.signs or "0"


def make_block(signs: str, m: int) -> Block:
    return Block(signs, m)


def is_full(b: Block) -> bool:
    return b.is_full


@lru_cache(maxsize=None)
def _block_words(m: int, width: int, full_only: bool) -> tuple[str, ...]:
    if width % 2 or width < 0 or m < 0:
        return ()
    out: list[str] = []

    def walk(prefix: list[str], level: int, low: int):
        left = width - len(prefix)
        if left == 0:
            if level == 0 and (not full_only or low == -m):
                out.append("".join(prefix))
            return
        # must still be able to climb back to 0
        if -level > left:
            return
        if level - 1 >= -m:
            prefix.append("-")
            walk(prefix, level - 1, min(low, level - 1))
            prefix.pop()
        if level + 1 <= 0:
            prefix.append("+")
            walk(prefix, level + 1, low)
            prefix.pop()

    walk([], 0, 0)
    return tuple(out)


def enumerate_blocks(m: int, width: int, full_only: bool = False) -> list[Block]:
    """All m-blocks of the given width, deepest-first ('-' is tried before '+')."""
    return [Block(s, m) for s in _block_words(m, width, full_only)]


def block_words(m: int, width: int, full_only: bool = False) -> tuple[str, ...]:
    return _block_words(m, width, full_only)


def block_derivative(b: Block) -> Block:
    """Linear pair rule; an m-block goes to an (m-1)-block."""
    if b.m == 0:
        return Block("", 0)
    s = b.signs
    return Block("".join(s[i] for i in range(len(s) - 1) if s[i] == s[i + 1]), b.m - 1)


def block_blow_up(b: Block, inserts: Sequence[Block]) -> Block:
    """Insert ``inserts[i]`` at vertex i of ``b`` (vertices 0..len(b)).

    Every insert must share one depth n; inserts at interior local minima must be full.
    """
    if len(inserts) != len(b.signs) + 1:
        raise BlockError(f"need {len(b.signs) + 1} inserts, got {len(inserts)}")
    depths = {ins.m for ins in inserts}
    if len(depths) != 1:
        raise BlockError(f"inserts have mixed depths {sorted(depths)}")
    (n,) = depths
    for i in b.local_minima():
        if not inserts[i].is_full:
            raise FullnessError(f"vertex {i} is a local minimum but insert {inserts[i]} is not full")
    parts = [inserts[0].signs]
    for c, ins in zip(b.signs, inserts[1:]):
        parts.append(c)
        parts.append(ins.signs)
    return Block("".join(parts), b.m + n)
