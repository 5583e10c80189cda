"""Words in normal form over a base shape.

A normal-form word is a blow-up in which some blocks carry designated
cancellations: up to ``lead`` letters of the block's initial ``-`` string may
cancel against the letter before them, and up to ``trail`` letters of its
final ``+`` string against the letter after them. Letters that are not
designated never cancel (they are separated by non-trivial coefficients), so
``realize`` only removes designated letters and their partners.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .blocks import Block, levels
from .blowup import GapKind, draw_block, _gap_values, _read_fields, gap_kinds, splice
from .core import Shape, canonical
from .errors import BlockError, NormalFormError, ParseError


def _lead_run(signs: str) -> int:
    return len(signs) - len(signs.lstrip("-"))


def _trail_run(signs: str) -> int:
    return len(signs) - len(signs.rstrip("+"))


@dataclass(frozen=True)
class NFInsertion:
    block: Block
    lead: int = 0
    trail: int = 0

    def __post_init__(self):
        if self.lead < 0 or self.trail < 0:
            raise NormalFormError("cancellation counts must be non-negative")
        if self.lead > _lead_run(self.block.signs):
            raise NormalFormError(f"lead={self.lead} exceeds the leading '-' string of {self.block}")
        if self.trail > _trail_run(self.block.signs):
            raise NormalFormError(f"trail={self.trail} exceeds the trailing '+' string of {self.block}")
        if self.lead + self.trail > self.block.width:
            raise NormalFormError(f"lead+trail exceeds the width of {self.block}")

    @property
    def cancellations(self) -> int:
        return self.lead + self.trail


@dataclass(frozen=True)
class NormalFormWord:
    base: Shape
    m: int
    insertions: tuple[NFInsertion, ...]

    @property
    def cancellations(self) -> int:
        return sum(ins.cancellations for ins in self.insertions)

    def raw(self) -> Shape:
        return splice(self.base, [ins.block.signs for ins in self.insertions])

    def to_text(self) -> str:
        lines = [f"base={self.base}", f"m={self.m}"]
        lines += [
            f"gap{i}={ins.block.signs};lead={ins.lead};trail={ins.trail}"
            for i, ins in enumerate(self.insertions)
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "NormalFormWord":
        fields = _read_fields(text)
        base, m = fields.pop("base"), fields.pop("m")
        insertions = [_parse_insertion(v, m) for v in _gap_values(fields, base.width)]
        return cls(base, m, tuple(insertions))


def _parse_insertion(value: str, m: int) -> NFInsertion:
    signs, *opts = value.split(";")
    kw = {"lead": 0, "trail": 0}
    for opt in opts:
        key, _, num = opt.partition("=")
        if key.strip() not in kw:
            raise ParseError(f"unknown insertion option {opt!r}")
        try:
            kw[key.strip()] = int(num)
        except ValueError:
            raise ParseError(f"bad count in {opt!r}") from None
    signs = signs.strip()
    return NFInsertion(Block("" if signs == "0" else signs, m), **kw)


# --- controlled cancellation -------------------------------------------------


def _cancel(w: NormalFormWord) -> tuple[str, int, list[str]]:
    """Cancel every designated letter against its neighbour on the designated side.

    Returns (surviving letters in order, number of letters removed, problems).
    """
    letters: list[str] = []
    is_base: list[bool] = []
    designated: list[tuple[int, int]] = []  # (position, direction)
    for c, ins in zip(w.base.signs, w.insertions):
        letters.append(c)
        is_base.append(True)
        start = len(letters)
        b = ins.block.signs
        letters.extend(b)
        is_base.extend([False] * len(b))
        designated += [(start + k, -1) for k in range(ins.lead)]
        designated += [(start + len(b) - 1 - k, +1) for k in range(ins.trail)]

    n = len(letters)
    nxt = [(i + 1) % n for i in range(n)]
    prv = [(i - 1) % n for i in range(n)]
    alive = [True] * n
    marked = {p for p, _ in designated}
    problems: list[str] = []
    removed = 0
    for p, direction in designated:
        if not alive[p]:
            problems.append(f"designated letter at {p} was already consumed")
            continue
        q = prv[p] if direction < 0 else nxt[p]
        if q == p or not alive[q] or letters[q] == letters[p]:
            problems.append(f"designated letter at {p} has no opposite neighbour to cancel")
            continue
        if q in marked:
            problems.append(f"designated letters at {p} and {q} would cancel each other")
            continue
        if not is_base[q]:
            problems.append(f"designated letter at {p} cancels inside a block (cascading)")
            continue
        for r in (p, q):
            alive[r] = False
            nxt[prv[r]] = nxt[r]
            prv[nxt[r]] = prv[r]
        removed += 2
    out = "".join(c for c, a in zip(letters, alive) if a)
    return out, removed, problems


def validate_nf(w: NormalFormWord) -> list[str]:
    """Violations of the normal-form conditions; empty means valid."""
    if not w.base.signs:
        return ["base shape is empty"]
    kinds = gap_kinds(w.base)
    if len(w.insertions) != len(kinds):
        return [f"base has {len(kinds)} gaps but {len(w.insertions)} insertions were given"]
    out = []
    for i, (kind, ins) in enumerate(zip(kinds, w.insertions)):
        b = ins.block
        if b.m != w.m:
            out.append(f"gap {i}: block depth {b.m} != m={w.m}")
        if kind is GapKind.BOTTOM:
            if not b.is_full:
                out.append(f"gap {i}: bottom block not full")
            if ins.cancellations:
                out.append(f"gap {i}: cancellation at bottom gap")
        elif kind is GapKind.TOP:
            lv = levels(b.signs)[ins.lead : b.width - ins.trail + 1]
            if 0 not in lv:
                out.append(f"gap {i}: top block misses level 0 once its cancelled strings are removed")
    _, removed, problems = _cancel(w)
    out += problems
    if not problems and removed != 2 * w.cancellations:
        out.append(f"reduction removed {removed} letters, expected {2 * w.cancellations}")
    return out


def realize(w: NormalFormWord) -> Shape:
    problems = validate_nf(w)
    if problems:
        raise NormalFormError("; ".join(problems))
    return canonical(Shape(_cancel(w)[0]))


def from_blow_up(base: Shape, m: int, blocks) -> NormalFormWord:
    return NormalFormWord(base, m, tuple(NFInsertion(b) for b in blocks))


# --- simplification move -----------------------------------------------------


def _set(insertions: list[NFInsertion], i: int, signs: str, m: int, lead=None, trail=None):
    old = insertions[i]
    insertions[i] = NFInsertion(
        Block(signs, m),
        old.lead if lead is None else lead,
        old.trail if trail is None else trail,
    )


def nf_simplify(w: NormalFormWord) -> NormalFormWord:
    """Apply one simplification move, removing one designated cancellation.

    Leading case: the block is split as ``- B + C`` where ``+`` is the first
    return to the block's starting level. The designated ``-`` and the base
    letter before it cancel, the ``+`` takes over as that base letter, ``B``
    is appended to the previous gap's block and ``C`` stays. The trailing case
    is the mirror image. The realized shape is unchanged.
    """
    problems = validate_nf(w)
    if problems:
        raise NormalFormError("; ".join(problems))
    width = w.base.width
    ins = list(w.insertions)
    for i, cur in enumerate(ins):
        if cur.lead:
            d = cur.block.signs
            lv = levels(d)
            z = lv.index(0, 1)
            inner, rest = d[1 : z - 1], d[z:]
            if width == 1:
                _set(ins, i, rest + inner, w.m, lead=cur.lead - 1)
            else:
                prev = (i - 1) % width
                _set(ins, prev, ins[prev].block.signs + inner, w.m)
                _set(ins, i, rest, w.m, lead=cur.lead - 1)
            break
        if cur.trail:
            d = cur.block.signs
            lv = levels(d)
            z = max(k for k in range(len(d)) if lv[k] == 0)
            head, inner = d[:z], d[z + 1 : -1]
            if width == 1:
                _set(ins, i, inner + head, w.m, trail=cur.trail - 1)
            else:
                nxt = (i + 1) % width
                _set(ins, nxt, inner + ins[nxt].block.signs, w.m)
                _set(ins, i, head, w.m, trail=cur.trail - 1)
            break
    else:
        raise NormalFormError("no cancellation present")
    return replace(w, insertions=tuple(ins))


def simplify_all(w: NormalFormWord) -> list[NormalFormWord]:
    """The chain of words produced by repeated moves, ending cancellation-free."""
    chain = [w]
    while chain[-1].cancellations:
        chain.append(nf_simplify(chain[-1]))
    return chain


# --- generator -------------------------------------------------------------


def random_nf(t: Shape, m: int, max_block_width: int, seed) -> NormalFormWord:
    """Seeded random valid word: random m-blocks plus admissible cancellations."""
    kinds = gap_kinds(t)
    if GapKind.BOTTOM in kinds and max_block_width < 2 * m:
        raise BlockError(f"a full {m}-block needs width {2 * m} > {max_block_width}")
    rng = random.Random(seed)
    s = t.signs
    n = len(s)
    insertions = []
    for i, kind in enumerate(kinds):
        b = draw_block(rng, m, max_block_width, kind is GapKind.BOTTOM)
        lead = trail = 0
        if kind is not GapKind.BOTTOM and b.signs:
            if s[i] == "+" and rng.random() < 0.5:
                lead = 1
            if s[(i + 1) % n] == "-" and rng.random() < 0.5:
                trail = 1
            if lead and trail and 0 not in levels(b.signs)[1:-1]:
                trail = 0
        insertions.append(NFInsertion(b, lead, trail))
    w = NormalFormWord(t, m, tuple(insertions))
    assert not validate_nf(w), validate_nf(w)
    return w
