import random

import pytest
from hypothesis import given, strategies as st

from oracles import all_words
from strategies import shapes
from tshape.blocks import Block
from tshape.blowup import (
    BlowUpSpec,
    GapKind,
    blow_up,
    blow_up_depth,
    gap_kinds,
    is_blow_up_of,
    peel,
    random_blow_up,
    splice,
)
from tshape.calculus import derivative, is_power, iterate
from tshape.core import Shape, canonical, cyclic_equal
from tshape.errors import BlockError, DerivativeEmptyError, FullnessError, ParseError, ShapeError

S = Shape
T, M, B = GapKind.TOP, GapKind.MIDDLE, GapKind.BOTTOM


def spec(base, m, blocks):
    return BlowUpSpec(S(base), m, tuple(Block(b, m) for b in blocks))


def test_gap_kinds():
    assert gap_kinds(S("+-")) == [T, B]
    assert gap_kinds(S("++")) == [M, M]
    assert gap_kinds(S("+-++--")) == [T, B, M, T, M, B]
    with pytest.raises(ShapeError):
        gap_kinds(S(""))


@given(shapes(min_size=1))
def test_bottom_gaps_are_local_minima(t):
    s = t.signs
    n = len(s)
    for i, kind in enumerate(gap_kinds(t)):
        assert (kind is B) == (s[i] == "-" and s[(i + 1) % n] == "+")


def test_blow_up_examples():
    assert blow_up(spec("+-", 1, ["", "-+"])) == S("++--")
    u = blow_up(spec("+-", 2, ["", "--++"]))
    assert u == canonical(S("+---++"))
    assert iterate(u, 2) == S("+-")
    u = blow_up(spec("++", 1, ["-+", ""]))
    assert u == canonical(S("+-++")) and derivative(u) == S("++")


def test_blow_up_errors():
    with pytest.raises(FullnessError):
        blow_up(spec("+-", 1, ["", ""]))
    with pytest.raises(BlockError):
        blow_up(BlowUpSpec(S("+-"), 2, (Block("", 2), Block("-+", 1))))
    with pytest.raises(BlockError):
        blow_up(spec("+-", 1, ["-+"]))


def test_random_blow_up():
    u, sp = random_blow_up(S("+-"), 1, 4, seed=7)
    assert derivative(u) == S("+-")
    assert random_blow_up(S("+-"), 1, 4, seed=7) == (u, sp)
    u, _ = random_blow_up(S("++"), 1, 0, seed=3)
    assert u == S("++")
    with pytest.raises(BlockError):
        random_blow_up(S("+-"), 2, 2, seed=0)


def test_peel_examples():
    base, blocks = peel(S("+--+"))
    assert base == S("+-") and [b.signs for b in blocks] == ["", "-+"]
    base, blocks = peel(S("+-+-+--+"))
    assert base == S("+-") and [b.signs for b in blocks] == ["-+-+", "-+"]
    with pytest.raises(DerivativeEmptyError):
        peel(S("+-+-"))
    with pytest.raises(DerivativeEmptyError):
        peel(S(""))


def test_peel_handles_wrapped_pair():
    base, blocks = peel(S("+-++-"))  # the (-, +) pair at index 4 wraps to index 0
    assert cyclic_equal(splice(base, [b.signs for b in blocks]), S("+-++-"))


def test_lemma_3_1_backward_exhaustive():
    for w in range(1, 13):
        for s in all_words(w):
            u = S(s)
            if derivative(u).width == 0:
                with pytest.raises(DerivativeEmptyError):
                    peel(u)
                continue
            base, blocks = peel(u)
            assert cyclic_equal(base, derivative(u))
            assert cyclic_equal(blow_up(BlowUpSpec(base, 1, tuple(blocks))), u)


@given(shapes(min_size=1, max_size=10), st.integers(0, 2**32))
def test_lemma_3_1_forward(t, seed):
    u, sp = random_blow_up(t, 1, 6, seed)
    assert cyclic_equal(derivative(u), t)
    assert u.degree == t.degree
    assert u.width == t.width + sum(b.width for b in sp.gap_blocks)


@given(shapes(min_size=1, max_size=8), st.integers(1, 3), st.integers(1, 3), st.integers(0, 2**32))
def test_composite_blow_ups(t, m, n, seed):
    u, _ = random_blow_up(t, m, 2 * m + 2, seed)
    v, _ = random_blow_up(u, n, 2 * n + 2, seed + 1)
    assert is_blow_up_of(v, t, n + m)
    assert is_blow_up_of(v, u, n)


def test_fullness_is_necessary():
    rng = random.Random(5)
    checked = 0
    while checked < 300:
        t = S("".join(rng.choice("+-") for _ in range(rng.randint(2, 8))))
        if is_power(t):
            continue
        m = rng.randint(1, 3)
        _, sp = random_blow_up(t, m, 2 * m + 2, rng.random())
        blocks = [b.signs for b in sp.gap_blocks]
        bottoms = [i for i, k in enumerate(gap_kinds(t)) if k is B]
        blocks[rng.choice(bottoms)] = ""
        assert not is_blow_up_of(splice(t, blocks), t, m)
        checked += 1


@pytest.mark.parametrize(
    "u, t, n, expected",
    [("+---++", "+-", 2, True), ("++--", "+-", 1, True), ("++--", "++--", 0, True), ("++--", "--++", 0, True)],
)
def test_is_blow_up_of(u, t, n, expected):
    assert is_blow_up_of(S(u), S(t), n) is expected


@pytest.mark.parametrize("n", range(0, 6))
def test_powers_are_never_blow_ups_of_other_powers(n):
    assert not is_blow_up_of(S("++"), S("+++"), n)


def test_blow_up_depth():
    assert blow_up_depth(S("+---++"), S("+-")) == 2
    assert blow_up_depth(S("++"), S("+++")) is None
    assert blow_up_depth(S("+-+-"), S("")) == 1


def test_spec_text_round_trip():
    sp = spec("+-", 2, ["", "--++"])
    text = sp.to_text()
    assert text == "base=+-\nm=2\ngap0=\ngap1=--++\n"
    assert BlowUpSpec.from_text(text) == sp
    assert BlowUpSpec.from_text("base=+-\nm=1\ngap0=0\ngap1=-+\n") == spec("+-", 1, ["", "-+"])


@pytest.mark.parametrize(
    "text",
    ["m=1\ngap0=\n", "base=+-\nm=x\n", "base=+-\nm=1\ngap0=\n", "base=+-\nm=1\ngap0=\ngap1=-+\ngap2=\n", "junk"],
)
def test_spec_text_errors(text):
    with pytest.raises(ParseError):
        BlowUpSpec.from_text(text)
