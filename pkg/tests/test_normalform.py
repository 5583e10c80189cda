import itertools

import pytest
from hypothesis import given, strategies as st

from strategies import shapes
from tshape.blocks import Block, enumerate_blocks
from tshape.blowup import BlowUpSpec, GapKind, blow_up, gap_kinds
from tshape.calculus import iterate
from tshape.core import Shape, cyclic_equal
from tshape.errors import BlockError, NormalFormError, ParseError
from tshape.normalform import (
    NFInsertion,
    NormalFormWord,
    from_blow_up,
    nf_simplify,
    random_nf,
    realize,
    simplify_all,
    validate_nf,
)

S = Shape


def word(base, m, *insertions):
    return NormalFormWord(S(base), m, tuple(NFInsertion(Block(b, m), lead, trail) for b, lead, trail in insertions))


def test_plain_blow_up_is_valid():
    w = word("+-", 1, ("-+", 0, 0), ("-+", 0, 0))
    assert validate_nf(w) == []
    assert realize(w) == blow_up(BlowUpSpec(S("+-"), 1, (Block("-+", 1), Block("-+", 1))))


def test_bottom_violations():
    assert "bottom block not full" in validate_nf(word("+-", 1, ("", 0, 0), ("", 0, 0)))[0]
    w = word("+-", 1, ("", 0, 0), ("-+", 1, 0))
    assert any("cancellation at bottom" in v for v in validate_nf(w))


def test_realize_zero_cancellation():
    assert realize(word("+-", 1, ("", 0, 0), ("-+", 0, 0))) == S("++--")


def test_realize_middle_gap_cancellation():
    # "+ -+ +": the designated '-' cancels the base '+' before it
    w = word("++", 1, ("-+", 1, 0), ("", 0, 0))
    assert validate_nf(w) == []
    assert w.raw().width == 4
    assert realize(w) == S("++")
    assert iterate(realize(w), 1) == S("++")


def test_top_gap_needs_level_zero():
    # both ends of "-+" cancel and nothing of it reaches level 0: the peak vanishes
    w = word("+-", 1, ("-+", 1, 1), ("-+", 0, 0))
    assert any("level 0" in v for v in validate_nf(w))
    w = word("+-", 1, ("-+-+", 1, 1), ("-+", 0, 0))
    assert validate_nf(w) == []
    assert cyclic_equal(iterate(realize(w), 1), S("+-"))


def test_impossible_cancellations_are_violations():
    # lead '-' after a base '-' has nothing to cancel with
    w = word("--", 1, ("-+", 1, 0), ("", 0, 0))
    assert any("no opposite neighbour" in v for v in validate_nf(w))
    # a second leading '-' would have to cancel inside the previous block
    w = word("++", 2, ("-+", 0, 0), ("--++", 2, 0))
    assert any("cascading" in v for v in validate_nf(w))
    with pytest.raises(NormalFormError):
        realize(w)


def test_insertion_bounds():
    with pytest.raises(NormalFormError):
        NFInsertion(Block("-+", 1), lead=2)
    with pytest.raises(NormalFormError):
        NFInsertion(Block("-+", 1), trail=2)
    with pytest.raises(NormalFormError):
        NFInsertion(Block("--++", 2), lead=-1)


def test_simplify_middle_example():
    w = word("++", 1, ("-+", 1, 0), ("", 0, 0))
    v = nf_simplify(w)
    assert v.cancellations == 0
    assert realize(v) == realize(w)
    assert realize(v) == blow_up(BlowUpSpec(v.base, 1, tuple(i.block for i in v.insertions)))


def test_simplify_top_both_ends():
    w = word("+-", 1, ("-+-+", 1, 1), ("-+", 0, 0))
    chain = simplify_all(w)
    assert [x.cancellations for x in chain] == [2, 1, 0]
    assert len({realize(x) for x in chain}) == 1


def test_simplify_width_one_base():
    w = word("+", 2, ("--++", 1, 0))
    v = nf_simplify(w)
    assert v.cancellations == 0 and realize(v) == realize(w)
    w = word("-", 2, ("-+-++", 0, 0)[:0] + ("--++", 0, 1))
    v = nf_simplify(w)
    assert v.cancellations == 0 and realize(v) == realize(w)


def test_simplify_errors():
    with pytest.raises(NormalFormError, match="no cancellation"):
        nf_simplify(word("+-", 1, ("", 0, 0), ("-+", 0, 0)))
    with pytest.raises(NormalFormError):
        nf_simplify(word("+-", 1, ("-+", 1, 1), ("-+", 0, 0)))


def test_random_nf():
    w = random_nf(S("+-"), 1, 6, seed=3)
    assert validate_nf(w) == [] and cyclic_equal(iterate(realize(w), 1), S("+-"))
    w = random_nf(S("++"), 2, 8, seed=1)
    assert validate_nf(w) == [] and cyclic_equal(iterate(realize(w), 2), S("++"))
    assert random_nf(S("++"), 2, 8, seed=1) == w
    with pytest.raises(BlockError):
        random_nf(S("+-"), 2, 2, seed=0)


def _gap_choices(kind, m, max_width):
    full = kind is GapKind.BOTTOM
    return [b for w in range(0, max_width + 1, 2) for b in enumerate_blocks(m, w, full)]


def test_zero_cancellation_words_are_blow_ups():
    count = 0
    for width in range(1, 5):
        for letters in itertools.product("+-", repeat=width):
            base = S("".join(letters))
            kinds = gap_kinds(base)
            for m in (1, 2):
                pools = [_gap_choices(k, m, 4) for k in kinds]
                for blocks in itertools.product(*pools):
                    w = from_blow_up(base, m, blocks)
                    assert validate_nf(w) == []
                    assert realize(w) == blow_up(BlowUpSpec(base, m, tuple(blocks)))
                    count += 1
    assert count > 1000


@given(shapes(min_size=1, max_size=8), st.integers(1, 3), st.integers(0, 2**32))
def test_normal_form_words_are_blow_ups(t, m, seed):
    w = random_nf(t, m, 2 * m + 4, seed)
    r = realize(w)
    assert r.width == w.raw().width - 2 * w.cancellations
    assert cyclic_equal(iterate(r, m), t)
    chain = simplify_all(w)
    assert len(chain) - 1 == w.cancellations
    for a, b in zip(chain, chain[1:]):
        assert b.cancellations == a.cancellations - 1
        assert validate_nf(b) == []
        assert realize(b) == r


def test_nf_text_round_trip():
    w = word("+-", 1, ("-+-+", 1, 1), ("-+", 0, 0))
    text = w.to_text()
    assert text == "base=+-\nm=1\ngap0=-+-+;lead=1;trail=1\ngap1=-+;lead=0;trail=0\n"
    assert NormalFormWord.from_text(text) == w
    assert NormalFormWord.from_text("base=+-\nm=1\ngap0=\ngap1=-+\n") == word("+-", 1, ("", 0, 0), ("-+", 0, 0))
    with pytest.raises(ParseError):
        NormalFormWord.from_text("base=+-\nm=1\ngap0=;cancel=1\ngap1=-+\n")
