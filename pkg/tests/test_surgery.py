"""Framed braid diagrams, moves, and the open book export."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spuncalc.errors import InvalidDiagramError, InvalidMoveError
from spuncalc.homology import H1Invariants
from spuncalc.planar import parity_vector, twist
from spuncalc.surgery import (
    FramedBraidDiagram,
    blow_down,
    blow_up,
    h1_invariants,
    linking_matrix,
    parse_diagram,
    rolfsen_twist,
    to_planar_open_book,
)


def oracle_linking(d, i, j):
    """Count signed occurrences of the pair directly from the word."""
    if i == j:
        return d.framings[i - 1]
    return sum(e for a, b, e in d.braid_word if {a, b} == {i, j})


def diagrams(max_strands=5, max_letters=7, max_framing=9):
    def build(args):
        n, letters, framings = args
        word = tuple(
            (min(i, j), max(i, j), e)
            for i, j, e in letters
            if min(i, j) >= 1 and max(i, j) <= n and i != j
        )
        return FramedBraidDiagram(strands=n, braid_word=word, framings=tuple(framings[:n]))

    return st.integers(1, max_strands).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.tuples(st.integers(1, n), st.integers(1, n), st.sampled_from((1, -1))),
                max_size=max_letters,
            ),
            st.lists(st.integers(-max_framing, max_framing), min_size=n, max_size=n),
        )
    ).map(build)


def test_linking_matrix_examples():
    d = FramedBraidDiagram(strands=1, framings=(-7,))
    assert linking_matrix(d).rows == ((-7,),)
    d = FramedBraidDiagram(strands=2, braid_word=((1, 2, 1),), framings=(-4, -4))
    assert linking_matrix(d).rows == ((-4, 1), (1, -4))
    d = FramedBraidDiagram(
        strands=3,
        braid_word=((1, 2, -1), (1, 3, -1), (2, 3, -1)),
        framings=(-2, -2, -2),
    )
    assert linking_matrix(d).rows == ((-2, -1, -1), (-1, -2, -1), (-1, -1, -2))


@given(diagrams())
@settings(max_examples=100, deadline=None)
def test_linking_matrix_matches_counting_oracle(d):
    m = linking_matrix(d)
    for i in range(1, d.strands + 1):
        for j in range(1, d.strands + 1):
            assert m.rows[i - 1][j - 1] == oracle_linking(d, i, j)
            assert m.rows[i - 1][j - 1] == m.rows[j - 1][i - 1]


@given(diagrams(), st.randoms())
@settings(max_examples=60, deadline=None)
def test_linking_matrix_ignores_letter_order(d, rng):
    shuffled = list(d.braid_word)
    rng.shuffle(shuffled)
    d2 = FramedBraidDiagram(d.strands, tuple(shuffled), d.framings)
    assert linking_matrix(d2) == linking_matrix(d)


def test_h1_examples():
    assert h1_invariants(FramedBraidDiagram(1, (), (-7,))) == H1Invariants((7,), 0)
    assert h1_invariants(FramedBraidDiagram(1, (), (0,))) == H1Invariants((), 1)
    plumb = FramedBraidDiagram(2, ((1, 2, 1),), (-4, -2))
    assert h1_invariants(plumb) == H1Invariants((7,), 0)
    assert h1_invariants(FramedBraidDiagram(0, (), ())) == H1Invariants((), 0)


def test_blow_up_then_down_restores_surgery_data():
    d = FramedBraidDiagram(3, ((1, 2, 1), (2, 3, -1)), (-1, 4, 0))
    up, rec_up = blow_up(d, {1, 3}, sign=-1)
    assert up.strands == 4
    assert rec_up.h1_preserved
    down, rec_down = blow_down(up, 4)
    assert rec_down.h1_preserved
    assert down.strands == d.strands
    assert down.framings == d.framings
    assert linking_matrix(down) == linking_matrix(d)


def test_blow_down_isolated_unknot():
    d = FramedBraidDiagram(2, (), (1, 5))
    out, rec = blow_down(d, 1)
    assert out == FramedBraidDiagram(1, (), (5,))
    assert rec.h1_preserved


def test_blow_down_requires_unit_framing():
    d = FramedBraidDiagram(1, (), (3,))
    with pytest.raises(InvalidMoveError):
        blow_down(d, 1)
    with pytest.raises(InvalidMoveError):
        blow_down(d, 2)


def test_blow_up_validation():
    d = FramedBraidDiagram(2, (), (0, 0))
    with pytest.raises(InvalidMoveError):
        blow_up(d, set(), 1)
    with pytest.raises(InvalidMoveError):
        blow_up(d, {3}, 1)
    with pytest.raises(InvalidMoveError):
        blow_up(d, {1}, 2)


def test_rolfsen_twist_zero_framed():
    d = FramedBraidDiagram(2, ((1, 2, 1), (1, 2, 1)), (0, 3))
    out, rec = rolfsen_twist(d, 1, 5)
    assert out.framings == (0, 3 + 5 * 4)
    assert rec.h1_preserved


def test_rolfsen_twist_unit_framings():
    d = FramedBraidDiagram(2, ((1, 2, 1),), (1, 0))
    out, rec = rolfsen_twist(d, 1, -2)
    assert out.framings[0] == -1
    assert rec.h1_preserved
    d = FramedBraidDiagram(1, (), (2,))
    out, rec = rolfsen_twist(d, 1, -1)
    assert out.framings == (-2,)
    assert rec.h1_preserved


def test_rolfsen_twist_integrality_guard():
    d = FramedBraidDiagram(1, (), (3,))
    with pytest.raises(InvalidMoveError):
        rolfsen_twist(d, 1, 1)
    with pytest.raises(InvalidMoveError):
        rolfsen_twist(d, 1, -1)  # denominator vanishes


def random_applicable_move(rng, d):
    """Pick a move instance valid for the diagram, for fuzzing."""
    choices = ["blow_up"]
    units = [i for i, f in enumerate(d.framings, 1) if f in (1, -1)]
    if units:
        choices.append("blow_down")
    twistable = [
        (i, t)
        for i, f in enumerate(d.framings, 1)
        for t in ([rng.randint(-3, 3)] if f == 0 else [])
    ] + [(i, -2 * f) for i, f in enumerate(d.framings, 1) if f in (1, -1)] \
      + [(i, -f // 2) for i, f in enumerate(d.framings, 1) if f in (2, -2)]
    if twistable:
        choices.append("rolfsen_twist")
    kind = rng.choice(choices)
    if kind == "blow_up":
        region = rng.sample(range(1, d.strands + 1), rng.randint(1, d.strands))
        return blow_up(d, region, rng.choice((1, -1)))
    if kind == "blow_down":
        return blow_down(d, rng.choice(units))
    return rolfsen_twist(d, *rng.choice(twistable))


def test_moves_preserve_h1_fuzz():
    rng = random.Random(411)
    for _ in range(300):
        n = rng.randint(1, 5)
        word = tuple(
            (lambda i, j: (min(i, j), max(i, j), rng.choice((1, -1))))(
                rng.randint(1, n), rng.randint(1, n)
            )
            for _ in range(rng.randint(0, 6))
        )
        word = tuple(l for l in word if l[0] != l[1])
        framings = tuple(rng.randint(-9, 9) for _ in range(n))
        d = FramedBraidDiagram(n, word, framings)
        before = h1_invariants(d)
        out, rec = random_applicable_move(rng, d)
        assert rec.h1_preserved, (d, rec)
        assert h1_invariants(out) == before


def test_to_planar_open_book_examples():
    page, word = to_planar_open_book(FramedBraidDiagram(1, (), (-7,)))
    assert page.inner_count == 1
    assert word.letters == (twist({1}, 7),)

    page, word = to_planar_open_book(FramedBraidDiagram(0, (), ()))
    assert page.inner_count == 0
    assert word.letters == ()

    page, word = to_planar_open_book(
        FramedBraidDiagram(2, ((1, 2, 1),), (0, 0))
    )
    assert word.letters == (twist({1, 2}, -1),)
    assert parity_vector(word) == (1, 1)


def test_integer_surgery_export_matches_lens_parity():
    # one strand with framing -p exports tau_1^p, so the embedding parity
    # splits by the parity of p, matching the integer lens targets
    from spuncalc.lens import lens_embedding_target
    from spuncalc.spun import embedding_target

    for p in range(2, 30):
        page, word = to_planar_open_book(FramedBraidDiagram(1, (), (-p,)))
        report = embedding_target(page, word)
        assert report.spin == (p % 2 == 0)
        assert report.normalized == lens_embedding_target(p, 1)


def test_open_book_parity_stable_under_canceling_pair():
    d = FramedBraidDiagram(3, ((1, 2, 1),), (2, -3, 1))
    d2 = FramedBraidDiagram(3, ((1, 2, 1), (1, 3, 1), (1, 3, -1)), (2, -3, 1))
    _, w1 = to_planar_open_book(d)
    _, w2 = to_planar_open_book(d2)
    assert parity_vector(w1) == parity_vector(w2)


def test_diagram_validation():
    with pytest.raises(InvalidDiagramError):
        FramedBraidDiagram(2, ((2, 1, 1),), (0, 0))
    with pytest.raises(InvalidDiagramError):
        FramedBraidDiagram(2, ((1, 2, 2),), (0, 0))
    with pytest.raises(InvalidDiagramError):
        FramedBraidDiagram(2, (), (0,))


def test_parse_text_and_json():
    text = "strands 2\nframings -4 -2\nA 1 2 +1\n"
    d = parse_diagram(text)
    assert d == FramedBraidDiagram(2, ((1, 2, 1),), (-4, -2))
    assert parse_diagram(d.to_text()) == d
    import json
    assert parse_diagram(json.dumps(d.to_json())) == d
    assert FramedBraidDiagram.from_json(d.to_json()) == d
    with pytest.raises(InvalidDiagramError):
        parse_diagram("framings 1 2\n")
    with pytest.raises(InvalidDiagramError):
        parse_diagram("strands 1\nframings 0\nB 1 1 1\n")
