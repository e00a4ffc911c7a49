from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tangency.composition import (
    ATOM,
    STRING,
    Composition,
    decompose,
    from_text,
    gap_sign,
    insert,
    is_bullet,
    merge,
    norm,
    predecessors_one_step,
    reduced_norm,
    successors,
    to_text,
    virtual_multiplicity,
)
from tangency.errors import CompositionError, ParityError
from tangency.poset import UPTO, generate_omega

compositions = st.lists(st.integers(1, 5), max_size=6).map(Composition)
even_compositions = compositions.filter(lambda w: norm(w) % 2 == 0)


def C(*e):
    return Composition(e)


def test_norms():
    w = C(1, 4, 1)
    assert (norm(w), reduced_norm(w), virtual_multiplicity(w)) == (6, 3, 2)
    assert reduced_norm(C()) == 0
    assert virtual_multiplicity(C(3, 1)) == 1


def test_rejects_non_positive_entries():
    for bad in ([0], [-1], [1.5], [True]):
        with pytest.raises(CompositionError):
            Composition(bad)


def test_merge_and_insert():
    assert merge(C(1, 1, 1, 1), 2) == C(1, 2, 1)
    assert insert(C(1, 1), 1) == C(1, 2, 1)
    assert insert(C(), 0) == C(2)
    assert insert(C(3), 1) == C(3, 2)
    with pytest.raises(IndexError):
        merge(C(1, 1), 2)
    with pytest.raises(IndexError):
        insert(C(1), 2)


@given(compositions)
def test_each_operation_adds_one_to_reduced_norm(w):
    for j in range(1, len(w)):
        assert reduced_norm(merge(w, j)) == reduced_norm(w) + 1
    for j in range(len(w) + 1):
        assert reduced_norm(insert(w, j)) == reduced_norm(w) + 1


def test_successors_respect_cap():
    assert successors(C(1, 1), 2) == [C(2)]
    assert C(2, 1, 1) in successors(C(1, 1), 4)


def test_predecessors_keep_one_item_per_inverse_operation():
    assert predecessors_one_step(C(2)) == [C(), C(1, 1)]
    assert predecessors_one_step(C(3)) == [C(1, 2), C(2, 1)]
    # deleting either 2 gives (2); both are kept
    assert predecessors_one_step(C(2, 2)).count(C(2)) == 2
    assert predecessors_one_step(C(1, 1)) == []


@given(compositions)
def test_predecessors_step_back_to_w(w):
    for p in predecessors_one_step(w):
        assert w in successors(p, norm(w))


def test_is_bullet():
    assert is_bullet(C(1, 1)) and is_bullet(C(2)) and is_bullet(C(1, 2, 2, 1))
    assert not is_bullet(C()) and not is_bullet(C(3)) and not is_bullet(C(1, 3, 1)) and not is_bullet(C(2, 1, 1))


def test_gap_sign():
    w = C(1, 1, 2)
    assert [gap_sign(w, i) for i in range(4)] == [1, -1, 1, 1]


def _witness_sign(w, u):
    value = Fraction(1)
    for i, m in enumerate(w, start=1):
        value *= (u - i) ** m
    return (value > 0) - (value < 0)


def _blocks_by_evaluation(w):
    """Runs of roots joined by gaps where the witness polynomial is negative."""
    out, cur = [], []
    for k in range(1, len(w) + 1):
        cur.append(k)
        if _witness_sign(w, Fraction(2 * k + 1, 2)) > 0:
            out.append(tuple(cur))
            cur = []
    return out


@given(even_compositions)
def test_decompose_matches_sign_evaluation(w):
    dec = decompose(w)
    assert [tuple(b.positions) for b in dec] == _blocks_by_evaluation(w)
    for b in dec:
        assert is_bullet(b.element)
        assert b.kind == (ATOM if len(b.element) == 1 else STRING)


def test_decompose_examples():
    assert decompose(C(1, 1, 2)).elements == [C(1, 1), C(2)]
    assert decompose(C(1, 1, 1, 1)).elements == [C(1, 1), C(1, 1)]
    assert decompose(C()).elements == []
    assert decompose(C(1, 2, 1)).block_of(2) == 0
    with pytest.raises(ParityError):
        decompose(C(1, 2))


def test_every_even_pattern_splits_into_bullets():
    for w in generate_omega(8, UPTO):
        assert [v for e in decompose(w).elements for v in e] == list(w)


@given(compositions)
def test_text_round_trip(w):
    assert from_text(to_text(w)) == w


def test_text_forms():
    assert from_text("e") == C() and to_text(C()) == "e"
    assert from_text(" 1,4,1 ") == C(1, 4, 1)
    with pytest.raises(CompositionError):
        from_text("1,x")
    with pytest.raises(CompositionError):
        from_text("1,0")
