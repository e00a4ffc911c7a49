from itertools import combinations_with_replacement

import pytest

from tangency.composition import Composition, insert, merge, norm, reduced_norm
from tangency.errors import DomainError
from tangency.poset import (
    BULLET,
    EXACT,
    OMEGA,
    UPTO,
    bullet_geq,
    bullet_geq_oracle,
    bullet_mor_enumerate,
    bullet_mor_exists,
    generate_bullet,
    generate_omega,
    geq,
    hasse,
    mor_enumerate,
    mor_exists,
    pred_at_distance,
    reachable_bfs,
    witness,
)


def C(*e):
    return Composition(e)


def _all_morphisms(a, b, parity=True):
    """Every weakly monotone map, filtered by the run conditions."""
    out = []
    if not b:
        return [()] if not a else []
    for mapping in combinations_with_replacement(range(1, len(b) + 1), len(a)):
        sums = [0] * len(b)
        for i, t in enumerate(mapping):
            sums[t - 1] += a[i]
        ok = all(s <= v for s, v in zip(sums, b))
        if parity:
            ok = ok and all((v - s) % 2 == 0 for s, v in zip(sums, b))
        if ok:
            out.append(tuple(mapping))
    return sorted(out)


def test_morphism_examples():
    ms = mor_enumerate(C(1, 1), C(1, 2, 1))
    assert [m.map for m in ms] == [(1, 3)]
    assert not mor_exists(C(1, 2, 1), C(1, 1))
    assert mor_exists(C(), C(2, 2)) and not mor_exists(C(), C(1, 1))
    assert not mor_exists(C(1, 1), C())
    assert mor_enumerate(C(), C()) and mor_enumerate(C(), C())[0].map == ()


def test_morphism_enumeration_matches_brute_force():
    universe = generate_omega(5, UPTO) + generate_omega(4, UPTO)
    for a in universe:
        for b in universe:
            assert [m.map for m in mor_enumerate(a, b)] == _all_morphisms(a, b), (a, b)


def test_loose_enumeration_matches_brute_force():
    bs = generate_bullet(3)
    for a in bs:
        for b in bs:
            assert [m.map for m in bullet_mor_enumerate(a, b)] == _all_morphisms(a, b, parity=False)


def test_geq_matches_operation_search_odd_degrees():
    universe = generate_omega(5, UPTO)
    for a in universe:
        for b in universe:
            assert geq(a, b) == reachable_bfs(a, b), (a, b)


def test_geq_is_a_partial_order():
    universe = generate_omega(4, UPTO)
    for a in universe:
        assert geq(a, a)
        for b in universe:
            if a != b and geq(a, b):
                assert not geq(b, a)
                for c in universe:
                    if geq(b, c):
                        assert geq(a, c)


def test_geq_contains_elementary_steps():
    for w in generate_omega(5, UPTO):
        for j in range(1, len(w)):
            assert geq(w, merge(w, j))
        for j in range(len(w) + 1):
            assert geq(w, insert(w, j))


def test_witness():
    m = witness(C(1, 1), C(2, 2))
    assert m is not None
    assert m.preimage_sums() in ([2, 0], [0, 2])
    assert witness(C(2), C(1, 1)) is None


def test_generation_sizes():
    assert len(generate_omega(4, UPTO)) == 11
    assert len(generate_omega(4, EXACT)) == 8
    assert generate_omega(0, UPTO) == [C()]
    assert len(generate_omega(6, UPTO)) == 43
    with pytest.raises(DomainError):
        generate_omega(-1)


def test_bullet_generation():
    assert generate_bullet(3) == [
        C(1, 1), C(2), C(1, 2, 1), C(1, 3), C(3, 1), C(1, 2, 2, 1),
        C(4), C(1, 2, 3), C(1, 4, 1), C(3, 2, 1), C(1, 2, 2, 2, 1),
    ]
    assert generate_bullet(0) == [C(1, 1)]
    with pytest.raises(DomainError):
        generate_bullet(-1)


def test_bullet_order_example():
    assert bullet_geq(C(3, 1), C(1, 4, 1))
    assert bullet_geq_oracle(C(3, 1), C(1, 4, 1))


def test_exact_bullet_order_matches_oracle():
    bs = generate_bullet(4)
    for a in bs:
        for b in bs:
            assert bullet_geq(a, b) == bullet_geq_oracle(a, b), (a, b)


def test_exact_bullet_order_on_longer_targets():
    bs = generate_bullet(2)
    targets = [w for w in generate_bullet(5) if norm(w) <= 8]
    for a in bs:
        for b in targets:
            assert bullet_geq(a, b) == bullet_geq_oracle(a, b), (a, b)


def test_loose_morphisms_overshoot_the_order():
    # (2) maps into the middle of (1,2,1), but no pattern with (2) as a
    # separate atom degenerates to (1,2,1): the odd outer roots cannot be
    # produced next to a lone even root.
    assert bullet_mor_exists(C(2), C(1, 2, 1))
    assert not bullet_geq_oracle(C(2), C(1, 2, 1))
    assert not bullet_geq(C(2), C(1, 2, 1))


def test_loose_morphisms_never_miss_the_order():
    bs = generate_bullet(4)
    for a in bs:
        for b in bs:
            if bullet_geq(a, b):
                assert bullet_mor_exists(a, b)


def test_bullet_functions_reject_other_patterns():
    with pytest.raises(DomainError):
        bullet_mor_exists(C(2, 1, 1), C(1, 1))
    with pytest.raises(DomainError):
        bullet_geq(C(3), C(1, 2, 1))


def _closure(n, covers):
    reach = {i: {i} for i in range(n)}
    changed = True
    while changed:
        changed = False
        for i, j in covers:
            new = reach[j] - reach[i]
            if new:
                reach[i] |= new
                changed = True
    return reach


@pytest.mark.parametrize("kind,elements", [
    (OMEGA, generate_omega(5, UPTO)),
    (OMEGA, generate_omega(6, UPTO)),
    (BULLET, generate_bullet(4)),
])
def test_hasse_is_graded_transitive_reduction(kind, elements):
    poset = hasse(elements, kind)
    test = geq if kind == OMEGA else bullet_geq
    for i, j in poset.covers:
        assert reduced_norm(poset.elements[j]) == reduced_norm(poset.elements[i]) + 1
    reach = _closure(len(poset.elements), poset.covers)
    for i, a in enumerate(poset.elements):
        assert {j for j, b in enumerate(poset.elements) if test(a, b)} == reach[i]


def test_poset_queries():
    p = hasse(generate_omega(2, UPTO))
    assert p.elements == [C(), C(2), C(1, 1)]
    assert sorted(p.covers) == [(0, 1), (2, 1)]
    assert p.covers_of(C(1, 1)) == [C(2)]
    assert p.above(C(2)) == [C(), C(2), C(1, 1)]
    assert p.below(C(1, 1)) == [C(2), C(1, 1)]
    assert p.to_dict()["kind"] == "omega"


def test_pred_at_distance():
    universe = generate_omega(4, UPTO)
    assert pred_at_distance(C(4), 1, universe) == [C(1, 3), C(2, 2), C(3, 1)]
    assert pred_at_distance(C(4), 0, universe) == [C(4)]
    assert pred_at_distance(C(2), 1, universe) == [C(), C(1, 1)]

