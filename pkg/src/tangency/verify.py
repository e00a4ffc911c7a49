"""Self-checks runnable from the command line (``tangency verify``)."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List

from .cells import (
    BALANCED,
    BALANCED_SPHERE,
    SPHERE,
    euler_characteristic,
    f_vector,
    normal_star,
    star_multiplicity,
)
from .classifier import (
    classify,
    classify_family,
    expand_from_divisor,
    family_from_expressions,
    negativity_matches_blocks,
)
from .composition import Composition, norm, predecessors_one_step, reduced_norm, to_text
from .errors import AmbiguousTransportError
from .families import DEGENERATIONS
from .markers import (
    MarkedComposition,
    find_disagreement,
    marked_insert,
    marked_merge,
    marker_set,
    transport_targets,
)
from .poset import (
    UPTO,
    bullet_geq,
    bullet_geq_oracle,
    bullet_mor_exists,
    generate_bullet,
    generate_omega,
    geq,
    mor_enumerate,
    mor_exists,
    pred_at_distance,
    reachable_bfs,
)
from .trajectory import build_t_model, fiber_report, t_f_vector

MAX_LISTED = 20


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    info: Dict = field(default_factory=dict)
    seconds: float = 0.0  # reported in tables only, so JSON stays byte-stable

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        self.failures.append(message)

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "status": "PASS" if self.ok else "FAIL",
            "checked": self.checked,
            "failures": len(self.failures),
            "counterexamples": self.failures[:MAX_LISTED],
            "info": self.info,
        }


def _t(w) -> str:
    return "(" + to_text(w) + ")"


def cell_census(res: SuiteResult, **_):
    counts = list(f_vector(4, BALANCED).counts)
    res.info["balanced_d4"] = counts
    res.checked = 1
    if counts != [1, 3, 4, 3]:
        res.fail(f"balanced degree-4 f-vector {counts}, expected [1, 3, 4, 3]")


def trajectory_census(res: SuiteResult, **_):
    counts = list(t_f_vector(Composition((4,))).counts)
    res.info["tmodel_4"] = counts
    if counts != [1, 4, 6, 3]:
        res.fail(f"f-vector of the (4) model {counts}, expected [1, 4, 6, 3]")
    cx = build_t_model(Composition((4,)))
    faces = {(tuple(c.label.components[0]), c.marker) for c in cx.faces(cx.find([(1, 1, 1, 1)], 3))}
    expected = {((2, 1, 1), 2), ((1, 2, 1), 1), ((1, 1, 2), 3)}
    res.info["faces_of_1111_at_3"] = sorted(f"({to_text(w)})@{k}" for w, k in faces)
    if faces != expected:
        res.fail(f"faces of (1,1,1,1)@3 are {sorted(faces)}")
    res.checked = 2


def bullet_census(res: SuiteResult, n: int = 3, **_):
    size = len(generate_bullet(n))
    res.info["size"] = size
    res.checked = 1
    if n == 3 and size != 11:
        res.fail(f"{size} strings and atoms of reduced norm <= 3, expected 11")


def order_examples(res: SuiteResult, **_):
    C = Composition
    checks = [
        ("(3,1) above (1,4,1) as strings", bullet_geq(C((3, 1)), C((1, 4, 1))), True),
        ("one morphism (1,1) -> (1,2,1)", len(mor_enumerate(C((1, 1)), C((1, 2, 1)))) == 1, True),
        ("no morphism (1,2,1) -> (1,1)", mor_exists(C((1, 2, 1)), C((1, 1))), False),
    ]
    for label, got, want in checks:
        res.checked += 1
        if got != want:
            res.fail(label)


def morphism_reachability(res: SuiteResult, max_d: int = 6, **_):
    universe = generate_omega(max_d, UPTO)
    for a in universe:
        for b in universe:
            res.checked += 1
            if mor_exists(a, b) != reachable_bfs(a, b):
                res.fail(f"{_t(a)} vs {_t(b)}: morphism {mor_exists(a, b)}, search {reachable_bfs(a, b)}")


def bullet_morphism(res: SuiteResult, max_n: int = 4, **_):
    """Loose string morphisms against the brute-force string order."""
    universe = generate_bullet(max_n)
    for a in universe:
        for b in universe:
            res.checked += 1
            loose, true = bullet_mor_exists(a, b), bullet_geq_oracle(a, b)
            if loose != true:
                res.fail(f"{_t(a)} vs {_t(b)}: morphism {loose}, order {true}")


def bullet_order(res: SuiteResult, max_n: int = 4, **_):
    """Exact string order against the brute-force string order."""
    universe = generate_bullet(max_n)
    for a in universe:
        for b in universe:
            res.checked += 1
            if bullet_geq(a, b) != bullet_geq_oracle(a, b):
                res.fail(f"{_t(a)} vs {_t(b)}")


def star_multiplicities(res: SuiteResult, max_d: int = 8, **_):
    universe = generate_omega(max_d, UPTO)
    for w in universe:
        res.checked += 1
        preds = predecessors_one_step(w)
        if star_multiplicity(w) != len(preds):
            res.fail(f"{_t(w)}: formula {star_multiplicity(w)}, enumerated {len(preds)}")
        counts = normal_star(w, max_d, with_covers=False).counts()
        direct = [len(pred_at_distance(w, k, universe)) for k in range(reduced_norm(w) + 1)]
        if counts != direct:
            res.fail(f"{_t(w)}: star counts {counts}, predecessors by distance {direct}")


def euler(res: SuiteResult, max_d: int = 8, **_):
    for d in range(2, max_d + 1):
        for ambient, want in ((SPHERE, 1 + (-1) ** (d - 1)), (BALANCED_SPHERE, 1 + (-1) ** (d - 2))):
            res.checked += 1
            got = euler_characteristic(f_vector(d, ambient))
            res.info[f"{ambient}_{d}"] = got
            if got != want:
                res.fail(f"d={d} {ambient}: chi {got}, expected {want}")


def bullet_bounds(res: SuiteResult, max_n: int = 5, **_):
    for n in range(max_n + 1):
        for w in generate_bullet(n):
            res.checked += 1
            if norm(w) > 2 * n + 2 or len(w) > n + 2:
                res.fail(f"n={n}: {_t(w)} breaks the size bounds")
    for w in generate_bullet(max_n):
        for label, count in fiber_report(w).items():
            res.checked += 1
            if 2 * count > norm(w):
                res.fail(f"base {_t(w)}, label {label}: {count} markers")


def marked_elements(max_d: int):
    for w in generate_omega(max_d, UPTO):
        for k in marker_set(w):
            yield MarkedComposition(w, k)


def marker_coherence(res: SuiteResult, max_d: int = 6, **_):
    universe = generate_omega(max_d, UPTO)
    ambiguous = 0
    for m in marked_elements(max_d):
        q = len(m.omega)
        for j in range(1, q):
            res.checked += 1
            marked_merge(m, j)  # validates the output marker
        if norm(m.omega) + 2 <= max_d:
            for j in range(q + 1):
                res.checked += 1
                marked_insert(m, j)
        for target in universe:
            if target == m.omega or not geq(m.omega, target):
                continue
            res.checked += 1
            if len(transport_targets(m, target)) > 1:
                ambiguous += 1
                p1, k1, p2, k2 = find_disagreement(m, target)
                res.fail(f"{m} -> ({to_text(target)}): marker {k1} via {_ops(p1)}, marker {k2} via {_ops(p2)}")
    res.info["ambiguous"] = ambiguous


def _ops(path) -> str:
    return " ".join(f"{kind}{j}" for kind, j in path)


def random_divisor(rng: random.Random, max_degree: int = 10):
    real, pairs, degree = [], [], 0
    target = rng.randint(0, max_degree)
    roots = sorted(set(Fraction(rng.randint(-40, 40), rng.randint(1, 6)) for _ in range(rng.randint(0, 6))))
    for r in roots:
        m = rng.randint(1, 3)
        if degree + m > target:
            break
        real.append((r, m))
        degree += m
    while degree + 2 <= target and rng.random() < 0.7:
        m = rng.randint(1, (target - degree) // 2)
        pairs.append((Fraction(rng.randint(-20, 20), rng.randint(1, 4)), Fraction(rng.randint(1, 20), rng.randint(1, 4)), m))
        degree += 2 * m
    return real, pairs


def classifier_roundtrip(res: SuiteResult, count: int = 200, seed: int = 0, **_):
    rng = random.Random(seed)
    for _ in range(count):
        real, pairs = random_divisor(rng)
        res.checked += 1
        got = classify(expand_from_divisor(real, pairs))
        want = Composition(m for _, m in real)
        if got != want:
            res.fail(f"real {real}, pairs {pairs}: classified ({to_text(got)})")
    done = 0
    while done < count // 2:
        real, pairs = random_divisor(rng)
        if sum(m for _, m in real) % 2:
            continue
        done += 1
        res.checked += 1
        p = expand_from_divisor(real, pairs) * Fraction(rng.randint(1, 9), rng.randint(1, 9))
        if not negativity_matches_blocks(p):
            res.fail(f"negativity mismatch for real {real}, pairs {pairs}")


def degenerations(res: SuiteResult, **_):
    seen = 0
    for name, coeffs, samples in DEGENERATIONS:
        report = classify_family(family_from_expressions(coeffs), samples)
        res.checked += 1
        seen += len(report.transitions)
        if not report.transitions:
            res.fail(f"{name}: no change of type observed")
        for t in report.issues:
            res.fail(f"{name}: ({to_text(t['from'])}) -> ({to_text(t['to'])}) at t={t['t_to']}")
    res.info["transitions"] = seen


SUITES: Dict[str, Callable] = {
    "cell-census": cell_census,
    "trajectory-census": trajectory_census,
    "bullet-census": bullet_census,
    "order-examples": order_examples,
    "morphism-reachability": morphism_reachability,
    "bullet-morphism": bullet_morphism,
    "bullet-order": bullet_order,
    "star-multiplicity": star_multiplicities,
    "euler": euler,
    "bullet-bounds": bullet_bounds,
    "marker-coherence": marker_coherence,
    "classifier-roundtrip": classifier_roundtrip,
    "degenerations": degenerations,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    res = SuiteResult(name)
    start = time.perf_counter()
    try:
        SUITES[name](res, **{k: v for k, v in kwargs.items() if v is not None})
    except AmbiguousTransportError as exc:
        res.fail(str(exc))
    res.seconds = time.perf_counter() - start
    return res
