"""JSON and Graphviz DOT rendering of posets and cell complexes."""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Dict, Iterable, List, Sequence, Tuple

from .composition import reduced_norm, to_text


def to_json(payload) -> str:
    if hasattr(payload, "to_dict"):
        payload = payload.to_dict()
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graded_dot(
    labels: Sequence[str],
    grades: Sequence[int],
    edges: Iterable[Tuple[int, int]],
    name: str = "G",
    top_first: bool = True,
) -> str:
    """Digraph with one ``cluster_rank_<g>`` subgraph per (non-negative) grade."""
    by_grade: Dict[int, List[int]] = defaultdict(list)
    for i, g in enumerate(grades):
        by_grade[g].append(i)
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=box, fontname=monospace];"]
    for g in sorted(by_grade, reverse=top_first):
        lines.append(f"  subgraph cluster_rank_{g} {{")
        lines.append("    rank=same;")
        lines.append(f"    label={_quote(f'grade {g}')};")
        for i in by_grade[g]:
            lines.append(f"    n{i} [label={_quote(labels[i])}];")
        lines.append("  }")
    for a, b in edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_dot(poset) -> str:
    """Hasse diagram; higher reduced norm sits lower (more degenerate)."""
    labels = [to_text(w) for w in poset.elements]
    grades = [reduced_norm(w) for w in poset.elements]
    return graded_dot(labels, grades, poset.covers, name="hasse", top_first=False)


def star_dot(star) -> str:
    labels = [to_text(c["label"]) for c in star.cells]
    return graded_dot(labels, [c["dim"] for c in star.cells], star.covers, name="star")


def complex_dot(cx) -> str:
    labels = [f"{c.label} @{c.marker}" for c in cx.cells]
    return graded_dot(labels, [c.dim for c in cx.cells], cx.covers, name="tmodel")
