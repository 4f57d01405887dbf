"""
Bruhat order Br_n and transition graph Tr_n on S_n, with (a, b) edge labels.

    Br_n:  u -> u s_ab  when the length goes up by one
    Tr_n:  Br_n plus  u -> u s_ab  when the length drops by 2(b-a)-1

Tr_n is invariant, labels included, under w -> o w; Br_n is not.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .permutation import (
    Permutation, all_perms, format_perm, is_cover_up, is_deep_drop, length,
    right_multiply_transposition, shift,
)

__all__ = [
    "LabeledDigraph", "bruhat_graph", "transition_graph", "cyclic_invariance_check",
    "invariance_failures", "orbits", "dot_export", "json_export", "verify_graph", "MAX_GRAPH_N",
]

MAX_GRAPH_N = 7


@dataclass(frozen=True)
class LabeledDigraph:
    n: int
    kind: str
    vertices: tuple
    edges: frozenset  # of (u, w, (a, b))

    def sorted_edges(self) -> list:
        order = {w: i for i, w in enumerate(self.vertices)}
        return sorted(self.edges, key=lambda e: (order[e[0]], e[2], order[e[1]]))

    def out_degree(self, u: Permutation) -> int:
        return sum(1 for e in self.edges if e[0] == u)

    def in_degree(self, w: Permutation) -> int:
        return sum(1 for e in self.edges if e[1] == w)


def _build(n: int, kind: str, keep) -> LabeledDigraph:
    if not 1 <= n <= MAX_GRAPH_N:
        raise ValueError(f"graphs are limited to 1 <= n <= {MAX_GRAPH_N}, got {n}")
    edges = set()
    for u in all_perms(n):
        for a in range(1, n):
            for b in range(a + 1, n + 1):
                if keep(u, a, b):
                    edges.add((u, right_multiply_transposition(u, a, b), (a, b)))
    return LabeledDigraph(n, kind, all_perms(n), frozenset(edges))


def bruhat_graph(n: int) -> LabeledDigraph:
    return _build(n, "bruhat", is_cover_up)


def transition_graph(n: int) -> LabeledDigraph:
    return _build(n, "transition", lambda u, a, b: is_cover_up(u, a, b) or is_deep_drop(u, a, b))


def invariance_failures(g: LabeledDigraph) -> list:
    """Edges whose image under w -> o w is not an edge with the same label."""
    return [
        (u, w, lab) for u, w, lab in g.sorted_edges()
        if (shift(u, 1), shift(w, 1), lab) not in g.edges
    ]


def cyclic_invariance_check(g: LabeledDigraph) -> bool:
    return not invariance_failures(g)


def orbits(n: int) -> list:
    """Orbits of S_n under w -> o w, each listed from its smallest element."""
    seen = set()
    out = []
    for w in sorted(all_perms(n)):
        if w in seen:
            continue
        orbit = [w]
        x = shift(w, 1)
        while x != w:
            orbit.append(x)
            x = shift(x, 1)
        seen.update(orbit)
        out.append(tuple(orbit))
    return out


def dot_export(g: LabeledDigraph, title: str | None = None) -> str:
    """Graphviz text, one rank per length, longest permutation at the top."""
    lines = [f"digraph {title or g.kind + str(g.n)} {{", "  rankdir=BT;",
             "  node [shape=box, style=rounded];"]
    by_length: dict = {}
    for w in g.vertices:
        by_length.setdefault(length(w), []).append(w)
    for ell in sorted(by_length):
        names = " ".join(f'"{format_perm(w)}";' for w in by_length[ell])
        lines.append(f"  {{ rank=same; {names} }}")
    for u, w, (a, b) in g.sorted_edges():
        lines.append(f'  "{format_perm(u)}" -> "{format_perm(w)}" [label="{a}{b}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def json_export(g: LabeledDigraph) -> str:
    return json.dumps({
        "kind": g.kind,
        "n": g.n,
        "vertices": [format_perm(w) for w in g.vertices],
        "edges": [{"from": format_perm(u), "to": format_perm(w), "label": [a, b]}
                  for u, w, (a, b) in g.sorted_edges()],
    }, indent=1)


def verify_graph(n: int):
    """Label-preserving cyclic invariance of Tr_n, plus agreement of its edges
    with the targets of quantum Monk multiplication."""
    from .monk import monk_expansion
    from .reports import VerificationReport

    g = transition_graph(n)
    report = VerificationReport("graph", n)
    for u, w, lab in g.sorted_edges():
        report.record((shift(u, 1), shift(w, 1), lab) in g.edges,
                      {"edge": [format_perm(u), format_perm(w)], "label": list(lab)})
    monk_edges = {
        (u, target, lab)
        for u in all_perms(n) for k in range(1, n)
        for target, _, lab in monk_expansion(k, u)
    }
    report.record(monk_edges == set(g.edges), {"mismatch": "edge set differs from Monk targets"})
    report.notes["edges"] = len(g.edges)
    return report
