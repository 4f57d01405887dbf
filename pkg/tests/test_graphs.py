import json

import pytest

from qflag.graphs import (
    MAX_GRAPH_N, bruhat_graph, cyclic_invariance_check, dot_export, invariance_failures,
    json_export, orbits, transition_graph, verify_graph,
)
from qflag.monk import t_op
from qflag.permutation import Permutation, all_perms, format_perm, length, shift
from qflag.qhclass import QHClass

FIGURE_1 = {
    ("123", "213", "12"), ("123", "132", "23"), ("213", "231", "23"), ("213", "312", "13"),
    ("132", "312", "12"), ("132", "231", "13"), ("231", "321", "12"), ("312", "321", "23"),
}
FIGURE_2 = FIGURE_1 | {
    ("321", "231", "12"), ("321", "312", "23"), ("321", "123", "13"), ("231", "213", "23"),
    ("312", "132", "12"), ("213", "123", "12"), ("132", "123", "23"),
}


def as_text(g):
    return {(format_perm(u), format_perm(w), f"{a}{b}") for u, w, (a, b) in g.edges}


def test_figures():
    assert as_text(bruhat_graph(3)) == FIGURE_1
    assert as_text(transition_graph(3)) == FIGURE_2
    assert len(FIGURE_2) == 15
    assert as_text(bruhat_graph(2)) == {("12", "21", "12")}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_edges_are_right_transpositions(n):
    for g in (bruhat_graph(n), transition_graph(n)):
        for u, w, (a, b) in g.edges:
            values = list(u)
            values[a - 1], values[b - 1] = values[b - 1], values[a - 1]
            assert tuple(values) == tuple(w)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_brute_force_edge_counts(n):
    covers = drops = 0
    for u in all_perms(n):
        for a in range(1, n):
            for b in range(a + 1, n + 1):
                values = list(u)
                values[a - 1], values[b - 1] = values[b - 1], values[a - 1]
                d = length(Permutation(values)) - length(u)
                covers += d == 1
                drops += d == 1 - 2 * (b - a)
    br, tr = bruhat_graph(n), transition_graph(n)
    assert len(br.edges) == covers
    assert len(tr.edges) == covers + drops
    assert br.edges <= tr.edges


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_transition_edges_divisible_by_n(n):
    assert len(transition_graph(n).edges) % n == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_transition_graph_is_shift_invariant(n):
    assert cyclic_invariance_check(transition_graph(n))
    assert verify_graph(n).ok


def test_bruhat_graph_is_not_shift_invariant(P):
    g = bruhat_graph(3)
    assert not cyclic_invariance_check(g)
    failures = invariance_failures(g)
    assert (P("231"), P("321"), (1, 2)) in failures
    assert (shift(P("123"), 1), shift(P("213"), 1), (1, 2)) == (P("231"), P("321"), (1, 2))
    assert (P("123"), P("213"), (1, 2)) not in failures


@pytest.mark.parametrize("n", [3, 4, 5])
def test_degrees_constant_on_orbits(n):
    g = transition_graph(n)
    for orbit in orbits(n):
        assert len({g.out_degree(w) for w in orbit}) == 1
        assert len({g.in_degree(w) for w in orbit}) == 1


def test_orbits(P):
    assert orbits(3) == [(P("123"), P("231"), P("312")), (P("132"), P("213"), P("321"))]
    for n in (2, 3, 4, 5):
        parts = orbits(n)
        assert all(len(o) == n for o in parts)
        assert sorted(w for o in parts for w in o) == sorted(all_perms(n))


@pytest.mark.parametrize("n", [3, 4])
def test_edges_match_nonzero_t_op(n):
    g = transition_graph(n)
    expected = set()
    for u in all_perms(n):
        for a in range(1, n):
            for b in range(a + 1, n + 1):
                image = t_op(QHClass.basis(u), a, b)
                for w in image.support():
                    expected.add((u, w, (a, b)))
    assert expected == set(g.edges)


def test_dot_export():
    text = dot_export(transition_graph(3))
    assert text.startswith("digraph")
    assert text.count("->") == 15
    assert '"321" -> "123" [label="13"];' in text
    assert "rankdir=BT" in text
    ranks = [line for line in text.splitlines() if "rank=same" in line]
    assert len(ranks) == 4 and '"321"' in ranks[-1] and '"123"' in ranks[0]
    vertices = {tok.strip('";') for line in ranks for tok in line.split() if tok.startswith('"')}
    assert vertices == {"123", "132", "213", "231", "312", "321"}


def test_json_export():
    data = json.loads(json_export(bruhat_graph(3)))
    assert data["kind"] == "bruhat" and data["n"] == 3
    assert len(data["vertices"]) == 6
    edges = {(e["from"], e["to"], "".join(map(str, e["label"]))) for e in data["edges"]}
    assert edges == FIGURE_1


def test_size_guard():
    with pytest.raises(ValueError):
        transition_graph(MAX_GRAPH_N + 1)
    with pytest.raises(ValueError):
        bruhat_graph(0)
