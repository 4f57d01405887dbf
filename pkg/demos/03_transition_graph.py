"""
Bruhat order and the transition graph
=====================================

"""

from qflag.graphs import (
    bruhat_graph, cyclic_invariance_check, dot_export, invariance_failures, orbits,
    transition_graph,
)

br, tr = bruhat_graph(3), transition_graph(3)
print(len(br.edges), "Bruhat edges,", len(tr.edges), "transition edges")

# the extra downward edges make Tr_3 symmetric under w -> o w
print("Tr_3 invariant:", cyclic_invariance_check(tr))
print("Br_3 invariant:", cyclic_invariance_check(br))
u, w, (a, b) = invariance_failures(br)[0]
print(f"  {u} -> {w} ({a}{b}) has no shifted partner")
print("orbits:", [" ".join(map(str, orbit)) for orbit in orbits(3)])

# pipe into `dot -Tpdf` to draw it
print(dot_export(tr))

for n in (4, 5):
    g = transition_graph(n)
    print(f"Tr_{n}: {len(g.edges)} edges, invariant={cyclic_invariance_check(g)}")
