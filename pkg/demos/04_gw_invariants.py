"""
Gromov-Witten invariants and stability
======================================

"""

from qflag import full_table, gw_invariant, parse_perm, structure_poly
from qflag.symmetry import stability_reduce

t3, t4 = full_table(3), full_table(4)
w0 = parse_perm("4321")

# <s_u, s_v, s_w>_d is the coefficient of q^d in C_{u,v,w}
print(structure_poly(w0, w0, w0, t4))
print("<w0, w0, w0>_(2,2,2) =", gw_invariant(w0, w0, w0, (2, 2, 2), t4))

# triples ending in (4, 4, 1) reduce to S_3
u, v, w = parse_perm("2134"), parse_perm("2134"), parse_perm("4321")
red = stability_reduce(u, v, w)
print(f"{u}, {v}, {w} -> {red.u}, {red.v}, {red.w}")
print(structure_poly(u, v, w, t4), "=", red.lift(structure_poly(red.u, red.v, red.w, t3)))

# a cyclic shift brings other triples into that shape first
u, v, w = parse_perm("1243"), parse_perm("4231"), parse_perm("4321")
red = stability_reduce(u, v, w)
print("shift", red.shift, "factor", red.factor, "side", red.side)
print(structure_poly(u, v, w, t4), "=", red.lift(structure_poly(red.u, red.v, red.w, t3)))
