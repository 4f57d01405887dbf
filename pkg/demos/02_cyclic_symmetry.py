"""
Cyclic symmetry of the structure polynomials
============================================

"""

from qflag import full_table, parse_perm, shift, structure_poly
from qflag.symmetry import AS_PRINTED, calibrate, cyclic_identity_sides, reduce_min_length

t3 = full_table(3)

# calibration tries both index orders of the factor and keeps the one that works
profile = calibrate(3, t3)
print("calibrated factor order:", profile.name)

u, v, w = parse_perm("213"), parse_perm("213"), parse_perm("321")
print("C(213,213,321) =", structure_poly(u, v, w, t3))
print("C(213,132,132) =", structure_poly(u, shift(v, -1), shift(w, 1), t3))

# under the other order the two sides disagree
lhs, rhs = cyclic_identity_sides(u, v, w, AS_PRINTED, t3)
print("as printed:", lhs, "vs", rhs)

# shifting a triple to minimal total length often settles C outright
for triple in [("213", "132", "132"), ("321", "321", "123"), ("231", "312", "321")]:
    print(triple, reduce_min_length(*map(parse_perm, triple), table=t3).to_dict())
