"""
Quantum Monk's formula and the small quantum product
=====================================================

"""

from qflag import full_table, monk_multiply, parse_perm, quantum_product
from qflag.qhclass import QHClass

# sigma_{s_1} * sigma_{s_1} in Fl_3: one classical term, one quantum term
s1 = parse_perm("213")
print(monk_multiply(1, QHClass.basis(s1)))

# the full multiplication table of QH*(Fl_3) is solved from Monk's formula
table = full_table(3)
for u, v, x in table.entries():
    print(f"s[{u}] * s[{v}] = {x}")

# setting q = 0 recovers the ordinary cohomology ring
x = quantum_product(parse_perm("321"), parse_perm("321"), table)
print("q -> 0:", x.substitute_zero() or 0)
