"""Quantum cohomology of complete flag manifolds from quantum Monk's formula."""

from .permutation import (
    Permutation, all_perms, compose, cycle_o, identity, inverse, length, longest,
    parse_perm, shift,
)
from .qlaurent import QMonomial, QPolynomial, big_q, q_interval
from .qhclass import QHClass
from .monk import monk_multiply, t_op, twisted_shift, twisted_shift_inv
from .qhring import (
    ProductTable, full_table, gw_invariant, multiply, quantum_product, shifted_product,
    structure_poly,
)

__version__ = "0.1.0"
