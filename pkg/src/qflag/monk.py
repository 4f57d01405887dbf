"""
Operators on QH*(Fl_n): the transition operators T_ij, quantum Monk
multiplication by sigma_{s_k}, and the twisted cyclic shift O.

    T_ij : sigma_w -> sigma_{w s_ij}          if w s_ij covers w,
                      q_ij sigma_{w s_ij}     if length drops by 2(j-i)-1,
                      0                       otherwise.

    sigma_{s_k} * x = sum over i <= k < j of T_ij(x)

    O : sigma_w -> q_{rn} sigma_{o w},   r = w^{-1}(n)

Nothing here knows about the product engine.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .permutation import (
    Permutation, inverse, is_cover_up, is_deep_drop, length,
    right_multiply_transposition, shift,
)
from .qhclass import QHClass, _add_class_into
from .qlaurent import q_interval

__all__ = [
    "t_op", "t_basis", "monk_multiply", "monk_expansion",
    "twisted_shift", "twisted_shift_inv", "twisted_shift_power", "shift_factor",
]

# cross-check the position predicates against inversion counts
DEBUG = os.environ.get("QFLAG_DEBUG", "") not in ("", "0")


@lru_cache(maxsize=None)
def t_basis(w: Permutation, i: int, j: int):
    """T_ij(sigma_w) as ``(target, exps)`` or None when it vanishes."""
    if not i < j:
        raise ValueError(f"t_op needs i < j, got ({i}, {j})")
    n = len(w)
    up = is_cover_up(w, i, j)
    drop = not up and is_deep_drop(w, i, j)
    target = right_multiply_transposition(w, i, j)
    if DEBUG:
        dl = length(target) - length(w)
        assert up == (dl == 1), (w, i, j)
        assert drop == (dl == -2 * (j - i) + 1), (w, i, j)
    if up:
        return target, (0,) * (n - 1)
    if drop:
        return target, q_interval(n, i, j).exps
    return None


def t_op(x: QHClass, i: int, j: int) -> QHClass:
    if not 1 <= i < j <= x.n:
        raise ValueError(f"need 1 <= i < j <= {x.n}, got ({i}, {j})")
    out: dict = {}
    for w, p in x.terms.items():
        hit = t_basis(w, i, j)
        if hit is not None:
            _add_class_into(out, {hit[0]: p}, hit[1])
    return QHClass._wrap(x.n, out)


@lru_cache(maxsize=None)
def monk_expansion(k: int, w: Permutation) -> tuple:
    """sigma_{s_k} * sigma_w as a tuple of (target, exps, (i, j))."""
    n = len(w)
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index k must be in 1..{n - 1}, got {k}")
    out = []
    for i in range(1, k + 1):
        for j in range(k + 1, n + 1):
            hit = t_basis(w, i, j)
            if hit is not None:
                out.append((hit[0], hit[1], (i, j)))
    return tuple(out)


def monk_multiply_terms(k: int, terms: dict) -> dict:
    """Raw-dict version of :func:`monk_multiply`."""
    out: dict = {}
    for w, p in terms.items():
        for target, exps, _ in monk_expansion(k, w):
            slot = out.get(target)
            if slot is None:
                slot = out[target] = {}
            for e, c in p.items():
                key = tuple(a + b for a, b in zip(e, exps))
                v = slot.get(key, 0) + c
                if v:
                    slot[key] = v
                else:
                    del slot[key]
            if not slot:
                del out[target]
    return out


def monk_multiply(k: int, x: QHClass) -> QHClass:
    """Quantum product sigma_{s_k} * x."""
    if not 1 <= k <= x.n - 1:
        raise ValueError(f"generator index k must be in 1..{x.n - 1}, got {k}")
    return QHClass._wrap(x.n, monk_multiply_terms(k, x.terms))


@lru_cache(maxsize=None)
def shift_factor(w: Permutation) -> tuple:
    """Exponents of q^{(w)} = q_{rn}, r = w^{-1}(n)."""
    n = len(w)
    return q_interval(n, inverse(w)(n), n).exps


def twisted_shift(x: QHClass) -> QHClass:
    out: dict = {}
    for w, p in x.terms.items():
        _add_class_into(out, {shift(w, 1): p}, shift_factor(w))
    return QHClass._wrap(x.n, out)


def twisted_shift_inv(x: QHClass) -> QHClass:
    """Inverse of :func:`twisted_shift`: sigma_w -> q_{rn}^{-1} sigma_{o^{-1} w}, r = w^{-1}(1)."""
    n = x.n
    out: dict = {}
    for w, p in x.terms.items():
        r = inverse(w)(1)
        exps = tuple(-a for a in q_interval(n, r, n).exps)
        _add_class_into(out, {shift(w, -1): p}, exps)
    return QHClass._wrap(n, out)


def twisted_shift_power(x: QHClass, a: int) -> QHClass:
    """O^a(x) for any integer a (negative powers use the inverse)."""
    step = twisted_shift if a >= 0 else twisted_shift_inv
    for _ in range(abs(a)):
        x = step(x)
    return x
