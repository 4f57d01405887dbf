"""
Classical Schubert calculus oracle, independent of the quantum engine.

Schubert polynomials come from divided differences applied to the
staircase monomial x^delta.  The intersection number c_{u,v,w} is the
coefficient of x^delta in the normal form of S_u S_v S_w modulo the ideal
of symmetric polynomials, using the rewrite rules

    x_i^{n-i+1}  ->  x_i^{n-i+1} - h_{n-i+1}(x_1, ..., x_i)

which leave only staircase monomials (exponent of x_i at most n-i).
Nothing in here touches the quantum product code.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from itertools import combinations_with_replacement

from .permutation import Permutation, length, longest

__all__ = [
    "XPolynomial", "divided_difference", "schubert_polynomial", "normal_form",
    "classical_c", "elementary", "complete_homogeneous",
]


class XPolynomial:
    """Integer polynomial in x_1..x_n; ``terms`` maps exponent tuples to ints."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong length for n={n}")
            if c:
                self.terms[e] = self.terms.get(e, 0) + int(c)
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def _wrap(cls, n, terms):
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def var(cls, n: int, i: int) -> "XPolynomial":
        e = [0] * n
        e[i - 1] = 1
        return cls._wrap(n, {tuple(e): 1})

    @classmethod
    def constant(cls, n: int, c: int = 1) -> "XPolynomial":
        return cls._wrap(n, {(0,) * n: c} if c else {})

    def __eq__(self, other):
        if isinstance(other, int):
            other = XPolynomial.constant(self.n, other)
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = XPolynomial.constant(self.n, other)
        out = dict(self.terms)
        _acc(out, other.terms)
        return XPolynomial._wrap(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return XPolynomial._wrap(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, XPolynomial) else -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return XPolynomial._wrap(self.n, {e: c * other for e, c in self.terms.items() if c * other})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return XPolynomial._wrap(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = XPolynomial.constant(self.n)
        for _ in range(k):
            out = out * self
        return out

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def swap(self, i: int) -> "XPolynomial":
        """s_i f: exchange x_i and x_{i+1}."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return XPolynomial._wrap(self.n, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e, start=1) if a)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _acc(out: dict, terms: dict, factor: int = 1) -> None:
    for e, c in terms.items():
        v = out.get(e, 0) + factor * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)


def _divide_difference_of_monomials(e: tuple, i: int) -> dict:
    """(x^e - s_i x^e) / (x_i - x_{i+1}) for a single monomial."""
    a, b = e[i - 1], e[i]
    out: dict = {}
    if a == b:
        return out
    # x_i^a x_{i+1}^b - x_i^b x_{i+1}^a = (x_i - x_{i+1}) * sum, up to sign
    lo, hi, sign = (b, a, 1) if a > b else (a, b, -1)
    for t in range(hi - lo):
        f = list(e)
        f[i - 1] = lo + (hi - lo - 1 - t)
        f[i] = lo + t
        out[tuple(f)] = out.get(tuple(f), 0) + sign
    return out


def divided_difference(i: int, f: XPolynomial) -> XPolynomial:
    """(f - s_i f) / (x_i - x_{i+1})."""
    if not 1 <= i <= f.n - 1:
        raise ValueError(f"index {i} outside 1..{f.n - 1}")
    out: dict = {}
    for e, c in f.terms.items():
        _acc(out, _divide_difference_of_monomials(e, i), c)
    result = XPolynomial._wrap(f.n, out)
    # exactness: (x_i - x_{i+1}) * result must reproduce the numerator
    numerator = f - f.swap(i)
    if (XPolynomial.var(f.n, i) - XPolynomial.var(f.n, i + 1)) * result != numerator:
        raise ArithmeticError(f"divided difference d_{i} not exact on {f}")
    return result


_schubert_lock = threading.Lock()


def _ascents(w: Permutation) -> list:
    return [i for i in range(1, len(w)) if w[i - 1] < w[i]]


@lru_cache(maxsize=None)
def _schubert(values: tuple, pick_last: bool) -> XPolynomial:
    n = len(values)
    w = Permutation._trusted(values)
    if w == longest(n):
        return XPolynomial._wrap(n, {tuple(range(n - 1, -1, -1)): 1})
    asc = _ascents(w)
    i = asc[-1] if pick_last else asc[0]
    up = list(values)
    up[i - 1], up[i] = up[i], up[i - 1]
    return divided_difference(i, _schubert(tuple(up), pick_last))


def schubert_polynomial(w: Permutation, path: str = "first") -> XPolynomial:
    """Schubert polynomial S_w, descending from S_{w0} = x^delta.

    ``path`` chooses the ascent used at each step ("first" or "last"); the
    result does not depend on it.
    """
    if path not in ("first", "last"):
        raise ValueError(f"path must be 'first' or 'last', got {path!r}")
    with _schubert_lock:
        return _schubert(tuple(w), path == "last")


def complete_homogeneous(n: int, k: int, upto: int) -> XPolynomial:
    """h_k(x_1, ..., x_upto) as a polynomial in n variables."""
    out = {}
    for combo in combinations_with_replacement(range(upto), k):
        e = [0] * n
        for j in combo:
            e[j] += 1
        out[tuple(e)] = 1
    return XPolynomial._wrap(n, out)


def elementary(n: int, k: int) -> XPolynomial:
    from itertools import combinations
    out = {}
    for combo in combinations(range(n), k):
        e = [0] * n
        for j in combo:
            e[j] = 1
        out[tuple(e)] = 1
    return XPolynomial._wrap(n, out)


@lru_cache(maxsize=None)
def _tail(n: int, i: int) -> tuple:
    # x_i^{m} - h_m(x_1..x_i), m = n-i+1: what the leading power x_i^m rewrites to
    m = n - i + 1
    h = complete_homogeneous(n, m, i).terms
    lead = tuple(m if j == i - 1 else 0 for j in range(n))
    return tuple((e, -c) for e, c in h.items() if e != lead)


@lru_cache(maxsize=None)
def _nf_monomial(e: tuple) -> tuple:
    n = len(e)
    bad = [i for i in range(1, n + 1) if e[i - 1] > n - i]
    if not bad:
        return ((e, 1),)
    i = bad[-1]
    m = n - i + 1
    rest = list(e)
    rest[i - 1] -= m
    out: dict = {}
    for t, c in _tail(n, i):
        f = tuple(a + b for a, b in zip(rest, t))
        # each rewrite lowers the monomial in lex order read from x_n down to x_1
        assert f[::-1] < e[::-1], (e, f)
        for g, d in _nf_monomial(f):
            v = out.get(g, 0) + c * d
            if v:
                out[g] = v
            else:
                del out[g]
    return tuple(out.items())


def normal_form(f: XPolynomial) -> XPolynomial:
    """Reduce f modulo the symmetric-polynomial ideal to the staircase basis."""
    out: dict = {}
    for e, c in f.terms.items():
        for g, d in _nf_monomial(e):
            v = out.get(g, 0) + c * d
            if v:
                out[g] = v
            else:
                del out[g]
    return XPolynomial._wrap(f.n, out)


@lru_cache(maxsize=None)
def _nf_pair(u: tuple, v: tuple) -> XPolynomial:
    return normal_form(schubert_polynomial(u) * schubert_polynomial(v))


def classical_c(u: Permutation, v: Permutation, w: Permutation) -> int:
    """The Schubert intersection number c_{u,v,w}."""
    if not len(u) == len(v) == len(w):
        raise ValueError("rank mismatch")
    n = len(u)
    if length(u) + length(v) + length(w) != n * (n - 1) // 2:
        return 0
    a, b = sorted((tuple(u), tuple(v)))
    top = normal_form(_nf_pair(a, b) * schubert_polynomial(w))
    return top.coefficient(tuple(range(n - 1, -1, -1)))
