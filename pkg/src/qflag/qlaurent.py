"""
Laurent monomials and integer polynomials in the quantum parameters q_1..q_{n-1}.

A monomial is an exponent vector (negative entries allowed).  A polynomial
is a finitely supported map from exponent tuples to Python ints, so
coefficients never overflow.  Ring elements of the quantum cohomology must
be Laurent-free; the Laurent monomials only appear as transient factors
(q_ij with i > j, Q_{w,-a}, the inverse twisted shift).
"""

from __future__ import annotations

from dataclasses import dataclass

from .permutation import Permutation

__all__ = [
    "QMonomial", "QPolynomial", "LaurentError",
    "q_interval", "big_q",
    "add", "mul", "scale_mono", "constant_term", "coefficient",
    "is_homogeneous", "is_nonnegative",
]


class LaurentError(ValueError):
    """A negative q-exponent showed up where a genuine polynomial was required."""


@dataclass(frozen=True)
class QMonomial:
    exps: tuple

    @classmethod
    def one(cls, n: int) -> "QMonomial":
        return cls((0,) * (n - 1))

    @property
    def n(self) -> int:
        return len(self.exps) + 1

    def __mul__(self, other: "QMonomial") -> "QMonomial":
        _same_rank(self.n, other.n)
        return QMonomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: "QMonomial") -> "QMonomial":
        _same_rank(self.n, other.n)
        return QMonomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "QMonomial":
        return QMonomial(tuple(a * k for a in self.exps))

    def inverse(self) -> "QMonomial":
        return QMonomial(tuple(-a for a in self.exps))

    def is_one(self) -> bool:
        return not any(self.exps)

    def is_laurent_free(self) -> bool:
        return all(a >= 0 for a in self.exps)

    def polynomial_degree(self) -> int:
        return sum(self.exps)

    def length_degree(self) -> int:
        return 2 * sum(self.exps)

    def __str__(self) -> str:
        return _format_monomial(self.exps) or "1"


def _same_rank(n: int, m: int) -> None:
    if n != m:
        raise ValueError(f"rank mismatch: {n} vs {m}")


def _format_monomial(exps) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"q{i}")
        elif e != 0:
            parts.append(f"q{i}^{e}")
    return "*".join(parts)


def q_interval(n: int, i: int, j: int) -> QMonomial:
    """q_ij = q_i q_{i+1} ... q_{j-1}; q_ii = 1 and q_ij = 1/q_ji for i > j."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i}, {j}) outside 1..{n}")
    exps = [0] * (n - 1)
    if i < j:
        for s in range(i, j):
            exps[s - 1] = 1
    elif i > j:
        for s in range(j, i):
            exps[s - 1] = -1
    return QMonomial(tuple(exps))


def big_q(w: Permutation, a: int) -> QMonomial:
    """Q_{w,a}: product of q_{1i} over positions i with w(i) >= n-a+1 (a > 0),
    of 1/q_{1j} over positions j with w(j) <= -a (a < 0), and 1 for a = 0."""
    n = len(w)
    if abs(a) > n:
        raise ValueError(f"|a| must be <= {n}, got {a}")
    exps = [0] * (n - 1)
    if a > 0:
        positions, sign = [i for i in range(1, n + 1) if w(i) >= n - a + 1], 1
    elif a < 0:
        positions, sign = [j for j in range(1, n + 1) if w(j) <= -a], -1
    else:
        positions, sign = [], 0
    for p in positions:
        for s in range(1, p):
            exps[s - 1] += sign
    return QMonomial(tuple(exps))


class QPolynomial:
    """Integer Laurent polynomial in q_1..q_{n-1}, kept in canonical form.

    ``terms`` maps exponent tuples to nonzero ints.  Treat instances as
    immutable; the arithmetic below always returns fresh objects.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        if terms:
            width = n - 1
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != width:
                    raise ValueError(f"exponent vector {exps} has wrong length for n={n}")
                if c:
                    clean[exps] = int(c)
        self.terms = clean

    @classmethod
    def _wrap(cls, n: int, terms: dict) -> "QPolynomial":
        # terms already canonical
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def zero(cls, n: int) -> "QPolynomial":
        return cls._wrap(n, {})

    @classmethod
    def constant(cls, n: int, c: int = 1) -> "QPolynomial":
        return cls._wrap(n, {(0,) * (n - 1): int(c)} if c else {})

    @classmethod
    def monomial(cls, m: QMonomial, c: int = 1) -> "QPolynomial":
        return cls._wrap(m.n, {m.exps: int(c)} if c else {})

    @classmethod
    def gen(cls, n: int, i: int) -> "QPolynomial":
        exps = [0] * (n - 1)
        exps[i - 1] = 1
        return cls._wrap(n, {tuple(exps): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == QPolynomial.constant(self.n, other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _coerce(self, other) -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial.constant(self.n, other)
        if isinstance(other, QMonomial):
            return QPolynomial.monomial(other)
        _same_rank(self.n, other.n)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return QPolynomial._wrap(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial._wrap(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, QMonomial):
            return scale_mono(self, other)
        other = self._coerce(other)
        return QPolynomial._wrap(self.n, _mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = QPolynomial.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def is_laurent_free(self) -> bool:
        return all(a >= 0 for exps in self.terms for a in exps)

    def degrees(self) -> set:
        return {sum(exps) for exps in self.terms}

    def monomials(self) -> list:
        """(QMonomial, coefficient) pairs in lexicographic exponent order."""
        return [(QMonomial(e), self.terms[e]) for e in sorted(self.terms)]

    def substitute_zero(self) -> "QPolynomial":
        zero = (0,) * (self.n - 1)
        return QPolynomial._wrap(self.n, {zero: self.terms[zero]} if zero in self.terms else {})

    def to_json(self) -> list:
        return [{"exps": list(e), "coeff": str(self.terms[e])} for e in sorted(self.terms)]

    @classmethod
    def from_json(cls, n: int, payload) -> "QPolynomial":
        return cls(n, {tuple(item["exps"]): int(item["coeff"]) for item in payload})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        # highest total degree first reads more naturally
        for exps in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[exps]
            mono = _format_monomial(exps)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"QPolynomial({self.n}, {str(self)!r})"


def _accumulate(acc: dict, terms: dict, shift: tuple | None = None, factor: int = 1) -> None:
    """acc += factor * q^shift * terms, in place, dropping zeros."""
    for exps, c in terms.items():
        if shift is not None:
            exps = tuple(a + b for a, b in zip(exps, shift))
        v = acc.get(exps, 0) + factor * c
        if v:
            acc[exps] = v
        else:
            acc.pop(exps, None)


def _mul_terms(left: dict, right: dict) -> dict:
    out: dict = {}
    for e1, c1 in left.items():
        _accumulate(out, right, e1, c1)
    return out


def add(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    return p + r


def mul(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    return p * r


def scale_mono(p: QPolynomial, m: QMonomial) -> QPolynomial:
    _same_rank(p.n, m.n)
    shift = m.exps
    return QPolynomial._wrap(
        p.n, {tuple(a + b for a, b in zip(e, shift)): c for e, c in p.terms.items()}
    )


def constant_term(p: QPolynomial) -> int:
    if not p.is_laurent_free():
        raise LaurentError(f"constant term of a Laurent polynomial requested: {p}")
    return p.terms.get((0,) * (p.n - 1), 0)


def coefficient(p: QPolynomial, d) -> int:
    return p.terms.get(tuple(d), 0)


def is_homogeneous(p: QPolynomial, deg: int) -> bool:
    """True iff every monomial of p has polynomial degree deg (vacuous for 0)."""
    return all(sum(e) == deg for e in p.terms)


def is_nonnegative(p: QPolynomial) -> bool:
    return all(c > 0 for c in p.terms.values())
