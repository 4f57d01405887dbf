"""
Elements of QH*(Fl_n) written in the Schubert basis.

A class is a map  permutation -> polynomial in q.  Internally the
coefficients are stored as raw ``{exps: int}`` dicts so the hot loops in
the operator layer and the product engine avoid wrapper churn;
``coefficient`` hands out :class:`QPolynomial` views.
"""

from __future__ import annotations

from .permutation import Permutation, format_perm, length, parse_perm
from .qlaurent import QMonomial, QPolynomial, _accumulate

__all__ = ["QHClass"]


class QHClass:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, support=None):
        self.n = n
        self.terms: dict = {}
        if support:
            for w, p in support.items():
                if len(w) != n:
                    raise ValueError(f"{w} has rank {len(w)}, expected {n}")
                raw = p.terms if isinstance(p, QPolynomial) else QPolynomial.constant(n, p).terms
                if raw:
                    self.terms[Permutation(w)] = dict(raw)

    @classmethod
    def _wrap(cls, n: int, terms: dict) -> "QHClass":
        x = cls.__new__(cls)
        x.n = n
        x.terms = terms
        return x

    @classmethod
    def basis(cls, w: Permutation) -> "QHClass":
        """The Schubert class sigma_w."""
        n = len(w)
        return cls._wrap(n, {w: {(0,) * (n - 1): 1}})

    @classmethod
    def zero(cls, n: int) -> "QHClass":
        return cls._wrap(n, {})

    def coefficient(self, w: Permutation) -> QPolynomial:
        return QPolynomial._wrap(self.n, dict(self.terms.get(w, {})))

    def support(self) -> list:
        return sorted(self.terms, key=lambda w: (length(w), tuple(w)))

    def items(self):
        for w in self.support():
            yield w, self.coefficient(w)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QHClass):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: "QHClass") -> "QHClass":
        out = self.copy_terms()
        _add_class_into(out, other.terms)
        return QHClass._wrap(self.n, out)

    def __sub__(self, other: "QHClass") -> "QHClass":
        out = self.copy_terms()
        _add_class_into(out, other.terms, factor=-1)
        return QHClass._wrap(self.n, out)

    def __neg__(self) -> "QHClass":
        return QHClass._wrap(self.n, {w: {e: -c for e, c in p.items()} for w, p in self.terms.items()})

    def scale(self, factor) -> "QHClass":
        """Multiply every coefficient by a QMonomial, QPolynomial, or int."""
        if isinstance(factor, QMonomial):
            shift = factor.exps
            return QHClass._wrap(self.n, {
                w: {tuple(a + b for a, b in zip(e, shift)): c for e, c in p.items()}
                for w, p in self.terms.items()
            })
        if isinstance(factor, int):
            factor = QPolynomial.constant(self.n, factor)
        out: dict = {}
        for w, p in self.terms.items():
            acc: dict = {}
            for e, c in factor.terms.items():
                _accumulate(acc, p, e, c)
            if acc:
                out[w] = acc
        return QHClass._wrap(self.n, out)

    def copy_terms(self) -> dict:
        return {w: dict(p) for w, p in self.terms.items()}

    def is_laurent_free(self) -> bool:
        return all(a >= 0 for p in self.terms.values() for e in p for a in e)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for p in self.terms.values() for c in p.values())

    def length_degrees(self) -> set:
        """The set of values length(w) + 2*deg(m) over the support."""
        return {length(w) + 2 * sum(e) for w, p in self.terms.items() for e in p}

    def is_homogeneous(self) -> bool:
        return len(self.length_degrees()) <= 1

    def substitute_zero(self) -> "QHClass":
        zero = (0,) * (self.n - 1)
        return QHClass._wrap(self.n, {w: {zero: p[zero]} for w, p in self.terms.items() if zero in p})

    def to_json(self) -> list:
        return [{"perm": format_perm(w), "coeff": self.coefficient(w).to_json()} for w in self.support()]

    @classmethod
    def from_json(cls, n: int, payload) -> "QHClass":
        terms = {}
        for item in payload:
            w = parse_perm(item["perm"])
            p = QPolynomial.from_json(n, item["coeff"])
            if p:
                terms[w] = p.terms
        return cls._wrap(n, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for w in self.support():
            p = self.coefficient(w)
            basis = f"s[{format_perm(w)}]"
            if p == 1:
                pieces.append(basis)
            elif len(p.terms) == 1:
                pieces.append(f"{p}*{basis}")
            else:
                pieces.append(f"({p})*{basis}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"QHClass({self.n}, {str(self)!r})"


def _add_class_into(acc: dict, terms: dict, shift=None, factor: int = 1) -> None:
    """acc += factor * q^shift * terms for raw class dicts."""
    for w, p in terms.items():
        slot = acc.get(w)
        if slot is None:
            slot = acc[w] = {}
        _accumulate(slot, p, shift, factor)
        if not slot:
            del acc[w]
