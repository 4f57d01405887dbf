"""
The quantum product on QH*(Fl_n), built from quantum Monk's formula alone.

For a fixed right factor sigma_v write P_u = sigma_u * sigma_v.  Then
P_id = sigma_v, and for every generator k and every u' of length d-1

    sum_{classical x} P_x  =  sigma_{s_k} * P_{u'}  -  sum_{quantum y} q_y P_y

where the classical x = u' s_ab have length d (the unknowns) and the quantum
y have length < d (already known).  Stacking all (k, u') rows of a degree
gives an integer system with full column rank; its left inverse is computed
once per (n, d) and reused for every v.  Rows not needed for the solve are
checked to have zero residual.
"""

from __future__ import annotations

import logging
import random
import threading
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import permutations as _orders

from .exact import RankDeficientError, integer_left_inverse
from .monk import monk_expansion, monk_multiply, monk_multiply_terms, twisted_shift, twisted_shift_power
from .permutation import (
    Permutation, all_perms, compose, format_perm, identity, length, longest, transposition,
)
from .qhclass import QHClass, _add_class_into
from .qlaurent import LaurentError, QPolynomial, _accumulate, _mul_terms
from .reports import VerificationReport

__all__ = [
    "EngineError", "MonkSystem", "monk_system", "ProductTable", "default_table",
    "quantum_product", "multiply", "structure_poly", "gw_invariant", "shifted_product",
    "full_table", "verify_ring_axioms", "verify_monk_agreement", "verify_shift_commutation",
    "sample_triples", "DEFAULT_LIMIT",
]

log = logging.getLogger(__name__)

DEFAULT_LIMIT = 5


class EngineError(RuntimeError):
    """Internal invariant violated: rank deficiency, non-integrality,
    negativity, or a nonzero consistency residual."""


class MonkSystem:
    """Incidence system pinning down all degree-d products from degree d-1."""

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.columns = [x for x in all_perms(n) if length(x) == d]
        col_index = {x: c for c, x in enumerate(self.columns)}
        self.rows = [(k, u) for u in all_perms(n) if length(u) == d - 1 for k in range(1, n)]
        self.classical = []
        self.quantum = []
        for k, u in self.rows:
            cl, qu = [], []
            for target, exps, _ in monk_expansion(k, u):
                if length(target) == d:
                    cl.append(col_index[target])
                else:
                    qu.append((target, exps))
            self.classical.append(tuple(cl))
            self.quantum.append(tuple(qu))
        self.incidence = [
            [int(c in cl) for c in range(len(self.columns))] for cl in self.classical
        ]
        try:
            left, self.denominator = integer_left_inverse(self.incidence)
        except RankDeficientError as exc:
            raise EngineError(f"Monk system for n={n}, d={d} is rank deficient: {exc}") from exc
        self.left = [[(r, a) for r, a in enumerate(row) if a] for row in left]

    def solve(self, rhs: list) -> list:
        """Solve for the unknown classes given one raw right-hand side per row."""
        out = []
        D = self.denominator
        for c, combo in enumerate(self.left):
            acc: dict = {}
            for r, a in combo:
                _add_class_into(acc, rhs[r], None, a)
            if D != 1:
                for w, p in acc.items():
                    for e, val in p.items():
                        q, rem = divmod(val, D)
                        if rem:
                            raise EngineError(
                                f"non-integral coefficient {val}/{D} at "
                                f"{format_perm(self.columns[c])} -> {format_perm(w)}")
                        p[e] = q
            out.append(acc)
        return out

    def residuals(self, solution: list, rhs: list) -> list:
        """Indices of rows whose equation is not satisfied exactly."""
        bad = []
        for r, cl in enumerate(self.classical):
            lhs: dict = {}
            for c in cl:
                _add_class_into(lhs, solution[c])
            if lhs != rhs[r]:
                bad.append(r)
        return bad


@lru_cache(maxsize=None)
def monk_system(n: int, d: int) -> MonkSystem:
    return MonkSystem(n, d)


def _check_class(x_terms: dict, n: int, total: int, where: str) -> None:
    for w, p in x_terms.items():
        lw = length(w)
        for e, c in p.items():
            if c <= 0:
                raise EngineError(f"negative coefficient {c} in {where} at {format_perm(w)}")
            if any(a < 0 for a in e):
                raise EngineError(f"Laurent monomial {e} in {where} at {format_perm(w)}")
            if lw + 2 * sum(e) != total:
                raise EngineError(f"inhomogeneous term q^{e} s[{format_perm(w)}] in {where}")


def product_column(v: Permutation) -> dict:
    """All products sigma_u * sigma_v for fixed v, as ``{u: raw class}``."""
    n = len(v)
    top = n * (n - 1) // 2
    P = {identity(n): {v: {(0,) * (n - 1): 1}}}
    lv = length(v)
    for d in range(1, top + 1):
        system = monk_system(n, d)
        rhs = []
        for (k, u), quantum in zip(system.rows, system.quantum):
            row = monk_multiply_terms(k, P[u])
            for target, exps in quantum:
                _add_class_into(row, P[target], exps, -1)
            rhs.append(row)
        solution = system.solve(rhs)
        bad = system.residuals(solution, rhs)
        if bad:
            k, u = system.rows[bad[0]]
            raise EngineError(
                f"consistency residual for v={format_perm(v)}, d={d}, row (k={k}, u={format_perm(u)})")
        for x, terms in zip(system.columns, solution):
            _check_class(terms, n, d + lv, f"s[{format_perm(x)}]*s[{format_perm(v)}]")
            P[x] = terms
    return P


class ProductTable:
    """Memoized quantum products, keyed by unordered pairs.

    Products are computed a whole column (fixed right factor) at a time.  When
    a column produces an entry that already exists from another column, the two
    are compared, which exercises commutativity for free.
    """

    def __init__(self, n: int):
        self.n = n
        self._entries: dict = {}
        self._columns: set = set()
        self._lock = threading.Lock()
        self.commutativity_checks = 0

    @staticmethod
    def key(u: Permutation, v: Permutation) -> tuple:
        return (u, v) if tuple(u) <= tuple(v) else (v, u)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, pair) -> bool:
        return self.key(*pair) in self._entries

    @property
    def columns(self) -> frozenset:
        return frozenset(self._columns)

    def is_complete(self) -> bool:
        return len(self._columns) == len(all_perms(self.n))

    def insert_column(self, v: Permutation, column: dict) -> None:
        with self._lock:
            if v in self._columns:
                return
            for u, terms in column.items():
                key = self.key(u, v)
                old = self._entries.get(key)
                if old is None:
                    self._entries[key] = QHClass._wrap(self.n, terms)
                elif u != v:
                    self.commutativity_checks += 1
                    if old.terms != terms:
                        raise EngineError(
                            f"commutativity fails for {format_perm(u)}, {format_perm(v)}")
            self._columns.add(v)

    def insert(self, u: Permutation, v: Permutation, x: QHClass) -> None:
        """Insert a single product after validating it (used by cache loading)."""
        _check_class(x.terms, self.n, length(u) + length(v), f"s[{format_perm(u)}]*s[{format_perm(v)}]")
        with self._lock:
            self._entries.setdefault(self.key(u, v), x)

    def mark_column(self, v: Permutation) -> None:
        with self._lock:
            self._columns.add(v)

    def product(self, u: Permutation, v: Permutation) -> QHClass:
        if len(u) != self.n or len(v) != self.n:
            raise ValueError(f"rank mismatch: table has n={self.n}")
        key = self.key(u, v)
        x = self._entries.get(key)
        if x is None:
            self.insert_column(v, product_column(v))
            x = self._entries[key]
        return x

    def entries(self):
        """(u, v, class) for every stored unordered pair, in basis order."""
        order = {w: i for i, w in enumerate(all_perms(self.n))}
        for key in sorted(self._entries, key=lambda k: (order[k[0]], order[k[1]])):
            yield key[0], key[1], self._entries[key]


_default_tables: dict = {}
_default_lock = threading.Lock()


def default_table(n: int) -> ProductTable:
    """Process-wide shared table for rank n."""
    with _default_lock:
        table = _default_tables.get(n)
        if table is None:
            table = _default_tables[n] = ProductTable(n)
        return table


def _table(n: int, table) -> ProductTable:
    if table is None:
        return default_table(n)
    if table.n != n:
        raise ValueError(f"rank mismatch: table has n={table.n}, got {n}")
    return table


def quantum_product(u: Permutation, v: Permutation, table: ProductTable | None = None) -> QHClass:
    """sigma_u * sigma_v in the Schubert basis."""
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(v)}")
    return _table(len(u), table).product(u, v)


def multiply(x: QHClass, y: QHClass, table: ProductTable | None = None) -> QHClass:
    """Bilinear extension of the quantum product to arbitrary classes."""
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x.n} vs {y.n}")
    table = _table(x.n, table)
    out: dict = {}
    for w1, p1 in x.terms.items():
        for w2, p2 in y.terms.items():
            coeff = _mul_terms(p1, p2)
            prod = table.product(w1, w2).terms
            for e, c in coeff.items():
                _add_class_into(out, prod, e, c)
    return QHClass._wrap(x.n, out)


def structure_poly(u: Permutation, v: Permutation, w: Permutation,
                   table: ProductTable | None = None) -> QPolynomial:
    """C_{u,v,w}: the coefficient of sigma_{w0 w} in sigma_u * sigma_v."""
    if not len(u) == len(v) == len(w):
        raise ValueError("rank mismatch")
    n = len(u)
    return quantum_product(u, v, table).coefficient(compose(longest(n), w))


def gw_invariant(u: Permutation, v: Permutation, w: Permutation, d,
                 table: ProductTable | None = None) -> int:
    """The Gromov-Witten invariant <sigma_u, sigma_v, sigma_w>_d."""
    d = tuple(int(x) for x in d)
    n = len(u)
    if len(d) != n - 1:
        raise ValueError(f"degree vector needs {n - 1} entries, got {len(d)}")
    if any(x < 0 for x in d):
        raise ValueError(f"degree vector must be nonnegative, got {d}")
    return structure_poly(u, v, w, table).terms.get(d, 0)


def shifted_product(a: int, u: Permutation, x: QHClass, table: ProductTable | None = None) -> QHClass:
    """sigma_{o^a u} * x, obtained from sigma_u * x by the twisted shift.

    Since O commutes with quantum multiplication,
    sigma_{o^a u} * x = c^{-1} O^a(sigma_u * x)  where O^a(sigma_u) = c sigma_{o^a u}.
    For u = identity no product is needed at all.
    """
    n = len(u)
    a %= n
    image = twisted_shift_power(QHClass.basis(u), a)
    ((_, c_terms),) = image.terms.items()
    ((c_exps, _),) = c_terms.items()
    if u == identity(n):
        base = x
    else:
        base = multiply(QHClass.basis(u), x, table)
    shifted = twisted_shift_power(base, a)
    inv = tuple(-e for e in c_exps)
    out: dict = {}
    _add_class_into(out, shifted.terms, inv)
    result = QHClass._wrap(n, out)
    if not result.is_laurent_free():
        raise LaurentError(f"shifted product left a Laurent term: {result}")
    return result


def full_table(n: int, jobs: int = 1, limit: int = DEFAULT_LIMIT,
               table: ProductTable | None = None) -> ProductTable:
    """Every product sigma_u * sigma_v for u, v in S_n."""
    if n > limit:
        raise ValueError(f"n={n} exceeds the table limit {limit}; raise the limit explicitly")
    table = ProductTable(n) if table is None else table
    todo = [v for v in all_perms(n) if v not in table.columns]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for v, column in zip(todo, pool.map(product_column, todo, chunksize=4)):
                table.insert_column(v, column)
    else:
        for v in todo:
            table.insert_column(v, product_column(v))
    return table


def sample_triples(n: int, count: int | None, seed: int = 0):
    """All triples in basis order when count is None, else a seeded sample."""
    perms = all_perms(n)
    if count is None:
        for u in perms:
            for v in perms:
                for w in perms:
                    yield u, v, w
        return
    rng = random.Random(seed)
    for _ in range(count):
        yield rng.choice(perms), rng.choice(perms), rng.choice(perms)


def _triple(u, v, w) -> dict:
    return {"u": format_perm(u), "v": format_perm(v), "w": format_perm(w)}


def verify_ring_axioms(n: int, table: ProductTable | None = None, *, sample: int | None = None,
                       seed: int = 0, classical=True) -> list:
    """Check the structure polynomials against the ring laws.

    Exhaustive for n <= 4, otherwise a seeded sample (10,000 triples unless
    ``sample`` says otherwise).  Returns one report per law.
    """
    table = full_table(n, limit=max(n, DEFAULT_LIMIT), table=_table(n, table))
    if sample is None and n >= 5:
        sample = 10_000
    N = n * (n - 1) // 2
    w0 = longest(n)
    if classical:
        from .classical import classical_c
    reports = {name: VerificationReport(name, n) for name in (
        "commutativity", "nonnegativity", "s3_symmetry", "degree",
        "vanishing", "classical_limit", "associativity")}

    comm = reports["commutativity"]
    comm.tested = table.commutativity_checks
    comm.notes["pairs_compared_across_columns"] = table.commutativity_checks

    def C(x, y, z):
        return table.product(x, y).terms.get(compose(w0, z), {})

    for u, v, w in sample_triples(n, sample, seed):
        c = C(u, v, w)
        reports["nonnegativity"].record(
            all(val > 0 and min(e, default=0) >= 0 for e, val in c.items()),
            lambda: _triple(u, v, w))
        reports["s3_symmetry"].record(
            all(C(*order) == c for order in _orders((u, v, w))),
            lambda: _triple(u, v, w))
        total = length(u) + length(v) + length(w)
        gap = total - N
        if c:
            reports["degree"].record(
                gap >= 0 and gap % 2 == 0 and all(2 * sum(e) == gap for e in c),
                lambda: {**_triple(u, v, w), "C": str(QPolynomial._wrap(n, c))})
        if gap < 0 or gap % 2:
            reports["vanishing"].record(not c, lambda: _triple(u, v, w))
        elif gap == 0:
            reports["vanishing"].record(set(c) <= {(0,) * (n - 1)}, lambda: _triple(u, v, w))
        if classical:
            const = c.get((0,) * (n - 1), 0)
            expected = classical_c(u, v, w)
            reports["classical_limit"].record(
                const == expected,
                lambda: {**_triple(u, v, w), "engine": const, "oracle": expected})
        left = multiply(table.product(u, v), QHClass.basis(w), table)
        right = multiply(QHClass.basis(u), table.product(v, w), table)
        reports["associativity"].record(left == right, lambda: _triple(u, v, w))
    return list(reports.values())


def verify_monk_agreement(n: int, table: ProductTable | None = None) -> VerificationReport:
    """Engine products by sigma_{s_k} must equal the Monk operator exactly."""
    table = _table(n, table)
    report = VerificationReport("monk_agreement", n)
    for k in range(1, n):
        s_k = transposition(n, k, k + 1)
        for v in all_perms(n):
            report.record(
                table.product(s_k, v) == monk_multiply(k, QHClass.basis(v)),
                {"k": k, "v": format_perm(v)})
    return report


def verify_shift_commutation(n: int, table: ProductTable | None = None, *,
                             sample: int | None = None, seed: int = 0) -> VerificationReport:
    """sigma_u * O(sigma_v) == O(sigma_u * sigma_v) for all (or sampled) pairs."""
    table = _table(n, table)
    report = VerificationReport("shift_commutation", n)
    perms = all_perms(n)
    if sample is None:
        pairs = [(u, v) for u in perms for v in perms]
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(perms), rng.choice(perms)) for _ in range(sample)]
    for u, v in pairs:
        lhs = multiply(QHClass.basis(u), twisted_shift(QHClass.basis(v)), table)
        rhs = twisted_shift(table.product(u, v))
        report.record(lhs == rhs, {"u": format_perm(u), "v": format_perm(v)})
    return report
