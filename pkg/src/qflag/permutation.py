"""
Permutations of {1, ..., n} in one-line notation.

Positions and values are 1-based.  Composition is functional,
``compose(u, v)(i) == u(v(i))``, so ``compose(o, w)`` shifts the *values*
of ``w`` while ``compose(w, s_ab)`` swaps the *positions* a and b.

>>> w = parse_perm("213")
>>> length(w), code(w)
(1, (1, 0, 0))
>>> str(compose(cycle_o(3), w))
'321'
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _itertools_permutations

__all__ = [
    "Permutation", "PermutationSyntaxError",
    "identity", "longest", "cycle_o", "compose", "inverse", "length",
    "transposition", "right_multiply_transposition", "descents", "code",
    "is_cover_up", "is_deep_drop", "shift", "all_perms",
    "parse_perm", "format_perm",
]


class PermutationSyntaxError(ValueError):
    """Raised for malformed permutation text; carries the offending position."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"bad permutation {text!r} at position {position}: {reason}")


class Permutation(tuple):
    """An element of S_n stored as the tuple (w(1), ..., w(n)).

    Instances are immutable and compare structurally.  Calling a permutation
    evaluates it at a 1-based position: ``w(i)``.
    """

    __slots__ = ()

    def __new__(cls, values):
        values = tuple(int(x) for x in values)
        n = len(values)
        if n == 0:
            raise ValueError("a permutation needs rank n >= 1")
        if sorted(values) != list(range(1, n + 1)):
            raise ValueError(f"{values} is not a permutation of 1..{n}")
        return tuple.__new__(cls, values)

    @classmethod
    def _trusted(cls, values) -> "Permutation":
        # skips validation; callers guarantee a bijection
        return tuple.__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __repr__(self) -> str:
        return f"Permutation({format_perm(self)!r})"

    def __str__(self) -> str:
        return format_perm(self)

    def __reduce__(self):
        return (Permutation, (tuple(self),))


def _check_rank(n: int) -> None:
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")


def identity(n: int) -> Permutation:
    _check_rank(n)
    return Permutation._trusted(range(1, n + 1))


def longest(n: int) -> Permutation:
    """The longest element w0 = (n, n-1, ..., 1)."""
    _check_rank(n)
    return Permutation._trusted(range(n, 0, -1))


def cycle_o(n: int) -> Permutation:
    """The long cycle o with o(i) = i+1 for i < n and o(n) = 1."""
    _check_rank(n)
    return Permutation._trusted(tuple(range(2, n + 1)) + (1,))


def compose(u: Permutation, v: Permutation) -> Permutation:
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(v)}")
    return Permutation._trusted(u[x - 1] for x in v)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return Permutation._trusted(out)


@lru_cache(maxsize=None)
def _length(values: tuple) -> int:
    n = len(values)
    return sum(1 for i in range(n) for j in range(i + 1, n) if values[i] > values[j])


def length(w: Permutation) -> int:
    """Number of inversions of w."""
    return _length(tuple(w))


def _check_pair(n: int, a: int, b: int) -> None:
    if not (1 <= a < b <= n):
        raise ValueError(f"need 1 <= a < b <= {n}, got a={a}, b={b}")


def transposition(n: int, a: int, b: int) -> Permutation:
    _check_pair(n, a, b)
    values = list(range(1, n + 1))
    values[a - 1], values[b - 1] = b, a
    return Permutation._trusted(values)


def right_multiply_transposition(w: Permutation, a: int, b: int) -> Permutation:
    """w * s_ab, i.e. w with the entries in positions a and b swapped."""
    _check_pair(len(w), a, b)
    values = list(w)
    values[a - 1], values[b - 1] = values[b - 1], values[a - 1]
    return Permutation._trusted(values)


def descents(w: Permutation) -> frozenset:
    return frozenset(k for k in range(1, len(w)) if w[k - 1] > w[k])


def code(w: Permutation) -> tuple:
    """Lehmer code: c_i = #{j > i : w(j) < w(i)}."""
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))


def is_cover_up(w: Permutation, a: int, b: int) -> bool:
    """True iff length(w * s_ab) == length(w) + 1.

    Decided without computing lengths: for every a <= k <= b we need
    w(k) >= w(b) >= w(a) or w(b) >= w(a) >= w(k).
    """
    wa, wb = w[a - 1], w[b - 1]
    for k in range(a, b + 1):
        wk = w[k - 1]
        if not (wk >= wb >= wa or wb >= wa >= wk):
            return False
    return True


def is_deep_drop(w: Permutation, a: int, b: int) -> bool:
    """True iff length(w * s_ab) == length(w) - 2(b - a) + 1,
    i.e. w(a) >= w(k) >= w(b) for every a <= k <= b."""
    wa, wb = w[a - 1], w[b - 1]
    for k in range(a, b + 1):
        if not (wa >= w[k - 1] >= wb):
            return False
    return True


def shift(w: Permutation, a: int) -> Permutation:
    """compose(o^a, w): add a to every value of w, modulo n."""
    n = len(w)
    return Permutation._trusted((x - 1 + a) % n + 1 for x in w)


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple:
    """All of S_n ordered by (length, one-line lexicographic)."""
    _check_rank(n)
    perms = [Permutation._trusted(p) for p in _itertools_permutations(range(1, n + 1))]
    perms.sort(key=lambda p: (length(p), tuple(p)))
    return tuple(perms)


def parse_perm(text: str) -> Permutation:
    """Parse compact ("2134") or comma-separated ("2,1,3,4") one-line notation."""
    raw = text.strip()
    if not raw:
        raise PermutationSyntaxError(text, 0, "empty string")
    values, offsets = [], []
    if "," in raw:
        pos = 0
        for chunk in raw.split(","):
            token = chunk.strip()
            if not token.isdigit():
                raise PermutationSyntaxError(text, pos, f"expected an integer, got {chunk!r}")
            values.append(int(token))
            offsets.append(pos)
            pos += len(chunk) + 1
    else:
        for pos, ch in enumerate(raw):
            if not ch.isdigit() or ch == "0":
                raise PermutationSyntaxError(text, pos, f"unexpected character {ch!r}")
            values.append(int(ch))
            offsets.append(pos)
    n = len(values)
    seen = set()
    for x, pos in zip(values, offsets):
        if not 1 <= x <= n:
            raise PermutationSyntaxError(text, pos, f"value {x} outside 1..{n}")
        if x in seen:
            raise PermutationSyntaxError(text, pos, f"repeated value {x}")
        seen.add(x)
    return Permutation._trusted(values)


def format_perm(w) -> str:
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)
