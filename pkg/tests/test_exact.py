import pytest
import sympy
from hypothesis import given, strategies as st

from qflag.exact import RankDeficientError, integer_left_inverse, rank

matrices = st.integers(1, 6).flatmap(lambda c: st.integers(c, 9).flatmap(
    lambda r: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
def test_rank_matches_sympy(m):
    assert rank(m) == sympy.Matrix(m).rank()


@given(matrices)
def test_left_inverse(m):
    ncols = len(m[0])
    if sympy.Matrix(m).rank() < ncols:
        with pytest.raises(RankDeficientError):
            integer_left_inverse(m)
        return
    left, denom = integer_left_inverse(m)
    product = [[sum(left[i][k] * m[k][j] for k in range(len(m))) for j in range(ncols)]
               for i in range(ncols)]
    assert product == [[denom * (i == j) for j in range(ncols)] for i in range(ncols)]
    assert denom >= 1


def test_fractional_inverse_has_common_denominator():
    left, denom = integer_left_inverse([[2, 0], [0, 3]])
    assert denom == 6
    assert left == [[3, 0], [0, 2]]
