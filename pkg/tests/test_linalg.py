import sympy
from hypothesis import given, strategies as st

from farmarb.linalg import charpoly, matmul, nullspace, rank, root_multiplicity, transpose, vecmat, zeros

small = st.integers(-4, 4)


def square(n):
    return st.tuples(*[st.tuples(*[small] * n)] * n)


@given(st.one_of(square(3), square(6)))
def test_charpoly_matches_sympy(m):
    x = sympy.Symbol("x")
    want = sympy.Poly(sympy.Matrix(m).charpoly(x).as_expr(), x).all_coeffs()
    assert list(charpoly(m)) == [int(c) for c in want]


@given(st.one_of(square(3), square(6)))
def test_rank_matches_sympy(m):
    assert rank(m) == sympy.Matrix(m).rank()


@given(square(3))
def test_nullspace(m):
    for v in nullspace(m):
        assert vecmat(v, transpose(m)) == (0,) * 3
    assert len(nullspace(m)) == 3 - rank(m)


def test_root_multiplicity():
    # x^2 (x-1)^3 (x+1)
    poly = [1, -2, 0, 2, -1, 0, 0]
    a, rest = root_multiplicity(poly, 0)
    b, rest = root_multiplicity(rest, 1)
    assert (a, b) == (2, 3) and list(rest) == [1, 1]


def test_matmul_zero():
    assert matmul(zeros(3), ((1, 2, 3),) * 3) == zeros(3)
