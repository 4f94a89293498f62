import sympy
from hypothesis import given, settings, strategies as st

from osz_sartori import lattice

ints = st.integers(-6, 6)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(ints, min_size=c, max_size=c), min_size=0, max_size=max_rows)
        .map(lambda rows: (rows, c)))


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_hnf_certificate(data):
    rows, ncols = data
    H, T, pivots = lattice.hnf(rows, ncols)
    m = len(rows)
    if m:
        TA = matmul(T, rows)
        assert TA[:len(H)] == H
        assert all(not any(r) for r in TA[len(H):])
        assert abs(sympy.Matrix(T).det()) == 1
    assert len(H) == (sympy.Matrix(rows).rank() if m else 0)
    for r, p in enumerate(pivots):
        assert H[r][p] > 0
        assert all(H[r][c] == 0 for c in range(p))
        assert all(0 <= H[s][p] < H[r][p] for s in range(r))


@settings(max_examples=150, deadline=None)
@given(matrices(), st.lists(ints, min_size=4, max_size=4))
def test_solve_and_contains(data, coeffs):
    rows, ncols = data
    if not rows:
        return
    # a vector built from the rows is always found
    target = [sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(ncols)]
    sol = lattice.solve(rows, target)
    assert sol is not None
    assert [sum(c * r[j] for c, r in zip(sol, rows)) for j in range(ncols)] == target
    # doubling the lattice loses odd vectors
    doubled = [[2 * a for a in r] for r in rows]
    odd = [t + 1 if j == 0 else t for j, t in enumerate([2 * a for a in target])]
    assert not lattice.contains(doubled, odd)


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_kernel_basis(data):
    rows, ncols = data
    if not rows:
        return
    K = lattice.kernel_basis(rows, ncols)
    assert len(K) == len(rows) - sympy.Matrix(rows).rank()
    for v in K:
        assert all(sum(v[i] * rows[i][j] for i in range(len(rows))) == 0 for j in range(ncols))


def test_unimodular_inverse():
    M = [[2, 1], [1, 1]]
    assert lattice.is_unimodular(M)
    inv = lattice.inverse_unimodular(M)
    assert matmul(M, inv) == [[1, 0], [0, 1]]
    assert not lattice.is_unimodular([[2, 0], [0, 1]])


def test_same_lattice():
    assert lattice.same_lattice([[1, 1], [0, 2]], [[1, -1], [2, 0]], 2)
    assert not lattice.same_lattice([[1, 0]], [[2, 0]], 2)
