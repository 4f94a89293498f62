"""Integer lattice linear algebra on row vectors (plain Python ints).

Everything graded in this package is a finite free Z-module per degree, so
membership, rank, kernels and change-of-basis certificates all reduce to the
row Hermite normal form computed here.
"""


def hnf(rows, ncols=None):
    """Row Hermite normal form with transform.

    Returns (H, T, pivots) where T is an m x m unimodular matrix with
    T * A = [H; 0], H has rank(A) rows, pivots[r] is the pivot column of row r,
    pivots are positive and entries above a pivot lie in [0, pivot).
    The rows of T below rank(A) form a basis of the integer left kernel.
    """
    A = [list(r) for r in rows]
    m = len(A)
    if ncols is None:
        ncols = len(A[0]) if A else 0
    T = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for col in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][col]]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(A[i][col]))
            if best != r:
                A[r], A[best] = A[best], A[r]
                T[r], T[best] = T[best], T[r]
            p = A[r][col]
            done = True
            for i in range(r + 1, m):
                a = A[i][col]
                if a:
                    f = a // p
                    if f:
                        _axpy(A[i], -f, A[r])
                        _axpy(T[i], -f, T[r])
                    if A[i][col]:
                        done = False
            if done:
                break
        if r < m and A[r][col]:
            if A[r][col] < 0:
                A[r] = [-a for a in A[r]]
                T[r] = [-a for a in T[r]]
            p = A[r][col]
            for i in range(r):
                f = A[i][col] // p
                if f:
                    _axpy(A[i], -f, A[r])
                    _axpy(T[i], -f, T[r])
            pivots.append(col)
            r += 1
    return A[:r], T, pivots


def _axpy(y, a, x):
    for j, xj in enumerate(x):
        if xj:
            y[j] += a * xj


def lattice_basis(rows, ncols=None):
    """Canonical (HNF) basis of the row lattice."""
    H, _, _ = hnf(rows, ncols)
    return H


def rank(rows, ncols=None):
    return len(lattice_basis(rows, ncols))


def kernel_basis(rows, ncols=None):
    """Basis of {c in Z^m : c * A = 0}."""
    H, T, _ = hnf(rows, ncols)
    return T[len(H):]


def solve(rows, target):
    """Integer c with c * A = target, or None if target is not in the lattice."""
    m = len(rows)
    if m == 0:
        return [] if not any(target) else None
    H, T, pivots = hnf(rows, len(target))
    res = list(target)
    y = []
    for r, pc in enumerate(pivots):
        a = res[pc]
        if a % H[r][pc]:
            return None
        f = a // H[r][pc]
        y.append(f)
        if f:
            _axpy(res, -f, H[r])
    if any(res):
        return None
    c = [0] * m
    for r, f in enumerate(y):
        if f:
            _axpy(c, f, T[r])
    return c


def contains(rows, target):
    return solve(rows, target) is not None


def same_lattice(a, b, ncols):
    return lattice_basis(a, ncols) == lattice_basis(b, ncols)


def is_unimodular(square):
    """True iff the square integer matrix has determinant +-1."""
    n = len(square)
    if any(len(r) != n for r in square):
        return False
    H = lattice_basis(square, n)
    return H == [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def inverse_unimodular(square):
    """Integer inverse of a unimodular matrix (None if not unimodular)."""
    n = len(square)
    H, T, _ = hnf(square, n)
    if H != [[1 if i == j else 0 for j in range(n)] for i in range(n)]:
        return None
    return T


def vecmat(v, M):
    """Row vector times matrix."""
    out = [0] * (len(M[0]) if M else 0)
    for a, row in zip(v, M):
        if a:
            _axpy(out, a, row)
    return out
