"""Exact linear algebra helpers.

Two layers: generic Gaussian elimination over any field whose elements carry
Python operators (used over L and over F_2(s)), and numpy integer elimination
mod a prime (used for the large finite-context systems).
"""

import numpy as np

from .polyring import Poly


# ---------------------------------------------------------------- generic --


def rref(rows):
    """Row-reduce a list of element lists in place-ish; returns (rows, pivots)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def kernel_basis(rows, ncols, field):
    """Basis of the right kernel of the equation rows (each of length ncols)."""
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve(rows, rhs, field):
    """One solution of rows * x = rhs with free variables zero, or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    ncols = len(rows[0]) if rows else 0
    for row, pc in zip(red, pivots):
        if pc == ncols:
            return None
    x = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[-1]
    return x


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = A[i][0] * B[0][j]
            for t in range(1, k):
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(A, v):
    out = []
    for row in A:
        acc = row[0] * v[0]
        for x, y in zip(row[1:], v[1:]):
            acc = acc + x * y
        out.append(acc)
    return out


def identity_matrix(field, n):
    return [
        [field.one if i == j else field.zero for j in range(n)] for i in range(n)
    ]


def mat_entrywise(A, fn):
    return [[fn(x) for x in row] for row in A]


def charpoly(A, field):
    """det(yI - A) as a monic Poly over the entry field (Laplace expansion;
    fine at companion-matrix sizes)."""
    n = len(A)
    y = Poly.gen(field)
    entries = [
        [
            (y - Poly.constant(field, A[i][j]))
            if i == j
            else Poly.constant(field, -A[i][j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(entries, field)


def _poly_det(M, field):
    n = len(M)
    if n == 1:
        return M[0][0]
    acc = Poly.zero(field)
    for j in range(n):
        if not M[0][j]:
            continue
        minor = [[M[i][c] for c in range(n) if c != j] for i in range(1, n)]
        term = M[0][j] * _poly_det(minor, field)
        acc = acc - term if j % 2 else acc + term
    return acc


def min_poly(A, field):
    """Minimal polynomial of the square matrix A over its entry field,
    by the first linear dependence among I, A, A^2, ... (Krylov on vec)."""
    n = len(A)
    power = identity_matrix(field, n)
    seen = [[x for row in power for x in row]]
    while True:
        power = mat_mul(power, A)
        vec = [x for row in power for x in row]
        cols = list(zip(*seen))
        combo = solve([list(c) for c in cols], vec, field)
        if combo is not None:
            coeffs = [-c for c in combo] + [field.one]
            return Poly(field, coeffs)
        seen.append(vec)
        if len(seen) > n * n + 1:
            raise RuntimeError("minimal polynomial search failed to terminate")


# ---------------------------------------------------------------- mod p ----


def np_array(M, p):
    return np.array(M, dtype=np.int64) % p


def np_rref(M, p):
    """Return (reduced rows, pivot columns) of an integer matrix mod p."""
    R = (np.array(M, dtype=np.int64) % p).copy()
    if R.size == 0:
        return R.reshape(0, R.shape[1] if R.ndim == 2 else 0), []
    nrows, ncols = R.shape
    pivots = []
    r = 0
    for c in range(ncols):
        rows_nz = np.nonzero(R[r:, c])[0]
        if rows_nz.size == 0:
            continue
        pr = r + rows_nz[0]
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        other = np.nonzero(R[:, c])[0]
        other = other[other != r]
        if other.size:
            R[other] = (R[other] - np.outer(R[other, c], R[r])) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R[:r], pivots


def np_rank(M, p):
    return len(np_rref(M, p)[1])


def np_kernel(M, p, ncols=None):
    """Rows spanning the right kernel of M mod p."""
    M = np.atleast_2d(np.array(M, dtype=np.int64))
    if M.size == 0:
        if ncols is None:
            ncols = M.shape[1]
        return np.eye(ncols, dtype=np.int64)
    ncols = M.shape[1]
    R, pivots = np_rref(M, p)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for row, pc in zip(R, pivots):
            basis[k, pc] = (-row[fc]) % p
    return basis


def np_solve(M, b, p):
    """One solution of M x = b mod p (free variables zero), or None."""
    M = np.atleast_2d(np.array(M, dtype=np.int64))
    b = np.array(b, dtype=np.int64).reshape(-1, 1)
    aug = np.hstack([M, b])
    R, pivots = np_rref(aug, p)
    ncols = M.shape[1]
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for row, pc in zip(R, pivots):
        x[pc] = row[-1]
    return x


def np_inv(M, p):
    M = np.array(M, dtype=np.int64)
    n = M.shape[0]
    aug = np.hstack([M % p, np.eye(n, dtype=np.int64)])
    R, pivots = np_rref(aug, p)
    if pivots != list(range(n)):
        raise ValueError("matrix not invertible mod p")
    return R[:, n:]
