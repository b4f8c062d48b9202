"""Small shared numerical helpers.

The symmetric eigensolver wrapper is the one numerical contract the rest of
the package leans on: sorted real eigenvalues, orthonormal eigenvectors and
a backward-error guarantee of 1e-12 relative to the matrix scale.
"""

import numpy as np

from .errors import ShapeError, Singular

EIGH_BACKWARD_TOL = 1e-12


def sym_eigh(x, herm_tol=1e-9):
    """Eigendecomposition of a real symmetric or complex Hermitian matrix.

    Returns (w, v) with w real ascending and v orthonormal columns.  The
    input is checked against its own adjoint and the factorization is
    checked for backward stability.
    """
    x = np.asarray(x)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ShapeError("expected a square matrix, got shape %s" % (x.shape,))
    scale = max(1.0, float(np.abs(x).max()) if x.size else 0.0)
    if float(np.abs(x - x.conj().T).max()) > herm_tol * scale:
        raise ShapeError("matrix is not Hermitian within tolerance")
    xs = 0.5 * (x + x.conj().T)
    w, v = np.linalg.eigh(xs)
    assert float(np.abs(xs @ v - v * w).max()) <= EIGH_BACKWARD_TOL * scale, \
        "eigensolver backward error above contract"
    return w, v


def spd_sqrt(g):
    """Square root and inverse square root of a positive definite matrix."""
    w, v = sym_eigh(g)
    if w[0] <= 0.0:
        raise Singular("matrix is not positive definite")
    r = np.sqrt(w)
    half = (v * r) @ v.conj().T
    inv_half = (v / r) @ v.conj().T
    return half, inv_half


def nullspace(a, rtol=1e-10):
    """Orthonormal rows spanning the right null space of a real matrix."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    if a.shape[0] == 0:
        return np.eye(a.shape[1])
    u, s, vt = np.linalg.svd(a)
    smax = s[0] if s.size else 0.0
    keep = int(np.sum(s > rtol * max(1.0, smax)))
    return vt[keep:]


def solve_checked(a, b, rcond=1e-12):
    """Solve a @ x = b, raising Singular when a is numerically singular."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError("expected a square matrix, got shape %s" % (a.shape,))
    if a.shape[0] == 0:
        return np.zeros_like(b)
    s = np.linalg.svd(a, compute_uv=False)
    if s[-1] <= rcond * max(1.0, s[0]):
        raise Singular("linear system is numerically singular")
    return np.linalg.solve(a, b)


def takagi(z):
    """Factor a complex symmetric matrix as u @ diag(s) @ u.T, u unitary.

    Works through the eigendecomposition of the doubled real symmetric
    matrix [[Re z, Im z], [Im z, -Re z]]; each eigenpair (s, (a; b)) with
    s > 0 yields a column u = a + i b satisfying z @ conj(u) = s * u.
    Returns (s, u) with s descending and nonnegative.
    """
    z = np.asarray(z, dtype=complex)
    n = z.shape[0]
    if float(np.abs(z - z.T).max() if n else 0.0) > 1e-9 * max(1.0, np.abs(z).max() if z.size else 1.0):
        raise ShapeError("takagi needs a complex symmetric matrix")
    big = np.block([[z.real, z.imag], [z.imag, -z.real]])
    w, v = sym_eigh(big)
    idx = np.argsort(w)[::-1][:n]
    s = w[idx]
    u = v[:n, idx] + 1j * v[n:, idx]
    return s, u


def skew_pairs(z, tol=1e-9):
    """Canonical pairs of a complex skew-symmetric matrix.

    Returns a list of triples (sigma, v1, v2) with sigma > tol descending,
    v1, v2 orthonormal, and z ~ sum sigma * (outer(v2, v1) - outer(v1, v2)).
    Uses greedy deflation on the dominant singular pair.
    """
    z = np.asarray(z, dtype=complex).copy()
    n = z.shape[0]
    if n and float(np.abs(z + z.T).max()) > 1e-9 * max(1.0, np.abs(z).max()):
        raise ShapeError("skew_pairs needs a complex skew-symmetric matrix")
    out = []
    for _ in range(n // 2):
        w, v = sym_eigh(z @ z.conj().T)
        sigma = np.sqrt(max(w[-1], 0.0))
        if sigma <= tol:
            break
        v1 = v[:, -1]
        v2 = (z @ v1.conj()) / sigma
        out.append((sigma, v1, v2))
        z = z - sigma * (np.outer(v2, v1) - np.outer(v1, v2))
    return out


def frob(x):
    """Infinity norm over entries, as a plain float (0.0 for empty input)."""
    x = np.asarray(x)
    return float(np.abs(x).max()) if x.size else 0.0
