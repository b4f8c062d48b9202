"""Boundary components of the irreducible bounded symmetric domains.

For each domain D of rank r and each 0 <= k < r there is a standard
boundary component of rank k.  Types I and III come with the full matrix
apparatus: the disk map f_F and the parameter map phi_F into the group,
the one-parameter subgroup w_F, explicit Levi and unipotent-radical block
patterns, and a numerical classifier of the five-term decomposition based
on the conjugation limit lim_{t->0} w_F(t) g w_F(t)^{-1}.  Types II, IV,
V and VI ship the standard point, the associated cone, the smaller domain
and the Levi factor strings; their matrix maps are not constructed.
"""

import numpy as np

from . import domains as _domains
from .errors import (Inconclusive, NonpositiveParameter, ShapeError,
                     UnsupportedRank, UnsupportedType)
from .linalg import frob, solve_checked

MATRIX_TYPES = ('I', 'III')


def _split(desc):
    info = _domains._info(desc)
    return info[0], info[1:]


def _rank(desc):
    fam, par = _split(desc)
    if fam == 'I':
        return par[1]
    if fam == 'II':
        return par[0] // 2
    if fam == 'III':
        return par[0]
    if fam == 'IV':
        return min(2, par[0])
    return {'V': 2, 'VI': 3}[fam]


def _check(desc, k):
    fam, par = _split(desc)
    r = _rank(desc)
    if not (isinstance(k, (int, np.integer)) and 0 <= k < r):
        raise UnsupportedRank("k must satisfy 0 <= k < %d for %s" % (r, desc))
    return fam, par, r


class BoundaryDescriptor:
    """Domain descriptor plus the rank k of a standard boundary component."""

    def __init__(self, domain, k):
        self.family, self.params, self.rank = _check(domain, k)
        self.domain = domain
        self.k = int(k)

    def point(self):
        return standard_boundary_point(self.domain, self.k)

    def cone(self):
        return boundary_cone(self.domain, self.k)

    def is_domain(self):
        return boundary_is_domain(self.domain, self.k)

    def levi_data(self):
        return levi_data(self.domain, self.k)

    def __repr__(self):
        return "BoundaryDescriptor(%r, k=%d)" % (self.domain, self.k)


def _skew_pair_chain(m):
    out = np.zeros((m, m))
    for i in range(0, m - 1, 2):
        out[i, i + 1] = 1.0
        out[i + 1, i] = -1.0
    return out


def standard_boundary_point(desc, k):
    """Carrier point o_F of the standard rank-k boundary component."""
    fam, par, r = _check(desc, k)
    if fam == 'I':
        p, q = par
        z = np.zeros((p, q), dtype=complex)
        z[p - (q - k):, k:] = np.eye(q - k)
        return z
    if fam == 'II':
        n = par[0]
        eps = n % 2
        z = np.zeros((n, n), dtype=complex)
        z[2 * k + eps:, 2 * k + eps:] = _skew_pair_chain(n - 2 * k - eps)
        return z
    if fam == 'III':
        n = par[0]
        z = np.zeros((n, n), dtype=complex)
        z[k:, k:] = np.eye(n - k)
        return z
    if fam == 'IV':
        n = par[0]
        z = np.zeros(n, dtype=complex)
        if k == 0:
            z[0] = -1j
        else:
            z[0] = -0.5j
            z[1] = 0.5
        return z
    if fam == 'V':
        z = np.zeros((2, 8), dtype=complex)
        if k == 0:
            z[0, 0] = 1.0
        else:
            z[0, 0] = 0.5
            z[0, 1] = 0.5j
        return z
    alpha = np.zeros(3)
    alpha[k:] = 1.0
    from . import albert as _albert
    return _albert.pack(alpha, np.zeros((3, 8)))


def _sizes(desc, k):
    fam, par, _ = _check(desc, k)
    if fam == 'I':
        p, q = par
        return fam, (p - q + k, q - k, k, q - k)
    if fam == 'III':
        n = par[0]
        return fam, (k, n - k, k, n - k)
    raise UnsupportedType("matrix boundary data exists only for types I and III")


def _slices(sizes):
    edges = np.cumsum((0,) + sizes)
    return [slice(edges[i], edges[i + 1]) for i in range(4)]


def _phi_matrix(desc, k, unit, m):
    fam, sizes = _sizes(desc, k)
    m = np.asarray(m, dtype=float)
    if m.shape != (2, 2) or abs(np.linalg.det(m) - 1.0) > 1e-9:
        raise ShapeError("second argument must be a real 2x2 matrix of determinant 1")
    unit = complex(unit)
    if abs(abs(unit) - 1.0) > 1e-9:
        raise ShapeError("first argument must lie on the unit circle")
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    alpha = (a + d + 1j * (b - c)) / 2
    beta = (b + c + 1j * (a - d)) / 2
    gamma = (b + c - 1j * (a - d)) / 2
    delta = (a + d - 1j * (b - c)) / 2
    n = sum(sizes)
    s = _slices(sizes)
    g = np.zeros((n, n), dtype=complex)
    g[s[0], s[0]] = unit * np.eye(sizes[0])
    g[s[2], s[2]] = np.conj(unit) * np.eye(sizes[2])
    g[s[1], s[1]] = alpha * np.eye(sizes[1])
    g[s[1], s[3]] = beta * np.eye(sizes[1])
    g[s[3], s[1]] = gamma * np.eye(sizes[1])
    g[s[3], s[3]] = delta * np.eye(sizes[1])
    if fam == 'I':
        p, q = _split(desc)[1]
        g = g * np.exp(-1j * np.angle(unit) * (p - q) / (p + q))
    return g


def boundary_pair(desc, k):
    """(f_F, phi_F) for types I and III.

    f_F maps the closed unit disk into the closure of D with f_F(0) = 0 and
    f_F(1) = o_F; phi_F(u, m) (u on the circle, m real with det 1) returns
    the validated group element of the 4-block display.
    """
    fam, sizes = _sizes(desc, k)
    tag = _domains.group_tag(desc)
    _, par = _split(desc)

    def f_f(z):
        z = complex(z)
        if fam == 'I':
            p, q = par
            out = np.zeros((p, q), dtype=complex)
            out[p - (q - k):, k:] = z * np.eye(q - k)
        else:
            n = par[0]
            out = np.zeros((n, n), dtype=complex)
            out[k:, k:] = z * np.eye(n - k)
        return out

    def phi_f(unit, m):
        return _domains.GroupElement(_phi_matrix(desc, k, unit, m), tag)

    return f_f, phi_f


def disk_action(m, z):
    """Fractional-linear action of a real determinant-one 2x2 matrix on the
    closed unit disk, normalized so that f_F is equivariant: for any (u, m),
    mobius_act(D, phi_F(u, m), f_F(z)) = f_F(disk_action(m, z)).  Rotation
    matrices act as z -> e^{2 i theta} z and diag(t, 1/t) moves 0 along the
    imaginary axis."""
    m = np.asarray(m, dtype=float)
    if m.shape != (2, 2) or abs(np.linalg.det(m) - 1.0) > 1e-9:
        raise ShapeError("expected a real 2x2 matrix of determinant 1")
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    z = complex(z)
    num = (1j * (a + d) - (b - c)) * z + (1j * (b + c) - (a - d))
    den = ((a - d) + 1j * (b + c)) * z + (1j * (a + d) + (b - c))
    return num / den


def _w_matrix(desc, k, t):
    return _phi_matrix(desc, k, 1.0, np.array([[t, 0.0], [0.0, 1.0 / t]]))


def w_f(desc, k, t):
    """One-parameter group element w_F(t); w_F(1) = id, w_F(t)w_F(s) = w_F(ts)."""
    t = float(t)
    if t <= 0:
        raise NonpositiveParameter("w_F is defined for positive parameters only")
    return _domains.GroupElement(_w_matrix(desc, k, t), _domains.group_tag(desc))


def _as_matrix(g):
    return np.asarray(getattr(g, 'matrix', g), dtype=complex)


def levi_member(desc, k, g, tol=1e-9):
    """True when g matches the centralizer block pattern of w_F: an
    arbitrary block on the corner slots and a GL factor E embedded through
    (E + (E*)^{-1})/2 and +-i (E - (E*)^{-1})/2, with E* the conjugate
    transpose for type I and the plain transpose for type III."""
    fam, sizes = _sizes(desc, k)
    g = _as_matrix(g)
    n = sum(sizes)
    if g.shape != (n, n):
        raise ShapeError("expected a %d x %d matrix" % (n, n))
    s = _slices(sizes)
    e = g[s[1], s[1]] - 1j * g[s[1], s[3]]
    if fam == 'III':
        if frob(e.imag) > tol * max(1.0, frob(e)):
            return False
        e = e.real.astype(complex)
    star = e.conj().T if fam == 'I' else e.T
    try:
        inv_star = solve_checked(star, np.eye(sizes[1], dtype=complex))
    except Exception:
        return False
    rebuilt = np.zeros((n, n), dtype=complex)
    rebuilt[s[0], s[0]] = g[s[0], s[0]]
    rebuilt[s[0], s[2]] = g[s[0], s[2]]
    rebuilt[s[2], s[0]] = g[s[2], s[0]]
    rebuilt[s[2], s[2]] = g[s[2], s[2]]
    rebuilt[s[1], s[1]] = (e + inv_star) / 2
    rebuilt[s[3], s[3]] = (e + inv_star) / 2
    rebuilt[s[1], s[3]] = 1j * (e - inv_star) / 2
    rebuilt[s[3], s[1]] = -1j * (e - inv_star) / 2
    return frob(g - rebuilt) <= tol * max(1.0, frob(g))


def unipotent_member(desc, k, g, tol=1e-9):
    """True when g matches the unipotent-radical block pattern of the
    normalizer, including the constraint tying the skew part of M to the
    F blocks."""
    fam, sizes = _sizes(desc, k)
    g = _as_matrix(g)
    n = sum(sizes)
    if g.shape != (n, n):
        raise ShapeError("expected a %d x %d matrix" % (n, n))
    s = _slices(sizes)
    if fam == 'I':
        f1 = g[s[0], s[1]]
        f2 = g[s[2], s[3]]
        m = g[s[1], s[3]]
        constraint = (np.conj(f1).T @ f1 - np.conj(f2).T @ f2
                      - 1j * (np.conj(m).T - m))
    else:
        f1 = g[s[0], s[1]]
        f2 = np.conj(f1)
        m = g[s[1], s[3]]
        if frob(m.imag) > tol * max(1.0, frob(g)):
            return False
        m = m.real.astype(complex)
        constraint = (np.conj(f1).T @ f1 - f1.T @ np.conj(f1)
                      - 1j * (m.T - m))
    if frob(constraint) > tol * max(1.0, frob(g)):
        return False
    rebuilt = _radical_matrix(desc, k, f1, f2, m)
    return frob(g - rebuilt) <= tol * max(1.0, frob(g))


def _radical_matrix(desc, k, f1, f2, m):
    fam, sizes = _sizes(desc, k)
    n = sum(sizes)
    s = _slices(sizes)
    g = np.zeros((n, n), dtype=complex)
    g[s[0], s[0]] = np.eye(sizes[0])
    g[s[2], s[2]] = np.eye(sizes[2])
    g[s[0], s[1]] = f1
    g[s[0], s[3]] = -1j * f1
    g[s[1], s[0]] = -np.conj(f1).T
    g[s[3], s[0]] = 1j * np.conj(f1).T
    g[s[1], s[1]] = np.eye(sizes[1]) + 1j * m
    g[s[3], s[3]] = np.eye(sizes[1]) - 1j * m
    g[s[1], s[3]] = m
    g[s[3], s[1]] = m
    if fam == 'I':
        g[s[2], s[1]] = 1j * f2
        g[s[2], s[3]] = f2
        g[s[1], s[2]] = -1j * np.conj(f2).T
        g[s[3], s[2]] = -np.conj(f2).T
    else:
        g[s[2], s[1]] = 1j * np.conj(f1)
        g[s[2], s[3]] = np.conj(f1)
        g[s[1], s[2]] = -1j * f1.T
        g[s[3], s[2]] = -f1.T
    return g


def radical_element(desc, k, f1=None, f2=None, herm=None):
    """Unipotent-radical element with the skew part of M solved from the
    constraint.  Type I takes F1, F2 and a Hermitian part; type III takes
    F (as f1) and a real symmetric part."""
    fam, sizes = _sizes(desc, k)
    s1, s2, s3, _ = sizes
    tag = _domains.group_tag(desc)
    if fam == 'I':
        f1 = np.zeros((s1, s2), dtype=complex) if f1 is None else np.asarray(f1, dtype=complex)
        f2 = np.zeros((s3, s2), dtype=complex) if f2 is None else np.asarray(f2, dtype=complex)
        herm = np.zeros((s2, s2)) if herm is None else np.asarray(herm)
        kk = np.conj(f1).T @ f1 - np.conj(f2).T @ f2
        m = herm + 0.5j * kk
    else:
        if f2 is not None:
            raise ShapeError("type III radical elements take a single F block")
        f1 = np.zeros((s1, s2), dtype=complex) if f1 is None else np.asarray(f1, dtype=complex)
        herm = np.zeros((s2, s2)) if herm is None else np.asarray(herm)
        f2 = np.conj(f1)
        m = herm + (0.5j * (np.conj(f1).T @ f1 - f1.T @ np.conj(f1))).real
    return _domains.GroupElement(_radical_matrix(desc, k, f1, f2, m), tag)


def levi_element(desc, k, corner=None, e=None):
    """Centralizer element from a corner block (on the s1+s3 slots) and an
    invertible E; validated against the domain's group relations."""
    fam, sizes = _sizes(desc, k)
    n = sum(sizes)
    s = _slices(sizes)
    corner_n = sizes[0] + sizes[2]
    if corner is None:
        corner = np.eye(corner_n, dtype=complex)
    corner = np.asarray(corner, dtype=complex)
    if corner.shape != (corner_n, corner_n):
        raise ShapeError("corner block must be %d x %d" % (corner_n, corner_n))
    if e is None:
        e = np.eye(sizes[1], dtype=complex)
    e = np.asarray(e, dtype=complex)
    star = e.conj().T if fam == 'I' else e.T
    inv_star = solve_checked(star, np.eye(sizes[1], dtype=complex))
    g = np.zeros((n, n), dtype=complex)
    g[s[0], s[0]] = corner[:sizes[0], :sizes[0]]
    g[s[0], s[2]] = corner[:sizes[0], sizes[0]:]
    g[s[2], s[0]] = corner[sizes[0]:, :sizes[0]]
    g[s[2], s[2]] = corner[sizes[0]:, sizes[0]:]
    g[s[1], s[1]] = (e + inv_star) / 2
    g[s[3], s[3]] = (e + inv_star) / 2
    g[s[1], s[3]] = 1j * (e - inv_star) / 2
    g[s[3], s[1]] = -1j * (e - inv_star) / 2
    return _domains.GroupElement(g, _domains.group_tag(desc))


def omega_element(desc, k):
    """phi_F(1, (1 1; 0 1)): the base point of the cone inside the center
    of the unipotent radical; equals the radical element with F = 0 and
    M = I/2."""
    _, sizes = _sizes(desc, k)
    tag = _domains.group_tag(desc)
    m = 0.5 * np.eye(sizes[1], dtype=complex)
    z1 = np.zeros((sizes[0], sizes[1]), dtype=complex)
    z2 = np.zeros((sizes[2], sizes[1]), dtype=complex)
    return _domains.GroupElement(_radical_matrix(desc, k, z1, z2, m), tag)


T_GRID = tuple(10.0 ** (-j) for j in range(1, 7))
DIVERGENCE_FACTOR = 1e6
CAUCHY_SHRINK = 5.0
CAUCHY_FLOOR = 1e-3


def limit_classify(desc, k, g):
    """Classify g by the behaviour of w_F(t) g w_F(t)^{-1} as t -> 0.

    Returns 'levi' (conjugates constant equal to g), 'unipotent' (limit is
    the identity), 'normalizer' (Cauchy with a different limit), or
    'outside' (Frobenius divergence).  Raises Inconclusive when the
    sequence neither settles nor diverges by the documented thresholds.
    """
    g = _as_matrix(g)
    conjs = [_w_matrix(desc, k, t) @ g @ _w_matrix(desc, k, 1.0 / t)
             for t in T_GRID]
    gnorm = np.linalg.norm(g)
    if max(np.linalg.norm(c) for c in conjs) > DIVERGENCE_FACTOR * max(1.0, gnorm):
        return 'outside'
    if all(frob(conjs[j] - g) <= 1e-8 * max(1.0, gnorm) for j in (0, 1)):
        return 'levi'
    dists = [np.linalg.norm(conjs[j + 1] - conjs[j]) for j in range(len(conjs) - 1)]
    floor = CAUCHY_FLOOR * max(1.0, gnorm)
    cauchy = all(dists[j + 1] <= max(dists[j] / CAUCHY_SHRINK, floor)
                 for j in range(len(dists) - 1))
    if cauchy:
        limit = conjs[-1]
        if np.linalg.norm(limit - np.eye(g.shape[0])) <= floor:
            return 'unipotent'
        return 'normalizer'
    raise Inconclusive("conjugation sequence neither settles nor diverges")


def boundary_cone(desc, k):
    """Symmetric cone attached to the rank-k standard boundary component."""
    fam, par, r = _check(desc, k)
    if fam == 'I':
        return 'psd-c:%d' % (par[1] - k)
    if fam == 'II':
        n = par[0]
        eps = n % 2
        if 2 * k == n - 2 - eps:
            return 'lorentz:0'
        if 2 * k == n - 4 - eps:
            return 'lorentz:5'
        return 'psd-h:%d' % ((n - 2 * k - eps) // 2)
    if fam == 'III':
        return 'psd-r:%d' % (par[0] - k)
    if fam == 'IV':
        return 'lorentz:0' if k == 1 else 'lorentz:%d' % (par[0] - 1)
    if fam == 'V':
        return 'lorentz:0' if k == 1 else 'lorentz:7'
    return {2: 'lorentz:0', 1: 'lorentz:9', 0: 'albert'}[k]


def boundary_is_domain(desc, k):
    """Descriptor of the boundary component as a smaller domain, or None
    when the component is a point."""
    fam, par, r = _check(desc, k)
    if fam == 'I':
        p, q = par
        return 'I:%d:%d' % (p - q + k, k) if k >= 1 else None
    if fam == 'II':
        eps = par[0] % 2
        return 'II:%d' % (2 * k + eps) if k >= 1 else None
    if fam == 'III':
        return 'III:%d' % k if k >= 1 else None
    if fam == 'IV':
        return 'I:1:1' if k == 1 else None
    if fam == 'V':
        return 'I:5:1' if k == 1 else None
    return {2: 'IV:10', 1: 'I:1:1', 0: None}[k]


def levi_data(desc, k):
    """Factor strings (G_h, G_l, M) of the Levi subgroup of the normalizer."""
    fam, par, r = _check(desc, k)
    if fam == 'I':
        p, q = par
        return {'g_h': 'SU(%d,%d)' % (p - q + k, k),
                'g_l': 'GL_%d^o(C)' % (q - k), 'm': 'S^1'}
    if fam == 'II':
        n = par[0]
        eps = n % 2
        if k == 0 and eps == 0:
            return {'g_h': '1', 'g_l': 'GL_%d(H)' % (n // 2), 'm': '1'}
        if k == 0:
            return {'g_h': '1', 'g_l': 'GL_%d(H)' % ((n - 1) // 2), 'm': 'S^1'}
        if k == 1 and eps == 0:
            return {'g_h': 'SU(1,1)', 'g_l': 'GL_%d(H)' % ((n - 2) // 2),
                    'm': 'SL_1(H)'}
        if 2 * k == n - 2 - eps:
            return {'g_h': 'SO_nc(%d)' % (2 * n - 4), 'g_l': 'R^*', 'm': 'SL_1(H)'}
        return {'g_h': 'SO_nc(%d)' % (4 * k + 2 * eps),
                'g_l': 'GL_%d(H)' % ((n - 2 * k - eps) // 2), 'm': '1'}
    if fam == 'III':
        return {'g_h': 'Sp_nc(%d)' % k, 'g_l': 'GL_%d(R)' % (par[0] - k), 'm': '1'}
    if fam == 'IV':
        n = par[0]
        if k == 1:
            return {'g_h': 'SO(1,1)', 'g_l': 'GL_1(R)', 'm': 'SO(%d)' % (n - 2)}
        return {'g_h': '1', 'g_l': 'SO(%d,1) x R^*' % (n - 1), 'm': '1'}
    if fam == 'V':
        if k == 1:
            return {'g_h': 'SU(5,1)', 'g_l': 'GL_1(R)', 'm': '1'}
        return {'g_h': '1', 'g_l': 'SO(7,1) x R^*', 'm': 'S^1'}
    return {2: {'g_h': 'SO(2,10)', 'g_l': 'GL_1(R)', 'm': '1'},
            1: {'g_h': 'SU(1,1)', 'g_l': 'SO(9,1) x R^*', 'm': '1'},
            0: {'g_h': '1', 'g_l': 'E6(-26) x R^*', 'm': '1'}}[k]
