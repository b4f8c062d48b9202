"""Tube domains and Siegel domains over symmetric cones.

A SiegelData bundle is a Euclidean Jordan algebra U (cone direction), a
complex parameter space C^k, and a U-valued Hermitian pairing H given by a
tensor T with H(v, w)_a = sum_{ij} T[a, i, j] conj(v)_i w_j.  The pairing
must take values in the closed cone; this is checked on random samples at
construction.

The module can decide the symmetry of such data (three criteria: cone
self-duality through the algebra, the multiplier identity for the cone
action, and the symmetrized box identity for the half space action),
assemble the Jordan triple product of a symmetric bundle, and split a
positive triple system back into Siegel data along a principal tripotent.
"""

import numpy as np

from . import jordan as _jordan
from . import jts as _jts
from .errors import (DegenerateH, NotPrincipal, NotSymmetric, ShapeError,
                     Unsupported)
from .linalg import frob, nullspace, solve_checked, sym_eigh

POSITIVITY_SAMPLES = 25
CRITERIA_TOL = 1e-8


class SiegelData:
    """Cone algebra + Hermitian pairing tensor defining a Siegel domain."""

    def __init__(self, algebra, tensor, validate=True):
        self.algebra = _jordan.compile_algebra(algebra)
        tensor = np.asarray(tensor, dtype=complex)
        d = self.algebra.dim
        if tensor.ndim != 3 or tensor.shape[0] != d or tensor.shape[1] != tensor.shape[2]:
            raise ShapeError("pairing tensor must have shape (dim U, k, k)")
        self.tensor = tensor
        self.k = tensor.shape[1]
        self._hmat = None
        self._hinv_ok = None
        self.u_basis = None
        self.v_basis = None
        self.ambient = None
        self.tripotent = None
        if validate:
            self._validate()

    def pairing(self, v, w):
        """H(v, w), conjugate-linear in v, with values in complexified U."""
        return np.einsum('aij,i,j->a', self.tensor, np.conj(v), w)

    def _validate(self):
        t = self.tensor
        if frob(np.conj(np.swapaxes(t, 1, 2)) - t) > 1e-9 * max(1.0, frob(t)):
            raise ShapeError("pairing tensor is not Hermitian in its vector slots")
        if self.k == 0:
            return
        rng = np.random.default_rng(0)
        for _ in range(POSITIVITY_SAMPLES):
            v = rng.normal(size=self.k) + 1j * rng.normal(size=self.k)
            hv = self.pairing(v, v)
            if frob(hv.imag) > 1e-8 * max(1.0, frob(hv)):
                raise ShapeError("H(v, v) must be real for Hermitian data")
            if frob(hv) <= 1e-12 * float(np.vdot(v, v).real):
                raise DegenerateH("H(v, v) vanishes on a nonzero vector")
            if _jordan.cone_margin(self.algebra, hv.real) < -1e-8 * max(1.0, frob(hv)):
                raise ShapeError("H(v, v) left the closed cone on a sample")

    def h_matrix(self):
        """h[i, j] = tau(e, H(e_i, e_j)); positive definite for usable data."""
        if self._hmat is None:
            ge = self.algebra.gram @ self.algebra.unit
            self._hmat = np.einsum('a,aij->ij', ge, self.tensor)
        return self._hmat

    def __repr__(self):
        return "SiegelData(U dim %d, k=%d)" % (self.algebra.dim, self.k)


def tube_margin(algebra, z):
    """Cone margin of the imaginary part; positive inside the tube."""
    st = _jordan.compile_algebra(algebra)
    z = np.asarray(z, dtype=complex)
    if z.shape != (st.dim,):
        raise ShapeError("expected %d complex coordinates" % st.dim)
    return _jordan.cone_margin(st, z.imag)


def tube_member(algebra, z, tol=1e-9):
    return tube_margin(algebra, z) > tol


def siegel_margin(data, u, v):
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != (data.algebra.dim,) or v.shape != (data.k,):
        raise ShapeError("expected point (u, v) with %d and %d coordinates"
                         % (data.algebra.dim, data.k))
    hv = data.pairing(v, v)
    return _jordan.cone_margin(data.algebra, u.imag - hv.real)


def siegel_member(data, u, v, tol=1e-9):
    return siegel_margin(data, u, v) > tol


def r_operator(data, u):
    """R_u = h^{-1} M_u / 2 with M_u the pairing multiplier of u; satisfies
    R_e = id / 2.  Accepts complex coordinates."""
    h = data.h_matrix()
    if data._hinv_ok is None:
        w, _ = sym_eigh(h)
        data._hinv_ok = bool(w.shape[0] == 0 or w[0] > 1e-10)
    if not data._hinv_ok:
        raise DegenerateH("h is not positive definite")
    u = np.asarray(u)
    if u.shape != (data.algebra.dim,):
        raise ShapeError("expected %d algebra coordinates" % data.algebra.dim)
    mu = np.einsum('a,aij->ij', u @ data.algebra.gram, data.tensor)
    if data.k == 0:
        return mu
    return 0.5 * solve_checked(h, mu)


def symmetry_criteria(data, tol=CRITERIA_TOL):
    """Evaluate the three symmetry criteria.

    Returns a dict with 'euclidean', 'multiplier', 'box_symmetry' booleans,
    the worst residuals, a basis 4-tuple 'witness' when the box identity
    fails, and 'symmetric' (the conjunction).
    """
    st = data.algebra
    out = {'euclidean': bool(st.is_euclidean()),
           'multiplier_resid': 0.0, 'box_resid': 0.0, 'witness': None}
    d, k = st.dim, data.k
    if k:
        eyek = np.eye(k, dtype=complex)
        rs = [r_operator(data, np.eye(d)[a]) for a in range(d)]
        worst2 = 0.0
        for a in range(d):
            ru = rs[a]
            ua = np.eye(d)[a]
            for i in range(k):
                for j in range(k):
                    lhs = _jordan.jordan_mul(st, ua, data.pairing(eyek[i], eyek[j]))
                    rhs = (data.pairing(ru @ eyek[i], eyek[j])
                           + data.pairing(eyek[i], ru @ eyek[j]))
                    worst2 = max(worst2, frob(lhs - rhs))
        out['multiplier_resid'] = worst2

        def bmap(v, vp, x, y):
            return (data.pairing(r_operator(data, data.pairing(x, vp)) @ v, y)
                    - data.pairing(vp, r_operator(data, data.pairing(v, y)) @ x))

        worst3 = 0.0
        witness = None
        for i in range(k):
            for j in range(k):
                v, vp = eyek[i], eyek[j]
                for a in range(k):
                    for b in range(a, k):
                        g = frob(bmap(v, vp, eyek[a], eyek[b])
                                 + bmap(v, vp, eyek[b], eyek[a]))
                        if g > worst3:
                            worst3 = g
                            witness = (i, j, a, b)
        out['box_resid'] = worst3
        if worst3 > tol:
            out['witness'] = witness
    out['multiplier'] = out['multiplier_resid'] <= tol
    out['box_symmetry'] = out['box_resid'] <= tol
    out['symmetric'] = out['euclidean'] and out['multiplier'] and out['box_symmetry']
    return out


# ---------------------------------------------------------------------------
# Cayley transform between the bounded picture and the tube


def cayley(algebra, w):
    """z = i (e + w) o (e - w)^{-1}; sends the bounded realization into the
    tube over the cone, with 0 -> i e."""
    st = _jordan.compile_algebra(algebra)
    w = np.asarray(w, dtype=complex)
    inv = _jordan.jordan_inverse(st, st.unit.astype(complex) - w)
    return 1j * _jordan.jordan_mul(st, st.unit.astype(complex) + w, inv)


def cayley_inverse(algebra, z):
    """w = (z - i e) o (z + i e)^{-1}."""
    st = _jordan.compile_algebra(algebra)
    z = np.asarray(z, dtype=complex)
    ie = 1j * st.unit.astype(complex)
    inv = _jordan.jordan_inverse(st, z + ie)
    return _jordan.jordan_mul(st, z - ie, inv)


# ---------------------------------------------------------------------------
# quasi-symmetric catalog rows as concrete data


def _rep_blocks(mat, r, s):
    blocks = [mat] * r + [np.conj(mat)] * s
    if not blocks:
        return np.zeros((0, 0), dtype=complex)
    m = sum(b.shape[0] for b in blocks)
    out = np.zeros((m, m), dtype=complex)
    pos = 0
    for b in blocks:
        out[pos:pos + b.shape[0], pos:pos + b.shape[0]] = b
        pos += b.shape[0]
    return out


def quasi_symmetric_data(family, n, r=0, s=0):
    """SiegelData for a catalog row: family 'I' (complex Hermitian cone,
    r + s copies of the two conjugate representations), 'II' (quaternionic,
    r copies), 'III' (real symmetric, r copies), 'VI0' (exceptional cone,
    no parameter space).  Family 'IV' rows are catalogued but have no
    representation realization here."""
    family = str(family).upper()
    if family == 'IV':
        raise Unsupported("family IV rows are not built from a cone representation")
    if family == 'VI0':
        alg = _jordan.compile_algebra('albert')
        return SiegelData(alg, np.zeros((27, 0, 0), dtype=complex))
    if family not in ('I', 'II', 'III'):
        raise ShapeError("unknown catalog family %r" % (family,))
    if family != 'I' and s:
        raise ShapeError("only family I uses the conjugate representation count")
    alg_desc = {'I': 'herm-c:%d', 'II': 'herm-h:%d', 'III': 'herm-r:%d'}[family] % n
    st = _jordan.compile_algebra(alg_desc)
    ginv = np.linalg.inv(st.gram)
    rho = []
    for a in range(st.dim):
        mat = np.asarray(_jordan.unflatten(alg_desc, np.eye(st.dim)[a]), dtype=complex)
        rho.append(_rep_blocks(mat, r, s if family == 'I' else 0))
    tensor = np.einsum('ab,bij->aij', ginv, np.array(rho))
    return SiegelData(st, tensor)


# ---------------------------------------------------------------------------
# assembling the triple product of symmetric data


class AssembledTriple:
    """Jordan triple product on U_C + C^k reconstructed from Siegel data."""

    def __init__(self, data):
        self.data = data
        self.d = data.algebra.dim
        self.k = data.k

    def split(self, w):
        w = np.asarray(w, dtype=complex)
        if w.shape != (self.d + self.k,):
            raise ShapeError("expected %d stacked coordinates" % (self.d + self.k))
        return w[:self.d], w[self.d:]

    def triple(self, w1, w2, w3):
        st = self.data.algebra
        u1, v1 = self.split(w1)
        u2, v2 = self.split(w2)
        u3, v3 = self.split(w3)
        u2b = np.conj(u2)
        ju = (_jordan.jordan_mul(st, _jordan.jordan_mul(st, u1, u2b), u3)
              + _jordan.jordan_mul(st, _jordan.jordan_mul(st, u3, u2b), u1)
              - _jordan.jordan_mul(st, _jordan.jordan_mul(st, u1, u3), u2b))
        if self.k == 0:
            return ju
        pair = self.data.pairing
        rop = lambda u: r_operator(self.data, u)
        uo = (ju + 2.0 * pair(rop(np.conj(u3)) @ v2, v1)
              + 2.0 * pair(rop(np.conj(u1)) @ v2, v3))
        vo = (2.0 * rop(u3) @ (rop(np.conj(u2)) @ v1)
              + 2.0 * rop(u1) @ (rop(np.conj(u2)) @ v3)
              + 2.0 * rop(pair(v2, v1)) @ v3
              + 2.0 * rop(pair(v2, v3)) @ v1)
        return np.concatenate([uo, vo])

    def box(self, a, b):
        n = self.d + self.k
        eye = np.eye(n, dtype=complex)
        out = np.empty((n, n), dtype=complex)
        for c in range(n):
            out[:, c] = self.triple(a, b, eye[c])
        return out


def jts_from_siegel(data, tol=CRITERIA_TOL):
    """Triple product of symmetric Siegel data; raises NotSymmetric (with
    the failing basis tuple) when the criteria do not hold."""
    crit = symmetry_criteria(data, tol=tol)
    if not crit['symmetric']:
        raise NotSymmetric("criteria failed (multiplier %.2e, box %.2e, witness %s)"
                           % (crit['multiplier_resid'], crit['box_resid'],
                              crit['witness']))
    return AssembledTriple(data)


# ---------------------------------------------------------------------------
# splitting a triple system along a principal tripotent


def _coords_in(mat, vec, tol, what):
    sol, resid, _, _ = np.linalg.lstsq(mat, vec, rcond=None)
    err = frob(mat @ sol - vec)
    if err > tol * max(1.0, frob(vec)):
        raise ShapeError("%s left its expected subspace (residual %.2e)" % (what, err))
    return sol


def siegel_from_jts(desc, e=None, seed=0, tol=1e-8):
    """Split a positive triple system along a principal tripotent e
    (default: sum of a frame) into SiegelData.

    The unit Peirce space becomes the complexified cone algebra with
    product a o b = {a, e, b} and real points fixed by the involution
    x -> {e, x, e}; the half space carries the pairing H(x, y) = {e, x, y}.
    Raises NotPrincipal if e has a nonzero kernel Peirce space.
    """
    desc = _jts.parse_descriptor(desc)
    if e is None:
        e = sum(_jts.jordan_frame(desc, seed=seed))
    e = np.asarray(e, dtype=complex)
    _, half, inv_half = _jts.gram(desc)
    bspec = half @ _jts.box(desc, e, e) @ inv_half
    w, vv = sym_eigh(bspec)
    if np.any(w < 0.25):
        raise NotPrincipal("tripotent has a nonzero kernel Peirce space")
    cols = inv_half @ vv
    sel1 = w >= 0.75
    umat = cols[:, sel1]
    vmat = cols[:, ~sel1]
    d1, k = umat.shape[1], vmat.shape[1]

    def amb_triple(a, b, c):
        return _jts.flatten(desc, _jts.triple(desc, _jts.unflatten(desc, a),
                                              _jts.unflatten(desc, b),
                                              _jts.unflatten(desc, c)))

    ecoords = _jts.flatten(desc, e)
    # the conjugation {e, ., e} on the unit space, then its real points
    smat = np.empty((d1, d1), dtype=complex)
    for j in range(d1):
        smat[:, j] = _coords_in(umat, amb_triple(ecoords, umat[:, j], ecoords),
                                tol, "conjugation image")
    re_s, im_s = smat.real, smat.imag
    m = np.block([[re_s, im_s], [im_s, -re_s]])
    rows = nullspace(m - np.eye(2 * d1))
    if rows.shape[0] != d1:
        raise ShapeError("real points of the conjugation have dimension %d, expected %d"
                         % (rows.shape[0], d1))
    ubasis = (umat @ (rows[:, :d1] + 1j * rows[:, d1:]).T)
    # Jordan structure on the real basis
    ctensor = np.empty((d1, d1, d1))
    for i in range(d1):
        for j in range(i, d1):
            prod = amb_triple(ubasis[:, i], ecoords, ubasis[:, j])
            c = _coords_in(ubasis, prod, tol, "algebra product")
            if frob(c.imag) > tol:
                raise ShapeError("algebra product has an imaginary component")
            ctensor[i, j] = ctensor[j, i] = c.real
    eu = _coords_in(ubasis, ecoords, tol, "tripotent")
    if frob(eu.imag) > tol:
        raise ShapeError("tripotent is not a real point of the conjugation")
    st = _jordan.JordanStructure(ctensor, eu.real)
    if not st.is_euclidean():
        raise NotPrincipal("recovered algebra has a degenerate trace form")
    tensor = np.empty((d1, k, k), dtype=complex)
    for i in range(k):
        for j in range(k):
            val = amb_triple(ecoords, vmat[:, i], vmat[:, j])
            tensor[:, i, j] = _coords_in(ubasis, val, tol, "pairing value")
    data = SiegelData(st, tensor)
    data.u_basis = ubasis
    data.v_basis = vmat
    data.ambient = desc
    data.tripotent = e
    return data
