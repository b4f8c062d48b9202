"""Symmetric cones, coordinatized through their Jordan algebras.

Descriptors: 'lorentz:n' (forward cone in R^{n+1}; lorentz:0 is the half
line), 'psd-r:n', 'psd-c:n', 'psd-h:n' (positive definite matrices over R,
C, H), 'albert' (positive 3x3 octonion Hermitian matrices), and
'prod(...)' of any of these.  Points are coordinate vectors in the
conventions of the jordan module; the quaternionic case uses the doubled
complex embedding.
"""

import numpy as np

from . import jordan as _jordan
from .errors import NotIdempotent, ShapeError, Unsupported
from .linalg import frob, sym_eigh

BOUNDARY_BAND = 1e-7
DEFAULT_TOL = 1e-9

_PAIRS = {'lorentz': 'spin', 'psd-r': 'herm-r', 'psd-c': 'herm-c', 'psd-h': 'herm-h'}
_PAIRS_INV = {v: k for k, v in _PAIRS.items()}


def parse_descriptor(desc):
    s = str(desc).strip().lower()
    if s == 'albert':
        return s
    if s.startswith('prod(') and s.endswith(')'):
        return 'prod(' + ','.join(parse_descriptor(p)
                                  for p in _jordan._split_args(s[5:-1])) + ')'
    for kind in _PAIRS:
        if s.startswith(kind + ':'):
            try:
                n = int(s[len(kind) + 1:])
            except ValueError:
                raise ShapeError("bad cone descriptor %r" % (desc,)) from None
            low = 0 if kind == 'lorentz' else 1
            if n < low:
                raise ShapeError("cone size too small in %r" % (desc,))
            return '%s:%d' % (kind, n)
    raise ShapeError("unknown cone descriptor %r" % (desc,))


def jordan_from_cone(desc):
    """The Jordan algebra whose squares fill the cone."""
    desc = parse_descriptor(desc)
    if desc == 'albert':
        return 'albert'
    if desc.startswith('prod('):
        return 'sum(' + ','.join(jordan_from_cone(p)
                                 for p in _jordan._split_args(desc[5:-1])) + ')'
    kind, n = desc.rsplit(':', 1)
    if desc == 'lorentz:0':
        raise Unsupported("the half line has no unital algebra here")
    return '%s:%s' % (_PAIRS[kind], n)


def cone_from_jordan(alg):
    alg = _jordan.parse_descriptor(alg)
    if isinstance(alg, _jordan.JordanStructure):
        raise ShapeError("explicit structures have no cone descriptor")
    if alg == 'albert':
        return 'albert'
    if alg.startswith('sum('):
        return 'prod(' + ','.join(cone_from_jordan(p)
                                  for p in _jordan._split_args(alg[4:-1])) + ')'
    kind, n = alg.rsplit(':', 1)
    return '%s:%s' % (_PAIRS_INV[kind], n)


def dimension(desc):
    desc = parse_descriptor(desc)
    if desc == 'lorentz:0':
        return 1
    if desc.startswith('prod('):
        return sum(dimension(p) for p in _jordan._split_args(desc[5:-1]))
    return _jordan.dimension(jordan_from_cone(desc))


def cone_rank(desc):
    desc = parse_descriptor(desc)
    if desc == 'albert':
        return 3
    if desc.startswith('prod('):
        return sum(cone_rank(p) for p in _jordan._split_args(desc[5:-1]))
    kind, n = desc.rsplit(':', 1)
    n = int(n)
    if kind == 'lorentz':
        return 1 if n == 0 else 2
    return n


def cone_margin(desc, x):
    """Positive inside the open cone, negative outside the closure, near
    zero on the boundary.  Spectral for the matrix cones, closed form for
    the Lorentz family."""
    desc = parse_descriptor(desc)
    x = np.asarray(x, dtype=float)
    if x.shape != (dimension(desc),):
        raise ShapeError("expected %d coordinates for %s, got shape %s"
                         % (dimension(desc), desc, x.shape))
    if desc == 'lorentz:0':
        return float(x[0])
    if desc.startswith('prod('):
        out, pos = [], 0
        for p in _jordan._split_args(desc[5:-1]):
            d = dimension(p)
            out.append(cone_margin(p, x[pos:pos + d]))
            pos += d
        return min(out)
    if desc == 'albert':
        return _jordan.cone_margin('albert', x)
    kind, _ = desc.rsplit(':', 1)
    if kind == 'lorentz':
        return float(x[0] - np.linalg.norm(x[1:]))
    m = _jordan.unflatten(jordan_from_cone(desc), x)
    w, _ = sym_eigh(np.asarray(m, dtype=complex))
    return float(w[0])


def cone_member(desc, x, tol=DEFAULT_TOL):
    return cone_margin(desc, x) > tol


def _tau(desc, x, y):
    if parse_descriptor(desc) == 'lorentz:0':
        return float(x[0] * y[0])
    return _jordan.trace_form(jordan_from_cone(desc), x, y)


def _random_square(desc, rng):
    desc = parse_descriptor(desc)
    if desc == 'lorentz:0':
        return np.array([rng.normal() ** 2])
    if desc.startswith('prod('):
        return np.concatenate([_random_square(p, rng)
                               for p in _jordan._split_args(desc[5:-1])])
    alg = jordan_from_cone(desc)
    z = rng.normal(size=_jordan.dimension(alg))
    return _jordan.jordan_mul(alg, z, z)


def dual_member_witness(desc, y, samples=100, seed=0):
    """Search for a counterexample to 'y is in the closed dual cone'.

    Samples squares x (members of the closed cone) and tests the trace
    pairing.  Returns (True, None) if no violation was found, otherwise
    (False, x) with tau(x, y) <= 0.  Because the cone is self-dual this is
    an effective membership test for the closure.
    """
    desc = parse_descriptor(desc)
    y = np.asarray(y, dtype=float)
    if y.shape != (dimension(desc),):
        raise ShapeError("point has wrong dimension for %s" % desc)
    if frob(y) == 0.0:
        if desc.startswith('prod('):
            e = np.concatenate([_unit(p) for p in _jordan._split_args(desc[5:-1])])
        else:
            e = _unit(desc)
        return False, e
    rng = np.random.default_rng(seed)
    if desc.startswith('prod('):
        parts = _jordan._split_args(desc[5:-1])
        dims = [dimension(p) for p in parts]
        for _ in range(samples):
            xs, pos = [], 0
            vals = []
            for p, d in zip(parts, dims):
                xp = _random_square(p, rng)
                xs.append(xp)
                vals.append(_tau(p, xp, y[pos:pos + d]))
                pos += d
            if sum(vals) <= 0.0:
                return False, np.concatenate(xs)
        return True, None
    for _ in range(samples):
        x = _random_square(desc, rng)
        if _tau(desc, x, y) <= 0.0:
            return False, x
    return True, None


def _unit(desc):
    desc = parse_descriptor(desc)
    if desc == 'lorentz:0':
        return np.ones(1)
    return _jordan.unit(jordan_from_cone(desc))


# ---------------------------------------------------------------------------
# boundary faces


def _quaternion_pair_basis(space):
    """Columns of `space` span a J-stable subspace of C^{2n}; return an
    orthonormal basis arranged so the span map preserves the quaternionic
    block structure."""
    n2 = space.shape[0]
    n = n2 // 2
    j0 = np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])
    cols = []
    remaining = space.copy()
    while remaining.shape[1] > 0:
        v = remaining[:, 0]
        v = v / np.linalg.norm(v)
        w = j0 @ v.conj()
        cols.append((v, w))
        keep = remaining
        for u in (v, w):
            keep = keep - np.outer(u, u.conj().T @ keep)
        q, r = np.linalg.qr(keep)
        take = [k for k in range(r.shape[0]) if abs(r[k, k]) > 1e-9]
        remaining = q[:, take]
    u = np.stack([c[0] for c in cols], axis=1)
    w = np.stack([c[1] for c in cols], axis=1)
    return np.concatenate([u, w], axis=1)


def cone_boundary_component(desc, e, tol=1e-8):
    """Face of the closed cone spanned by an idempotent e.

    Returns (component descriptor, embed) where embed maps component
    coordinates into ambient coordinates and sends the component unit to e.
    """
    desc = parse_descriptor(desc)
    e = np.asarray(e, dtype=float)
    if desc.startswith('prod('):
        raise Unsupported("faces of product cones are not assembled here")
    if desc == 'lorentz:0':
        if abs(e[0] - 1.0) < tol:
            return desc, lambda c: np.asarray(c, dtype=float).copy()
        raise NotIdempotent("expected the unit of the half line")
    kind = desc.split(':')[0]
    if kind == 'lorentz':
        n = int(desc.split(':')[1])
        lam, u = e[0], e[1:]
        r = np.linalg.norm(u)
        if abs(lam - 1.0) < tol and r < tol:
            return desc, lambda c: np.asarray(c, dtype=float).copy()
        if abs(lam - 0.5) < tol and abs(r - 0.5) < tol:
            ee = e.copy()
            return 'lorentz:0', lambda c: float(np.asarray(c)[0]) * ee
        raise NotIdempotent("not an idempotent of the Lorentz cone")
    alg = 'albert' if desc == 'albert' else jordan_from_cone(desc)
    if frob(_jordan.jordan_mul(alg, e, e) - e) > tol:
        raise NotIdempotent("e o e differs from e beyond tolerance")
    if desc == 'albert':
        return _albert_face(e, tol)
    n = int(desc.split(':')[1])
    m = np.asarray(_jordan.unflatten(alg, e), dtype=complex)
    w, v = sym_eigh(m)
    if np.any((w > tol) & (w < 1.0 - tol)):
        raise NotIdempotent("projection spectrum is not 0/1")
    sel = w > 0.5
    p_embedded = int(np.sum(sel))
    if p_embedded == 0:
        raise Unsupported("the zero face is a single point")
    if p_embedded == m.shape[0]:
        return desc, lambda c: np.asarray(c, dtype=float).copy()
    space = v[:, sel]
    if kind == 'psd-h':
        space = _quaternion_pair_basis(space)
        p = p_embedded // 2
    else:
        p = p_embedded
    comp = '%s:%d' % (kind, p)
    comp_alg = jordan_from_cone(comp)

    def embed(c):
        mc = np.asarray(_jordan.unflatten(comp_alg, np.asarray(c, dtype=float)),
                        dtype=complex)
        return _jordan.flatten(alg, space @ mc @ space.conj().T)

    return comp, embed


def _albert_face(e, tol):
    p = int(round(np.sum(e[:3])))
    if abs(np.sum(e[:3]) - p) > 1e-6:
        raise NotIdempotent("trace of an Albert idempotent must be integral")
    if p == 3:
        return 'albert', lambda c: np.asarray(c, dtype=float).copy()
    if p == 0:
        raise Unsupported("the zero face is a single point")
    ec = e.copy()
    if p == 1:
        return 'psd-r:1', lambda c: float(np.asarray(c)[0]) * ec
    # p == 2: the unit Peirce space is a rank-two factor, i.e. a spin factor;
    # build a basis putting its product in the standard Lorentz form.
    one, _, _ = _jordan.peirce_decompose('albert', e, tol=tol)
    tau_uu = _jordan.trace_form('albert', e, e)
    proj = [b - (_jordan.trace_form('albert', b, e) / tau_uu) * e for b in one]
    nb = len(proj)
    bform = np.empty((nb, nb))
    for i in range(nb):
        for j in range(i, nb):
            prod = _jordan.jordan_mul('albert', proj[i], proj[j])
            bform[i, j] = bform[j, i] = _jordan.trace_form('albert', prod, e) / tau_uu
    w, v = sym_eigh(bform)
    keep = w > 1e-8
    vecs = [sum(v[i, k] * proj[i] for i in range(nb)) / np.sqrt(w[k])
            for k in range(nb) if keep[k]]
    if len(vecs) != 9:
        raise NotIdempotent("unit Peirce space is not a nine dimensional spin factor")

    def embed(c):
        c = np.asarray(c, dtype=float)
        return c[0] * ec + sum(c[k + 1] * vecs[k] for k in range(9))

    return 'lorentz:9', embed
