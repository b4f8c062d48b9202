"""Hermitian positive Jordan triple systems.

Descriptors name the six irreducible families plus the triples obtained by
complexifying a Euclidean Jordan algebra:

    I:p:q      complex p x q matrices (p >= q >= 1)
    II:n       complex skew-symmetric n x n matrices (n >= 2)
    III:n      complex symmetric n x n matrices (n >= 1)
    IV:n       complex column vectors of length n (n >= 1)
    V          pairs of complexified octonions, shape (2, 8)
    VI         3 x 3 Hermitian matrices over complexified octonions
    jordan:A   complexified coordinates of the Jordan algebra A

The triple product is linear in the outer slots, conjugate-linear in the
middle slot, and evaluated so that swapping the outer arguments returns a
bitwise identical array.
"""

import numpy as np

from . import albert as _h3
from . import jordan as _jordan
from .errors import FrameSearchFailed, ShapeError
from .linalg import frob, skew_pairs, spd_sqrt, sym_eigh, takagi

TRIPOTENT_TOL = 1e-8
FRAME_BOX_TOL = 1e-8
FRAME_ATTEMPTS = 5


def parse_descriptor(desc):
    s = str(desc).strip()
    if s in ('V', 'VI'):
        return s
    if s.lower().startswith('jordan:'):
        return 'jordan:' + _jordan.parse_descriptor(s[7:])
    parts = s.split(':')
    fam = parts[0].upper()
    if fam == 'I' and len(parts) == 3:
        p, q = int(parts[1]), int(parts[2])
        if not p >= q >= 1:
            raise ShapeError("family I needs p >= q >= 1, got %s" % s)
        return 'I:%d:%d' % (p, q)
    if fam in ('II', 'III', 'IV') and len(parts) == 2:
        n = int(parts[1])
        low = {'II': 2, 'III': 1, 'IV': 1}[fam]
        if n < low:
            raise ShapeError("family %s needs n >= %d, got %s" % (fam, low, s))
        return '%s:%d' % (fam, n)
    raise ShapeError("unknown triple system descriptor %r" % (desc,))


def _info(desc):
    desc = parse_descriptor(desc)
    if desc == 'V':
        return ('V',)
    if desc == 'VI':
        return ('VI',)
    if desc.startswith('jordan:'):
        return ('jordan', desc[7:])
    parts = desc.split(':')
    return (parts[0],) + tuple(int(v) for v in parts[1:])


def dim(desc):
    """Complex dimension of the underlying space."""
    info = _info(desc)
    fam = info[0]
    if fam == 'I':
        return info[1] * info[2]
    if fam == 'II':
        return info[1] * (info[1] - 1) // 2
    if fam == 'III':
        return info[1] * (info[1] + 1) // 2
    if fam == 'IV':
        return info[1]
    if fam == 'V':
        return 16
    if fam == 'VI':
        return 27
    return _jordan.dimension(info[1])


def unflatten(desc, c):
    """Complex coordinates -> carrier array."""
    info = _info(desc)
    fam = info[0]
    c = np.asarray(c, dtype=complex)
    if c.shape != (dim(desc),):
        raise ShapeError("expected %d complex coordinates for %s, got shape %s"
                         % (dim(desc), parse_descriptor(desc), c.shape))
    if fam == 'I':
        return c.reshape(info[1], info[2])
    if fam == 'II':
        n = info[1]
        m = np.zeros((n, n), dtype=complex)
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                m[i, j] = c[k]
                m[j, i] = -c[k]
                k += 1
        return m
    if fam == 'III':
        n = info[1]
        m = np.zeros((n, n), dtype=complex)
        np.fill_diagonal(m, c[:n])
        k = n
        for i in range(n):
            for j in range(i + 1, n):
                m[i, j] = m[j, i] = c[k]
                k += 1
        return m
    if fam == 'IV':
        return c.copy()
    if fam == 'V':
        return c.reshape(2, 8)
    if fam == 'VI':
        return _h3.pack(c[:3], c[3:].reshape(3, 8))
    return c.copy()


def flatten(desc, x):
    info = _info(desc)
    fam = info[0]
    x = np.asarray(x)
    if fam == 'I':
        return x.reshape(-1).astype(complex)
    if fam == 'II':
        n = info[1]
        return np.asarray([x[i, j] for i in range(n) for j in range(i + 1, n)],
                          dtype=complex)
    if fam == 'III':
        n = info[1]
        out = [x[i, i] for i in range(n)]
        out += [x[i, j] for i in range(n) for j in range(i + 1, n)]
        return np.asarray(out, dtype=complex)
    if fam == 'VI':
        alpha, a = _h3.unpack(x)
        return np.concatenate([alpha, a.reshape(-1)]).astype(complex)
    if fam == 'V':
        return x.reshape(-1).astype(complex)
    return x.astype(complex)


_BASIS = {}


def basis(desc):
    desc = parse_descriptor(desc)
    if desc not in _BASIS:
        d = dim(desc)
        eye = np.eye(d, dtype=complex)
        _BASIS[desc] = [unflatten(desc, eye[k]) for k in range(d)]
    return _BASIS[desc]


def random_element(desc, rng, scale=1.0):
    d = dim(desc)
    c = scale * (rng.normal(size=d) + 1j * rng.normal(size=d))
    return unflatten(desc, c)


def _v_embed(x):
    return _h3.pack(np.zeros(3), np.stack([np.zeros(8, dtype=complex), x[0], x[1]]))


def _v_extract(m):
    _, a = _h3.unpack(m)
    return np.stack([a[1], a[2]])


def triple(desc, x, y, z):
    """{x, y, z}: conjugate-linear in y, symmetric under x <-> z."""
    info = _info(desc)
    fam = info[0]
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    z = np.asarray(z, dtype=complex)
    if fam in ('I', 'II', 'III'):
        c2 = np.conj(y).T
        return 0.5 * ((x @ c2) @ z + (z @ c2) @ x)
    if fam == 'IV':
        yb = np.conj(y)
        return np.dot(x, yb) * z + np.dot(z, yb) * x - np.dot(x, z) * yb
    if fam == 'V':
        return _v_extract(triple('VI', _v_embed(x), _v_embed(y), _v_embed(z)))
    if fam == 'VI':
        yb = np.conj(y)
        return (_h3.jmul(_h3.jmul(x, yb), z) + _h3.jmul(_h3.jmul(z, yb), x)
                - _h3.jmul(_h3.jmul(x, z), yb))
    st = _jordan.compile_algebra(info[1])
    yb = np.conj(y)
    return (_jordan.jordan_mul(st, _jordan.jordan_mul(st, x, yb), z)
            + _jordan.jordan_mul(st, _jordan.jordan_mul(st, z, yb), x)
            - _jordan.jordan_mul(st, _jordan.jordan_mul(st, x, z), yb))


def box(desc, a, b):
    """Matrix of w -> {a, b, w} on the coordinate basis."""
    desc = parse_descriptor(desc)
    d = dim(desc)
    out = np.empty((d, d), dtype=complex)
    for k, ek in enumerate(basis(desc)):
        out[:, k] = flatten(desc, triple(desc, a, b, ek))
    return out


def jts_trace_form(desc, x, y):
    """tau(x, y) = trace of the box operator; a positive Hermitian form."""
    return complex(np.trace(box(desc, x, y)))


_GRAM = {}


def gram(desc):
    """Trace-form Gram matrix on the coordinate basis, with its Hermitian
    square root (cached; positivity is what makes these systems usable)."""
    desc = parse_descriptor(desc)
    if desc not in _GRAM:
        d = dim(desc)
        eye = np.eye(d, dtype=complex)
        g = np.empty((d, d), dtype=complex)
        for k in range(d):
            bk = box(desc, basis(desc)[k], basis(desc)[k])
            g[k, k] = np.trace(bk)
        for k in range(d):
            for l in range(k + 1, d):
                g[k, l] = np.trace(box(desc, basis(desc)[k], basis(desc)[l]))
                g[l, k] = np.conj(g[k, l])
        half, inv_half = spd_sqrt(g)
        _GRAM[desc] = (g, half, inv_half)
    return _GRAM[desc]


def box_spectrum(desc, x, y=None):
    """Eigenvalues (ascending) of the box operator of (x, y), conjugated to
    a trace-form orthonormal basis; y defaults to x."""
    desc = parse_descriptor(desc)
    _, half, inv_half = gram(desc)
    b = box(desc, x, x if y is None else y)
    w, _ = sym_eigh(half @ b @ inv_half)
    return w


def is_tripotent(desc, e, tol=TRIPOTENT_TOL):
    e = np.asarray(e, dtype=complex)
    return bool(frob(triple(desc, e, e, e) - e) <= tol)


def _frame_candidate(desc, rng):
    info = _info(desc)
    fam = info[0]
    if fam == 'I':
        p, q = info[1], info[2]
        z = rng.normal(size=(p, q)) + 1j * rng.normal(size=(p, q))
        u, _, vh = np.linalg.svd(z, full_matrices=False)
        return [np.outer(u[:, k], vh[k]) for k in range(q)]
    if fam == 'II':
        n = info[1]
        z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        z = z - z.T
        return [np.outer(v2, v1) - np.outer(v1, v2) for _, v1, v2 in skew_pairs(z)]
    if fam == 'III':
        n = info[1]
        z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        z = 0.5 * (z + z.T)
        _, u = takagi(z)
        return [np.outer(u[:, k], u[:, k]) for k in range(n)]
    if fam == 'IV':
        n = info[1]
        if n == 1:
            return [np.ones(1, dtype=complex)]
        cp = np.zeros(n, dtype=complex)
        cm = np.zeros(n, dtype=complex)
        cp[0] = cm[0] = 0.5
        cp[1] = 0.5j
        cm[1] = -0.5j
        return [cp, cm]
    if fam == 'V':
        out = []
        for sg in (1.0, -1.0):
            row = np.zeros(8, dtype=complex)
            row[0] = 0.5
            row[1] = sg * 0.5j
            out.append(np.stack([row, np.zeros(8, dtype=complex)]))
        return out
    if fam == 'VI':
        return [_h3.pack(np.eye(3)[k], np.zeros((3, 8))).astype(complex) for k in range(3)]
    return [c.astype(complex) for c in _jordan_frame_coords(info[1], rng)]


def _jordan_frame_coords(alg, rng):
    alg = _jordan.parse_descriptor(alg)
    if alg == 'albert':
        out = []
        for k in range(3):
            c = np.zeros(27)
            c[k] = 1.0
            out.append(c)
        return out
    if alg.startswith('sum('):
        parts = _jordan._split_args(alg[4:-1])
        dims = [_jordan.dimension(p) for p in parts]
        total = sum(dims)
        out, pos = [], 0
        for p, d in zip(parts, dims):
            for c in _jordan_frame_coords(p, rng):
                full = np.zeros(total)
                full[pos:pos + d] = c
                out.append(full)
            pos += d
        return out
    kind, n = alg.rsplit(':', 1)
    n = int(n)
    if kind == 'spin':
        u = rng.normal(size=n)
        u = u / np.linalg.norm(u)
        return [np.concatenate([[0.5], sg * 0.5 * u]) for sg in (1.0, -1.0)]
    d = _jordan.dimension(alg)
    m = _jordan.unflatten(alg, rng.normal(size=d))
    w, v = np.linalg.eigh(m)
    if kind == 'herm-h':
        projs = [v[:, 2 * k:2 * k + 2] @ v[:, 2 * k:2 * k + 2].conj().T for k in range(n)]
    else:
        projs = [np.outer(v[:, k], v[:, k].conj()) for k in range(w.shape[0])]
    return [_jordan.flatten(alg, p) for p in projs]


def _verify_frame(desc, frame):
    for e in frame:
        if frob(triple(desc, e, e, e) - e) > TRIPOTENT_TOL:
            return False
    for i, ei in enumerate(frame):
        for j, ej in enumerate(frame):
            if i != j and frob(box(desc, ei, ej)) > FRAME_BOX_TOL:
                return False
    _, half, inv_half = gram(desc)
    total = sum(box(desc, e, e) for e in frame)
    w, _ = sym_eigh(half @ total @ inv_half)
    return bool(w.shape[0] == 0 or w[0] > 0.125)


def jordan_frame(desc, seed=0):
    """A maximal family of pairwise orthogonal tripotents, found by seeded
    search and verified (tripotency, orthogonality, no residual zero space).
    """
    desc = parse_descriptor(desc)
    rng = np.random.default_rng(seed)
    for _ in range(FRAME_ATTEMPTS):
        frame = _frame_candidate(desc, rng)
        if _verify_frame(desc, frame):
            return frame
    raise FrameSearchFailed("no verified frame for %s after %d attempts"
                            % (desc, FRAME_ATTEMPTS))


def rank(desc, seed=0):
    return len(jordan_frame(desc, seed=seed))
