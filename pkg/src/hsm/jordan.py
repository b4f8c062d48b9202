"""Euclidean Jordan algebras: the five simple families plus direct sums.

A descriptor string names the algebra ('spin:3', 'herm-r:2', 'herm-c:3',
'herm-h:2', 'albert', 'sum(herm-r:2,spin:3)').  Descriptors compile once
into a JordanStructure holding the real structure tensor C with
(x o y)_c = sum_{a,b} x_a y_b C[a,b,c], the unit coordinates, and the trace
form data.  All operations work on plain coordinate vectors; quaternionic
Hermitian matrices live inside their complex embedding
A + B j -> [[A, B], [-conj(B), conj(A)]] of doubled size.
"""

import numpy as np

from . import albert as _h3
from .errors import NotIdempotent, ShapeError, Singular
from .linalg import frob, solve_checked, spd_sqrt, sym_eigh

IDEM_TOL = 1e-8
PEIRCE_BINS = (0.25, 0.75)
DEFAULT_CONE_TOL = 1e-9


class JordanStructure:
    """A compiled Jordan algebra: structure tensor, unit and trace form.

    Built from a descriptor or assembled directly (the Siegel module builds
    instances on computed bases).
    """

    def __init__(self, ctensor, unit, descriptor=None):
        ctensor = np.asarray(ctensor, dtype=float)
        unit = np.asarray(unit, dtype=float)
        d = unit.shape[0]
        if ctensor.shape != (d, d, d):
            raise ShapeError("structure tensor shape %s does not match unit length %d"
                             % (ctensor.shape, d))
        self.dim = d
        self.ctensor = ctensor
        self.unit = unit
        self.descriptor = descriptor
        self.tauvec = np.einsum('acc->a', ctensor)
        self.gram = np.einsum('abc,c->ab', ctensor, self.tauvec)
        self._sqrt = None

    def gram_sqrt(self):
        if self._sqrt is None:
            self._sqrt = spd_sqrt(self.gram)
        return self._sqrt

    def is_euclidean(self, tol=1e-9):
        w, _ = sym_eigh(self.gram)
        return bool(w[0] > tol)

    def __repr__(self):
        return "JordanStructure(%s, dim=%d)" % (self.descriptor or "explicit", self.dim)


# ---------------------------------------------------------------------------
# descriptor parsing and per-variant matrix conventions


def _split_args(body):
    parts, depth, cur = [], 0, ""
    for ch in body:
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        if ch == ',' and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    if cur:
        parts.append(cur)
    return parts


def parse_descriptor(desc):
    """Normalize a descriptor string; raises ShapeError on malformed input."""
    if isinstance(desc, JordanStructure):
        return desc
    s = str(desc).strip().lower()
    if s == 'albert':
        return 'albert'
    if s.startswith('sum(') and s.endswith(')'):
        return 'sum(' + ','.join(parse_descriptor(p) for p in _split_args(s[4:-1])) + ')'
    for kind in ('spin', 'herm-r', 'herm-c', 'herm-h'):
        if s.startswith(kind + ':'):
            try:
                n = int(s[len(kind) + 1:])
            except ValueError:
                raise ShapeError("bad descriptor %r" % (desc,)) from None
            if n < 1:
                raise ShapeError("descriptor size must be >= 1: %r" % (desc,))
            return '%s:%d' % (kind, n)
    raise ShapeError("unknown Jordan algebra descriptor %r" % (desc,))


def _offdiag_pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def dimension(desc):
    desc = parse_descriptor(desc)
    if isinstance(desc, JordanStructure):
        return desc.dim
    if desc == 'albert':
        return 27
    if desc.startswith('sum('):
        return sum(dimension(p) for p in _split_args(desc[4:-1]))
    kind, n = desc.rsplit(':', 1)
    n = int(n)
    return {'spin': n + 1,
            'herm-r': n * (n + 1) // 2,
            'herm-c': n * n,
            'herm-h': n * (2 * n - 1)}[kind]


def unflatten(desc, x):
    """Coordinates -> natural carrier (spin stays a vector, herm variants
    become complex matrices, albert becomes the packed 3x3x8 array)."""
    desc = parse_descriptor(desc)
    if isinstance(desc, JordanStructure):
        return np.asarray(x)
    x = np.asarray(x)
    if x.shape != (dimension(desc),):
        raise ShapeError("expected %d coordinates for %s, got shape %s"
                         % (dimension(desc), desc, x.shape))
    if desc == 'albert':
        return _h3.pack(x[:3], x[3:].reshape(3, 8))
    if desc.startswith('sum('):
        parts = _split_args(desc[4:-1])
        out, pos = [], 0
        for p in parts:
            d = dimension(p)
            out.append(unflatten(p, x[pos:pos + d]))
            pos += d
        return out
    kind, n = desc.rsplit(':', 1)
    n = int(n)
    if kind == 'spin':
        return x.copy()
    if kind == 'herm-r':
        m = np.zeros((n, n))
        np.fill_diagonal(m, x[:n])
        for k, (i, j) in enumerate(_offdiag_pairs(n)):
            m[i, j] = m[j, i] = x[n + k]
        return m
    if kind == 'herm-c':
        m = np.zeros((n, n), dtype=complex)
        np.fill_diagonal(m, x[:n])
        off = x[n:].reshape(-1, 2)
        for k, (i, j) in enumerate(_offdiag_pairs(n)):
            m[i, j] = off[k, 0] + 1j * off[k, 1]
            m[j, i] = off[k, 0] - 1j * off[k, 1]
        return m
    # quaternionic: A Hermitian, B complex skew, embedded at doubled size
    a = unflatten('herm-c:%d' % n, x[:n * n])
    b = np.zeros((n, n), dtype=complex)
    off = x[n * n:].reshape(-1, 2)
    for k, (i, j) in enumerate(_offdiag_pairs(n)):
        b[i, j] = off[k, 0] + 1j * off[k, 1]
        b[j, i] = -b[i, j]
    return np.block([[a, b], [-b.conj(), a.conj()]])


def flatten(desc, m):
    """Inverse of unflatten on the carrier subspace."""
    desc = parse_descriptor(desc)
    if isinstance(desc, JordanStructure):
        return np.asarray(m)
    if desc == 'albert':
        alpha, a = _h3.unpack(m)
        return np.concatenate([alpha.real, a.real.reshape(-1)])
    if desc.startswith('sum('):
        parts = _split_args(desc[4:-1])
        return np.concatenate([flatten(p, mi) for p, mi in zip(parts, m)])
    kind, n = desc.rsplit(':', 1)
    n = int(n)
    if kind == 'spin':
        return np.asarray(m, dtype=float).copy()
    if kind == 'herm-r':
        out = [m[i, i] for i in range(n)] + [m[i, j] for i, j in _offdiag_pairs(n)]
        return np.asarray(out, dtype=float)
    if kind == 'herm-c':
        out = [m[i, i].real for i in range(n)]
        for i, j in _offdiag_pairs(n):
            out += [m[i, j].real, m[i, j].imag]
        return np.asarray(out, dtype=float)
    a = m[:n, :n]
    b = m[:n, n:]
    out = list(flatten('herm-c:%d' % n, a))
    for i, j in _offdiag_pairs(n):
        out += [b[i, j].real, b[i, j].imag]
    return np.asarray(out, dtype=float)


def _raw_mul(desc, x, y):
    """Product of two coordinate vectors through the carrier realization."""
    if desc == 'albert':
        return flatten(desc, _h3.jmul(unflatten(desc, x), unflatten(desc, y)).real)
    if desc.startswith('sum('):
        parts = _split_args(desc[4:-1])
        out, pos = [], 0
        for p in parts:
            d = dimension(p)
            out.append(_raw_mul(p, x[pos:pos + d], y[pos:pos + d]))
            pos += d
        return np.concatenate(out)
    kind, n = desc.rsplit(':', 1)
    if kind == 'spin':
        lam = x[0] * y[0] + np.dot(x[1:], y[1:])
        return np.concatenate([[lam], x[0] * y[1:] + y[0] * x[1:]])
    mx = unflatten(desc, x)
    my = unflatten(desc, y)
    return flatten(desc, 0.5 * (mx @ my + my @ mx))


def _unit_coords(desc):
    if desc == 'albert':
        return flatten(desc, _h3.UNIT.real)
    if desc.startswith('sum('):
        return np.concatenate([_unit_coords(p) for p in _split_args(desc[4:-1])])
    kind, n = desc.rsplit(':', 1)
    n = int(n)
    if kind == 'spin':
        e = np.zeros(n + 1)
        e[0] = 1.0
        return e
    size = 2 * n if kind == 'herm-h' else n
    return flatten(desc, np.eye(size, dtype=complex if kind != 'herm-r' else float))


_COMPILED = {}


def compile_algebra(desc):
    """Return the JordanStructure for a descriptor (cached)."""
    if isinstance(desc, JordanStructure):
        return desc
    desc = parse_descriptor(desc)
    if desc in _COMPILED:
        return _COMPILED[desc]
    d = dimension(desc)
    eye = np.eye(d)
    C = np.zeros((d, d, d))
    for a in range(d):
        for b in range(a, d):
            prod = _raw_mul(desc, eye[a], eye[b])
            C[a, b] = prod
            C[b, a] = prod
    st = JordanStructure(C, _unit_coords(desc), descriptor=desc)
    _COMPILED[desc] = st
    return st


# ---------------------------------------------------------------------------
# operations


def _vec(st, x):
    x = np.asarray(x)
    if x.shape != (st.dim,):
        raise ShapeError("expected %d coordinates, got shape %s" % (st.dim, x.shape))
    return x


def jordan_mul(A, x, y):
    """The commutative product x o y (complex coordinates allowed).

    Symmetrized evaluation, so jordan_mul(A, x, y) and jordan_mul(A, y, x)
    are bitwise identical.
    """
    st = compile_algebra(A)
    x = _vec(st, x)
    y = _vec(st, y)
    return 0.5 * (np.einsum('a,b,abc->c', x, y, st.ctensor)
                  + np.einsum('a,b,abc->c', y, x, st.ctensor))


def unit(A):
    return compile_algebra(A).unit.copy()


def mul_operator(A, x):
    """Matrix of y -> x o y on the coordinate basis."""
    st = compile_algebra(A)
    x = _vec(st, x)
    return np.einsum('a,abc->cb', x, st.ctensor)


def trace_form(A, x, y):
    """tau(x, y) = trace of the multiplication operator by x o y."""
    st = compile_algebra(A)
    val = np.dot(jordan_mul(st, x, y), st.tauvec)
    return val if np.iscomplexobj(val) else float(val)


def jordan_power(A, x, p):
    st = compile_algebra(A)
    x = _vec(st, x)
    if int(p) != p or p < 1:
        raise ShapeError("power must be a positive integer")
    out = x.copy()
    for _ in range(int(p) - 1):
        out = jordan_mul(st, out, x)
    return out


def peirce_decompose(A, e, tol=IDEM_TOL):
    """Bases of the eigenspaces of the multiplication operator by an
    idempotent, for the eigenvalues 1, 1/2 and 0 (in that order).

    Returned bases are rows, orthonormal for the trace form.
    """
    st = compile_algebra(A)
    e = _vec(st, e)
    if frob(jordan_mul(st, e, e) - e) > tol:
        raise NotIdempotent("e o e differs from e beyond tolerance")
    half, inv_half = st.gram_sqrt()
    s = half @ mul_operator(st, e) @ inv_half
    w, v = sym_eigh(s)
    coords = inv_half @ v
    one = coords[:, w >= PEIRCE_BINS[1]].T
    mid = coords[:, (w >= PEIRCE_BINS[0]) & (w < PEIRCE_BINS[1])].T
    zero = coords[:, w < PEIRCE_BINS[0]].T
    return one, mid, zero


def cone_margin(A, x):
    """Smallest eigenvalue of the multiplication operator by x, computed on
    a trace-form orthonormal basis.  Positive exactly on the open cone."""
    st = compile_algebra(A)
    x = _vec(st, x)
    half, inv_half = st.gram_sqrt()
    s = half @ mul_operator(st, x) @ inv_half
    w, _ = sym_eigh(s)
    return float(w[0])


def cone_member(A, x, tol=DEFAULT_CONE_TOL):
    return cone_margin(A, x) > tol


def quadratic_operator(A, x):
    """U_x = 2 T_x^2 - T_{x o x} on coordinates (complex allowed)."""
    st = compile_algebra(A)
    x = _vec(st, x)
    t = np.einsum('a,abc->cb', x, st.ctensor)
    t2 = np.einsum('a,abc->cb', np.einsum('a,b,abc->c', x, x, st.ctensor), st.ctensor)
    return 2.0 * (t @ t) - t2


def jordan_inverse(A, x):
    """Inverse element: the solution y of U_x y = x, checked against the
    defining identity x o y = e."""
    st = compile_algebra(A)
    x = _vec(st, x)
    y = solve_checked(quadratic_operator(st, x), x)
    resid = frob(jordan_mul(st, x, y) - st.unit)
    if resid > 1e-8 * max(1.0, frob(x) ** 2):
        raise Singular("element is not invertible (residual %.3e)" % resid)
    return y


# ---------------------------------------------------------------------------
# rank-two Hermitian matrices and spin factors

_H2_SPIN_N = {'R': 2, 'C': 3, 'H': 5, 'O': 9}


def herm2_spinfactor_iso(F, x):
    """Coordinates of a 2x2 Hermitian matrix over F as a spin factor element.

    The map sends [[alpha, c], [c~, beta]] to
    ((alpha+beta)/2, ((alpha-beta)/2, coords of c)); it is a unital algebra
    isomorphism onto spin:n with n = 2, 3, 5, 9 for F = R, C, H, O.
    """
    F = F.upper()
    if F not in _H2_SPIN_N:
        raise ShapeError("F must be one of R, C, H, O")
    x = np.asarray(x, dtype=float)
    d = {'R': 3, 'C': 4, 'H': 6, 'O': 10}[F]
    if x.shape != (d,):
        raise ShapeError("expected %d coordinates for Herm2(%s)" % (d, F))
    alpha, beta = x[0], x[1]
    c = x[2:]
    return np.concatenate([[(alpha + beta) / 2.0, (alpha - beta) / 2.0], c])


def herm2_from_spinfactor(F, s):
    """Inverse of herm2_spinfactor_iso."""
    F = F.upper()
    n = _H2_SPIN_N[F]
    s = np.asarray(s, dtype=float)
    if s.shape != (n + 1,):
        raise ShapeError("expected spin:%d coordinates" % n)
    lam, delta = s[0], s[1]
    return np.concatenate([[lam + delta, lam - delta], s[2:]])


def herm2_descriptor(F):
    """Descriptor whose coordinate order matches herm2_spinfactor_iso input
    (None for F = O, which has no descriptor here)."""
    return {'R': 'herm-r:2', 'C': 'herm-c:2', 'H': 'herm-h:2', 'O': None}[F.upper()]


def herm2_oct_mul(x, y):
    """Jordan product on 2x2 octonion Hermitian matrices, in the 10-real
    coordinates (alpha, beta, c).  Used to exercise the F = O isomorphism."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    dot = float(np.dot(x[2:], y[2:]))
    alpha = x[0] * y[0] + dot
    beta = x[1] * y[1] + dot
    c = 0.5 * ((x[0] + x[1]) * y[2:] + (y[0] + y[1]) * x[2:])
    return np.concatenate([[alpha, beta], c])


# ---------------------------------------------------------------------------
# JSON


def _complex_matrix_json(m):
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m, dtype=complex)]


def _complex_matrix_from_json(data):
    arr = np.asarray(data, dtype=float)
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ShapeError("complex matrix JSON must be nested [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def element_to_json(A, x):
    desc = parse_descriptor(A)
    if isinstance(desc, JordanStructure):
        raise ShapeError("explicit structures have no canonical JSON form")
    out = {"alg": desc, "coords": [float(c) for c in np.asarray(x, dtype=float)]}
    if desc.split(':')[0] in ('herm-r', 'herm-c', 'herm-h'):
        out["matrix"] = _complex_matrix_json(unflatten(desc, x))
    return out


def element_from_json(data):
    """Load {'alg': ..., 'coords': [...]} or {'alg': ..., 'matrix': ...};
    matrices are validated (Hermitian, correct block structure) on load."""
    if not isinstance(data, dict) or "alg" not in data:
        raise ShapeError("element JSON needs an 'alg' field")
    desc = parse_descriptor(data["alg"])
    if "matrix" in data:
        m = _complex_matrix_from_json(data["matrix"])
        if frob(m - m.conj().T) > 1e-9 * max(1.0, frob(m)):
            raise ShapeError("matrix in JSON is not Hermitian")
        x = flatten(desc, m)
        if frob(unflatten(desc, x) - m) > 1e-9 * max(1.0, frob(m)):
            raise ShapeError("matrix does not have the block structure of %s" % desc)
        return desc, x
    coords = np.asarray(data.get("coords"), dtype=float)
    if coords.shape != (dimension(desc),):
        raise ShapeError("coords length does not match %s" % desc)
    return desc, coords
