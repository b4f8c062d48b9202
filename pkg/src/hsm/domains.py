"""Bounded symmetric domains in their circled matrix realizations.

Domain descriptors reuse the triple system names: I:p:q (p >= q >= 1),
II:n (n >= 2, skew), III:n (n >= 1, symmetric), IV:n (n >= 1 and n != 2;
the two dimensional case is reducible and rejected), V, VI.

Membership has two independent routes: closed-form polynomial margins per
family, and the spectral radius of the box operator of the underlying
triple system.  Both classify points as member / boundary / exterior with
a tolerance band.
"""

import numpy as np

from . import albert as _h3
from . import jts as _jts
from .composition import mul8, norm8, tilde8
from .errors import RelationViolation, ShapeError, Singular, Unsupported
from .linalg import frob, solve_checked, sym_eigh

DEFAULT_TOL = 1e-9


def parse_descriptor(desc):
    d = _jts.parse_descriptor(desc)
    if d.startswith('jordan:'):
        raise ShapeError("domain descriptors name the six matrix families only")
    if d == 'IV:2':
        raise ShapeError("IV:2 splits into a product of discs; use I:1:1 factors")
    return d


def _info(desc):
    return _jts._info(parse_descriptor(desc))


def dimension(desc):
    return _jts.dim(parse_descriptor(desc))


def validate_point(desc, z, tol=1e-9):
    """Check carrier shape and symmetry type; returns the array."""
    info = _info(desc)
    fam = info[0]
    z = np.asarray(z, dtype=complex)
    shapes = {'I': lambda: (info[1], info[2]),
              'II': lambda: (info[1], info[1]),
              'III': lambda: (info[1], info[1]),
              'IV': lambda: (info[1],),
              'V': lambda: (2, 8),
              'VI': lambda: (3, 3, 8)}
    want = shapes[fam]()
    if z.shape != want:
        raise ShapeError("expected shape %s for %s, got %s"
                         % (want, parse_descriptor(desc), z.shape))
    scale = max(1.0, frob(z))
    if fam == 'II' and frob(z + z.T) > tol * scale:
        raise ShapeError("family II points must be skew-symmetric")
    if fam == 'III' and frob(z - z.T) > tol * scale:
        raise ShapeError("family III points must be symmetric")
    if fam == 'VI':
        alpha, a = _h3.unpack(z)
        if frob(_h3.pack(alpha, a) - z) > tol * scale:
            raise ShapeError("family VI points must be Hermitian over the octonions")
    return z


def random_point(desc, rng, scale=1.0):
    return validate_point(desc, _jts.random_element(parse_descriptor(desc), rng, scale))


# ---------------------------------------------------------------------------
# membership


def margins(desc, z):
    """Family-specific closed-form margins; all positive iff z is interior,
    any negative iff exterior of the closure."""
    info = _info(desc)
    fam = info[0]
    z = validate_point(desc, z)
    if fam in ('I', 'II', 'III'):
        w, _ = sym_eigh(z.conj().T @ z)
        return (float(1.0 - w[-1]),)
    if fam == 'IV':
        zz = complex(np.dot(z, z))
        nz = float(np.real(np.vdot(z, z)))
        return (float(1.0 + abs(zz) ** 2 - 2.0 * nz), float(1.0 - nz))
    if fam == 'V':
        x1, x2 = z[0], z[1]
        s = float(np.real(2.0 * (np.vdot(x1, x1) + np.vdot(x2, x2))))
        prod = mul8(x1, x2)
        t = float(abs(norm8(x1)) ** 2 + abs(norm8(x2)) ** 2
                  + np.real(2.0 * np.vdot(prod, prod)))
        return (float(1.0 - s + t), float(2.0 - s))
    aa = float(np.real(_h3.h3_form(z, z)))
    sh = _h3.sharp(z)
    shsh = float(np.real(_h3.h3_form(sh, sh)))
    dd = abs(_h3.det3(z))
    return (float(1.0 - aa + shsh - dd ** 2),
            float(3.0 - 2.0 * aa + shsh),
            float(3.0 - aa))


def classify(desc, z, tol=DEFAULT_TOL):
    m = min(margins(desc, z))
    if m > tol:
        return 'member'
    if m < -tol:
        return 'exterior'
    return 'boundary'


def contains(desc, z, tol=DEFAULT_TOL):
    return classify(desc, z, tol) == 'member'


def box_margin(desc, z):
    """1 minus the largest eigenvalue of the box operator of (z, z)."""
    z = validate_point(desc, z)
    w = _jts.box_spectrum(parse_descriptor(desc), z)
    return float(1.0 - w[-1])


def classify_via_box(desc, z, tol=DEFAULT_TOL):
    m = box_margin(desc, z)
    if m > tol:
        return 'member'
    if m < -tol:
        return 'exterior'
    return 'boundary'


def contains_via_box(desc, z, tol=DEFAULT_TOL):
    return classify_via_box(desc, z, tol) == 'member'


# ---------------------------------------------------------------------------
# the automorphism groups


def _group_info(tag):
    parts = str(tag).strip().lower().split(':')
    if parts[0] == 'su' and len(parts) == 3:
        return ('su', int(parts[1]), int(parts[2]))
    if parts[0] == 'so-nc' and len(parts) == 2:
        m = int(parts[1])
        if m % 2 or m < 4:
            raise ShapeError("tag so-nc:m needs even m >= 4")
        return ('so-star', m // 2)
    if parts[0] == 'sp-nc' and len(parts) == 2:
        return ('sp', int(parts[1]))
    if parts[0] == 'so-nc' and len(parts) == 3 and parts[2] == '2':
        return ('so-two', int(parts[1]))
    raise ShapeError("unknown group tag %r" % (tag,))


def group_relations(tag, m, tol=1e-9):
    """Residuals of the defining relations of the group named by tag at the
    matrix m, as a dict name -> float."""
    kind = _group_info(tag)
    m = np.asarray(m, dtype=complex)
    out = {}
    if kind[0] == 'su':
        p, q = kind[1], kind[2]
        if m.shape != (p + q, p + q):
            raise ShapeError("expected a %d x %d matrix" % (p + q, p + q))
        g = np.diag(np.concatenate([-np.ones(p), np.ones(q)]))
        out['signature'] = frob(m.conj().T @ g @ m - g)
        out['det'] = abs(np.linalg.det(m) - 1.0)
    elif kind[0] == 'so-star':
        n = kind[1]
        if m.shape != (2 * n, 2 * n):
            raise ShapeError("expected a %d x %d matrix" % (2 * n, 2 * n))
        s = np.block([[np.zeros((n, n)), np.eye(n)], [np.eye(n), np.zeros((n, n))]])
        g = np.diag(np.concatenate([-np.ones(n), np.ones(n)]))
        out['orthogonal'] = frob(m.T @ s @ m - s)
        out['signature'] = frob(m.conj().T @ g @ m - g)
        out['det'] = abs(np.linalg.det(m) - 1.0)
    elif kind[0] == 'sp':
        n = kind[1]
        if m.shape != (2 * n, 2 * n):
            raise ShapeError("expected a %d x %d matrix" % (2 * n, 2 * n))
        j = np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])
        g = np.diag(np.concatenate([-np.ones(n), np.ones(n)]))
        out['symplectic'] = frob(m.T @ j @ m - j)
        out['signature'] = frob(m.conj().T @ g @ m - g)
    else:
        n = kind[1]
        if m.shape != (n + 2, n + 2):
            raise ShapeError("expected a %d x %d matrix" % (n + 2, n + 2))
        e = np.diag(np.concatenate([np.ones(n), -np.ones(2)]))
        out['orthogonal'] = frob(m.T @ m - np.eye(n + 2))
        out['signature'] = frob(m.conj().T @ e @ m - e)
        out['det'] = abs(np.linalg.det(m) - 1.0)
    return out


class GroupElement:
    """A validated element of one of the classical automorphism groups."""

    def __init__(self, matrix, tag, tol=1e-9):
        self.matrix = np.asarray(matrix, dtype=complex)
        self.tag = str(tag).strip().lower()
        resid = group_relations(self.tag, self.matrix, tol=tol)
        bad = {k: v for k, v in resid.items() if v > tol}
        if bad:
            raise RelationViolation("matrix fails %s relations: %s"
                                    % (self.tag, ", ".join(
                                        "%s=%.2e" % kv for kv in sorted(bad.items()))))

    def __matmul__(self, other):
        return GroupElement(self.matrix @ other.matrix, self.tag)

    def inv(self):
        return GroupElement(np.linalg.inv(self.matrix), self.tag)

    def __repr__(self):
        return "GroupElement(%s, %s)" % (self.tag, self.matrix.shape)


def group_tag(desc):
    info = _info(desc)
    fam = info[0]
    if fam == 'I':
        return 'su:%d:%d' % (info[1], info[2])
    if fam == 'II':
        return 'so-nc:%d' % (2 * info[1])
    if fam == 'III':
        return 'sp-nc:%d' % info[1]
    if fam == 'IV':
        return 'so-nc:%d:2' % info[1]
    raise Unsupported("no matrix group realization is wired up for %s" % fam)


def _as_group_matrix(desc, g):
    if isinstance(g, GroupElement):
        return g.matrix
    return GroupElement(g, group_tag(desc)).matrix


def mobius_act(desc, g, z):
    """Fractional-linear action of a group element on a domain point."""
    info = _info(desc)
    fam = info[0]
    z = validate_point(desc, z)
    m = _as_group_matrix(desc, g)
    if fam in ('I', 'II', 'III'):
        p = info[1]
        q = info[2] if fam == 'I' else info[1]
        a, b = m[:p, :p], m[:p, p:]
        c, d = m[p:, :p], m[p:, p:]
        num = a @ z + b
        den = c @ z + d
        try:
            out = solve_checked(den.T, num.T).T
        except Singular:
            raise Singular("the action is undefined at this point") from None
        if fam == 'II':
            out = 0.5 * (out - out.T)
        if fam == 'III':
            out = 0.5 * (out + out.T)
        return out
    if fam == 'IV':
        v = _quadric_lift(z)
        vp = m @ v
        n = info[1]
        den = 1j * vp[n] + vp[n + 1]
        if abs(den) <= 1e-12 * max(1.0, frob(vp)):
            raise Singular("the action sends this point to infinity")
        return vp[:n] / den
    raise Unsupported("no matrix realization of the action for %s" % fam)


def _quadric_lift(z):
    zz = complex(np.dot(z, z))
    return np.concatenate([2j * z, [1.0 + zz, 1j - 1j * zz]])


def symmetry_at_zero(desc):
    """The symmetry fixing the origin, as a validated group element acting
    as z -> -z through mobius_act."""
    info = _info(desc)
    fam = info[0]
    if fam == 'I':
        p, q = info[1], info[2]
        phase = np.exp(1j * np.pi * p / (p + q))
        m = phase * np.diag(np.concatenate([-np.ones(p), np.ones(q)]))
        return GroupElement(m, group_tag(desc))
    if fam in ('II', 'III'):
        n = info[1]
        m = np.diag(np.concatenate([1j * np.ones(n), -1j * np.ones(n)]))
        return GroupElement(m, group_tag(desc))
    if fam == 'IV':
        n = info[1]
        m = np.diag(np.concatenate([np.ones(n), -np.ones(2)]))
        return GroupElement(m, group_tag(desc))
    raise Unsupported("the symmetry of %s is not realized by a matrix here; "
                      "use minus_map" % fam)


def minus_map(desc, z):
    """The symmetry at the origin as a point map."""
    return -validate_point(desc, z)


# ---------------------------------------------------------------------------
# compact dual embeddings


def borel_embed(desc, z):
    """Coordinates of z inside the compact dual."""
    info = _info(desc)
    fam = info[0]
    z = validate_point(desc, z)
    if fam in ('I', 'II', 'III'):
        q = info[2] if fam == 'I' else info[1]
        return np.vstack([z, np.eye(q, dtype=complex)])
    if fam == 'IV':
        return _quadric_lift(z)
    if fam == 'V':
        x1, x2 = z[0], z[1]
        alpha = np.array([1.0, norm8(x2), norm8(x1)])
        rows = np.stack([tilde8(mul8(x1, x2)), x1, x2])
        return _h3.pack(alpha, rows)
    x = _jts.flatten('VI', z)
    sh = _jts.flatten('VI', _h3.sharp(z))
    return np.concatenate([[1.0 + 0j], x, sh, [_h3.det3(z)]])


def borel_incidence(desc, w, tol=1e-9):
    """Whether w satisfies the incidence equations cutting out the image of
    the compact dual in the given coordinates."""
    info = _info(desc)
    fam = info[0]
    w = np.asarray(w, dtype=complex)
    if fam in ('I', 'II', 'III'):
        n = info[1] + (info[2] if fam == 'I' else info[1])
        q = info[2] if fam == 'I' else info[1]
        if w.shape != (n, q):
            raise ShapeError("expected shape %s" % ((n, q),))
        s = np.linalg.svd(w, compute_uv=False)
        full = bool(s[-1] > tol * max(1.0, s[0]))
        if fam == 'I':
            return full
        half = n // 2
        if fam == 'II':
            pair = np.block([[np.zeros((half, half)), np.eye(half)],
                             [np.eye(half), np.zeros((half, half))]])
        else:
            pair = np.block([[np.zeros((half, half)), np.eye(half)],
                             [-np.eye(half), np.zeros((half, half))]])
        return full and frob(w.T @ pair @ w) <= tol * max(1.0, frob(w) ** 2)
    if fam == 'IV':
        if w.shape != (info[1] + 2,):
            raise ShapeError("expected %d projective coordinates" % (info[1] + 2))
        scale = max(1.0, frob(w) ** 2)
        return bool(frob(w) > tol and abs(np.sum(w * w)) <= tol * scale)
    if fam == 'V':
        w = validate_point('VI', w)
        scale = max(1.0, frob(w) ** 2)
        return bool(frob(w) > tol and frob(_h3.sharp(w)) <= tol * scale)
    d = 27
    if w.shape != (2 * d + 2,):
        raise ShapeError("expected %d coordinates" % (2 * d + 2))
    lam, mu = w[0], w[-1]
    x = _jts.unflatten('VI', w[1:1 + d])
    y = _jts.unflatten('VI', w[1 + d:1 + 2 * d])
    scale = max(1.0, frob(w) ** 2)
    c1 = frob(_h3.sharp(x) - lam * y) <= tol * scale
    c2 = frob(_h3.sharp(y) - mu * x) <= tol * scale
    c3 = abs(_h3.trace_bilinear(x, y) - 3.0 * lam * mu) <= tol * max(1.0, frob(w) ** 3)
    return bool((frob(w) > tol) and c1 and c2 and c3)


def polydisk_embed(desc, t, seed=0):
    """Map polydisc coordinates t (one per frame element) to a domain point."""
    desc = parse_descriptor(desc)
    frame = _jts.jordan_frame(desc, seed=seed)
    t = np.asarray(t, dtype=complex)
    if t.shape != (len(frame),):
        raise ShapeError("expected %d polydisc coordinates, got shape %s"
                         % (len(frame), t.shape))
    return sum(tk * ek for tk, ek in zip(t, frame))


def type4_real_form(desc, z):
    """Real 2 x n coordinates of a IV point in the two-plane picture."""
    info = _info(desc)
    if info[0] != 'IV':
        raise ShapeError("only family IV has this realization")
    z = validate_point(desc, z)
    zz = complex(np.dot(z, z))
    a = np.array([[zz + 1.0, 1j * (zz - 1.0)],
                  [np.conj(zz) + 1.0, -1j * (np.conj(zz) - 1.0)]])
    rhs = np.vstack([z, np.conj(z)])
    out = 2.0 * solve_checked(a, rhs)
    if frob(out.imag) > 1e-9 * max(1.0, frob(out)):
        raise Singular("real form coordinates did not come out real")
    return out.real


# ---------------------------------------------------------------------------
# linear-algebra bridge between Hermitian data


def hermitian_forms_convert(j, g, tol=1e-9):
    """From a complex structure J and a compatible symmetric positive form g
    on R^{2m}, produce the Hermitian matrix h on a chosen complex basis, the
    symplectic form omega(x, y) = g(Jx, y), and the basis vectors.
    """
    j = np.asarray(j, dtype=float)
    g = np.asarray(g, dtype=float)
    n = j.shape[0]
    if j.shape != (n, n) or g.shape != (n, n) or n % 2:
        raise ShapeError("J and g must be square of equal even size")
    if frob(j @ j + np.eye(n)) > tol:
        raise ShapeError("J is not a complex structure")
    if frob(g - g.T) > tol:
        raise ShapeError("g is not symmetric")
    w, _ = sym_eigh(g)
    if w[0] <= tol:
        raise ShapeError("g is not positive definite")
    if frob(j.T @ g @ j - g) > tol * max(1.0, frob(g)):
        from .errors import IncompatiblePair
        raise IncompatiblePair("g is not invariant under J")
    basis = []
    span = np.zeros((n, 0))
    for k in range(n):
        cand = np.eye(n)[:, k]
        resid = cand - span @ (span.T @ cand) if span.shape[1] else cand
        if np.linalg.norm(resid) > 1e-9:
            basis.append(cand)
            block = np.stack([cand, j @ cand], axis=1)
            newspan = np.concatenate([span, block], axis=1)
            qmat, _ = np.linalg.qr(newspan)
            span = qmat[:, :2 * len(basis)]
        if 2 * len(basis) == n:
            break
    m = len(basis)
    h = np.empty((m, m), dtype=complex)
    for a in range(m):
        for b in range(m):
            h[a, b] = basis[a] @ g @ basis[b] - 1j * (j @ basis[a]) @ g @ basis[b]
    omega = j.T @ g
    return h, omega, basis
