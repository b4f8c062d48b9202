"""Matrix models for the Lie algebra side of the classical domain families.

Each non-compact family is a real Lie algebra of complex matrices cut out
by one or two linear relations.  The module equips every model with its
block involution, the distinguished central element of the even part, an
honestly computed Killing form (traces of products of ad-matrices over an
auto-generated basis), the compact dual, the +/-i eigenspaces of ad(H) on
the complexified odd part, and the double-bracket triple product that
reproduces jts.triple under the block identifications.

Descriptor grammar (ambient matrix size in parentheses, M* = conjugate
transpose):

    su:p:q      traceless M with M* G = -G M, G = diag(-I_p, I_q)    (p+q)
    so-nc:m     m even: M^t S = -S M and M* G = -G M with
                S = antidiag(I, I), G = diag(-I, I)                  (m)
    sp-nc:n     M^t J = -J M and M* G = -G M, J = [[0, I], [-I, 0]]  (2n)
    so-nc:n:2   M^t = -M and M* E = -E M, E = diag(I_n, -I_2)        (n+2)

Compact duals: su-c:p:q (anti-Hermitian traceless with the same block
split), so-c:m and sp:n (same bilinear relation, anti-Hermitian instead of
the indefinite constraint) and so:m (real skew-symmetric).
"""

import functools

import numpy as np
import scipy.linalg

from . import domains as _domains
from .errors import RelationViolation, ShapeError, UnknownType, Unsupported
from .linalg import frob, nullspace

MEMBER_TOL = 1e-10


def parse_descriptor(desc):
    """Normalize a Lie algebra descriptor string."""
    text = str(desc).strip().lower()
    parts = text.split(':')
    fam = parts[0]
    try:
        nums = [int(v) for v in parts[1:]]
    except ValueError:
        raise UnknownType("bad Lie algebra descriptor %r" % (desc,))
    if not nums or any(v <= 0 for v in nums):
        raise UnknownType("descriptor sizes must be positive integers: %r"
                          % (desc,))
    if fam in ('su', 'su-c') and len(nums) == 2:
        return '%s:%d:%d' % (fam, nums[0], nums[1])
    if fam in ('so-nc', 'so-c') and len(nums) == 1:
        if nums[0] % 2 or nums[0] < 4:
            raise UnknownType("%s wants a single even size >= 4, got %r"
                              % (fam, desc))
        return '%s:%d' % (fam, nums[0])
    if fam == 'so-nc' and len(nums) == 2:
        if nums[1] != 2:
            raise UnknownType("the second slot of so-nc:n:k must be 2: %r"
                              % (desc,))
        return 'so-nc:%d:2' % nums[0]
    if fam in ('sp-nc', 'sp') and len(nums) == 1:
        return '%s:%d' % (fam, nums[0])
    if fam == 'so' and len(nums) == 1:
        if nums[0] < 3:
            raise UnknownType("so:m wants m >= 3, got %r" % (desc,))
        return 'so:%d' % nums[0]
    raise UnknownType("unknown Lie algebra descriptor %r" % (desc,))


class _Struct:
    """Size, block matrices and relation names of one descriptor."""

    __slots__ = ('desc', 'family', 'compact', 'size', 'split', 'parity',
                 'signature', 'form', 'hmat', 'relation_names')

    def __init__(self, desc):
        parts = desc.split(':')
        fam = parts[0]
        nums = [int(v) for v in parts[1:]]
        self.desc = desc
        self.form = None
        if fam in ('su', 'su-c'):
            p, q = nums
            self.family = 'su'
            self.compact = fam == 'su-c'
            self.size = p + q
            self.split = (p, q)
            self.parity = np.diag(np.concatenate([-np.ones(p), np.ones(q)]))
            self.signature = self.parity
            self.hmat = 1j * np.diag(np.concatenate(
                [np.full(p, q / (p + q)), np.full(q, -p / (p + q))]))
            self.relation_names = (
                'antihermitian' if self.compact else 'signature', 'trace')
        elif fam in ('so-nc', 'so-c', 'sp-nc', 'sp') and len(nums) == 1:
            symplectic = fam in ('sp-nc', 'sp')
            n = nums[0] if symplectic else nums[0] // 2
            self.family = 'sp' if symplectic else 'so-star'
            self.compact = fam in ('so-c', 'sp')
            self.size = 2 * n
            self.split = (n, n)
            self.parity = np.diag(np.concatenate([np.ones(n), -np.ones(n)]))
            self.signature = -self.parity
            self.form = np.zeros((2 * n, 2 * n))
            self.form[:n, n:] = np.eye(n)
            self.form[n:, :n] = -np.eye(n) if symplectic else np.eye(n)
            self.hmat = 0.5j * self.parity
            self.relation_names = (
                'symplectic' if symplectic else 'orthogonal',
                'antihermitian' if self.compact else 'signature')
        else:
            n = nums[0] if fam == 'so-nc' else nums[0] - 2
            self.family = 'so-two'
            self.compact = fam == 'so'
            self.size = n + 2
            self.split = (n, 2)
            self.parity = np.diag(np.concatenate([np.ones(n), -np.ones(2)]))
            self.signature = self.parity
            self.hmat = np.zeros((n + 2, n + 2), dtype=complex)
            self.hmat[n:, n:] = np.array([[0.0, -1.0], [1.0, 0.0]])
            self.relation_names = ('skew',
                                   'real' if self.compact else 'signature')


@functools.lru_cache(maxsize=None)
def _struct(desc):
    norm = parse_descriptor(desc)
    if norm != desc:
        return _struct(norm)
    return _Struct(norm)


def _as_matrix(st, x):
    m = x.matrix if isinstance(x, LieElement) else np.asarray(x, dtype=complex)
    if m.shape != (st.size, st.size):
        raise ShapeError("expected a %d x %d matrix, got shape %s"
                         % (st.size, st.size, m.shape))
    return m


def _relation_arrays(st, m):
    """Raw residual arrays of the defining relations (real-linear in m)."""
    out = []
    if st.family == 'su':
        if st.compact:
            out.append(m.conj().T + m)
        else:
            g = st.signature
            out.append(m.conj().T @ g + g @ m)
        out.append(np.array([np.trace(m)]))
        return out
    if st.family in ('so-star', 'sp'):
        out.append(m.T @ st.form + st.form @ m)
        if st.compact:
            out.append(m.conj().T + m)
        else:
            g = st.signature
            out.append(m.conj().T @ g + g @ m)
        return out
    out.append(m.T + m)
    if st.compact:
        out.append(m.imag.astype(complex))
    else:
        e = st.signature
        out.append(m.conj().T @ e + e @ m)
    return out


def relation_residuals(desc, x):
    """Frobenius residuals of the defining relations, keyed by name."""
    st = _struct(desc)
    m = _as_matrix(st, x)
    return {name: frob(arr)
            for name, arr in zip(st.relation_names, _relation_arrays(st, m))}


def sla_member(desc, x, tol=MEMBER_TOL):
    """True when every defining relation holds within tol."""
    return max(relation_residuals(desc, x).values()) <= tol


class LieElement:
    """A matrix validated against the defining relations of its algebra."""

    def __init__(self, matrix, desc, tol=MEMBER_TOL):
        self.descriptor = parse_descriptor(desc)
        st = _struct(self.descriptor)
        self.matrix = np.array(matrix, dtype=complex)
        if self.matrix.shape != (st.size, st.size):
            raise ShapeError("expected a %d x %d matrix, got shape %s"
                             % (st.size, st.size, self.matrix.shape))
        bad = {k: v
               for k, v in relation_residuals(self.descriptor, self.matrix).items()
               if v > tol}
        if bad:
            raise RelationViolation("matrix fails %s relations: %s"
                                    % (self.descriptor, ", ".join(
                                        "%s=%.2e" % kv for kv in sorted(bad.items()))))

    def __repr__(self):
        return "LieElement(%r, %d x %d)" % (self.descriptor,
                                            self.matrix.shape[0],
                                            self.matrix.shape[1])


def theta(desc, x):
    """Cartan-type involution: conjugation by the block parity matrix."""
    st = _struct(desc)
    m = _as_matrix(st, x)
    return st.parity @ m @ st.parity


def central_H(desc):
    """The distinguished central element of the even part."""
    st = _struct(desc)
    return LieElement(st.hmat.copy(), st.desc)


def cartan_split(desc, x):
    """(even, odd) parts of x under the involution."""
    st = _struct(desc)
    m = _as_matrix(st, x)
    t = st.parity @ m @ st.parity
    return (m + t) / 2, (m - t) / 2


def _probe_basis(n):
    out = []
    for a in range(n):
        for b in range(n):
            for s in (1.0, 1j):
                e = np.zeros((n, n), dtype=complex)
                e[a, b] = s
                out.append(e)
    return out


def _residual_vector(st, m):
    chunks = []
    for arr in _relation_arrays(st, m):
        flat = np.asarray(arr).ravel()
        chunks.append(flat.real)
        chunks.append(flat.imag)
    return np.concatenate(chunks)


@functools.lru_cache(maxsize=None)
def real_basis(desc):
    """Orthonormal basis of the algebra as a real vector space."""
    norm = parse_descriptor(desc)
    if norm != desc:
        return real_basis(norm)
    st = _struct(norm)
    probes = _probe_basis(st.size)
    jac = np.column_stack([_residual_vector(st, e) for e in probes])
    rows = nullspace(jac)
    basis = []
    for row in rows:
        basis.append(np.einsum('i,iab->ab', row, np.stack(probes)))
    return tuple(basis)


def dim(desc):
    """Real dimension of the algebra."""
    return len(real_basis(parse_descriptor(desc)))


def _orth(mats):
    """Orthonormal basis of the real span of the given matrices."""
    shape = mats[0].shape
    a = np.array([np.concatenate([m.ravel().real, m.ravel().imag])
                  for m in mats])
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    keep = s > 1e-10 * max(1.0, s[0] if s.size else 0.0)
    half = mats[0].size
    out = []
    for row in vt[keep]:
        out.append(row[:half].reshape(shape) + 1j * row[half:].reshape(shape))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def cartan_bases(desc):
    """(even basis, odd basis) of the involution, both orthonormal."""
    norm = parse_descriptor(desc)
    if norm != desc:
        return cartan_bases(norm)
    st = _struct(norm)
    even, odd = [], []
    for b in real_basis(norm):
        t = st.parity @ b @ st.parity
        even.append((b + t) / 2)
        odd.append((b - t) / 2)
    return _orth(even), _orth(odd)


@functools.lru_cache(maxsize=None)
def _basis_matrix(desc):
    norm = parse_descriptor(desc)
    if norm != desc:
        return _basis_matrix(norm)
    return np.column_stack([b.ravel() for b in real_basis(norm)])


def _complex_coords(desc, m, tol=1e-8):
    """Coordinates of m in the complex span of the real basis."""
    a = _basis_matrix(desc)
    c, _, _, _ = np.linalg.lstsq(a, m.ravel(), rcond=None)
    resid = frob(a @ c - m.ravel())
    if resid > tol * max(1.0, frob(m)):
        raise RelationViolation(
            "matrix is not in the complexified algebra (residual %.2e)" % resid)
    return c


@functools.lru_cache(maxsize=None)
def _ad_tensor(desc):
    """ad-matrices of the basis elements, stacked along the first axis."""
    norm = parse_descriptor(desc)
    if norm != desc:
        return _ad_tensor(norm)
    basis = real_basis(norm)
    stack = np.stack(basis)
    conj = stack.conj()
    d = len(basis)
    ad = np.zeros((d, d, d))
    worst = 0.0
    for j in range(d):
        for k in range(d):
            w = basis[j] @ basis[k] - basis[k] @ basis[j]
            c = np.einsum('iab,ab->i', conj, w).real
            back = np.einsum('i,iab->ab', c, stack)
            worst = max(worst, float(frob(back - w)))
            ad[j, :, k] = c
    if worst > 1e-9:
        raise RelationViolation("bracket closure fails on %s (residual %.2e)"
                                % (norm, worst))
    return ad


@functools.lru_cache(maxsize=None)
def killing_gram(desc):
    """Gram matrix of the Killing form on the generated real basis."""
    norm = parse_descriptor(desc)
    if norm != desc:
        return killing_gram(norm)
    ad = _ad_tensor(norm)
    return np.einsum('jab,kba->jk', ad, ad)


def killing_form(desc, x, y):
    """trace(ad x . ad y), computed through ad-matrices on the basis."""
    desc = parse_descriptor(desc)
    st = _struct(desc)
    cx = _complex_coords(desc, _as_matrix(st, x))
    cy = _complex_coords(desc, _as_matrix(st, y))
    val = cx @ killing_gram(desc) @ cy
    if abs(val.imag) <= 1e-10 * max(1.0, abs(val)):
        return float(val.real)
    return complex(val)


def dual_sla(desc):
    """Dual descriptor together with the elementwise duality map.

    The map multiplies the odd part of the Cartan split by +i when the
    source is non-compact and by -i when it is compact, so the two
    directions invert each other and the double dual is the identity.
    """
    desc = parse_descriptor(desc)
    st = _struct(desc)
    if st.family == 'su':
        dual = ('su:%d:%d' if st.compact else 'su-c:%d:%d') % st.split
    elif st.family == 'so-star':
        dual = ('so-nc:%d' if st.compact else 'so-c:%d') % st.size
    elif st.family == 'sp':
        dual = ('sp-nc:%d' if st.compact else 'sp:%d') % (st.size // 2)
    elif st.compact:
        dual = 'so-nc:%d:2' % (st.size - 2)
    else:
        dual = 'so:%d' % st.size
    sign = -1j if st.compact else 1j

    def to_dual(x, _desc=desc, _sign=sign):
        even, odd = cartan_split(_desc, x)
        return even + _sign * odd

    return dual, to_dual


def ad_H_squared_check(desc, tol=1e-10):
    """True when [H, [H, .]] = -id on the odd part of the split."""
    st = _struct(desc)
    h = st.hmat
    worst = 0.0
    for b in cartan_bases(desc)[1]:
        c = h @ b - b @ h
        cc = h @ c - c @ h
        worst = max(worst, float(frob(cc + b)))
    return worst <= tol


def pplus_project(desc, x):
    """Split an odd complexified element into +i / -i eigenparts of ad(H).

    Assumes theta(x) = -x; the components are x_plus = (x - i[H, x]) / 2
    and x_minus = (x + i[H, x]) / 2.
    """
    st = _struct(desc)
    m = _as_matrix(st, x)
    comm = st.hmat @ m - m @ st.hmat
    return (m - 1j * comm) / 2, (m + 1j * comm) / 2


def jts_descriptor(desc):
    """Domain descriptor whose carrier space realizes the +i eigenspace."""
    st = _struct(desc)
    if st.compact:
        raise Unsupported("only the non-compact models carry a domain "
                          "identification")
    if st.family == 'su':
        return 'I:%d:%d' % st.split
    if st.family == 'so-star':
        return 'II:%d' % (st.size // 2)
    if st.family == 'sp':
        return 'III:%d' % (st.size // 2)
    return 'IV:%d' % (st.size - 2)


def pplus_embed(desc, z):
    """Embed a carrier element as a matrix in the +i eigenspace of ad(H)."""
    st = _struct(desc)
    if st.compact:
        raise Unsupported("only the non-compact models carry a domain "
                          "identification")
    z = np.asarray(z, dtype=complex)
    out = np.zeros((st.size, st.size), dtype=complex)
    if st.family == 'su':
        p, q = st.split
        if z.shape != (p, q):
            raise ShapeError("expected a %d x %d block, got shape %s"
                             % (p, q, z.shape))
        out[:p, p:] = z
        return out
    if st.family in ('so-star', 'sp'):
        half = st.size // 2
        if z.shape != (half, half):
            raise ShapeError("expected a %d x %d block, got shape %s"
                             % (half, half, z.shape))
        skew = st.family == 'so-star'
        bad = frob(z + z.T) if skew else frob(z - z.T)
        if bad > 1e-12 * max(1.0, frob(z)):
            raise ShapeError("expected a %s block" %
                             ('skew-symmetric' if skew else 'symmetric'))
        out[:half, half:] = z
        return out
    n = st.size - 2
    if z.shape != (n,):
        raise ShapeError("expected a vector of length %d, got shape %s"
                         % (n, z.shape))
    b = np.column_stack([1j * z, z])
    out[:n, n:] = b
    out[n:, :n] = -b.T
    return out


def pplus_extract(desc, x):
    """Inverse of pplus_embed on the +i eigenspace."""
    st = _struct(desc)
    if st.compact:
        raise Unsupported("only the non-compact models carry a domain "
                          "identification")
    m = _as_matrix(st, x)
    if st.family == 'su':
        p, _ = st.split
        return m[:p, p:].copy()
    if st.family in ('so-star', 'sp'):
        half = st.size // 2
        return m[:half, half:].copy()
    return m[:st.size - 2, st.size - 1].copy()


def real_form_sigma(desc, x):
    """Conjugation of the complexified algebra that fixes the real form."""
    desc = parse_descriptor(desc)
    st = _struct(desc)
    m = _as_matrix(st, x)
    c = _complex_coords(desc, m)
    return (_basis_matrix(desc) @ c.conj()).reshape(st.size, st.size)


def bracket_triple(desc, x, y, z):
    """{x, y, z} = [[x, sigma(y)], z] / 2 on the +i eigenspace."""
    desc = parse_descriptor(desc)
    st = _struct(desc)
    xm = _as_matrix(st, x)
    zm = _as_matrix(st, z)
    sy = real_form_sigma(desc, _as_matrix(st, y))
    comm = xm @ sy - sy @ xm
    return 0.5 * (comm @ zm - zm @ comm)


def _classical_residuals(variant, half, m, algebra):
    """Defining residuals of the classical real form at the target side."""
    jn = np.zeros((2 * half, 2 * half), dtype=complex)
    jn[:half, half:] = np.eye(half)
    jn[half:, :half] = -np.eye(half)
    if variant == 'II':
        if algebra:
            return {'skew': frob(m.T + m),
                    'quaternionic': frob(m.conj().T @ jn + jn @ m)}
        return {'orthogonal': frob(m.T @ m - np.eye(2 * half)),
                'quaternionic': frob(m.conj().T @ jn @ m - jn)}
    if algebra:
        return {'real': frob(m.imag),
                'symplectic': frob(m.T @ jn + jn @ m)}
    return {'real': frob(m.imag),
            'symplectic': frob(m.T @ jn @ m - jn)}


def real_form_conjugation(variant, x, inverse=False, tol=1e-8):
    """Conjugate between the split matrix model and the classical form.

    Variant II carries the so-nc:2n model onto complex orthogonal matrices
    preserving a quaternionic skew pairing; variant III carries the
    sp-nc:n model onto real symplectic matrices.  Algebra elements and
    group elements are recognized from their relations.  With
    inverse=True the map runs from the classical form back to the model.
    """
    v = str(variant).strip().upper()
    if v not in ('II', 'III'):
        raise UnknownType("variant must be II or III, got %r" % (variant,))
    if isinstance(x, (LieElement, _domains.GroupElement)):
        m = np.asarray(x.matrix, dtype=complex)
    else:
        m = np.asarray(x, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
        raise ShapeError("expected a square matrix of even size, got %s"
                         % (m.shape,))
    half = m.shape[0] // 2
    src_desc = ('so-nc:%d' % (2 * half)) if v == 'II' else ('sp-nc:%d' % half)
    eye = np.eye(half)
    phi = np.block([[eye, 1j * eye], [1j * eye, eye]])
    phi_inv = 0.5 * np.block([[eye, -1j * eye], [-1j * eye, eye]])
    scale = max(1.0, frob(m))
    if inverse:
        out = phi_inv @ m @ phi
        src_alg = _classical_residuals(v, half, m, True)
        src_grp = _classical_residuals(v, half, m, False)
    else:
        out = phi @ m @ phi_inv
        src_alg = relation_residuals(src_desc, m)
        src_grp = _domains.group_relations(src_desc, m)
    if max(src_alg.values()) <= tol * scale:
        algebra = True
    elif max(src_grp.values()) <= tol * scale:
        algebra = False
    else:
        raise RelationViolation("input satisfies neither the algebra nor the "
                                "group relations of the variant %s source" % v)
    if inverse:
        tgt = relation_residuals(src_desc, out) if algebra \
            else _domains.group_relations(src_desc, out)
    else:
        tgt = _classical_residuals(v, half, out, algebra)
    bad = {k: r for k, r in tgt.items() if r > tol * max(1.0, frob(out))}
    if bad:
        raise RelationViolation("conjugated image fails target relations: %s"
                                % ", ".join("%s=%.2e" % kv
                                            for kv in sorted(bad.items())))
    return out


def random_element(desc, rng, scale=1.0):
    """Gaussian combination of the generated basis."""
    desc = parse_descriptor(desc)
    basis = real_basis(desc)
    coeff = scale * rng.standard_normal(len(basis))
    return np.einsum('i,iab->ab', coeff, np.stack(basis))


def random_group_element(desc, rng, scale=0.4):
    """Exponential of a random algebra element, validated group-side."""
    desc = parse_descriptor(desc)
    st = _struct(desc)
    if st.compact:
        raise Unsupported("group sampling is wired up only for the "
                          "non-compact models")
    g = scipy.linalg.expm(random_element(desc, rng, scale))
    return _domains.GroupElement(g, desc)
