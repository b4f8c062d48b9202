"""3x3 Hermitian matrices over the (complexified) octonions.

Elements are stored packed: a complex ndarray of shape (3, 3, 8) whose
[i, j] slice holds the octonion coordinates of the (i, j) entry.  The
Hermitian layout is

    [[alpha1, a3,     ~a2   ],
     [~a3,    alpha2, a1    ],
     [a2,     ~a1,    alpha3]]

with ~ the octonion conjugation.  Everything here is coordinate-bilinear,
so the same code serves the real Albert algebra and its complexification.
"""

import numpy as np

from .composition import OCT_TENSOR, ComplexOctonion, mul8, tilde8
from .errors import ShapeError

_E8 = np.zeros(8)
_E8[0] = 1.0


def pack(alpha, a):
    """Assemble the packed array from diagonal values alpha (3,) and
    octonion rows a (3, 8)."""
    alpha = np.asarray(alpha)
    a = np.asarray(a)
    if alpha.shape != (3,) or a.shape != (3, 8):
        raise ShapeError("pack expects alpha (3,) and a (3, 8)")
    dtype = np.result_type(alpha, a, float)
    m = np.zeros((3, 3, 8), dtype=dtype)
    for i in range(3):
        m[i, i] = alpha[i] * _E8
    m[1, 2] = a[0]
    m[2, 1] = tilde8(a[0])
    m[2, 0] = a[1]
    m[0, 2] = tilde8(a[1])
    m[0, 1] = a[2]
    m[1, 0] = tilde8(a[2])
    return m


def unpack(m):
    m = _coerce(m)
    alpha = np.array([m[0, 0, 0], m[1, 1, 0], m[2, 2, 0]])
    a = np.stack([m[1, 2], m[2, 0], m[0, 1]])
    return alpha, a


def _coerce(x):
    if isinstance(x, H3Element):
        return x.data
    x = np.asarray(x)
    if x.shape != (3, 3, 8):
        raise ShapeError("expected a packed (3, 3, 8) array")
    return x


UNIT = pack(np.ones(3), np.zeros((3, 8)))


def matmul3(a, b):
    """Entrywise-octonion matrix product (not Hermitian in general)."""
    return np.einsum('ika,kjb,abc->ijc', _coerce(a), _coerce(b), OCT_TENSOR)


def jmul(a, b):
    """Symmetrized product (A B + B A) / 2; the evaluation order makes the
    result bitwise symmetric in its arguments."""
    a = _coerce(a)
    b = _coerce(b)
    return 0.5 * (matmul3(a, b) + matmul3(b, a))


def tr3(a):
    a = _coerce(a)
    return a[0, 0, 0] + a[1, 1, 0] + a[2, 2, 0]


def trace_bilinear(a, b):
    """T(a, b) = tr((a b + b a) / 2), bilinear in both slots."""
    return tr3(jmul(a, b))


def h3_form(a, b):
    """The Hermitian pairing (a | b) = T(a, conj b)."""
    return trace_bilinear(_coerce(a), np.conj(_coerce(b)))


def sharp(a):
    """Adjugate: a# = a o a - tr(a) a + (tr(a)^2 - tr(a o a)) / 2 * I.

    Satisfies (a#)# = det(a) a and a o a# = det(a) I for invertible a.
    """
    a = _coerce(a)
    sq = jmul(a, a)
    t = tr3(a)
    s = 0.5 * (t * t - tr3(sq))
    return sq - t * a + s * UNIT.astype(sq.dtype)


def freudenthal(a, b):
    """Symmetric cross product a x b = (a + b)# - a# - b#.

    Polarization of the adjugate; a x a = 2 a#.
    """
    a = _coerce(a)
    b = _coerce(b)
    return sharp(a + b) - sharp(a) - sharp(b)


def det3(a):
    """Determinant by the closed formula on the matrix slots."""
    alpha, arows = unpack(a)
    q = np.array([np.sum(r * r) for r in arows])
    u = mul8(arows[0], mul8(arows[1], arows[2]))
    return alpha[0] * alpha[1] * alpha[2] - np.dot(alpha, q) + 2.0 * u[0]


def det3_trace(a):
    """Determinant through the adjugate, det(a) = T(a#, a) / 3.

    Kept separate from det3 so the two routes can be compared.
    """
    a = _coerce(a)
    return trace_bilinear(sharp(a), a) / 3.0


class H3Element:
    """A 3x3 octonion Hermitian matrix, possibly with complex coordinates."""

    def __init__(self, alpha, a1, a2, a3):
        rows = []
        for entry in (a1, a2, a3):
            if isinstance(entry, ComplexOctonion):
                rows.append(entry.coords)
            else:
                entry = np.asarray(entry)
                if entry.shape != (8,):
                    raise ShapeError("octonion entries need 8 coordinates")
                rows.append(entry.astype(complex))
        self.data = pack(np.asarray(alpha, dtype=complex), np.stack(rows))

    @classmethod
    def from_packed(cls, m):
        m = _coerce(m)
        alpha, a = unpack(m)
        el = cls.__new__(cls)
        el.data = pack(alpha.astype(complex), a.astype(complex))
        return el

    @property
    def alpha(self):
        return unpack(self.data)[0]

    def entry(self, i):
        """Octonion in slot i (1-based, matching the layout above)."""
        if i not in (1, 2, 3):
            raise ShapeError("entry index must be 1, 2 or 3")
        return ComplexOctonion(unpack(self.data)[1][i - 1])

    def __add__(self, other):
        return H3Element.from_packed(self.data + _coerce(other))

    def __sub__(self, other):
        return H3Element.from_packed(self.data - _coerce(other))

    def __neg__(self):
        return H3Element.from_packed(-self.data)

    def __mul__(self, scalar):
        return H3Element.from_packed(self.data * complex(scalar))

    __rmul__ = __mul__

    def jordan_mul(self, other):
        return H3Element.from_packed(jmul(self.data, _coerce(other)))

    def sharp(self):
        return H3Element.from_packed(sharp(self.data))

    def det(self):
        return complex(det3(self.data))

    def trace(self):
        return complex(tr3(self.data))

    def conj(self):
        return H3Element.from_packed(np.conj(self.data))

    def to_json(self):
        alpha, a = unpack(self.data)
        return {
            "alpha": [[float(v.real), float(v.imag)] for v in alpha],
            "a": [list(map(float, np.concatenate([r.real, r.imag]))) for r in a],
        }

    @classmethod
    def from_json(cls, data):
        alpha = np.asarray(data["alpha"], dtype=float)
        if alpha.shape != (3, 2):
            raise ShapeError("alpha must be three [re, im] pairs")
        rows = []
        for r in data["a"]:
            r = np.asarray(r, dtype=float)
            if r.shape != (16,):
                raise ShapeError("each octonion entry needs 16 reals")
            rows.append(r[:8] + 1j * r[8:])
        return cls(alpha[:, 0] + 1j * alpha[:, 1], *rows)

    def __repr__(self):
        alpha, _ = unpack(self.data)
        return "H3Element(alpha=%s)" % (np.round(alpha, 6),)
