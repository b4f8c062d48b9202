"""Composition algebras built by doubling: quaternions, octonions and the
complexified octonions.

The multiplication table is generated once at import time from the doubling
rule (a, b)(c, d) = (a c - d b~, a~ d + c b), never typed by hand.  Elements
are flat coordinate vectors; the classes below wrap them with operator
syntax and the two involutions (the linear tilde and, in the complexified
algebra, the antilinear bar).
"""

import numpy as np

from .errors import ShapeError

DEFAULT_TOL = 1e-12


def multiplication_tensor(dim):
    """Structure tensor T with (x y)_c = sum_{a,b} x_a y_b T[a, b, c].

    Starts from the reals and doubles until the requested dimension, which
    must be a power of two.
    """
    if dim < 1 or dim & (dim - 1):
        raise ShapeError("dimension must be a positive power of two")
    T = np.ones((1, 1, 1))
    n = 1
    while n < dim:
        S = T
        T = np.zeros((2 * n, 2 * n, 2 * n))
        sgn = np.ones(n)
        sgn[1:] = -1.0
        T[:n, :n, :n] += S
        T[n:, n:, :n] -= np.einsum('q,pqk->qpk', sgn, S)
        T[:n, n:, n:] += sgn[:, None, None] * S
        T[n:, :n, n:] += np.transpose(S, (1, 0, 2))
        n *= 2
    return T


QUAT_TENSOR = multiplication_tensor(4)
OCT_TENSOR = multiplication_tensor(8)

_OCT_SIGNS = np.ones(8)
_OCT_SIGNS[1:] = -1.0


def _coords(x, dim, dtype):
    v = np.asarray(x, dtype=dtype)
    if v.shape != (dim,):
        raise ShapeError("expected %d coordinates, got shape %s" % (dim, v.shape))
    return v


def mul8(x, y):
    """Product of two octonion coordinate vectors (real or complex)."""
    return np.einsum('a,b,abc->c', x, y, OCT_TENSOR)


def tilde8(x):
    """Coordinate form of the tilde involution: negate the imaginary units."""
    return _OCT_SIGNS * np.asarray(x)


def norm8(x):
    """The bilinear norm form x x~ = sum of squared coordinates.

    Real and nonnegative on real coordinates, complex in general.
    """
    x = np.asarray(x)
    return np.sum(x * x)


def pairing8(x, y):
    """Polarization of the norm form, <x, y> = |x+y|^2 - |x|^2 - |y|^2."""
    x = np.asarray(x)
    y = np.asarray(y)
    return 2.0 * np.sum(x * y)


class Quaternion:
    """Quaternion with real coordinates on the basis (1, i, j, k)."""

    dim = 4

    def __init__(self, coords):
        self.coords = _coords(coords, 4, float)

    @classmethod
    def unit(cls):
        return cls([1.0, 0.0, 0.0, 0.0])

    def __add__(self, other):
        return Quaternion(self.coords + other.coords)

    def __sub__(self, other):
        return Quaternion(self.coords - other.coords)

    def __neg__(self):
        return Quaternion(-self.coords)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(np.einsum('a,b,abc->c', self.coords, other.coords, QUAT_TENSOR))
        return Quaternion(self.coords * float(other))

    def __rmul__(self, scalar):
        return Quaternion(self.coords * float(scalar))

    def tilde(self):
        s = self.coords.copy()
        s[1:] = -s[1:]
        return Quaternion(s)

    def norm_sq(self):
        return float(np.sum(self.coords ** 2))

    def to_json(self):
        return [float(c) for c in self.coords]

    @classmethod
    def from_json(cls, data):
        return cls(data)

    def __repr__(self):
        return "Quaternion(%s)" % (list(self.coords),)


class Octonion:
    """Octonion stored as 8 real coordinates, i.e. a pair of quaternions."""

    dim = 8

    def __init__(self, coords):
        self.coords = _coords(coords, 8, float)

    @classmethod
    def from_pair(cls, a, b):
        return cls(np.concatenate([a.coords, b.coords]))

    @classmethod
    def unit(cls):
        c = np.zeros(8)
        c[0] = 1.0
        return cls(c)

    @property
    def a(self):
        return Quaternion(self.coords[:4])

    @property
    def b(self):
        return Quaternion(self.coords[4:])

    def __add__(self, other):
        return Octonion(self.coords + other.coords)

    def __sub__(self, other):
        return Octonion(self.coords - other.coords)

    def __neg__(self):
        return Octonion(-self.coords)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return Octonion(mul8(self.coords, other.coords))
        return Octonion(self.coords * float(other))

    def __rmul__(self, scalar):
        return Octonion(self.coords * float(scalar))

    def tilde(self):
        return Octonion(tilde8(self.coords))

    def norm_sq(self):
        return float(norm8(self.coords))

    def to_json(self):
        return [float(c) for c in self.coords]

    @classmethod
    def from_json(cls, data):
        return cls(data)

    def __repr__(self):
        return "Octonion(%s)" % (list(self.coords),)


class ComplexOctonion:
    """Element of the complexified octonions, 8 complex coordinates.

    Carries two commuting involutions: tilde (complex linear, negates the
    seven imaginary units) and bar (complex antilinear, conjugates the
    coordinates, fixing the real form).
    """

    dim = 8

    def __init__(self, coords):
        self.coords = _coords(coords, 8, complex)

    @classmethod
    def from_parts(cls, re, im):
        re = np.asarray(re, dtype=float)
        im = np.asarray(im, dtype=float)
        return cls(re + 1j * im)

    @classmethod
    def unit(cls):
        c = np.zeros(8, dtype=complex)
        c[0] = 1.0
        return cls(c)

    @property
    def re(self):
        return Octonion(self.coords.real.copy())

    @property
    def im(self):
        return Octonion(self.coords.imag.copy())

    def __add__(self, other):
        return ComplexOctonion(self.coords + other.coords)

    def __sub__(self, other):
        return ComplexOctonion(self.coords - other.coords)

    def __neg__(self):
        return ComplexOctonion(-self.coords)

    def __mul__(self, other):
        if isinstance(other, ComplexOctonion):
            return ComplexOctonion(mul8(self.coords, other.coords))
        return ComplexOctonion(self.coords * complex(other))

    def __rmul__(self, scalar):
        return ComplexOctonion(self.coords * complex(scalar))

    def tilde(self):
        return ComplexOctonion(tilde8(self.coords))

    def bar(self):
        return ComplexOctonion(self.coords.conj())

    def norm_form(self):
        """The complex bilinear norm form x x~ (not a modulus)."""
        return complex(norm8(self.coords))

    def to_json(self):
        return [float(c) for c in self.coords.real] + [float(c) for c in self.coords.imag]

    @classmethod
    def from_json(cls, data):
        data = np.asarray(data, dtype=float)
        if data.shape != (16,):
            raise ShapeError("complex octonion JSON needs 16 reals")
        return cls.from_parts(data[:8], data[8:])

    def __repr__(self):
        return "ComplexOctonion(%s)" % (list(self.coords),)


def oct_mul(x, y):
    """Cayley-Dickson product of two octonions."""
    return x * y


def oct_pairing(x, y):
    """Symmetric bilinear pairing <x, y> on octonions; <x, x> = 2 |x|^2."""
    return float(pairing8(x.coords, y.coords))


def coct_mul(x, y):
    return x * y


def coct_pairing(x, y):
    """Complex bilinear extension of the octonion pairing."""
    return complex(pairing8(x.coords, y.coords))
