"""Classification data for the six irreducible families.

Dimensions, ranks and symmetry-group names per type tag; the small-size
coincidences between families; tube types with their cones; the
quasi-symmetric catalog rows; and cominuscule-root combinatorics, where
the highest positive root of a Dynkin diagram is computed from its Cartan
matrix by root-string saturation instead of being read from a stored
coefficient table.
"""

from . import boundary as _boundary
from . import cones as _cones
from . import domains as _domains
from .errors import RelationViolation, ShapeError, UnknownType


# ---------------------------------------------------------------------------
# type tags, aliases, records

# Small-size coincidences.  Keys are the canonical representatives; every
# tag in the value tuple denotes the same manifold.
ALIASES = {
    'I:1:1': ('II:2', 'III:1', 'IV:1'),
    'I:3:1': ('II:3',),
    'III:2': ('IV:3',),
    'I:2:2': ('IV:4',),
    'II:4': ('IV:6',),
}

_ALIAS_TO_CANONICAL = {alias: canon for canon, group in ALIASES.items()
                       for alias in group}


def normalize(desc):
    """Canonical type tag for desc.

    Validates the tag and then folds the small-size coincidences onto
    their canonical representative, so II:2, III:1 and IV:1 all come back
    as I:1:1.  Alias folding happens before any dimension or rank lookup.
    """
    try:
        desc = _domains.parse_descriptor(desc)
    except ShapeError as exc:
        raise UnknownType(str(exc)) from None
    return _ALIAS_TO_CANONICAL.get(desc, desc)


def _split(tag):
    parts = tag.split(':')
    return parts[0], tuple(int(x) for x in parts[1:])


class AtlasRecord:
    """Classification facts for one irreducible type."""

    __slots__ = ('tag', 'family', 'dim', 'rank', 'group', 'compact_group',
                 'isotropy_group', 'tube', 'boundary_cones', 'aliases')

    def __init__(self, tag, family, dim, rank, group, compact_group,
                 isotropy_group, tube, boundary_cones, aliases):
        self.tag = tag
        self.family = family
        self.dim = dim
        self.rank = rank
        self.group = group
        self.compact_group = compact_group
        self.isotropy_group = isotropy_group
        self.tube = tube
        self.boundary_cones = boundary_cones
        self.aliases = aliases

    def to_dict(self):
        return {'tag': self.tag, 'family': self.family, 'dim': self.dim,
                'rank': self.rank, 'group': self.group,
                'compact_group': self.compact_group,
                'isotropy_group': self.isotropy_group, 'tube': self.tube,
                'boundary_cones': list(self.boundary_cones),
                'aliases': list(self.aliases)}

    def __repr__(self):
        return 'AtlasRecord(%s: dim %d, rank %d, %s)' % (
            self.tag, self.dim, self.rank, self.group)


def lookup(desc):
    """AtlasRecord for a type tag, normalized through the alias table."""
    tag = normalize(desc)
    family, par = _split(tag)
    if family == 'I':
        p, q = par
        dim, rank = 2 * p * q, q
        group = 'PSU(%d,%d)' % (p, q)
        compact = 'PSU(%d)' % (p + q)
        isotropy = 'S(U(%d) x U(%d))' % (p, q)
    elif family == 'II':
        n = par[0]
        dim, rank = n * (n - 1), n // 2
        group = 'PSO*(%d)' % (2 * n)
        compact = 'PSO(%d)' % (2 * n)
        isotropy = 'U(%d)' % n
    elif family == 'III':
        n = par[0]
        dim, rank = n * (n + 1), n
        group = 'PSp(%d,R)' % n
        compact = 'PSp(%d)' % n
        isotropy = 'U(%d)' % n
    elif family == 'IV':
        n = par[0]
        dim, rank = 2 * n, min(2, n)
        group = 'PSO(2,%d)' % n
        compact = 'PSO(%d)' % (2 + n)
        isotropy = 'SO(2) x SO(%d)' % n
    elif family == 'V':
        dim, rank = 32, 2
        group, compact, isotropy = 'E6(-14)', 'E6^c', 'SO(10) x SO(2)'
    else:
        dim, rank = 54, 3
        group, compact, isotropy = 'E7(-25)', 'E7^c', 'E6^c x SO(2)'
    cones = tuple(_boundary.boundary_cone(tag, k) for k in range(rank))
    return AtlasRecord(tag, family, dim, rank, group, compact, isotropy,
                       tube_type(tag), cones, ALIASES.get(tag, ()))


def tube_type(desc):
    """True when the domain is biholomorphic to a tube over its cone:
    I with p = q, even II, all III and IV, and the 27-dimensional
    exceptional type."""
    tag = normalize(desc)
    family, par = _split(tag)
    if family == 'I':
        return par[0] == par[1]
    if family == 'II':
        return par[0] % 2 == 0
    if family in ('III', 'IV'):
        return True
    return family == 'VI'


# ---------------------------------------------------------------------------
# tube table: irreducible cones against their tube-type domains


def cone_to_tube(desc):
    """Canonical tag of the tube-type domain over an irreducible cone."""
    desc = _cones.parse_descriptor(desc)
    if desc.startswith('prod('):
        raise ShapeError("product cones map to product domains; "
                         "convert each factor separately")
    if desc == 'albert':
        return 'VI'
    kind, m = desc.split(':')
    m = int(m)
    if kind == 'lorentz':
        if m == 0:
            return 'I:1:1'
        if m == 1:
            raise ShapeError("the tube over lorentz:1 splits into a "
                             "product of half planes; use I:1:1 factors")
        return normalize('IV:%d' % (m + 1))
    if kind == 'psd-r':
        return normalize('III:%d' % m)
    if kind == 'psd-c':
        return normalize('I:%d:%d' % (m, m))
    return normalize('II:%d' % (2 * m))


def tube_cone(desc):
    """Irreducible cone under the tube realization of a tube-type domain,
    keyed by the canonical tag's family; None when the domain is not of
    tube type."""
    tag = normalize(desc)
    if not tube_type(tag):
        return None
    family, par = _split(tag)
    if family == 'I':
        return 'psd-c:%d' % par[0]
    if family == 'II':
        return 'psd-h:%d' % (par[0] // 2)
    if family == 'III':
        return 'psd-r:%d' % par[0]
    if family == 'IV':
        return 'lorentz:%d' % (par[0] - 1)
    return 'albert'


class TubeRow:
    """One row of the cone-to-domain tube table."""

    __slots__ = ('cone_pattern', 'domain_pattern', 'example_cone',
                 'example_domain')

    def __init__(self, cone_pattern, domain_pattern, example_cone,
                 example_domain):
        self.cone_pattern = cone_pattern
        self.domain_pattern = domain_pattern
        self.example_cone = example_cone
        self.example_domain = example_domain

    def to_dict(self):
        return {'cone': self.cone_pattern, 'domain': self.domain_pattern,
                'example_cone': self.example_cone,
                'example_domain': self.example_domain}

    def __repr__(self):
        return 'TubeRow(%s -> %s)' % (self.cone_pattern, self.domain_pattern)


def tube_catalog():
    """The five cone families with their tube-type domains, plus one
    concrete instantiation per row for programmatic checks."""
    return [
        TubeRow('lorentz:n-1 (n >= 2)', 'IV:n (n >= 3); I:1:1 at n = 2',
                'lorentz:4', 'IV:5'),
        TubeRow('psd-r:n (n >= 3)', 'III:n', 'psd-r:3', 'III:3'),
        TubeRow('psd-c:n (n >= 3)', 'I:n:n', 'psd-c:3', 'I:3:3'),
        TubeRow('psd-h:n (n >= 3)', 'II:2n', 'psd-h:3', 'II:6'),
        TubeRow('albert', 'VI', 'albert', 'VI'),
    ]


# ---------------------------------------------------------------------------
# quasi-symmetric catalog


class QuasiSymmetricRow:
    """One catalog row: a cone family carrying a parametrized
    representation, with its symmetric specializations."""

    __slots__ = ('family', 'cone_pattern', 'representation', 'parameters',
                 'constructible', 'symmetric_cases')

    def __init__(self, family, cone_pattern, representation, parameters,
                 constructible, symmetric_cases):
        self.family = family
        self.cone_pattern = cone_pattern
        self.representation = representation
        self.parameters = parameters
        self.constructible = constructible
        self.symmetric_cases = symmetric_cases

    def to_dict(self):
        return {'family': self.family, 'cone': self.cone_pattern,
                'representation': self.representation,
                'parameters': list(self.parameters),
                'constructible': self.constructible,
                'symmetric_cases': list(self.symmetric_cases)}

    def __repr__(self):
        return 'QuasiSymmetricRow(%s over %s)' % (
            self.family, self.cone_pattern)


def quasi_symmetric_catalog():
    """All quasi-symmetric rows: cone, representation shape, whether the
    siegel module can build the row concretely, and the printed symmetric
    specializations."""
    return [
        QuasiSymmetricRow('IV', 'lorentz:n-1', 'sp1^r (+) sp2^s',
                          ('n even, n >= 4', 'r >= s >= 0'), False,
                          ('IV_{n;0,0} = IV:n', 'IV_{4;r,0} = I:r+2:2',
                           'IV_{6;1,0} = II:5', 'IV_{8;1,0} = V')),
        QuasiSymmetricRow('IV', 'lorentz:n-1', 'sp^r',
                          ('n odd, n >= 3, or n = 2', 'r >= 0'), False,
                          ('IV_{n;0} = IV:n for n >= 3',
                           'IV_{2;r} = I:r+1:1')),
        QuasiSymmetricRow('III', 'psd-r:n', 'id^r',
                          ('n >= 3', 'r >= 0'), True,
                          ('III_{n;0} = III:n',)),
        QuasiSymmetricRow('I', 'psd-c:n', 'id^r (+) conj^s',
                          ('n >= 3', 'r >= s >= 0'), True,
                          ('I_{n;r,0} = I:n+r:n',)),
        QuasiSymmetricRow('II', 'psd-h:n', 'id^r',
                          ('n >= 3', 'r >= 0'), True,
                          ('II_{n;r} = II:2n+r for r in {0, 1}',)),
        QuasiSymmetricRow('VI0', 'albert', '0', (), True,
                          ('VI_0 = VI',)),
    ]


def symmetric_case(family, n=None, r=0, s=0):
    """Canonical tag of the symmetric member for the given catalog
    parameters, or None when the row is quasi-symmetric only."""
    family = str(family).upper()
    r, s = int(r), int(s)
    if r < 0 or s < 0:
        raise ShapeError("representation multiplicities must be >= 0")
    if family in ('VI0', 'VI'):
        if n not in (None, 3) or r or s:
            raise ShapeError("the exceptional row takes no parameters")
        return 'VI'
    n = int(n)
    if family == 'IV':
        if n == 2:
            if s:
                raise ShapeError("the n = 2 row takes a single multiplicity")
            return normalize('I:%d:1' % (r + 1))
        if n % 2:
            if n < 3:
                raise ShapeError("odd spin rows need n >= 3")
            if s:
                raise ShapeError("odd spin rows take a single multiplicity")
            return normalize('IV:%d' % n) if r == 0 else None
        if n < 4:
            raise ShapeError("even spin rows need n >= 4")
        if s < 0 or r < s:
            raise ShapeError("even spin rows need r >= s >= 0")
        if (r, s) == (0, 0):
            return normalize('IV:%d' % n)
        if s == 0 and n == 4:
            return normalize('I:%d:2' % (r + 2))
        if (r, s) == (1, 0) and n == 6:
            return normalize('II:5')
        if (r, s) == (1, 0) and n == 8:
            return 'V'
        return None
    if n < 3:
        raise ShapeError("matrix rows need n >= 3")
    if family == 'III':
        if s:
            raise ShapeError("real rows take a single multiplicity")
        return normalize('III:%d' % n) if r == 0 else None
    if family == 'I':
        if r < s:
            raise ShapeError("complex rows need r >= s >= 0")
        return normalize('I:%d:%d' % (n + r, n)) if s == 0 else None
    if family == 'II':
        if s:
            raise ShapeError("quaternionic rows take a single multiplicity")
        return normalize('II:%d' % (2 * n + r)) if r in (0, 1) else None
    raise UnknownType("unknown catalog family %r" % (family,))


# ---------------------------------------------------------------------------
# Dynkin diagrams and cominuscule roots


class DynkinDiagram:
    """Series tag plus node count.

    The Cartan matrix a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
    is assembled from the edge data of the series, never stored whole.
    """

    __slots__ = ('series', 'n')

    _EXCEPTIONAL = {'E6': 6, 'E7': 7, 'E8': 8, 'F4': 4, 'G2': 2}
    _MINIMUM = {'A': 1, 'B': 2, 'C': 2, 'D': 3}

    def __init__(self, series, n=None):
        series = str(series).upper()
        if series in self._EXCEPTIONAL:
            fixed = self._EXCEPTIONAL[series]
            if n is not None and int(n) != fixed:
                raise ShapeError("series %s has exactly %d nodes"
                                 % (series, fixed))
            n = fixed
        elif series in self._MINIMUM:
            if n is None:
                raise ShapeError("series %s needs a node count" % series)
            n = int(n)
            if n < self._MINIMUM[series]:
                raise ShapeError("series %s needs at least %d nodes"
                                 % (series, self._MINIMUM[series]))
        else:
            raise UnknownType("unknown series %r" % (series,))
        self.series = series
        self.n = n

    def cartan_matrix(self):
        """Integer Cartan matrix as a list of rows."""
        n = self.n
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

        def edge(i, j, ij=-1, ji=-1):
            a[i][j] = ij
            a[j][i] = ji

        s = self.series
        if s in ('A', 'B', 'C'):
            for i in range(n - 1):
                edge(i, i + 1)
            if s == 'B':
                # last node short: its coroot pairs to -2 with the chain
                a[n - 1][n - 2] = -2
            if s == 'C':
                a[n - 2][n - 1] = -2
        elif s == 'D':
            for i in range(n - 3):
                edge(i, i + 1)
            edge(n - 3, n - 2)
            edge(n - 3, n - 1)
        elif s in ('E6', 'E7', 'E8'):
            chain = [0, 2, 3, 4, 5, 6, 7][:n - 1]
            for i, j in zip(chain, chain[1:]):
                edge(i, j)
            edge(1, 3)
        elif s == 'F4':
            edge(0, 1)
            edge(1, 2, ij=-1, ji=-2)
            edge(2, 3)
        else:
            edge(0, 1, ij=-3, ji=-1)
        return a

    def __repr__(self):
        return 'DynkinDiagram(%s, %d)' % (self.series, self.n)


def _as_diagram(diagram, n=None):
    if isinstance(diagram, DynkinDiagram):
        return diagram
    return DynkinDiagram(diagram, n)


def positive_roots(diagram, n=None):
    """All positive roots as coefficient tuples over the simple roots,
    grown height by height: beta + alpha_i joins whenever the alpha_i
    string through beta has room above, q = p - <beta, alpha_i^vee> >= 1,
    with p counted down the string through roots already found."""
    diagram = _as_diagram(diagram, n)
    cartan = diagram.cartan_matrix()
    m = diagram.n
    level = [tuple(int(i == j) for j in range(m)) for i in range(m)]
    roots = set(level)
    while level:
        grown = set()
        for beta in level:
            for i in range(m):
                pairing = sum(c * cartan[i][j] for j, c in enumerate(beta))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in roots:
                        break
                    p += 1
                if p - pairing >= 1:
                    up = list(beta)
                    up[i] += 1
                    grown.add(tuple(up))
        grown -= roots
        roots |= grown
        level = sorted(grown)
    return roots


def highest_root(diagram, n=None):
    """Coefficient tuple of the highest positive root."""
    roots = positive_roots(diagram, n)
    top_height = max(sum(r) for r in roots)
    top = [r for r in roots if sum(r) == top_height]
    if len(top) != 1:
        raise RelationViolation("no unique highest root; the diagram "
                                "is not irreducible")
    return top[0]


def cominuscule_roots(diagram, n=None):
    """Nodes (1-indexed) whose coefficient in the highest root is 1."""
    top = highest_root(diagram, n)
    return frozenset(i + 1 for i, c in enumerate(top) if c == 1)


def cominuscule_marking(desc):
    """Marked diagram of a type tag: the series, node count, and the
    node set whose parabolic realizes the compact dual.  Tags are
    normalized first, so small aliases land on their canonical series."""
    tag = normalize(desc)
    family, par = _split(tag)
    if family == 'I':
        p, q = par
        return {'series': 'A', 'n': p + q - 1, 'nodes': frozenset((q, p))}
    if family == 'II':
        n = par[0]
        return {'series': 'D', 'n': n, 'nodes': frozenset((n - 1, n))}
    if family == 'III':
        n = par[0]
        return {'series': 'C', 'n': n, 'nodes': frozenset((n,))}
    if family == 'IV':
        n = par[0]
        if n % 2 == 0:
            return {'series': 'D', 'n': n // 2 + 1, 'nodes': frozenset((1,))}
        return {'series': 'B', 'n': (n + 1) // 2, 'nodes': frozenset((1,))}
    if family == 'V':
        return {'series': 'E6', 'n': 6, 'nodes': frozenset((1, 6))}
    return {'series': 'E7', 'n': 7, 'nodes': frozenset((7,))}
