"""Computational toolkit for Hermitian symmetric spaces of non-compact type.

Submodules: composition (quaternions, octonions), jordan (Euclidean Jordan
algebras), albert (3x3 octonion Hermitian matrices), jts (Hermitian
positive triple systems), cones (symmetric cones), domains (the bounded
realizations I-VI), siegel (tube and Siegel realizations), boundary
(boundary components and their degenerations), hsla (the Lie algebra side),
atlas (classification tables), cli (command line entry point).
"""

__version__ = "0.1.0"
