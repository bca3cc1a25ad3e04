"""Generalized adjacency matrices, idiosyncratic polynomials, Seidel spectra,
and k-subset polynomial decks.

The generalized adjacency matrix of a digraph with adjacency matrix A is

    A(y, z) = A + y*(J - A - I) + z*A^T

so the (i, j) entry for i != j reads: 1+z on a digon, 1 on a lone forward
arc, y+z on a lone backward arc, and y on a non-adjacent pair.  The
idiosyncratic polynomial is the characteristic polynomial of A(y, z): a
monic degree-n polynomial in X with coefficients in Z[y, z].

Two equality routes are provided.  `idio_equal(..., method="symbolic")`
compares fully expanded polynomials from the Bareiss kernel.
`method="grid"` compares exact integer evaluations over the principal
lattice of the simplex {x + y + z <= n}: a trivariate polynomial of total
degree at most n is uniquely determined by its values there, so the grid
route is a deterministic exact identity test, not a randomized one.  The
two routes are cross-validated in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .digraph import Digraph, complement, converse, induced
from .poly import MPoly, PolyMatrix, charpoly, det_int

__all__ = [
    "Deck",
    "generalized_adjacency",
    "idiosyncratic",
    "adjacency_charpoly",
    "seidel_matrix",
    "seidel_charpoly",
    "idio_deck",
    "idio_value",
    "idio_equal",
    "simplex_points",
    "deck3_pointwise_equal",
    "spectral_consequences_check",
    "three_vertex_code",
    "three_vertex_idio_table",
]

_Y = MPoly.monomial(1, dy=1)
_YZ = MPoly.monomial(1, dy=1) + MPoly.monomial(1, dz=1)
_1Z = MPoly.const(1) + MPoly.monomial(1, dz=1)
_1 = MPoly.const(1)
_0 = MPoly.zero()

# entry of A(y,z) by pair profile: bit0 = arc i->j, bit1 = arc j->i
_ENTRY = (_Y, _1, _YZ, _1Z)


def generalized_adjacency(g: Digraph) -> PolyMatrix:
    """The matrix A + y*(J - A - I) + z*A^T as a PolyMatrix."""
    n = g.n
    rows = g.rows
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(_0)
            else:
                profile = (rows[i] >> j & 1) | ((rows[j] >> i & 1) << 1)
                row.append(_ENTRY[profile])
        entries.append(row)
    return PolyMatrix(entries)


def idiosyncratic(g: Digraph) -> MPoly:
    """Characteristic polynomial of the generalized adjacency matrix."""
    return charpoly(generalized_adjacency(g))


def adjacency_charpoly(g: Digraph) -> MPoly:
    """Characteristic polynomial of the plain 0/1 adjacency matrix.

    Equals the idiosyncratic polynomial specialized at y = z = 0.
    """
    return charpoly(PolyMatrix.from_int_rows(g.matrix()))


def seidel_matrix(g: Digraph) -> list[list[int]]:
    """A - A^T, with entries in {-1, 0, 1}."""
    m = g.matrix()
    n = g.n
    return [[m[i][j] - m[j][i] for j in range(n)] for i in range(n)]


def seidel_charpoly(g: Digraph) -> MPoly:
    """Characteristic polynomial of the Seidel matrix A - A^T."""
    return charpoly(PolyMatrix.from_int_rows(seidel_matrix(g)))


# -- exact evaluation / grid identity testing --------------------------------


def idio_value(g: Digraph, xv: int, yv: int, zv: int) -> int:
    """Exact integer value of the idiosyncratic polynomial at a point.

    Computed as det(xv*I - A(yv, zv)) over the integers, independently of
    the symbolic kernel.
    """
    n = g.n
    rows = g.rows
    digon_v = 1 + zv
    back_v = yv + zv
    vals = (yv, 1, back_v, digon_v)
    m = []
    for i in range(n):
        ri = rows[i]
        row = []
        for j in range(n):
            if i == j:
                row.append(xv)
            else:
                profile = (ri >> j & 1) | ((rows[j] >> i & 1) << 1)
                row.append(-vals[profile])
        m.append(row)
    return det_int(m)


def simplex_points(n: int) -> list[tuple[int, int, int]]:
    """Principal lattice of the simplex {a + b + c <= n} in Z^3_{>=0}.

    A polynomial of total degree at most n vanishing on all these points is
    identically zero (the lattice is unisolvent for degree-n interpolation),
    which makes value comparison over the lattice an exact identity test.
    """
    return [
        (a, b, c)
        for a in range(n + 1)
        for b in range(n + 1 - a)
        for c in range(n + 1 - a - b)
    ]


def idio_equal(g: Digraph, h: Digraph, method: str = "grid") -> bool:
    """Exact equality of idiosyncratic polynomials.

    Both methods are exact; "grid" avoids symbolic expansion and is the
    fast path for bulk verification, "symbolic" compares canonical forms.
    """
    if g.n != h.n:
        raise ValueError("digraphs must have the same number of vertices")
    if method == "symbolic":
        return idiosyncratic(g) == idiosyncratic(h)
    if method == "grid":
        for xv, yv, zv in simplex_points(g.n):
            if idio_value(g, xv, yv, zv) != idio_value(h, xv, yv, zv):
                return False
        return True
    raise ValueError(f"unknown method {method!r}")


# -- three-vertex lookup table ------------------------------------------------

_PAIRS3 = ((0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1))


def three_vertex_code(g: Digraph, a: int, b: int, c: int) -> int:
    """6-bit code of the subdigraph induced by a < b < c (order-preserving)."""
    rows = g.rows
    code = 0
    trip = (a, b, c)
    for bit, (u, v) in enumerate(_PAIRS3):
        if rows[trip[u]] >> trip[v] & 1:
            code |= 1 << bit
    return code


def _digraph_of_code(code: int) -> Digraph:
    return Digraph.from_arcs(
        3, [p for bit, p in enumerate(_PAIRS3) if code >> bit & 1]
    )


@lru_cache(maxsize=None)
def three_vertex_idio_table() -> tuple[str, ...]:
    """Canonical idiosyncratic polynomial string for each of the 64 labeled
    3-vertex digraphs, indexed by 6-bit code."""
    return tuple(str(idiosyncratic(_digraph_of_code(code))) for code in range(64))


def deck3_pointwise_equal(g: Digraph, h: Digraph) -> bool:
    """True iff for every 3-subset W the induced subdigraphs of g and h have
    the same idiosyncratic polynomial (same W on both sides)."""
    if g.n != h.n:
        raise ValueError("digraphs must have the same number of vertices")
    table = three_vertex_idio_table()
    for a, b, c in itertools.combinations(range(g.n), 3):
        if table[three_vertex_code(g, a, b, c)] != table[three_vertex_code(h, a, b, c)]:
            return False
    return True


# -- decks --------------------------------------------------------------------


@dataclass(frozen=True)
class Deck:
    """Multiset of canonical polynomial strings of the k-vertex induced
    subdigraphs, stored sorted so equality is plain tuple equality."""

    k: int
    polys: tuple[str, ...]

    def to_json_obj(self) -> dict[str, object]:
        return {"k": self.k, "polys": list(self.polys)}


def idio_deck(g: Digraph, k: int) -> Deck:
    """The k-deck: idiosyncratic polynomials of all C(n, k) induced
    subdigraphs, as a sorted multiset of canonical strings."""
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be in 1..{g.n}, got {k}")
    if k == 3:
        table = three_vertex_idio_table()
        polys = [
            table[three_vertex_code(g, a, b, c)]
            for a, b, c in itertools.combinations(range(g.n), 3)
        ]
    else:
        polys = [
            str(idiosyncratic(induced(g, w)))
            for w in itertools.combinations(range(g.n), k)
        ]
    return Deck(k=k, polys=tuple(sorted(polys)))


def spectral_consequences_check(g: Digraph, h: Digraph) -> bool:
    """Equal idiosyncratic polynomials force cospectral digraphs, cospectral
    complements, and cospectral converses; vacuously true when the
    idiosyncratic polynomials differ."""
    if g.n != h.n:
        raise ValueError("digraphs must have the same number of vertices")
    if idiosyncratic(g) != idiosyncratic(h):
        return True
    return (
        adjacency_charpoly(g) == adjacency_charpoly(h)
        and adjacency_charpoly(complement(g)) == adjacency_charpoly(complement(h))
        and adjacency_charpoly(converse(g)) == adjacency_charpoly(converse(h))
    )
