"""Loop-free digraphs on labeled vertices 0..n-1 with bitset adjacency.

Row i of the adjacency relation is stored as a Python int whose bit j says
whether the arc (i, j) is present.  Everything is immutable; all operations
return fresh Digraph values.  The vertex count is capped at 128, enough for
the 65-vertex tournaments handled elsewhere with headroom.

Besides the structural vocabulary (complement, converse, induced subdigraph,
modules and their inversion, flags, digraph classes, canonical orientations
of bipartite graphs) this module owns the plain-text interchange formats:

    arc list          matrix
    -----------       -----------
    3                 3
    # a comment       011
    0 1               001
    1 2               000

The arc-list form is one `u v` pair per line; the matrix form is n rows of
0/1 characters.  The two are auto-detected on read.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 128

__all__ = [
    "Digraph",
    "DigraphClass",
    "NotSymmetricError",
    "NotConnectedError",
    "NotBipartiteError",
    "complement",
    "converse",
    "induced",
    "is_module",
    "invert_module",
    "modules",
    "find_flags",
    "is_flag_free",
    "classify",
    "canonical_orientations",
    "nu",
    "parse_digraph",
    "format_digraph",
]


class NotSymmetricError(ValueError):
    """Input digraph is not symmetric (not a graph)."""


class NotConnectedError(ValueError):
    """Underlying undirected graph is not connected."""


class NotBipartiteError(ValueError):
    """Underlying undirected graph contains an odd cycle."""


def _mask_of(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range 0..{n - 1}")
        mask |= 1 << v
    return mask


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Digraph:
    """Immutable loop-free digraph; rows[i] is the out-neighbor bitset of i."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 1:
            raise ValueError("need at least one vertex")
        if n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} exceeds cap {MAX_VERTICES}")
        if len(rows) != n:
            raise ValueError("row count must equal n")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {i} addresses vertices outside 0..{n - 1}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
        self.n = n
        self.rows = tuple(rows)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def empty(n: int) -> "Digraph":
        return Digraph(n, [0] * n)

    @staticmethod
    def complete_symmetric(n: int) -> "Digraph":
        full = (1 << n) - 1
        return Digraph(n, [full ^ (1 << i) for i in range(n)])

    @staticmethod
    def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
        return Digraph(n, rows)

    @staticmethod
    def from_matrix(matrix: Sequence[Sequence[int]]) -> "Digraph":
        n = len(matrix)
        rows = []
        for i, row in enumerate(matrix):
            if len(row) != n:
                raise ValueError("adjacency matrix must be square")
            rows.append(sum(1 << j for j, v in enumerate(row) if v))
        return Digraph(n, rows)

    # -- queries -----------------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.rows[u]):
                yield (u, v)

    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def out_degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def in_degree(self, v: int) -> int:
        return sum(self.rows[u] >> v & 1 for u in range(self.n))

    def matrix(self) -> list[list[int]]:
        return [[self.rows[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def transpose_rows(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            for j in _bits(row):
                cols[j] |= 1 << i
        return tuple(cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Digraph({self.n}, arcs={sorted(self.arcs())})"


# -- structural operations --------------------------------------------------


def complement(g: Digraph) -> Digraph:
    """Arc (u, v) present iff absent in g, for u != v."""
    full = (1 << g.n) - 1
    return Digraph(g.n, [(full ^ row) & ~(1 << i) for i, row in enumerate(g.rows)])


def converse(g: Digraph) -> Digraph:
    """Every arc reversed (adjacency relation transposed)."""
    return Digraph(g.n, g.transpose_rows())


def induced(g: Digraph, vertices: Iterable[int]) -> Digraph:
    """Subdigraph induced by the given vertex set.

    Vertices are relabeled 0..k-1 in increasing original order.  The set
    must be nonempty and within range.
    """
    w = sorted(set(vertices))
    if not w:
        raise ValueError("induced subdigraph needs a nonempty vertex set")
    if w[0] < 0 or w[-1] >= g.n:
        raise ValueError(f"vertex set {w} not within 0..{g.n - 1}")
    rows = []
    for a in w:
        row = 0
        src = g.rows[a]
        for new_idx, b in enumerate(w):
            if src >> b & 1:
                row |= 1 << new_idx
        rows.append(row)
    return Digraph(len(w), rows)


def is_module(g: Digraph, vertices: Iterable[int]) -> bool:
    """True iff every external vertex relates uniformly (in and out) to the set."""
    w = _mask_of(vertices, g.n)
    ext = ((1 << g.n) - 1) ^ w
    members = list(_bits(w))
    if len(members) <= 1 or ext == 0:
        return True
    cols = g.transpose_rows()
    out0 = g.rows[members[0]] & ext
    in0 = cols[members[0]] & ext
    for a in members[1:]:
        if g.rows[a] & ext != out0 or cols[a] & ext != in0:
            return False
    return True


def invert_module(g: Digraph, vertices: Iterable[int]) -> Digraph:
    """Reverse all arcs inside the set, leaving everything else unchanged.

    Module-ness of the set is not required here; callers that need the
    spectral invariance must enforce it themselves.
    """
    w = _mask_of(vertices, g.n)
    inner = [g.rows[i] & w if w >> i & 1 else 0 for i in range(g.n)]
    rows = list(g.rows)
    for i in _bits(w):
        rows[i] &= ~w
    for i in _bits(w):
        for j in _bits(inner[i]):
            rows[j] |= 1 << i
    return Digraph(g.n, rows)


def modules(g: Digraph, min_size: int = 2) -> Iterator[int]:
    """Yield all module bitmasks with at least min_size vertices.

    Exhaustive over the 2^n subsets; intended for n <= 8 (inversion-sequence
    search scale).  The full vertex set is always yielded last.
    """
    n = g.n
    for mask in range(1, 1 << n):
        if mask.bit_count() < min_size:
            continue
        if is_module(g, _bits(mask)):
            yield mask


def _pair_profile(g: Digraph, u: int, v: int) -> int:
    """0 = no arcs, 1 = u->v only, 2 = v->u only, 3 = digon."""
    return (g.rows[u] >> v & 1) | ((g.rows[v] >> u & 1) << 1)


def find_flags(g: Digraph) -> list[tuple[int, int, int]]:
    """All 3-subsets inducing a flag (one digon plus one simple arc).

    A triple {a, b, c} is a flag exactly when its induced subdigraph has
    three arcs of which two form a digon: the remaining arc is then simple
    and the third pair is non-adjacent, which is the flag shape up to
    isomorphism.  Empty result means the digraph is flag-free.
    """
    out = []
    for a, b, c in itertools.combinations(range(g.n), 3):
        profiles = (
            _pair_profile(g, a, b),
            _pair_profile(g, a, c),
            _pair_profile(g, b, c),
        )
        digons = sum(1 for p in profiles if p == 3)
        arcs = sum(bin(p).count("1") for p in profiles)
        if digons == 1 and arcs == 3:
            out.append((a, b, c))
    return out


def is_flag_free(g: Digraph) -> bool:
    """Early-exit flag scan (same predicate as find_flags)."""
    for a, b, c in itertools.combinations(range(g.n), 3):
        profiles = (
            _pair_profile(g, a, b),
            _pair_profile(g, a, c),
            _pair_profile(g, b, c),
        )
        if sum(1 for p in profiles if p == 3) == 1 and sum(
            bin(p).count("1") for p in profiles
        ) == 3:
            return False
    return True


@dataclass(frozen=True)
class DigraphClass:
    is_tournament: bool
    is_oriented: bool
    is_symmetric: bool
    is_poset: bool


def classify(g: Digraph) -> DigraphClass:
    """Membership flags for the basic digraph classes.

    A poset here is a transitively closed oriented graph: whenever (x, y)
    and (y, z) are arcs, so is (x, z).
    """
    cols = g.transpose_rows()
    symmetric = g.rows == cols
    oriented = all(r & c == 0 for r, c in zip(g.rows, cols))
    tournament = oriented and all(
        (r | c) == ((1 << g.n) - 1) ^ (1 << i)
        for i, (r, c) in enumerate(zip(g.rows, cols))
    )
    transitive = True
    for x in range(g.n):
        for yv in _bits(g.rows[x]):
            if g.rows[yv] & ~g.rows[x]:
                transitive = False
                break
        if not transitive:
            break
    return DigraphClass(
        is_tournament=tournament,
        is_oriented=oriented,
        is_symmetric=symmetric,
        is_poset=oriented and transitive,
    )


def canonical_orientations(g: Digraph) -> tuple[Digraph, Digraph]:
    """The two transitive orientations of a connected bipartite graph.

    The input must be symmetric, connected, and bipartite; violations raise
    NotSymmetricError, NotConnectedError, NotBipartiteError respectively.
    Side W1 is the bipartition class containing vertex 0; the first result
    orients every edge from W1 to W2, the second is its converse.  Both are
    posets (no directed path of length two exists across a bipartition).
    """
    cols = g.transpose_rows()
    if g.rows != cols:
        raise NotSymmetricError("canonical orientations need a symmetric digraph")
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    seen = 1
    while queue:
        u = queue.pop()
        for v in _bits(g.rows[u]):
            if color[v] == -1:
                color[v] = 1 - color[u]
                queue.append(v)
                seen += 1
            elif color[v] == color[u]:
                raise NotBipartiteError("graph contains an odd cycle")
    if seen != g.n:
        raise NotConnectedError("graph is not connected")
    w1 = sum(1 << v for v in range(g.n) if color[v] == 0)
    sigma_rows = [g.rows[i] & ~w1 if w1 >> i & 1 else 0 for i in range(g.n)]
    sigma = Digraph(g.n, sigma_rows)
    return sigma, converse(sigma)


def nu(g: Digraph, vertices: Iterable[int]) -> int:
    """Number of arcs inside the induced subdigraph on the given set."""
    w = _mask_of(vertices, g.n)
    return sum((g.rows[i] & w).bit_count() for i in _bits(w))


# -- text interchange --------------------------------------------------------


def parse_digraph(text: str) -> Digraph:
    """Parse either interchange format; lines starting with `#` are ignored."""
    lines = [
        ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty digraph file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from exc
    body = lines[1:]
    if body and " " not in body[0] and set(body[0]) <= {"0", "1"} and len(body[0]) == n:
        if len(body) != n:
            raise ValueError(f"matrix form needs {n} rows, got {len(body)}")
        return Digraph.from_matrix([[int(ch) for ch in row] for row in body])
    arcs = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected arc line 'u v', got {ln!r}")
        arcs.append((int(parts[0]), int(parts[1])))
    return Digraph.from_arcs(n, arcs)


def format_digraph(g: Digraph, style: str = "arcs") -> str:
    """Serialize in the requested interchange format ('arcs' or 'matrix')."""
    if style == "arcs":
        lines = [str(g.n)] + [f"{u} {v}" for u, v in sorted(g.arcs())]
    elif style == "matrix":
        lines = [str(g.n)] + [
            "".join(str(g.rows[i] >> j & 1) for j in range(g.n)) for i in range(g.n)
        ]
    else:
        raise ValueError(f"unknown style {style!r}")
    return "\n".join(lines) + "\n"
