"""Determinants by linear-subdigraph enumeration, the one-arc-reversal
counterexample family, the bordered-matrix reduction, and the
block-transpose characteristic polynomial identity.

A linear subdigraph of a digraph H (loops allowed) is a spanning
vertex-disjoint union of directed cycles, i.e. a permutation sigma with
every (i, sigma(i)) an arc; loops are cycles of length one.  With |L| the
number of cycles,

    det(N) = (-1)^n * sum over spanning linear subdigraphs L of (-1)^|L|

for the 0/1 adjacency matrix N of H.

The counterexample family lives on vertices 0..n (so n+1 of them): a
pendant arc 0 -> 1, a path of digons 1 <-> 2 <-> ... <-> n-1, and a pendant
arc between n-1 and n that points to n in the first digraph of the pair and
to n-1 in the second.  The two digraphs disagree globally, yet agree on
every proper induced subdigraph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .digraph import Digraph, complement, converse, find_flags, induced
from .poly import MPoly, PolyMatrix, charpoly, det_int
from .spectral import idio_equal, idio_value, simplex_points

MAX_ENUM_VERTICES = 10

__all__ = [
    "LoopDigraph",
    "LinearSubdigraph",
    "linear_subdigraphs",
    "coates_determinant",
    "partition_by_arcs",
    "counterexample_pair",
    "bordered_matrix",
    "CounterexampleReport",
    "verify_counterexample",
    "hlowey_check",
]


class LoopDigraph:
    """Digraph that may carry loops; rows[i] bit j says arc (i, j) exists."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 1:
            raise ValueError("need at least one vertex")
        if len(rows) != n:
            raise ValueError("row count must equal n")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {i} addresses vertices outside 0..{n - 1}")
        self.n = n
        self.rows = tuple(rows)

    @staticmethod
    def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> "LoopDigraph":
        rows = [0] * n
        for u, v in arcs:
            rows[u] |= 1 << v
        return LoopDigraph(n, rows)

    @staticmethod
    def from_digraph(g: Digraph) -> "LoopDigraph":
        return LoopDigraph(g.n, g.rows)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def matrix(self) -> list[list[int]]:
        return [[self.rows[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def converse(self) -> "LoopDigraph":
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            rem = row
            while rem:
                b = rem & -rem
                cols[b.bit_length() - 1] |= 1 << i
                rem ^= b
        return LoopDigraph(self.n, cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoopDigraph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))


@dataclass(frozen=True)
class LinearSubdigraph:
    """A spanning disjoint cycle union, as the permutation i -> successor[i],
    annotated with its cycle count (loops are 1-cycles)."""

    successor: tuple[int, ...]
    cycle_count: int

    @staticmethod
    def from_permutation(successor: Sequence[int]) -> "LinearSubdigraph":
        n = len(successor)
        seen = [False] * n
        cycles = 0
        for start in range(n):
            if seen[start]:
                continue
            cycles += 1
            v = start
            while not seen[v]:
                seen[v] = True
                v = successor[v]
        return LinearSubdigraph(successor=tuple(successor), cycle_count=cycles)

    def converse(self) -> "LinearSubdigraph":
        inv = [0] * len(self.successor)
        for i, j in enumerate(self.successor):
            inv[j] = i
        return LinearSubdigraph.from_permutation(inv)

    def arcs(self) -> frozenset[tuple[int, int]]:
        return frozenset(enumerate(self.successor))


def linear_subdigraphs(h: LoopDigraph) -> list[LinearSubdigraph]:
    """All spanning linear subdigraphs, by permutation backtracking over the
    arc-supported columns."""
    n = h.n
    if n > MAX_ENUM_VERTICES:
        raise ValueError(f"enumeration is capped at {MAX_ENUM_VERTICES} vertices")
    rows = h.rows
    out: list[LinearSubdigraph] = []
    successor = [0] * n

    def assign(i: int, used: int) -> None:
        if i == n:
            out.append(LinearSubdigraph.from_permutation(successor))
            return
        avail = rows[i] & ~used
        while avail:
            b = avail & -avail
            avail ^= b
            successor[i] = b.bit_length() - 1
            assign(i + 1, used | b)

    assign(0, 0)
    return out


def coates_determinant(h: LoopDigraph) -> int:
    """(-1)^n times the signed count of spanning linear subdigraphs; equals
    the determinant of the 0/1 adjacency matrix."""
    total = sum((-1) ** sub.cycle_count for sub in linear_subdigraphs(h))
    return (-1) ** h.n * total


def partition_by_arcs(
    h: LoopDigraph, arc1: tuple[int, int], arc2: tuple[int, int]
) -> dict[str, list[LinearSubdigraph]]:
    """Partition the spanning linear subdigraphs into the four classes keyed
    by membership of two reference arcs: L1 contains both, L2 only arc1,
    L3 only arc2, L4 neither."""
    parts: dict[str, list[LinearSubdigraph]] = {"L1": [], "L2": [], "L3": [], "L4": []}
    for sub in linear_subdigraphs(h):
        has1 = sub.successor[arc1[0]] == arc1[1]
        has2 = sub.successor[arc2[0]] == arc2[1]
        key = "L1" if has1 and has2 else "L2" if has1 else "L3" if has2 else "L4"
        parts[key].append(sub)
    return parts


# -- the counterexample family --------------------------------------------------


def counterexample_pair(n: int) -> tuple[Digraph, Digraph]:
    """The pair (G, G') on vertices 0..n: G carries the arc (n-1, n), G' the
    reversed arc (n, n-1); everything else (pendant 0 -> 1 and the digon
    path on 1..n-1) is shared."""
    if n < 5:
        raise ValueError(f"family parameter must be at least 5, got {n}")
    shared: list[tuple[int, int]] = [(0, 1)]
    for i in range(1, n - 1):
        shared.append((i, i + 1))
        shared.append((i + 1, i))
    g = Digraph.from_arcs(n + 1, shared + [(n - 1, n)])
    gp = Digraph.from_arcs(n + 1, shared + [(n, n - 1)])
    return g, gp


def bordered_matrix(g: Digraph) -> LoopDigraph:
    """The loop-digraph whose matrix is [[A + I, 1], [1^T, 1]] for the
    zero-diagonal adjacency matrix A of g; its determinant equals
    (-1)^n det(J - A - I)."""
    n = g.n
    rows = [ (g.rows[i] | (1 << i)) | (1 << n) for i in range(n) ]
    rows.append((1 << (n + 1)) - 1)
    return LoopDigraph(n + 1, rows)


@dataclass(frozen=True)
class CounterexampleReport:
    """Machine-checked facts about the pair (G, G') at a given n."""

    n: int
    det_diff: int
    deck_all_equal: bool
    unequal_subsets: tuple[tuple[int, ...], ...]
    global_idio_equal: bool
    flags_found: tuple[tuple[int, int, int], ...]

    def to_json_obj(self) -> dict[str, object]:
        return {
            "n": self.n,
            "det_diff": str(self.det_diff),
            "deck_all_equal": self.deck_all_equal,
            "global_idio_equal": self.global_idio_equal,
            "flags_found": [list(t) for t in self.flags_found],
        }

    @property
    def contract_holds(self) -> bool:
        """The substantive contract: complement determinants differ by
        exactly one, all proper induced subdigraphs agree, the global
        polynomials do not, and flags are present."""
        return (
            abs(self.det_diff) == 1
            and self.deck_all_equal
            and not self.global_idio_equal
            and bool(self.flags_found)
        )


def _proper_subset_idio_equal(
    g: Digraph, gp: Digraph
) -> tuple[bool, list[tuple[int, ...]]]:
    """Pointwise idiosyncratic comparison over every proper nonempty subset.

    Three tiers keep this exact yet fast: identical induced subdigraphs are
    equal outright; an induced subdigraph of G' that equals the converse of
    its G counterpart is equal by transpose invariance of the
    characteristic polynomial; everything else is compared exactly on the
    simplex evaluation lattice, memoized per labeled pair.
    """
    m = g.n
    gc = converse(g)
    bad: list[tuple[int, ...]] = []
    memo: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
    for k in range(1, m):
        for w in itertools.combinations(range(m), k):
            a = induced(g, w)
            b = induced(gp, w)
            if a == b:
                continue
            if induced(gc, w) == b:
                continue
            key = (a.rows, b.rows)
            if key not in memo:
                memo[key] = idio_equal(a, b, method="grid")
            if not memo[key]:
                bad.append(w)
    return not bad, bad


def verify_counterexample(n: int) -> CounterexampleReport:
    """Evaluate every machine-checkable part of the counterexample claim at
    the given n (5 <= n <= 10): the complement determinant difference, the
    proper-subset polynomial agreement, the global disagreement, and the
    flags that put the pair outside the flag-free theorem's reach."""
    if not 5 <= n <= 10:
        raise ValueError(f"family parameter must be in 5..10, got {n}")
    g, gp = counterexample_pair(n)
    det_diff = det_int(complement(g).matrix()) - det_int(complement(gp).matrix())
    deck_equal, bad = _proper_subset_idio_equal(g, gp)
    return CounterexampleReport(
        n=n,
        det_diff=det_diff,
        deck_all_equal=deck_equal,
        unequal_subsets=tuple(bad),
        global_idio_equal=idio_equal(g, gp, method="grid"),
        flags_found=tuple(find_flags(g)),
    )


# -- the block-transpose identity -----------------------------------------------


def _outer(u: Sequence[MPoly], v: Sequence[MPoly]) -> list[list[MPoly]]:
    return [[ui * vj for vj in v] for ui in u]


def hlowey_check(
    a11: PolyMatrix,
    a22: PolyMatrix,
    alpha: Sequence[MPoly | int],
    beta: Sequence[MPoly | int],
    gamma: Sequence[MPoly | int],
) -> bool:
    """Transposing the lower-right block of

        [[A11, alpha*beta^T], [beta*gamma^T, A22]]

    leaves the characteristic polynomial unchanged; returns True exactly
    when the two characteristic polynomials agree."""
    k = a11.n
    nk = a22.n
    alpha_p = [MPoly._coerce(v) for v in alpha]
    beta_p = [MPoly._coerce(v) for v in beta]
    gamma_p = [MPoly._coerce(v) for v in gamma]
    if len(alpha_p) != k or len(gamma_p) != k or len(beta_p) != nk:
        raise ValueError("vector dimensions do not match the blocks")
    top_right = _outer(alpha_p, beta_p)
    bottom_left = _outer(beta_p, gamma_p)

    def assemble(lower_right: PolyMatrix) -> PolyMatrix:
        n = k + nk
        entries = [[MPoly.zero() for _ in range(n)] for _ in range(n)]
        for i in range(k):
            for j in range(k):
                entries[i][j] = a11.entries[i][j]
            for j in range(nk):
                entries[i][k + j] = top_right[i][j]
        for i in range(nk):
            for j in range(k):
                entries[k + i][j] = bottom_left[i][j]
            for j in range(nk):
                entries[k + i][k + j] = lower_right.entries[i][j]
        return PolyMatrix(entries)

    return charpoly(assemble(a22)) == charpoly(assemble(a22.transpose()))
