"""Stockmeyer's non-reconstructible tournament family and the machinery
around it: exact determinants, Hamiltonian path/cycle counting by bitmask
dynamic programming, the parity argument, and the mirror bijection.

The tournament A_n lives on labels 1..2^n (internal indices 0..2^n-1): for
i < j the arc runs i -> j exactly when the odd part of j - i is congruent
to 1 mod 4, and j -> i otherwise.  B_n and C_n extend A_n with a new vertex
labeled 0 (internal index 0; label k at index k): in B_n vertex 0 dominates
the even labels and is dominated by the odd ones, in C_n the roles swap.
Deleting label k from B_n and label 2^n + 1 - k from C_n leaves isomorphic
tournaments, so the pair is hypomorphic yet non-isomorphic.

Path counts use the (visited-set, last-vertex) subset DP with exact big
integers; the hard cap is 24 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .digraph import Digraph, induced
from .poly import det_int

MAX_CENSUS_VERTICES = 24

__all__ = [
    "odd_part",
    "stockmeyer_A",
    "stockmeyer_B",
    "stockmeyer_C",
    "hypomorphy_check",
    "adjacency_determinant",
    "HamiltonianCensus",
    "hamiltonian_census",
    "count_hamiltonian_paths",
    "count_hamiltonian_cycles",
    "enumerate_hamiltonian_paths",
    "pouzet_identity_check",
    "remark1_check",
    "mirror_path",
    "mirror_bijection_check",
    "parity_check",
    "stockmeyer_table",
]


def odd_part(x: int) -> int:
    """Largest odd divisor of a positive integer."""
    if x < 1:
        raise ValueError("odd_part needs a positive integer")
    return x >> ((x & -x).bit_length() - 1)


def _check_n(n: int) -> None:
    if not 1 <= n <= 6:
        raise ValueError(f"family parameter must be in 1..6, got {n}")


def stockmeyer_A(n: int) -> Digraph:
    """The tournament A_n on labels 1..2^n (index = label - 1)."""
    _check_n(n)
    size = 2**n
    rows = [0] * size
    for i in range(size):
        for j in range(i + 1, size):
            if odd_part(j - i) % 4 == 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return Digraph(size, rows)


def _stockmeyer_bc(n: int, zero_dominates_even: bool) -> Digraph:
    _check_n(n)
    size = 2**n
    a = stockmeyer_A(n)
    rows = [0] * (size + 1)
    for i in range(size):
        rows[i + 1] = a.rows[i] << 1
    for label in range(1, size + 1):
        if (label % 2 == 0) == zero_dominates_even:
            rows[0] |= 1 << label
        else:
            rows[label] |= 1
    return Digraph(size + 1, rows)


def stockmeyer_B(n: int) -> Digraph:
    """B_n: vertex 0 dominates labels 2, 4, ..., 2^n and is dominated by the
    odd labels."""
    return _stockmeyer_bc(n, zero_dominates_even=True)


def stockmeyer_C(n: int) -> Digraph:
    """C_n: vertex 0 dominates the odd labels and is dominated by the even
    ones."""
    return _stockmeyer_bc(n, zero_dominates_even=False)


def hypomorphy_check(n: int) -> bool:
    """True iff B_n - k and C_n - (2^n + 1 - k) are isomorphic for every
    label k in 1..2^n, and removing label 0 from either gives exactly A_n.

    Isomorphism search keeps this to n <= 3 (9 vertices).
    """
    if not 1 <= n <= 3:
        raise ValueError(f"hypomorphy check supports n in 1..3, got {n}")
    from .hemimorphy import are_isomorphic

    size = 2**n
    b, c, a = stockmeyer_B(n), stockmeyer_C(n), stockmeyer_A(n)
    others = lambda g, k: induced(g, [v for v in range(size + 1) if v != k])
    if others(b, 0) != a or others(c, 0) != a:
        return False
    return all(
        are_isomorphic(others(b, k), others(c, size + 1 - k))
        for k in range(1, size + 1)
    )


def adjacency_determinant(g: Digraph) -> int:
    """Exact determinant of the 0/1 adjacency matrix."""
    return det_int(g.matrix())


# -- Hamiltonian counting ------------------------------------------------------


def _path_end_counts(g: Digraph, start_mask: int) -> list[int]:
    """DP over (visited-set, last): counts of directed paths that start in
    start_mask, visit every vertex once, indexed by final vertex."""
    n = g.n
    rows = g.rows
    dp = [0] * ((1 << n) * n)
    for v in range(n):
        if start_mask >> v & 1:
            dp[(1 << v) * n + v] = 1
    for mask in range(1, 1 << n):
        base = mask * n
        rem = mask
        while rem:
            b = rem & -rem
            last = b.bit_length() - 1
            rem ^= b
            c = dp[base + last]
            if not c:
                continue
            nxt = rows[last] & ~mask
            while nxt:
                nb = nxt & -nxt
                j = nb.bit_length() - 1
                nxt ^= nb
                dp[(mask | nb) * n + j] += c
    full = ((1 << n) - 1) * n
    return dp[full : full + n]


def count_hamiltonian_paths(g: Digraph, start_mask: int | None = None) -> list[int]:
    """Exact Hamiltonian path counts by final vertex (optionally restricted
    to paths starting inside start_mask)."""
    if g.n > MAX_CENSUS_VERTICES:
        raise ValueError(
            f"census is capped at {MAX_CENSUS_VERTICES} vertices, got {g.n}"
        )
    if start_mask is None:
        start_mask = (1 << g.n) - 1
    return _path_end_counts(g, start_mask)


def count_hamiltonian_cycles(g: Digraph) -> int:
    """Exact count of directed Hamiltonian cycles.

    Every Hamiltonian cycle passes through vertex 0, so counting paths that
    start at 0 and end at an in-neighbor of 0 counts each cycle exactly once.
    """
    if g.n > MAX_CENSUS_VERTICES:
        raise ValueError(
            f"census is capped at {MAX_CENSUS_VERTICES} vertices, got {g.n}"
        )
    if g.n == 1:
        return 0
    ends = _path_end_counts(g, 1)
    return sum(ends[v] for v in range(g.n) if g.rows[v] & 1)


@dataclass(frozen=True)
class HamiltonianCensus:
    """Exact Hamiltonian path/cycle counts, with the four endpoint-class
    counts when an odd/even vertex split is supplied (keys oo, ee, oe, eo;
    first letter = class of the path's start)."""

    paths_total: int
    cycles_total: int
    paths_by_class: dict[str, int] | None = None


def hamiltonian_census(
    g: Digraph, odd_class: Iterable[int] | None = None
) -> HamiltonianCensus:
    """Full census; when odd_class is given the path counts are split by the
    endpoint classes of that bipartition of the vertex set."""
    if odd_class is None:
        paths = sum(count_hamiltonian_paths(g))
        return HamiltonianCensus(
            paths_total=paths, cycles_total=count_hamiltonian_cycles(g)
        )
    odd_mask = 0
    for v in odd_class:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        odd_mask |= 1 << v
    even_mask = ((1 << g.n) - 1) ^ odd_mask
    from_odd = count_hamiltonian_paths(g, odd_mask)
    from_even = count_hamiltonian_paths(g, even_mask)
    by_class = {
        "oo": sum(c for v, c in enumerate(from_odd) if odd_mask >> v & 1),
        "oe": sum(c for v, c in enumerate(from_odd) if even_mask >> v & 1),
        "eo": sum(c for v, c in enumerate(from_even) if odd_mask >> v & 1),
        "ee": sum(c for v, c in enumerate(from_even) if even_mask >> v & 1),
    }
    return HamiltonianCensus(
        paths_total=sum(by_class.values()),
        cycles_total=count_hamiltonian_cycles(g),
        paths_by_class=by_class,
    )


def enumerate_hamiltonian_paths(
    g: Digraph, start_mask: int | None = None, limit: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Explicitly enumerate Hamiltonian paths (DFS, lexicographic by vertex
    index).  Stops after `limit` paths when given; intended for small
    digraphs or sampling."""
    n = g.n
    rows = g.rows
    if start_mask is None:
        start_mask = (1 << n) - 1
    full = (1 << n) - 1
    found = 0
    path: list[int] = []

    def dfs(last: int, mask: int) -> Iterator[tuple[int, ...]]:
        nonlocal found
        if mask == full:
            yield tuple(path)
            found += 1
            return
        nxt = rows[last] & ~mask
        while nxt:
            b = nxt & -nxt
            j = b.bit_length() - 1
            nxt ^= b
            path.append(j)
            yield from dfs(j, mask | b)
            path.pop()
            if limit is not None and found >= limit:
                return

    for v in range(n):
        if not start_mask >> v & 1:
            continue
        path = [v]
        yield from dfs(v, 1 << v)
        if limit is not None and found >= limit:
            return


def pouzet_identity_check(g: Digraph, h: Digraph) -> bool:
    """det(G) - det(H) = (-1)^(n+1) * [C(G) - C(H)] with exact integers,
    where C counts Hamiltonian cycles.  Meaningful for hypomorphic pairs;
    the caller asserts that premise."""
    if g.n != h.n:
        raise ValueError("digraphs must have the same number of vertices")
    lhs = adjacency_determinant(g) - adjacency_determinant(h)
    rhs = (-1) ** (g.n + 1) * (
        count_hamiltonian_cycles(g) - count_hamiltonian_cycles(h)
    )
    return lhs == rhs


def remark1_check(t: Digraph, v: int) -> bool:
    """Hamiltonian cycles of a tournament correspond bijectively to
    Hamiltonian paths of T - v from an out-neighbor of v to an in-neighbor
    of v; this checks the two counts agree."""
    n = t.n
    rest = [u for u in range(n) if u != v]
    sub = induced(t, rest)
    out_mask = 0
    in_mask = 0
    for idx, u in enumerate(rest):
        if t.rows[v] >> u & 1:
            out_mask |= 1 << idx
        if t.rows[u] >> v & 1:
            in_mask |= 1 << idx
    ends = count_hamiltonian_paths(sub, out_mask)
    paths = sum(c for idx, c in enumerate(ends) if in_mask >> idx & 1)
    return paths == count_hamiltonian_cycles(t)


# -- the mirror bijection and the parity argument ------------------------------


def mirror_path(path: Sequence[int], size: int) -> tuple[int, ...]:
    """Image of a Hamiltonian path of A_n under the label map
    x -> 2^n - x + 1 composed with sequence reversal (indices 0-based,
    size = 2^n)."""
    return tuple(size - 1 - path[size - 1 - i] for i in range(size))


def mirror_bijection_check(n: int, sample_limit: int = 20000) -> bool:
    """Check that the mirror map carries P_oo onto P_ee bijectively.

    Odd labels 1, 3, ... sit at even internal indices.  For n <= 3 the path
    sets are enumerated outright and the image set is compared with P_ee.
    For n = 4 the class sizes (hundreds of millions) rule out enumeration:
    the check verifies |P_oo| = |P_ee| by exact DP counting and validates
    the map on an enumerated sample of P_oo paths.
    """
    if not 1 <= n <= 4:
        raise ValueError(f"mirror check supports n in 1..4, got {n}")
    a = stockmeyer_A(n)
    size = 2**n
    odd_mask = sum(1 << i for i in range(0, size, 2))  # odd labels
    even_mask = ((1 << size) - 1) ^ odd_mask

    def is_path(p: Sequence[int]) -> bool:
        return all(a.rows[p[i]] >> p[i + 1] & 1 for i in range(size - 1))

    if n <= 3:
        p_oo = [
            p
            for p in enumerate_hamiltonian_paths(a, odd_mask)
            if odd_mask >> p[-1] & 1
        ]
        p_ee = {
            p
            for p in enumerate_hamiltonian_paths(a, even_mask)
            if even_mask >> p[-1] & 1
        }
        images = {mirror_path(p, size) for p in p_oo}
        return len(images) == len(p_oo) and images == p_ee

    from_odd = count_hamiltonian_paths(a, odd_mask)
    from_even = count_hamiltonian_paths(a, even_mask)
    n_oo = sum(c for v, c in enumerate(from_odd) if odd_mask >> v & 1)
    n_ee = sum(c for v, c in enumerate(from_even) if even_mask >> v & 1)
    if n_oo != n_ee:
        return False
    sampled = 0
    for p in enumerate_hamiltonian_paths(a, odd_mask, limit=sample_limit):
        if not odd_mask >> p[-1] & 1:
            continue
        q = mirror_path(p, size)
        if not (is_path(q) and even_mask >> q[0] & 1 and even_mask >> q[-1] & 1):
            return False
        sampled += 1
    return sampled > 0


def parity_check(n: int) -> bool:
    """det(B_n) and det(C_n) have different parities (stated for n >= 3)."""
    if not 3 <= n <= 6:
        raise ValueError(f"parity check supports n in 3..6, got {n}")
    db = adjacency_determinant(stockmeyer_B(n))
    dc = adjacency_determinant(stockmeyer_C(n))
    return db % 2 != dc % 2


def stockmeyer_table(n_max: int) -> list[tuple[int, int, int, int, bool]]:
    """Rows (n, det B_n, det C_n, det B_n - det C_n, parity differs) for
    n = 1..n_max."""
    _check_n(n_max)
    out = []
    for n in range(1, n_max + 1):
        db = adjacency_determinant(stockmeyer_B(n))
        dc = adjacency_determinant(stockmeyer_C(n))
        out.append((n, db, dc, db - dc, db % 2 != dc % 2))
    return out
