"""Exact sparse polynomial arithmetic in the three variables X, y, z.

A polynomial lives in Z[X, y, z] with arbitrary-precision integer
coefficients.  The internal representation is a dict mapping exponent
triples (dX, dy, dz) to nonzero coefficients; the zero polynomial is the
empty dict.  Canonical text form lists terms in descending lexicographic
order of the exponent triple (X before y before z), e.g.

    X^3 - 3*X*y - 3*X*z - y^3 - 3*y^2*z - 3*y*z^2 - z^3 - 1

On top of the scalar arithmetic this module provides square matrices with
polynomial entries, a fraction-free Bareiss determinant, the characteristic
polynomial det(X*I - M), a Faddeev-LeVerrier cross-check kernel, and the
Gaussian-integer identity check Q(X) = i^n * P(-i*X).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

Exponent = tuple[int, int, int]

__all__ = [
    "MPoly",
    "GaussPoly",
    "PolyMatrix",
    "ExactDivisionError",
    "X",
    "y",
    "z",
    "determinant",
    "charpoly",
    "charpoly_faddeev",
    "det_int",
    "gaussian_identity_check",
]


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder.

    Inside the Bareiss elimination every division is exact by construction,
    so hitting this error always signals a bug, never bad input.
    """


class MPoly:
    """Immutable sparse polynomial in Z[X, y, z]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    dx, dy, dz = exp
                    if dx < 0 or dy < 0 or dz < 0:
                        raise ValueError(f"negative exponent in {exp}")
                    clean[(dx, dy, dz)] = coeff
        self._terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "MPoly":
        return _ZERO

    @staticmethod
    def const(c: int) -> "MPoly":
        return MPoly({(0, 0, 0): c}) if c else _ZERO

    @staticmethod
    def monomial(coeff: int, dx: int = 0, dy: int = 0, dz: int = 0) -> "MPoly":
        return MPoly({(dx, dy, dz): coeff})

    @staticmethod
    def _coerce(value: "MPoly | int") -> "MPoly":
        if isinstance(value, MPoly):
            return value
        if isinstance(value, int):
            return MPoly.const(value)
        return NotImplemented  # type: ignore[return-value]

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        """Copy of the term map (exponent triple -> coefficient)."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def degree_in(self, var: int) -> int:
        """Max exponent of variable 0=X, 1=y, 2=z."""
        return max((e[var] for e in self._terms), default=0)

    def is_univariate_in_x(self) -> bool:
        return all(e[1] == 0 and e[2] == 0 for e in self._terms)

    def x_coefficient(self, k: int) -> "MPoly":
        """Coefficient of X^k as a polynomial in y and z."""
        return MPoly({(0, e[1], e[2]): c for e, c in self._terms.items() if e[0] == k})

    def x_coefficients(self) -> dict[int, int]:
        """For a polynomial univariate in X: map degree -> integer coefficient."""
        if not self.is_univariate_in_x():
            raise ValueError("polynomial involves y or z")
        return {e[0]: c for e, c in self._terms.items()}

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "MPoly | int") -> "MPoly":
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            s = out.get(exp, 0) + coeff
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MPoly | int") -> "MPoly":
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            s = out.get(exp, 0) - coeff
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MPoly._raw(out)

    def __rsub__(self, other: int) -> "MPoly":
        return MPoly.const(other) - self

    def __mul__(self, other: "MPoly | int") -> "MPoly":
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exponent, int] = {}
        get = out.get
        for (x1, y1, z1), c1 in a.items():
            for (x2, y2, z2), c2 in b.items():
                exp = (x1 + x2, y1 + y2, z1 + z2)
                s = get(exp, 0) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return MPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @staticmethod
    def _raw(terms: dict[Exponent, int]) -> "MPoly":
        p = MPoly.__new__(MPoly)
        p._terms = terms
        p._hash = None
        return p

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        """Exact quotient self / divisor in Z[X, y, z].

        Raises ExactDivisionError if the division is not exact.  Division
        peels leading terms in lexicographic order; for an exact quotient of
        q terms this loop runs exactly q times.
        """
        if not divisor._terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._terms:
            return _ZERO
        d_terms = divisor._terms
        d_lead = max(d_terms)
        d_coeff = d_terms[d_lead]
        rem = dict(self._terms)
        quo: dict[Exponent, int] = {}
        while rem:
            r_lead = max(rem)
            r_coeff = rem[r_lead]
            exp = (r_lead[0] - d_lead[0], r_lead[1] - d_lead[1], r_lead[2] - d_lead[2])
            if exp[0] < 0 or exp[1] < 0 or exp[2] < 0:
                raise ExactDivisionError("monomial does not divide leading term")
            c, r = divmod(r_coeff, d_coeff)
            if r:
                raise ExactDivisionError("coefficient not divisible")
            quo[exp] = c
            for (dx, dy, dz), dc in d_terms.items():
                e2 = (exp[0] + dx, exp[1] + dy, exp[2] + dz)
                s = rem.get(e2, 0) - c * dc
                if s:
                    rem[e2] = s
                else:
                    rem.pop(e2, None)
        return MPoly._raw(quo)

    def divide_int(self, k: int) -> "MPoly":
        """Exact division of every coefficient by the integer k."""
        out = {}
        for exp, coeff in self._terms.items():
            c, r = divmod(coeff, k)
            if r:
                raise ExactDivisionError(f"coefficient {coeff} not divisible by {k}")
            out[exp] = c
        return MPoly._raw(out)

    def eval(self, xv: int, yv: int, zv: int) -> int:
        """Exact integer value at the point (X, y, z) = (xv, yv, zv)."""
        total = 0
        for (dx, dy, dz), coeff in self._terms.items():
            total += coeff * xv**dx * yv**dy * zv**dz
        return total

    def subs_yz(self, yv: int, zv: int) -> "MPoly":
        """Substitute integers for y and z, leaving a polynomial in X."""
        out: dict[Exponent, int] = {}
        for (dx, dy, dz), coeff in self._terms.items():
            exp = (dx, 0, 0)
            s = out.get(exp, 0) + coeff * yv**dy * zv**dz
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MPoly._raw(out)

    # -- comparison / canonical forms ---------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in descending lexicographic order of (dX, dy, dz)."""
        return sorted(self._terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (dx, dy, dz), coeff in self.sorted_terms():
            factors = []
            for name, d in (("X", dx), ("y", dy), ("z", dz)):
                if d == 1:
                    factors.append(name)
                elif d > 1:
                    factors.append(f"{name}^{d}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({self})"

    def to_json_obj(self) -> list[dict[str, object]]:
        """JSON-friendly encoding: list of term objects, canonical order.

        Coefficients are decimal strings so arbitrary precision survives any
        JSON reader.
        """
        return [
            {"dX": e[0], "dy": e[1], "dz": e[2], "coeff": str(c)}
            for e, c in self.sorted_terms()
        ]

    @staticmethod
    def from_json_obj(obj: Iterable[Mapping[str, object]]) -> "MPoly":
        terms: dict[Exponent, int] = {}
        for t in obj:
            exp = (int(t["dX"]), int(t["dy"]), int(t["dz"]))  # type: ignore[arg-type]
            terms[exp] = terms.get(exp, 0) + int(str(t["coeff"]))
        return MPoly(terms)


_ZERO = MPoly.__new__(MPoly)
_ZERO._terms = {}
_ZERO._hash = None

X = MPoly.monomial(1, dx=1)
y = MPoly.monomial(1, dy=1)
z = MPoly.monomial(1, dz=1)
ONE = MPoly.const(1)


class GaussPoly:
    """Polynomial with Gaussian-integer coefficients, split as re + i*im.

    Both parts are MPoly values; multiplication uses i^2 = -1.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: MPoly | int = 0, im: MPoly | int = 0):
        self.re = MPoly._coerce(re)
        self.im = MPoly._coerce(im)

    def __add__(self, other: "GaussPoly") -> "GaussPoly":
        return GaussPoly(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussPoly") -> "GaussPoly":
        return GaussPoly(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussPoly") -> "GaussPoly":
        return GaussPoly(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussPoly):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __repr__(self) -> str:
        return f"GaussPoly(re={self.re}, im={self.im})"

    @staticmethod
    def i_power(k: int) -> "GaussPoly":
        """The Gaussian unit i^k."""
        return (
            GaussPoly(1, 0),
            GaussPoly(0, 1),
            GaussPoly(-1, 0),
            GaussPoly(0, -1),
        )[k % 4]


def gaussian_identity_check(p: MPoly, q: MPoly, n: int) -> bool:
    """True iff i^n * p(-i*X) equals q, computing in Gaussian integers.

    Both p and q must be univariate in X with degree at most n.  The
    substitution maps each term c*X^k to c*(-i)^k*X^k; the result must have
    zero imaginary part and real part equal to q.
    """
    if not p.is_univariate_in_x() or not q.is_univariate_in_x():
        raise ValueError("inputs must be univariate in X")
    if p.degree_in(0) > n or q.degree_in(0) > n:
        raise ValueError("degree exceeds n")
    acc = GaussPoly(0, 0)
    for k, coeff in p.x_coefficients().items():
        term = GaussPoly(MPoly.monomial(coeff, dx=k), 0)
        acc = acc + term * GaussPoly.i_power(-k)  # (-i)^k = i^(-k)
    acc = GaussPoly.i_power(n) * acc
    return acc.im.is_zero() and acc.re == q


class PolyMatrix:
    """Square matrix with MPoly entries."""

    __slots__ = ("n", "entries")

    def __init__(self, entries: Sequence[Sequence[MPoly | int]]):
        n = len(entries)
        if n < 1:
            raise ValueError("dimension must be >= 1")
        rows: list[list[MPoly]] = []
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
            rows.append([MPoly._coerce(e) for e in row])
        self.n = n
        self.entries = rows

    @staticmethod
    def identity(n: int) -> "PolyMatrix":
        return PolyMatrix(
            [[ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def from_int_rows(rows: Sequence[Sequence[int]]) -> "PolyMatrix":
        return PolyMatrix([[MPoly.const(v) for v in row] for row in rows])

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            [[self.entries[j][i] for j in range(self.n)] for i in range(self.n)]
        )

    def __getitem__(self, ij: tuple[int, int]) -> MPoly:
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def involves_x(self) -> bool:
        return any(e.degree_in(0) > 0 for row in self.entries for e in row)

    def trace(self) -> MPoly:
        t = _ZERO
        for i in range(self.n):
            t = t + self.entries[i][i]
        return t

    def mul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        n = self.n
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = _ZERO
                for k in range(n):
                    acc = acc + a[i][k] * b[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)


def determinant(m: PolyMatrix) -> MPoly:
    """Exact determinant over Z[X, y, z] via fraction-free Bareiss elimination.

    Every interior division is exact by the Bareiss identity; a non-exact
    division raises ExactDivisionError (which would indicate a bug).
    """
    n = m.n
    a = [row[:] for row in m.entries]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = next(
                (r for r in range(k + 1, n) if not a[r][k].is_zero()), None
            )
            if pivot_row is None:
                return _ZERO
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]).exact_div(prev)
            row_i[k] = _ZERO
        prev = akk
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def charpoly(m: PolyMatrix) -> MPoly:
    """Characteristic polynomial det(X*I - M), monic of degree n in X.

    Entries of M must not involve X (they live in Z[y, z]); the result's
    coefficients are again in Z[y, z].
    """
    if m.involves_x():
        raise ValueError("matrix entries must not involve X")
    n = m.n
    xi_minus = [
        [
            (X - m.entries[i][j]) if i == j else -m.entries[i][j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return determinant(PolyMatrix(xi_minus))


def charpoly_faddeev(m: PolyMatrix) -> MPoly:
    """Characteristic polynomial via the Faddeev-LeVerrier recurrence.

    Independent of the Bareiss route; intended as a cross-check oracle for
    dimensions up to about 8.  All trace divisions are exact over Z[y, z].
    """
    if m.involves_x():
        raise ValueError("matrix entries must not involve X")
    n = m.n
    coeffs: list[MPoly] = [ONE]  # c_n = 1
    mk = PolyMatrix.identity(n)
    for k in range(1, n + 1):
        if k > 1:
            # M_k = A * (M_{k-1} + c_{n-k+1} * I)
            shifted = PolyMatrix(
                [
                    [
                        mk.entries[i][j] + (coeffs[-1] if i == j else _ZERO)
                        for j in range(n)
                    ]
                    for i in range(n)
                ]
            )
            mk = m.mul(shifted)
        else:
            mk = m.mul(mk)
        ck = (-mk.trace()).divide_int(k)
        coeffs.append(ck)
    result = _ZERO
    for k, c in enumerate(coeffs):
        result = result + c * MPoly.monomial(1, dx=n - k)
    return result


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant via fraction-free Bareiss with big integers."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in rows]
    for row in a:
        if len(row) != n:
            raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((r for r in range(k + 1, n) if a[r][k]), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        akk = a[k][k]
        ak = a[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * akk - aik * ak[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]
