"""Exact rational linear algebra on gl_N / sl_N.

Matrices are sparse, 1-based and carry `fractions.Fraction` entries; ranks are
computed by fraction-free (Bareiss) elimination so that every goodness or
non-degeneracy verdict in the package is exact.  No floating point numbers
appear anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _rat(value: RationalLike) -> Fraction:
    """Coerce an int / string / Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) or isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__!s}")


class Root(NamedTuple):
    """The root eps_i - eps_j of sl_N, with root vector E_{i,j} (i != j)."""

    i: int
    j: int

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    def negated(self) -> "Root":
        return Root(self.j, self.i)

    def __str__(self) -> str:  # used in polynomial variable names
        return f"({self.i},{self.j})"


def all_roots(n: int) -> list[Root]:
    """All N(N-1) roots of sl_N in lexicographic (i, j) order."""
    return [Root(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def simple_roots(n: int) -> list[Root]:
    return [Root(i, i + 1) for i in range(1, n)]


class ExactMatrix:
    """Sparse N x N matrix over the rationals.

    Entries are indexed by (row, col) in [1, N]; zero entries are never
    stored.  Instances are treated as immutable: all arithmetic returns new
    matrices.
    """

    __slots__ = ("n", "_e")

    def __init__(self, n: int, entries: Union[dict, Iterable, None] = None):
        if n < 1:
            raise ValueError("matrix size must be positive")
        self.n = n
        e: dict[tuple[int, int], Fraction] = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for (i, j), v in items:
                if not (1 <= i <= n and 1 <= j <= n):
                    raise ValueError(f"index ({i},{j}) out of range for size {n}")
                v = _rat(v)
                if v:
                    e[(i, j)] = v
        self._e = e

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "ExactMatrix":
        return cls(n)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, {(i, i): _ONE for i in range(1, n + 1)})

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "ExactMatrix":
        """The matrix unit E_{i,j}."""
        return cls(n, {(i, j): _ONE})

    @classmethod
    def root_vector(cls, n: int, root: Root) -> "ExactMatrix":
        return cls.unit(n, root.i, root.j)

    @classmethod
    def diagonal(cls, diag: Sequence[RationalLike]) -> "ExactMatrix":
        return cls(len(diag), {(i + 1, i + 1): _rat(v) for i, v in enumerate(diag)})

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    def entry(self, i: int, j: int) -> Fraction:
        return self._e.get((i, j), _ZERO)

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Entries sorted by (row, col)."""
        return iter(sorted(self._e.items()))

    def support(self) -> list[Root]:
        """Off-diagonal positions carrying a nonzero entry."""
        return sorted(Root(i, j) for (i, j) in self._e if i != j)

    def is_zero(self) -> bool:
        return not self._e

    def trace(self) -> Fraction:
        return sum((v for (i, j), v in self._e.items() if i == j), _ZERO)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.n, {(j, i): v for (i, j), v in self._e.items()})

    def rows(self) -> list[list[Fraction]]:
        """Dense row-major copy (for elimination routines)."""
        out = [[_ZERO] * self.n for _ in range(self.n)]
        for (i, j), v in self._e.items():
            out[i - 1][j - 1] = v
        return out

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _require_same_size(self, other: "ExactMatrix") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._require_same_size(other)
        e = dict(self._e)
        for k, v in other._e.items():
            s = e.get(k, _ZERO) + v
            if s:
                e[k] = s
            else:
                e.pop(k, None)
        out = ExactMatrix.__new__(ExactMatrix)
        out.n = self.n
        out._e = e
        return out

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        out = ExactMatrix.__new__(ExactMatrix)
        out.n = self.n
        out._e = {k: -v for k, v in self._e.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            self._require_same_size(other)
            rows_b: dict[int, list[tuple[int, Fraction]]] = {}
            for (i, j), v in other._e.items():
                rows_b.setdefault(i, []).append((j, v))
            acc: dict[tuple[int, int], Fraction] = {}
            for (i, k), va in self._e.items():
                for j, vb in rows_b.get(k, ()):
                    key = (i, j)
                    acc[key] = acc.get(key, _ZERO) + va * vb
            out = ExactMatrix.__new__(ExactMatrix)
            out.n = self.n
            out._e = {k: v for k, v in acc.items() if v}
            return out
        if isinstance(other, (int, Fraction)):
            c = _rat(other)
            out = ExactMatrix.__new__(ExactMatrix)
            out.n = self.n
            out._e = {} if not c else {k: v * c for k, v in self._e.items()}
            return out
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "ExactMatrix":
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = ExactMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.n == other.n
            and self._e == other._e
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._e.items())))

    def __repr__(self) -> str:
        terms = " + ".join(
            (f"E[{i},{j}]" if v == 1 else f"{v}*E[{i},{j}]")
            for (i, j), v in self.items()
        )
        return f"ExactMatrix({self.n}: {terms or '0'})"

    # ------------------------------------------------------------------
    # rank / inversion
    # ------------------------------------------------------------------

    def rank(self) -> int:
        return rank_of_rows(self.rows())

    def inverse(self) -> "ExactMatrix":
        return inverse(self)

    # ------------------------------------------------------------------
    # serialization
    # ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [[i, j, str(v)] for (i, j), v in self.items()],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ExactMatrix":
        return cls(doc["n"], [((i, j), Fraction(v)) for i, j, v in doc["entries"]])


def bracket(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """The commutator [a, b] = ab - ba."""
    return a * b - b * a


def trace_form(a: ExactMatrix, b: ExactMatrix) -> Fraction:
    """The invariant bilinear form tr(ab) of the defining representation."""
    a._require_same_size(b)
    cols_b: dict[int, dict[int, Fraction]] = {}
    for (i, j), v in b._e.items():
        cols_b.setdefault(j, {})[i] = v
    total = _ZERO
    for (i, k), va in a._e.items():
        vb = cols_b.get(i, {}).get(k)
        if vb is not None:
            total += va * vb
    return total


# ----------------------------------------------------------------------
# exact elimination
# ----------------------------------------------------------------------


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for row in rows:
        scale = 1
        for v in row:
            if v:
                scale = scale * v.denominator // math.gcd(scale, v.denominator)
        out.append([int(v * scale) for v in row])
    return out


def rank_of_rows(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank by fraction-free (Bareiss) elimination on an integer copy."""
    m = _integer_rows(rows)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            row_r = m[r]
            row_p = m[rank]
            for c in range(col + 1, ncols):
                # Bareiss update: the division by the previous pivot is exact.
                row_r[c] = (pivot * row_r[c] - factor * row_p[c]) // prev
            row_r[col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def rref_rows(
    rows: Sequence[Sequence[Fraction]],
) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form over Fraction; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for k in range(r, nrows):
            if m[k][c]:
                piv = k
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _ONE / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for k in range(nrows):
            if k != r and m[k][c]:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def nullspace_of_rows(
    rows: Sequence[Sequence[Fraction]], ncols: int
) -> tuple[list[list[Fraction]], list[int]]:
    """Echelonized kernel basis of the linear map given by `rows`.

    Returns (basis vectors, free column indices); basis vector k has a 1 in
    free column k and is supported otherwise only on pivot columns, which
    makes the basis canonical.
    """
    reduced, pivots = rref_rows(rows) if rows else ([], [])
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [_ZERO] * ncols
        vec[fc] = _ONE
        for r, pc in enumerate(pivots):
            if reduced[r][fc]:
                vec[pc] = -reduced[r][fc]
        basis.append(vec)
    return basis, free


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse; raises ValueError on a singular matrix."""
    n = m.n
    aug = []
    dense = m.rows()
    for i in range(n):
        row = list(dense[i]) + [_ZERO] * n
        row[n + i] = _ONE
        aug.append(row)
    reduced, pivots = rref_rows(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    entries = {}
    for i in range(n):
        for j in range(n):
            v = reduced[i][n + j]
            if v:
                entries[(i + 1, j + 1)] = v
    return ExactMatrix(n, entries)


def jordan_type(m: ExactMatrix) -> tuple[int, ...]:
    """Jordan type of a nilpotent matrix, as a weakly decreasing partition.

    rank(m^{k-1}) - rank(m^k) counts the Jordan blocks of size >= k; the
    partition is the conjugate of that count sequence.  Raises ValueError if
    m is not nilpotent.
    """
    n = m.n
    ranks = [n]
    power = m
    while not power.is_zero():
        if len(ranks) > n:
            raise ValueError("matrix is not nilpotent")
        ranks.append(power.rank())
        power = power * m
    # counts[k-1] = rank(m^{k-1}) - rank(m^k) = number of blocks of size >= k
    counts = [
        ranks[k - 1] - (ranks[k] if k < len(ranks) else 0)
        for k in range(1, len(ranks) + 1)
    ]
    parts: list[int] = []
    for k in range(1, len(counts) + 1):
        exactly = counts[k - 1] - (counts[k] if k < len(counts) else 0)
        parts.extend([k] * exactly)
    parts.sort(reverse=True)
    return tuple(parts)


class GradingElement:
    """A traceless rational diagonal matrix x, acting on roots by eigenvalue.

    The grading of the root eps_i - eps_j is diag[i] - diag[j]; "even" means
    every root grading is an integer.
    """

    __slots__ = ("diag",)

    def __init__(self, diag: Sequence[RationalLike]):
        d = tuple(_rat(v) for v in diag)
        if sum(d, _ZERO) != 0:
            raise ValueError("grading element must be traceless")
        self.diag = d

    @classmethod
    def from_xcoords(cls, xs: Sequence[RationalLike]) -> "GradingElement":
        """Centre a coordinate vector: subtract the mean to reach sl_N."""
        vals = [_rat(v) for v in xs]
        mean = sum(vals, _ZERO) / len(vals)
        return cls([v - mean for v in vals])

    @classmethod
    def zero(cls, n: int) -> "GradingElement":
        return cls([_ZERO] * n)

    @property
    def n(self) -> int:
        return len(self.diag)

    def of_root(self, root: Root) -> Fraction:
        return self.diag[root.i - 1] - self.diag[root.j - 1]

    def matrix(self) -> ExactMatrix:
        return ExactMatrix.diagonal(self.diag)

    def is_even(self) -> bool:
        base = self.diag[0]
        return all((v - base).denominator == 1 for v in self.diag)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradingElement) and self.diag == other.diag

    def __hash__(self) -> int:
        return hash(self.diag)

    def __repr__(self) -> str:
        return f"GradingElement({', '.join(map(str, self.diag))})"

    def to_json(self) -> list[str]:
        return [str(v) for v in self.diag]


def grading_of_root(x: GradingElement, root: Root) -> Fraction:
    """The ad(x)-eigenvalue on E_{i,j}."""
    return x.of_root(root)


def root_decomposition(x: GradingElement) -> dict[Fraction, list[Root]]:
    """Partition of all N(N-1) roots by their grading under x."""
    out: dict[Fraction, list[Root]] = {}
    for root in all_roots(x.n):
        out.setdefault(x.of_root(root), []).append(root)
    return {grade: sorted(roots) for grade, roots in sorted(out.items())}
