"""Double gradings and the compatibility certificate for a pair of good pairs.

Two commuting integer gradings split sl_N into bigraded cells.  A pair of
nilpotents (f1, f2) with good gradings (x1, x2) is *compatible* when

* every positive root sits in cell (0,0), (0,1), (1,0) or strictly positive
  bidegree (grading condition),
* the difference f2 - f1 is supported in the lower-triangular cell (0,-1)
  (nilpotent condition), and
* the pairing (u, v) -> (f1, [u, v]) between a complement of the
  ad(f1)-kernel inside cell (0,1) and cell (1,0) is nondegenerate.

The certificate also records the exact kernel basis of ad(f1) on cell (0,1)
(the "ghost" directions of the associated reduction) and the character values
(f2 - f1, ghost) that drive it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lie import (
    ExactMatrix,
    GradingElement,
    Root,
    all_roots,
    bracket,
    jordan_type,
    nullspace_of_rows,
    rank_of_rows,
    trace_form,
)
from .pyramids import is_good_grading

__all__ = [
    "BiGrading",
    "BiGradedPiece",
    "StarCertificate",
    "bigrade",
    "centralizer_piece",
    "compute_omega",
    "check_star",
]


class BiGrading:
    """A pair of integer (even) diagonal gradings of the same sl_N."""

    __slots__ = ("x1", "x2")

    def __init__(self, x1: GradingElement, x2: GradingElement):
        if x1.n != x2.n:
            raise ValueError("gradings live on different sl_N")
        for x in (x1, x2):
            for k in range(1, x.n):
                if x.of_root(Root(k, k + 1)).denominator != 1:
                    raise ValueError(f"grading is not integral on root ({k},{k + 1})")
        self.x1 = x1
        self.x2 = x2

    @property
    def n(self) -> int:
        return self.x1.n

    def degree_of(self, root: Root) -> tuple[int, int]:
        return (int(self.x1.of_root(root)), int(self.x2.of_root(root)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiGrading):
            return NotImplemented
        return self.x1 == other.x1 and self.x2 == other.x2

    def __hash__(self) -> int:
        return hash((self.x1, self.x2))

    def __repr__(self) -> str:
        return f"BiGrading({self.x1!r}, {self.x2!r})"


@dataclass(frozen=True)
class BiGradedPiece:
    """All root spaces of one bidegree; the Cartan is attached to (0,0)."""

    n: int
    degree: tuple[int, int]
    roots: tuple[Root, ...]
    cartan: bool = False

    @property
    def dim(self) -> int:
        return len(self.roots) + (self.n - 1 if self.cartan else 0)

    def basis(self) -> list[ExactMatrix]:
        """Root-vector basis (Cartan directions excluded)."""
        return [ExactMatrix.unit(self.n, r.i, r.j) for r in self.roots]


def _empty_piece(n: int, degree: tuple[int, int]) -> BiGradedPiece:
    return BiGradedPiece(n, degree, ())


def bigrade(bi: BiGrading) -> dict[tuple[int, int], BiGradedPiece]:
    """Partition all roots of sl_N by bidegree under the two gradings."""
    n = bi.n
    cells: dict[tuple[int, int], list[Root]] = {(0, 0): []}
    for root in all_roots(n):
        cells.setdefault(bi.degree_of(root), []).append(root)
    return {
        degree: BiGradedPiece(n, degree, tuple(sorted(roots)), cartan=(degree == (0, 0)))
        for degree, roots in cells.items()
    }


def _kernel_on_basis(
    f: ExactMatrix, basis: list[ExactMatrix]
) -> tuple[list[ExactMatrix], list[int]]:
    """Echelonized kernel of ad(f) on a span, plus the pivot (complement) indices."""
    if not basis:
        return [], []
    n = f.n
    images = [bracket(f, b) for b in basis]
    rows = [
        [img.entry(i, j) for img in images]
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    ]
    vectors, free = nullspace_of_rows(rows, len(basis))
    kernel = []
    for vec in vectors:
        acc = ExactMatrix.zero(n)
        for coeff, b in zip(vec, basis):
            if coeff:
                acc = acc + b * coeff
        kernel.append(acc)
    pivots = [k for k in range(len(basis)) if k not in set(free)]
    return kernel, pivots


def centralizer_piece(piece: BiGradedPiece, f: ExactMatrix) -> list[ExactMatrix]:
    """Exact kernel basis of ad(f) on the span of one bigraded cell.

    The basis is canonical: kernel vectors are echelonized against the
    lexicographically sorted root-vector coordinates of the cell.
    """
    kernel, _pivots = _kernel_on_basis(f, piece.basis())
    return kernel


def compute_omega(
    f1: ExactMatrix, piece01: BiGradedPiece, piece10: BiGradedPiece
) -> tuple[list[list[Fraction]], bool]:
    """Pairing (u, v) -> (f1, [u, v]) on complement-of-kernel x cell (1,0).

    The complement of the ad(f1)-kernel inside cell (0,1) is spanned by the
    pivot coordinates of the echelonized kernel, which makes the matrix
    deterministic.  Returns (dense matrix, nondegenerate?); the flag is true
    iff the matrix is square of full rank (vacuously for 0 x 0).
    """
    basis01 = piece01.basis()
    _kernel, pivots = _kernel_on_basis(f1, basis01)
    complement = [basis01[k] for k in pivots]
    rows = [
        [trace_form(f1, bracket(u, v)) for v in piece10.basis()]
        for u in complement
    ]
    square = len(complement) == piece10.dim
    nondegenerate = square and (
        len(complement) == 0 or rank_of_rows(rows) == len(complement)
    )
    return rows, nondegenerate


def _is_abelian(basis: list[ExactMatrix]) -> bool:
    return all(
        bracket(u, v).is_zero() for k, u in enumerate(basis) for v in basis[k + 1 :]
    )


_ALLOWED_POSITIVE = ((0, 0), (0, 1), (1, 0))


@dataclass(frozen=True)
class StarCertificate:
    """Outcome of the two-grading compatibility check, with exact witnesses."""

    n: int
    grading_ok: bool
    nilpotent_ok: bool
    abelian_01: bool
    abelian_10: bool
    omega_nondegenerate: bool
    good_pair_1: bool
    good_pair_2: bool
    ghost_basis: tuple[ExactMatrix, ...]
    omega_matrix: tuple[tuple[Fraction, ...], ...]
    f_circ: ExactMatrix
    character: tuple[Fraction, ...]
    violations: dict

    @property
    def passes(self) -> bool:
        return self.grading_ok and self.nilpotent_ok and self.omega_nondegenerate

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pass": self.passes,
            "grading_ok": self.grading_ok,
            "nilpotent_ok": self.nilpotent_ok,
            "abelian_01": self.abelian_01,
            "abelian_10": self.abelian_10,
            "omega_nondegenerate": self.omega_nondegenerate,
            "good_pair_1": self.good_pair_1,
            "good_pair_2": self.good_pair_2,
            "ghost_basis": [m.to_json() for m in self.ghost_basis],
            "omega": [[str(v) for v in row] for row in self.omega_matrix],
            "f_circ": self.f_circ.to_json(),
            "character": [str(v) for v in self.character],
            "violations": {
                key: sorted(self.violations[key]) for key in sorted(self.violations)
            },
        }


def check_star(f1: ExactMatrix, f2: ExactMatrix, bi: BiGrading) -> StarCertificate:
    """Certify or refute compatibility of a pair of graded nilpotents.

    Malformed input (size mismatch, a non-nilpotent matrix) raises; every
    verdict about the two elements — including whether each one forms a
    good pair with its grading — is reported in the certificate instead.
    """
    n = bi.n
    if f1.n != n or f2.n != n:
        raise ValueError("nilpotents and gradings live on different sl_N")
    jordan_type(f1)
    jordan_type(f2)

    pieces = bigrade(bi)
    violations: dict[str, list[str]] = {}

    bad_roots = [
        root
        for degree, piece in sorted(pieces.items())
        for root in piece.roots
        if root.is_positive
        and degree not in _ALLOWED_POSITIVE
        and not (degree[0] > 0 and degree[1] > 0)
    ]
    if bad_roots:
        violations["grading"] = [
            f"{root} in {bi.degree_of(root)}" for root in sorted(bad_roots)
        ]

    f_circ = f2 - f1
    bad_entries = [
        Root(i, j)
        for (i, j), _v in f_circ.items()
        if i <= j or bi.degree_of(Root(i, j)) != (0, -1)
    ]
    if bad_entries:
        violations["nilpotent"] = [
            f"{root} in {bi.degree_of(root) if root.i != root.j else 'diagonal'}"
            for root in sorted(bad_entries)
        ]

    piece01 = pieces.get((0, 1), _empty_piece(n, (0, 1)))
    piece10 = pieces.get((1, 0), _empty_piece(n, (1, 0)))
    ghost_basis = centralizer_piece(piece01, f1)
    omega, nondegenerate = compute_omega(f1, piece01, piece10)
    if not nondegenerate:
        violations["omega"] = [
            f"pairing is {len(omega)} x {piece10.dim}"
            + ("" if len(omega) == piece10.dim else " (not square)")
        ]

    return StarCertificate(
        n=n,
        grading_ok=not bad_roots,
        nilpotent_ok=not bad_entries,
        abelian_01=_is_abelian(piece01.basis()),
        abelian_10=_is_abelian(piece10.basis()),
        omega_nondegenerate=nondegenerate,
        good_pair_1=is_good_grading(f1, bi.x1),
        good_pair_2=is_good_grading(f2, bi.x2),
        ghost_basis=tuple(ghost_basis),
        omega_matrix=tuple(tuple(row) for row in omega),
        f_circ=f_circ,
        character=tuple(trace_form(f_circ, g) for g in ghost_basis),
        violations=violations,
    )
