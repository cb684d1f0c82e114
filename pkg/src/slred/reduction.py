"""Verified reduction data for one-box moves between nilpotent orbits.

Given partitions lam and mu of N where mu is obtained from lam by moving
a single box up (row j to row i, all rows strictly between carrying the
same length as row j), this module constructs everything the reduction
step needs, exactly and with every claim re-verified before the datum is
returned:

* aligned source and target tableaux sharing one labelling,
* the standard representatives f_lam and f_mu_std read off the tableaux,
* the correction term f_circ supported in the (0, -1) cell of the double
  grading, with f_mu_tilde = f_lam + f_circ landing in the mu-orbit,
* the ghost basis spanning the centraliser of f_lam in the (0, 1) cell,
  cross-checked against the kernel computed independently by the
  compatibility certificate,
* the character pairing of f_circ against each ghost, and
* a block-diagonal conjugator carrying f_mu_tilde to f_mu_std, attached
  only after exact verification.

The whole-diagram case (window = all rows) is built from closed-form
index formulas; the general case transports that datum through the
order isomorphism onto the window's labels, which leaves every label
outside the window untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence, Union

from .lie import ExactMatrix, RationalLike, inverse, jordan_type, trace_form
from .orbits import Partition, box_move_witness, dominance_leq, reduction_path
from .pyramids import (
    Pyramid,
    align_for_theorem,
    grading_element_of,
    nilpotent_from_pyramid,
)
from .star import BiGrading, StarCertificate, check_star

PartitionLike = Union[Partition, Sequence[int]]

_ONE = Fraction(1)


def _coerce(p: PartitionLike) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


class AdjacencyData(NamedTuple):
    """Location of the moved box: source row j, destination row i."""

    i: int
    j: int
    case: str  # "I" when the window is the whole diagram, else "II"


def adjacency_data(lam: PartitionLike, mu: PartitionLike) -> AdjacencyData:
    """The unique witness (i, j) of the one-box move from lam to mu.

    Case I means the window rows i..j exhaust the diagram, so no
    embedding is needed; anything smaller is case II.
    """
    lam, mu = _coerce(lam), _coerce(mu)
    witness = box_move_witness(lam, mu)
    if witness is None:
        raise ValueError(f"{mu} is not a one-box move up from {lam}")
    i, j = witness
    case = "I" if (i, j) == (1, len(lam.parts)) else "II"
    return AdjacencyData(i, j, case)


# --------------------------------------------------------------------------
# whole-diagram construction for lam = [a, b, b, ..., b]


@dataclass(frozen=True)
class CaseOneDatum:
    """Closed-form datum for the full window [a, b^(s+1)] -> [a+1, b^s, b-1]."""

    a: int
    b: int
    s: int
    lam: Partition
    mu: Partition
    f_lam: ExactMatrix
    f_circ: ExactMatrix
    ghost_basis: tuple[ExactMatrix, ...]


def build_case_one(a: int, b: int, s: int) -> CaseOneDatum:
    """Datum for lam = [a, b^(s+1)], given by index formulas.

    With r = a - b and step = s + 2, the canonical labels of the aligned
    tableau place column number k (counted from the right, k = 0 at the
    rightmost full column) at labels r + k*step + 1 .. r + (k+1)*step.
    The ghosts connect the bottom of each full column to its other rows;
    f_circ connects each top box one step down the same column.
    """
    if not (a >= b >= 1) or s < 0:
        raise ValueError(f"need a >= b >= 1 and s >= 0, got ({a}, {b}, {s})")
    lam = Partition([a] + [b] * (s + 1))
    r, step = a - b, s + 2
    n = lam.n
    f_circ = ExactMatrix(
        n, {(r + (k + 1) * step, r + 1 + k * step): _ONE for k in range(b)}
    )
    ghosts = tuple(
        ExactMatrix(
            n, {(r + i + k * step, r + (k + 1) * step): _ONE for k in range(b)}
        )
        for i in range(1, step)
    )
    source = align_for_theorem(lam, 1, step, "source")
    f_lam = nilpotent_from_pyramid(source)
    mu = Partition([a + 1] + [b] * s + ([b - 1] if b > 1 else []))
    return CaseOneDatum(a, b, s, lam, mu, f_lam, f_circ, ghosts)


def conjugator_height_two(
    a: int,
    b: int,
    unit_a: RationalLike = _ONE,
    unit_b: RationalLike = _ONE,
) -> ExactMatrix:
    """Block-diagonal conjugator candidate for the two-row move [a,b] -> [a+1,b-1].

    Returns diag(ua*I_{r+1}, A_1, ..., A_{b-1}, b*ua) with r = a - b and

        A_t = [[(b - t)*ub, t*ua], [-ub, ua]]

    on the coordinate pair (r + 2t, r + 2t + 1); each block has
    determinant b*ua*ub, so the whole matrix has determinant
    ua^(a+1) * ub^(b-1) * b^b.  For b = 1 there are no blocks and the
    matrix degenerates to ua times the identity.  The candidate is
    returned unverified; certify it with verify_conjugation.
    """
    if not (a >= b >= 1):
        raise ValueError(f"need a >= b >= 1, got ({a}, {b})")
    ua, ub = Fraction(unit_a), Fraction(unit_b)
    if ua == 0 or ub == 0:
        raise ValueError("units must be nonzero")
    r, n = a - b, a + b
    entries: dict[tuple[int, int], Fraction] = {(k, k): ua for k in range(1, r + 2)}
    for t in range(1, b):
        p = r + 2 * t
        entries[(p, p)] = (b - t) * ub
        entries[(p, p + 1)] = t * ua
        entries[(p + 1, p)] = -ub
        entries[(p + 1, p + 1)] = ua
    entries[(n, n)] = b * ua
    return ExactMatrix(n, entries)


def verify_conjugation(
    g: ExactMatrix, f_tilde: ExactMatrix, f_std: ExactMatrix
) -> bool:
    """True iff inverse(g) * f_tilde * g equals f_std exactly.

    Raises ValueError when g is singular.
    """
    return inverse(g) * f_tilde * g == f_std


# --------------------------------------------------------------------------
# transport through the window


def _transport(
    m: ExactMatrix, coords: Sequence[int], n: int, identity_off: bool = False
) -> ExactMatrix:
    """Push m through the coordinate map k -> coords[k-1] into size n.

    With identity_off, coordinates outside the image get a 1 on the
    diagonal, turning a conjugator on the window into one on everything.
    """
    entries = {(coords[i - 1], coords[j - 1]): v for (i, j), v in m.items()}
    if identity_off:
        image = set(coords)
        entries.update(
            {(k, k): _ONE for k in range(1, n + 1) if k not in image}
        )
    return ExactMatrix(n, entries)


def _window_labels(p: Pyramid, i: int, j: int) -> tuple[int, ...]:
    return tuple(
        sorted(lab for (_x, row), lab in p.labels.items() if i <= row <= j)
    )


def _embedded_conjugator(
    inner: CaseOneDatum,
    unit_a: RationalLike = _ONE,
    unit_b: RationalLike = _ONE,
) -> ExactMatrix:
    """The height-two conjugator spread over the full window [a, b^(s+1)].

    f_circ only touches the top and bottom rows of the window, and both
    representatives preserve the splitting into (top row + bottom row)
    coordinates versus the interior rows.  So the two-row conjugator acts
    through the order isomorphism onto those labels and as the identity
    on every interior row.
    """
    g2 = conjugator_height_two(inner.a, inner.b, unit_a, unit_b)
    source = align_for_theorem(inner.lam, 1, inner.s + 2, "source")
    outer = tuple(
        sorted(
            lab
            for (_x, row), lab in source.labels.items()
            if row in (1, inner.s + 2)
        )
    )
    return _transport(g2, outer, inner.lam.n, identity_off=True)


@dataclass(frozen=True)
class EmbeddedDatum:
    """A window datum transported into the ambient algebra (precursor)."""

    lam: Partition
    mu: Partition
    adjacency: AdjacencyData
    window: tuple[int, ...]
    source: Pyramid
    target: Pyramid
    f_lam: ExactMatrix
    f_circ: ExactMatrix
    f_mu_std: ExactMatrix
    f_mu_tilde: ExactMatrix
    ghost_basis: tuple[ExactMatrix, ...]
    conjugator_candidate: ExactMatrix


def embed_case_two(
    inner: CaseOneDatum, lam: PartitionLike, ad: AdjacencyData
) -> EmbeddedDatum:
    """Transport a full-window datum onto the window rows i..j inside lam.

    The index map sends window coordinate k to the k-th smallest label of
    rows i..j in the aligned source tableau; labels outside the window —
    and every arrow between them, which the move never touches — stay
    fixed.  For case I the map is the identity.
    """
    lam = _coerce(lam)
    source = align_for_theorem(lam, ad.i, ad.j, "source")
    target = align_for_theorem(lam, ad.i, ad.j, "target")
    window = _window_labels(source, ad.i, ad.j)
    if (
        len(window) != inner.lam.n
        or lam.parts[ad.i - 1 : ad.j] != inner.lam.parts
    ):
        raise ValueError(
            f"window rows {ad.i}..{ad.j} of {lam} do not carry {inner.lam}"
        )
    n = lam.n
    f_lam = nilpotent_from_pyramid(source)
    f_circ = _transport(inner.f_circ, window, n)
    ghosts = tuple(_transport(g, window, n) for g in inner.ghost_basis)
    conjugator = _transport(
        _embedded_conjugator(inner), window, n, identity_off=True
    )
    return EmbeddedDatum(
        lam=lam,
        mu=target.partition,
        adjacency=ad,
        window=window,
        source=source,
        target=target,
        f_lam=f_lam,
        f_circ=f_circ,
        f_mu_std=nilpotent_from_pyramid(target),
        f_mu_tilde=f_lam + f_circ,
        ghost_basis=ghosts,
        conjugator_candidate=conjugator,
    )


# --------------------------------------------------------------------------
# the verified datum


@dataclass(frozen=True)
class ReductionDatum:
    """One verified reduction step lam -> mu, with all witnesses attached."""

    lam: Partition
    mu: Partition
    adjacency: AdjacencyData
    pyr_lam: Pyramid
    pyr_mu: Pyramid
    f_lam: ExactMatrix
    f_mu_std: ExactMatrix
    f_circ: ExactMatrix
    f_mu_tilde: ExactMatrix
    ghost_basis: tuple[ExactMatrix, ...]
    character: tuple[Fraction, ...]
    conjugator: Optional[ExactMatrix]
    certificate: StarCertificate
    embedding_window: tuple[int, ...]
    membership_certified_by: str  # "conjugation" or "jordan_type"

    def summary(self) -> str:
        lam, mu, ad = self.lam, self.mu, self.adjacency
        character = "(" + ", ".join(str(c) for c in self.character) + ")"
        tail = (
            "conjugator verified"
            if self.membership_certified_by == "conjugation"
            else "orbit membership certified by Jordan type"
        )
        return (
            f"{lam} -> {mu}: case {ad.case}, window rows {ad.i}..{ad.j}, "
            f"{len(self.ghost_basis)} ghost(s), character {character}, {tail}"
        )

    def to_json(self) -> dict:
        return {
            "lam": list(self.lam.parts),
            "mu": list(self.mu.parts),
            "case": self.adjacency.case,
            "window_rows": [self.adjacency.i, self.adjacency.j],
            "window_labels": list(self.embedding_window),
            "pyramids": {
                "source": self.pyr_lam.to_json(),
                "target": self.pyr_mu.to_json(),
            },
            "f_lam": self.f_lam.to_json(),
            "f_mu_std": self.f_mu_std.to_json(),
            "f_circ": self.f_circ.to_json(),
            "f_mu_tilde": self.f_mu_tilde.to_json(),
            "ghost_basis": [m.to_json() for m in self.ghost_basis],
            "character": [str(c) for c in self.character],
            "conjugator": (
                self.conjugator.to_json() if self.conjugator is not None else None
            ),
            "membership_certified_by": self.membership_certified_by,
            "certificate": self.certificate.to_json(),
            "summary": self.summary(),
        }


def _fail(check: str, detail: str) -> RuntimeError:
    return RuntimeError(f"internal verification failed at {check}: {detail}")


@lru_cache(maxsize=None)
def _build_reduction(
    lam_parts: tuple[int, ...], mu_parts: tuple[int, ...]
) -> ReductionDatum:
    lam, mu = Partition(lam_parts), Partition(mu_parts)
    ad = adjacency_data(lam, mu)
    a, b, s = lam.part(ad.i), lam.part(ad.j), ad.j - ad.i - 1
    inner = build_case_one(a, b, s)
    pre = embed_case_two(inner, lam, ad)

    if pre.mu != mu:
        raise _fail("target tableau shape", f"{pre.mu} != {mu}")
    if tuple(jordan_type(pre.f_mu_tilde)) != mu.parts:
        raise _fail(
            "jordan type of f_lam + f_circ",
            f"{jordan_type(pre.f_mu_tilde)} != {mu}",
        )

    bi = BiGrading(
        grading_element_of(pre.source), grading_element_of(pre.target)
    )
    certificate = check_star(pre.f_lam, pre.f_mu_tilde, bi)
    if not certificate.passes:
        raise _fail("compatibility certificate", str(certificate.violations))
    if certificate.ghost_basis != pre.ghost_basis:
        raise _fail(
            "ghost basis",
            "kernel route disagrees with the index-formula route",
        )

    character = tuple(trace_form(pre.f_circ, g) for g in pre.ghost_basis)
    expected = (Fraction(b),) + (Fraction(0),) * (len(pre.ghost_basis) - 1)
    if character != expected:
        raise _fail("character", f"{character} != {expected}")

    conjugator: Optional[ExactMatrix] = None
    certified_by = "jordan_type"
    if verify_conjugation(pre.conjugator_candidate, pre.f_mu_tilde, pre.f_mu_std):
        conjugator = pre.conjugator_candidate
        certified_by = "conjugation"

    return ReductionDatum(
        lam=lam,
        mu=mu,
        adjacency=ad,
        pyr_lam=pre.source,
        pyr_mu=pre.target,
        f_lam=pre.f_lam,
        f_mu_std=pre.f_mu_std,
        f_circ=pre.f_circ,
        f_mu_tilde=pre.f_mu_tilde,
        ghost_basis=pre.ghost_basis,
        character=character,
        conjugator=conjugator,
        certificate=certificate,
        embedding_window=pre.window,
        membership_certified_by=certified_by,
    )


def build_reduction(lam: PartitionLike, mu: PartitionLike) -> ReductionDatum:
    """The verified reduction datum for a one-box move lam -> mu.

    Raises ValueError when mu is not a one-box move up from lam, and
    RuntimeError (naming the failing sub-check) if any internal
    verification fails — which must not happen for valid inputs.
    Results are memoized, so chains sharing steps don't recompute.
    """
    return _build_reduction(_coerce(lam).parts, _coerce(mu).parts)


def build_chain(lam: PartitionLike, mu: PartitionLike) -> list[ReductionDatum]:
    """One verified datum per step of the canonical path from lam to mu."""
    lam, mu = _coerce(lam), _coerce(mu)
    if not dominance_leq(lam, mu):
        raise ValueError(f"{lam} does not precede {mu} in dominance order")
    steps = reduction_path(lam, mu).steps
    return [
        build_reduction(steps[k], steps[k + 1]) for k in range(len(steps) - 1)
    ]
