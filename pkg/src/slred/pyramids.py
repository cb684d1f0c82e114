"""Pyramids: row-shifted Young diagrams whose box x-coordinates define an
even good grading and whose horizontal adjacencies define the nilpotent
representative of an orbit.

Boxes live at integer x-coordinates; row 1 is the bottom row.  The canonical
labelling sorts boxes by x descending, then row ascending (smaller labels
weakly to the right).  Explicit labellings are accepted as long as labels
weakly decrease in x, which is what the slid target tableaux of the
adjacent-pair construction produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .lie import (
    ExactMatrix,
    GradingElement,
    Root,
    jordan_type,
    rank_of_rows,
    root_decomposition,
)
from .orbits import Partition

Box = tuple[int, int]  # (x, row)


class Pyramid:
    """A labelled pyramid: partition, per-row right-end offsets, labels."""

    __slots__ = ("partition", "row_offset", "labels", "_by_label")

    def __init__(
        self,
        partition,
        row_offset: Sequence[int],
        labels: Optional[dict[Box, int]] = None,
    ):
        partition = partition if isinstance(partition, Partition) else Partition(partition)
        if len(row_offset) != len(partition):
            raise ValueError("need one offset per row")
        self.partition = partition
        self.row_offset = tuple(int(o) for o in row_offset)
        boxes = self._boxes()
        if labels is None:
            labels = {box: k + 1 for k, box in enumerate(self._canonical_order(boxes))}
        else:
            labels = {(int(x), int(r)): int(v) for (x, r), v in labels.items()}
            if set(labels) != set(boxes):
                raise ValueError("labels must cover exactly the boxes of the pyramid")
            if sorted(labels.values()) != list(range(1, len(boxes) + 1)):
                raise ValueError("labels must be a bijection onto 1..N")
            by_label = sorted(labels.items(), key=lambda kv: kv[1])
            xs = [x for (x, _r), _v in by_label]
            if any(xs[k] < xs[k + 1] for k in range(len(xs) - 1)):
                raise ValueError("labels must weakly decrease left of smaller labels")
        self.labels = labels
        self._by_label = {v: box for box, v in labels.items()}

    def _boxes(self) -> list[Box]:
        out = []
        for r, (length, right) in enumerate(zip(self.partition, self.row_offset), start=1):
            out.extend((x, r) for x in range(right - length + 1, right + 1))
        return out

    @staticmethod
    def _canonical_order(boxes: Sequence[Box]) -> list[Box]:
        return sorted(boxes, key=lambda box: (-box[0], box[1]))

    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def rows(self) -> int:
        return len(self.partition)

    def boxes(self) -> list[Box]:
        return sorted(self._boxes(), key=lambda box: (box[1], box[0]))

    def label_of(self, x: int, row: int) -> int:
        return self.labels[(x, row)]

    def box_of(self, label: int) -> Box:
        return self._by_label[label]

    def xcoords(self) -> list[int]:
        """x-coordinate of each box, indexed by label (position k = label k+1)."""
        return [self._by_label[k][0] for k in range(1, self.n + 1)]

    def is_canonical(self) -> bool:
        order = self._canonical_order(self._boxes())
        return all(self.labels[box] == k + 1 for k, box in enumerate(order))

    def row_labels(self, row: int) -> list[int]:
        """Labels of one row, left to right."""
        right = self.row_offset[row - 1]
        length = self.partition.part(row)
        return [self.labels[(x, row)] for x in range(right - length + 1, right + 1)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Pyramid)
            and self.partition == other.partition
            and self.row_offset == other.row_offset
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.partition, self.row_offset, frozenset(self.labels.items())))

    def __repr__(self) -> str:
        return f"Pyramid({self.partition}, offsets={self.row_offset})"

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "row_offset": list(self.row_offset),
            "labels": [
                [x, r, self.labels[(x, r)]]
                for (x, r) in sorted(self._boxes(), key=lambda b: (b[1], b[0]))
            ],
        }


def build_pyramid(lam, offsets: Sequence[int]) -> Pyramid:
    """Pyramid with the canonical labelling at the given right-end offsets."""
    return Pyramid(lam, offsets)


def left_aligned_offsets(lam) -> tuple[int, ...]:
    """Offsets putting every row's left end at x = 0."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    return tuple(p - 1 for p in lam.parts)


def right_aligned_offsets(lam) -> tuple[int, ...]:
    """Offsets putting every row's right end at x = 0."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    return (0,) * len(lam.parts)


def _validate_window(lam: Partition, i: int, j: int) -> None:
    n = len(lam)
    if not (1 <= i < j <= n):
        raise ValueError(f"window ({i},{j}) out of range for {lam}")
    middle = {lam.part(k) for k in range(i + 1, j + 1)}
    if len(middle) > 1:
        raise ValueError(f"rows {i + 1}..{j} of {lam} must be equal")
    if i > 1 and lam.part(i - 1) <= lam.part(i):
        raise ValueError("row above the window would break monotonicity")
    if j < n and lam.part(j) <= lam.part(j + 1):
        raise ValueError("row below the window would break monotonicity")


def _source_offsets(lam: Partition, i: int, j: int) -> tuple[int, ...]:
    # rows i..j share their left end at x = 0; rows outside are right-aligned
    # against the nearest window row
    offsets = []
    for k in range(1, len(lam) + 1):
        if k < i:
            offsets.append(lam.part(i) - 1)
        elif k <= j:
            offsets.append(lam.part(k) - 1)
        else:
            offsets.append(lam.part(j) - 1)
    return tuple(offsets)


def align_for_theorem(lam, i: int, j: int, stage: str = "source") -> Pyramid:
    """The tableau the adjacent-pair construction uses for the move i -> j.

    stage="source" is the lam-tableau: rows i..j left-aligned, rows below
    right-aligned with row i, rows above right-aligned with row j.
    stage="target" slides rows j..n one step left and drops the left-end box
    of row j down to row i, keeping every box's label (inherited labelling).
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    _validate_window(lam, i, j)
    if stage not in ("source", "target"):
        raise ValueError(f"unknown stage {stage!r}")
    source = Pyramid(lam, _source_offsets(lam, i, j))
    if stage == "source":
        return source
    # slide rows j..n left by one; the box that held the left end of row j
    # falls down to row i, one column left of row i's left end
    moved: dict[Box, int] = {}
    for (x, r), label in source.labels.items():
        if r >= j:
            moved[(x - 1, r)] = label
        else:
            moved[(x, r)] = label
    drop_from = (-1, j)
    drop_to = (-1, i)
    moved[drop_to] = moved.pop(drop_from)
    rows_present = sorted({r for (_x, r) in moved})
    counts = []
    offsets = []
    for r in rows_present:
        xs = [x for (x, rr) in moved if rr == r]
        counts.append(len(xs))
        offsets.append(max(xs))
    return Pyramid(Partition(counts), offsets, moved)


def nilpotent_from_pyramid(p: Pyramid) -> ExactMatrix:
    """f = sum of E_{a,b} over boxes a immediately left of b in a row."""
    entries = {}
    for (x, r), label in p.labels.items():
        right = p.labels.get((x + 1, r))
        if right is not None:
            entries[(label, right)] = Fraction(1)
    return ExactMatrix(p.n, entries)


def grading_element_of(p: Pyramid) -> GradingElement:
    """Centred diagonal of box x-coordinates, ordered by label."""
    return GradingElement.from_xcoords(p.xcoords())


def raising_operator(p: Pyramid) -> ExactMatrix:
    """Raising partner e of the pyramid nilpotent f.

    Each row is a single Jordan chain for f; placing the coefficient
    k*(L - k) on the k-th reversed arrow of a length-L row makes
    (e, [e, f], f) an sl_2-triple.
    """
    entries: dict[tuple[int, int], Fraction] = {}
    for r in range(1, p.rows + 1):
        chain = p.row_labels(r)[::-1]
        length = len(chain)
        for k in range(1, length):
            entries[(chain[k - 1], chain[k])] = Fraction(k * (length - k))
    return ExactMatrix(p.n, entries)


def _graded_basis(n: int, roots: Sequence[Root], with_cartan: bool) -> list[ExactMatrix]:
    basis = [ExactMatrix.unit(n, r.i, r.j) for r in roots]
    if with_cartan:
        basis.extend(ExactMatrix.unit(n, k, k) for k in range(1, n + 1))
    return basis


def _image_rank(f: ExactMatrix, basis: Sequence[ExactMatrix]) -> int:
    rows = []
    for b in basis:
        image = f * b - b * f
        rows.append([image.entry(i, j) for i in range(1, f.n + 1) for j in range(1, f.n + 1)])
    return rank_of_rows(rows) if rows else 0


def is_good_grading(f: ExactMatrix, x: GradingElement) -> bool:
    """Exact check of the three good-grading axioms for an even grading.

    f must live in degree -1, ad(f) must be injective on every positive
    degree and surjective onto every negative one; all three are rank
    computations on graded components.
    """
    if f.n != x.n:
        raise ValueError("size mismatch between f and x")
    jordan_type(f)  # raises on a non-nilpotent candidate
    if any(i == j for (i, j), _v in f.items()):
        return False
    if any(x.of_root(Root(i, j)) != -1 for (i, j), _v in f.items()):
        return False
    decomposition = root_decomposition(x)
    grades = sorted(decomposition)
    for grade in grades:
        roots = decomposition[grade]
        if grade > 0:
            # ker(ad f) trivial on g_d, d > 0
            basis = _graded_basis(f.n, roots, with_cartan=False)
            if _image_rank(f, basis) != len(basis):
                return False
        elif grade <= -1:
            # g_d, d < 0, inside the image of ad f from g_{d+1}
            above = decomposition.get(grade + 1, [])
            basis = _graded_basis(f.n, above, with_cartan=(grade == -1))
            if _image_rank(f, basis) != len(roots):
                return False
    return True


@dataclass(frozen=True)
class GoodPair:
    """A verified good pair (f, x) with the pyramid it came from."""

    f: ExactMatrix
    x: GradingElement
    pyramid: Pyramid

    def to_json(self) -> dict:
        return {
            "f": self.f.to_json(),
            "x": self.x.to_json(),
            "pyramid": self.pyramid.to_json(),
        }


def good_pair(p: Pyramid) -> GoodPair:
    """Derive (f, x) from a pyramid and certify the good-grading axioms."""
    f = nilpotent_from_pyramid(p)
    x = grading_element_of(p)
    if jordan_type(f) != p.partition.parts:
        raise ValueError(f"nilpotent of {p} has the wrong Jordan type")
    if not is_good_grading(f, x):
        raise ValueError(f"{p} does not define a good grading")
    return GoodPair(f, x, p)


# ----------------------------------------------------------------------
# rendering
# ----------------------------------------------------------------------


def render(p: Pyramid, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return _render_ascii(p)
    if fmt == "tikz":
        return _render_tikz(p)
    raise ValueError(f"unknown format {fmt!r}")


def _render_ascii(p: Pyramid) -> str:
    boxes = p.labels
    xs = [x for (x, _r) in boxes]
    lo, hi = min(xs), max(xs)
    width = max(len(str(p.n)), 1)
    cell = width + 2
    lines = []
    for r in range(p.rows, 0, -1):
        line = "".join(
            f"[{boxes[(x, r)]:>{width}}]" if (x, r) in boxes else " " * cell
            for x in range(lo, hi + 1)
        )
        lines.append(line.rstrip())
    lines.append("".join(f"{x:^{cell}}" for x in range(lo, hi + 1)).rstrip())
    return "\n".join(lines)


def _render_tikz(p: Pyramid) -> str:
    lines = [
        r"\documentclass[tikz,border=2mm]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}[box/.style={draw,minimum size=6mm,inner sep=0pt}]",
    ]
    for (x, r) in sorted(p._boxes(), key=lambda b: (b[1], b[0])):
        lines.append(rf"  \node[box] at ({x},{r - 1}) {{{p.labels[(x, r)]}}};")
    lines.append(r"\end{tikzpicture}")
    lines.append(r"\end{document}")
    return "\n".join(lines) + "\n"
