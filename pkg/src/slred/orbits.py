"""Partitions of N, dominance order, the covering (adjacency) relation and
deterministic reduction paths through the orbit lattice.

A partition labels a nilpotent orbit of sl_N by Jordan type; mu covers lam
exactly when one box moves from the end of a row block to an earlier row and
no orbit fits strictly in between.
"""

from __future__ import annotations

from functools import total_ordering
from typing import Iterable, Iterator, Optional, Sequence


@total_ordering
class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        cleaned = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in cleaned):
            raise ValueError("partition parts must be positive")
        if any(cleaned[k] < cleaned[k + 1] for k in range(len(cleaned) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {cleaned}")
        self.parts = cleaned

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, k: int) -> int:
        """The k-th part (1-based), zero when k exceeds the length."""
        return self.parts[k - 1] if 1 <= k <= len(self.parts) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        return self.parts + (0,) * (length - len(self.parts))

    def partial_sums(self, length: Optional[int] = None) -> tuple[int, ...]:
        vals = self.padded(length) if length else self.parts
        out = []
        acc = 0
        for v in vals:
            acc += v
            out.append(acc)
        return tuple(out)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other: "Partition") -> bool:
        # plain lexicographic order on part tuples; dominance is a separate
        # partial order and lives in dominance_leq
        return self.parts < other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"[{','.join(map(str, self.parts))}]"

    def to_json(self) -> list[int]:
        return list(self.parts)


def _coerce(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in reverse-lexicographic order ([n] first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def descend(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for nxt in range(min(cap, remaining), 0, -1):
            prefix.append(nxt)
            descend(remaining - nxt, nxt, prefix)
            prefix.pop()

    descend(n, n, [])
    return out


def transpose(lam) -> Partition:
    """Conjugate partition (column counts)."""
    lam = _coerce(lam)
    if not lam.parts:
        return Partition(())
    return Partition(
        sum(1 for p in lam.parts if p >= k) for k in range(1, lam.parts[0] + 1)
    )


def dominance_leq(lam, mu) -> bool:
    """True iff every partial sum of lam is <= the matching one of mu.

    Partitions of different totals are never comparable.
    """
    lam, mu = _coerce(lam), _coerce(mu)
    if lam.n != mu.n:
        return False
    length = max(len(lam), len(mu))
    acc_l = acc_m = 0
    for k in range(length):
        acc_l += lam.part(k + 1)
        acc_m += mu.part(k + 1)
        if acc_l > acc_m:
            return False
    return True


def box_move_witness(lam, mu) -> Optional[tuple[int, int]]:
    """The unique (i, j), i < j, with mu = lam + box at row i - box at row j.

    Requires lam_i = mu_i - 1, lam_{i+1} = ... = lam_j = mu_j + 1 and
    lam_k = mu_k elsewhere; returns None when no such witness exists.
    """
    lam, mu = _coerce(lam), _coerce(mu)
    if lam.n != mu.n or lam == mu:
        return None
    length = max(len(lam), len(mu)) + 1  # +1 so a vanished last row is visible
    a = lam.padded(length)
    b = mu.padded(length)
    diffs = [k for k in range(length) if a[k] != b[k]]
    if not diffs:
        return None
    i, j = diffs[0] + 1, diffs[-1] + 1
    if i >= j:
        return None
    if a[i - 1] != b[i - 1] - 1 or a[j - 1] != b[j - 1] + 1:
        return None
    middle = a[i : j]  # rows i+1 .. j of lam (0-based slice)
    if any(v != a[j - 1] for v in middle):
        return None
    if any(a[k] != b[k] for k in range(length) if k not in (i - 1, j - 1)):
        return None
    return i, j


def satisfies_box_move(lam, mu) -> bool:
    """The one-box relation alone, without the no-intermediate-orbit clause."""
    return box_move_witness(lam, mu) is not None


def is_adjacent(lam, mu) -> bool:
    """True iff mu covers lam in dominance order.

    On top of the box move i -> j this needs j = i + 1 or lam_i = lam_{i+1};
    otherwise an intermediate orbit exists.
    """
    lam, mu = _coerce(lam), _coerce(mu)
    witness = box_move_witness(lam, mu)
    if witness is None:
        return False
    i, j = witness
    return j == i + 1 or lam.part(i) == lam.part(i + 1)


def covers_of(lam) -> set[Partition]:
    """All partitions covering lam in dominance order."""
    lam = _coerce(lam)
    length = len(lam.parts)
    out: set[Partition] = set()
    for i in range(1, length + 1):
        for j in range(i + 1, length + 1):
            parts = list(lam.padded(length))
            parts[i - 1] += 1
            parts[j - 1] -= 1
            try:
                mu = Partition(parts)
            except ValueError:
                continue
            if is_adjacent(lam, mu):
                out.add(mu)
    return out


class OrbitChain:
    """A saturated chain in the dominance order, smallest orbit first."""

    __slots__ = ("steps",)

    def __init__(self, steps: Sequence[Partition]):
        steps = tuple(_coerce(s) for s in steps)
        if not steps:
            raise ValueError("a chain needs at least one partition")
        for a, b in zip(steps, steps[1:]):
            if not is_adjacent(a, b):
                raise ValueError(f"consecutive steps {a} and {b} are not adjacent")
        self.steps = steps

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.steps)

    def __getitem__(self, k: int) -> Partition:
        return self.steps[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, OrbitChain) and self.steps == other.steps

    def __repr__(self) -> str:
        return " < ".join(map(repr, self.steps))

    def to_json(self) -> list[list[int]]:
        return [list(s.parts) for s in self.steps]


def reduction_path(lam, mu) -> OrbitChain:
    """A deterministic saturated chain lam = v_0 < v_1 < ... < v_k = mu.

    At every step the dominance-smallest admissible cover is chosen (the one
    with lexicographically least partial sums), so identical inputs always
    produce the identical chain.
    """
    lam, mu = _coerce(lam), _coerce(mu)
    if not dominance_leq(lam, mu):
        raise ValueError(f"{lam} is not below {mu} in dominance order")
    steps = [lam]
    current = lam
    width = max(len(lam), len(mu))
    while current != mu:
        candidates = [c for c in covers_of(current) if dominance_leq(c, mu)]
        if not candidates:  # cannot happen in a dominance interval
            raise RuntimeError(f"no admissible cover from {current} toward {mu}")
        current = min(candidates, key=lambda c: c.partial_sums(width))
        steps.append(current)
    return OrbitChain(steps)
