"""Classical screening coefficients on unipotent charts.

Everything here is exact polynomial algebra over the rationals: first-kind
coordinates on unipotent groups, terminating exponential / logarithm series,
the vector fields induced by one-parameter left or right translation, and the
per-simple-root screening coefficients attached to a good pair or to a
reduction datum.  A Fourier-type comparison transports the coefficients built
on the finer nilpotent (evaluating ghost directions against the step
nilpotent and swapping the symplectically paired symbols) and checks that
they land on the coarser side's coefficients up to sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .lie import ExactMatrix, Root, bracket, inverse, trace_form
from .orbits import Partition  # noqa: F401  (re-exported type in signatures)
from .pyramids import GoodPair, grading_element_of
from .reduction import ReductionDatum
from .star import BiGrading, bigrade, _kernel_on_basis

# ----------------------------------------------------------------------
# polynomials in tagged commuting variables
# ----------------------------------------------------------------------

#: Variable tags, in display order.  Root-indexed variables carry a Root,
#: splitting-indexed ones a plain integer.
_KIND_ORDER = {"z": 0, "beta": 1, "gamma": 2, "beta-hat": 3, "gamma-hat": 4}

Var = tuple
Monomial = tuple
Scalar = Union["Poly", Fraction, int, str]


def _norm_var(kind: str, index) -> Var:
    if kind not in _KIND_ORDER:
        raise ValueError(f"unknown variable kind {kind!r}")
    if isinstance(index, int):
        return (kind, index)
    return (kind, Root(int(index[0]), int(index[1])))


def _var_key(var: Var):
    kind, idx = var
    if isinstance(idx, int):
        return (_KIND_ORDER[kind], 0, (idx,))
    return (_KIND_ORDER[kind], 1, tuple(idx))


def var_name(var: Var) -> str:
    """Render a variable tag the way the JSON output spells it."""
    kind, idx = var
    return f"{kind}_{idx}"


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    exps = dict(m1)
    for var, e in m2:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items(), key=lambda it: _var_key(it[0])))


def _mono_key(mono: Monomial):
    return tuple((_var_key(var), e) for var, e in mono)


class Poly:
    """Exact multivariate polynomial with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        self.terms: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[mono] = c

    @classmethod
    def const(cls, value) -> "Poly":
        c = Fraction(value)
        return cls({(): c} if c else {})

    @classmethod
    def variable(cls, kind: str, index) -> "Poly":
        return cls({((_norm_var(kind, index), 1),): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self!r} is not constant")
        return self.terms.get((), Fraction(0))

    def variables(self) -> set:
        return {var for mono in self.terms for var, _ in mono}

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return -(self - other)

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def substitute(self, mapping: dict) -> "Poly":
        """Replace whole variables; values may be polynomials or scalars."""
        table = {_norm_var(*var): _as_poly(value) for var, value in mapping.items()}
        out = Poly()
        for mono, c in self.terms.items():
            factor = Poly.const(c)
            for var, e in mono:
                repl = table.get(var, Poly({((var, 1),): Fraction(1)}))
                factor = factor * repl**e
            out = out + factor
        return out

    def derivative(self, var: Var) -> "Poly":
        var = _norm_var(*var)
        terms: dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            exps = dict(mono)
            e = exps.get(var)
            if not e:
                continue
            if e == 1:
                del exps[var]
            else:
                exps[var] = e - 1
            new = tuple(sorted(exps.items(), key=lambda it: _var_key(it[0])))
            terms[new] = terms.get(new, Fraction(0)) + c * e
        return Poly(terms)

    def to_json(self) -> list:
        out = []
        for mono in sorted(self.terms, key=_mono_key):
            out.append(
                {
                    "monomial": {var_name(var): e for var, e in mono},
                    "coeff": str(self.terms[mono]),
                }
            )
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=_mono_key):
            c = self.terms[mono]
            names = [var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in mono]
            body = "*".join(names)
            parts.append(f"{c}" if not body else f"{c}*{body}")
        return " + ".join(parts)


def _as_poly(value) -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction, str)):
        return Poly.const(value)
    return NotImplemented


# ----------------------------------------------------------------------
# matrices of polynomials
# ----------------------------------------------------------------------


class PolyMatrix:
    """Square matrix with Poly entries, 1-based and sparse like ExactMatrix."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Optional[dict] = None):
        self.n = n
        self.entries: dict[tuple[int, int], Poly] = {}
        for (i, j), value in (entries or {}).items():
            p = _as_poly(value)
            if p is NotImplemented:
                raise TypeError(f"entry ({i},{j}) is not a polynomial or scalar")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"entry ({i},{j}) outside a {n}x{n} matrix")
            if not p.is_zero():
                self.entries[(i, j)] = p

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls(n, {(i, i): 1 for i in range(1, n + 1)})

    @classmethod
    def from_exact(cls, m: ExactMatrix) -> "PolyMatrix":
        return cls(m.n, {pos: Poly.const(v) for pos, v in m.items()})

    def entry(self, i: int, j: int) -> Poly:
        return self.entries.get((i, j), Poly())

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        acc = dict(self.entries)
        for pos, p in other.entries.items():
            acc[pos] = acc.get(pos, Poly()) + p
        return PolyMatrix(self.n, acc)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.n, {pos: -p for pos, p in self.entries.items()})

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            self._check(other)
            rows_b: dict[int, list[tuple[int, Poly]]] = {}
            for (i, j), p in other.entries.items():
                rows_b.setdefault(i, []).append((j, p))
            acc: dict[tuple[int, int], Poly] = {}
            for (i, k), pa in self.entries.items():
                for j, pb in rows_b.get(k, ()):
                    acc[(i, j)] = acc.get((i, j), Poly()) + pa * pb
            return PolyMatrix(self.n, acc)
        return self.scale(other)

    def scale(self, value) -> "PolyMatrix":
        p = _as_poly(value)
        if p is NotImplemented:
            return NotImplemented
        return PolyMatrix(self.n, {pos: q * p for pos, q in self.entries.items()})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.entries.items())))

    def support(self) -> list[tuple[int, int]]:
        return sorted(self.entries)

    def _check(self, other: "PolyMatrix") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {p!r}" for (i, j), p in sorted(self.entries.items()))
        return f"PolyMatrix({self.n}, {{{body}}})"


def trace_pair(a: ExactMatrix, m: PolyMatrix) -> Poly:
    """Trace-form pairing tr(a·m) of an exact matrix against a polynomial one."""
    if a.n != m.n:
        raise ValueError(f"size mismatch: {a.n} vs {m.n}")
    total = Poly()
    for (i, j), v in a.items():
        p = m.entry(j, i)
        if not p.is_zero():
            total = total + p * v
    return total


def exp_nilpotent(m: PolyMatrix) -> PolyMatrix:
    """Exponential of a nilpotent matrix as a terminating series."""
    result = PolyMatrix.identity(m.n)
    term = PolyMatrix.identity(m.n)
    for k in range(1, m.n + 1):
        term = (term * m).scale(Fraction(1, k))
        if term.is_zero():
            return result
        result = result + term
    raise ValueError("matrix is not nilpotent")


def log_unipotent(u: PolyMatrix) -> PolyMatrix:
    """Logarithm of a unipotent matrix by the finite alternating series."""
    v = u - PolyMatrix.identity(u.n)
    result = PolyMatrix(u.n)
    power = PolyMatrix.identity(u.n)
    for k in range(1, u.n + 1):
        power = power * v
        if power.is_zero():
            return result
        result = result + power.scale(Fraction((-1) ** (k + 1), k))
    raise ValueError("matrix is not unipotent")


# ----------------------------------------------------------------------
# unipotent charts and translation vector fields
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class UnipotentChart:
    """A bracket-closed set of positive roots with first-kind coordinates."""

    n: int
    roots: tuple[Root, ...]

    def __init__(self, n: int, roots: Iterable):
        normalized = sorted({Root(int(r[0]), int(r[1])) for r in roots})
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "roots", tuple(normalized))
        have = set(self.roots)
        for i, j in self.roots:
            if not (1 <= i < j <= n):
                raise ValueError(f"({i},{j}) is not a positive root of sl_{n}")
        for i, j in self.roots:
            for j2, k in self.roots:
                if j2 == j and (i, k) not in have:
                    raise ValueError(
                        f"chart is not closed under bracket: ({i},{j})+({j},{k})"
                    )

    def coordinates(self) -> tuple[Var, ...]:
        return tuple(("z", root) for root in self.roots)

    def coordinate_matrix(self) -> PolyMatrix:
        return PolyMatrix(
            self.n, {tuple(root): Poly.variable("z", root) for root in self.roots}
        )

    def generic_element(self) -> PolyMatrix:
        return exp_nilpotent(self.coordinate_matrix())

    def generic_inverse(self) -> PolyMatrix:
        return exp_nilpotent(-self.coordinate_matrix())


def _check_on_chart(w: ExactMatrix, chart: UnipotentChart) -> None:
    if w.n != chart.n:
        raise ValueError(f"size mismatch: {w.n} vs chart over sl_{chart.n}")
    have = {tuple(r) for r in chart.roots}
    for (i, j), _ in w.items():
        if (i, j) not in have:
            raise ValueError(f"element has support at ({i},{j}) outside the chart")


def _log_directional(g: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """First-order part of log(g + t·b) at t = 0, for unipotent g."""
    u = g - PolyMatrix.identity(g.n)
    powers = [PolyMatrix.identity(g.n)]
    while not (powers[-1] * u).is_zero():
        powers.append(powers[-1] * u)
    total = PolyMatrix(g.n)
    bound = len(powers)
    for k in range(1, 2 * bound):
        coeff = Fraction((-1) ** (k + 1), k)
        layer = PolyMatrix(g.n)
        hit = False
        for a in range(k):
            if a >= bound or k - 1 - a >= bound:
                continue
            layer = layer + powers[a] * b * powers[k - 1 - a]
            hit = True
        if hit:
            total = total + layer.scale(coeff)
    return total


def _read_chart_coefficients(
    eps: PolyMatrix, chart: UnipotentChart, action: str
) -> dict[Root, Poly]:
    have = {tuple(r) for r in chart.roots}
    for (i, j), p in eps.entries.items():
        if (i, j) not in have and not p.is_zero():
            raise ValueError(
                f"{action} action leaves the chart at ({i},{j}); "
                "the root set is not closed under the action"
            )
    return {root: eps.entry(*root) for root in chart.roots}


def left_action_of(w: ExactMatrix, chart: UnipotentChart) -> dict[Root, Poly]:
    """Coefficients of the vector field of left translation by exp(t·w)."""
    _check_on_chart(w, chart)
    g = chart.generic_element()
    eps = _log_directional(g, PolyMatrix.from_exact(w) * g)
    return _read_chart_coefficients(eps, chart, "left")


def right_action_of(w: ExactMatrix, chart: UnipotentChart) -> dict[Root, Poly]:
    """Coefficients of the vector field of right translation by exp(t·w)."""
    _check_on_chart(w, chart)
    g = chart.generic_element()
    eps = _log_directional(g, g * PolyMatrix.from_exact(w))
    return _read_chart_coefficients(eps, chart, "right")


def left_action_coeffs(i: int, chart: UnipotentChart) -> dict[Root, Poly]:
    """Left-translation coefficients for the i-th simple root vector."""
    if not (1 <= i < chart.n):
        raise ValueError(f"simple root index {i} out of range for sl_{chart.n}")
    return left_action_of(ExactMatrix.unit(chart.n, i, i + 1), chart)


def conjugate_by_chart(w: ExactMatrix, chart: UnipotentChart) -> PolyMatrix:
    """g^{-1}·w·g for the generic chart element g."""
    if w.n != chart.n:
        raise ValueError(f"size mismatch: {w.n} vs chart over sl_{chart.n}")
    return chart.generic_inverse() * PolyMatrix.from_exact(w) * chart.generic_element()


def g0_conjugate(i: int, chart0: UnipotentChart) -> PolyMatrix:
    """The i-th simple root vector conjugated by the generic element of the chart."""
    if not (1 <= i < chart0.n):
        raise ValueError(f"simple root index {i} out of range for sl_{chart0.n}")
    return conjugate_by_chart(ExactMatrix.unit(chart0.n, i, i + 1), chart0)


# ----------------------------------------------------------------------
# the omega splitting of the (0,1) cell
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class OmegaSplit:
    """Bases splitting the (0,1) cell along the kernel of the finer nilpotent.

    ``u_basis`` lists the paired block first (normalized so the step
    nilpotent pairs to zero against it) and then the kernel vectors; the
    dual tuples realize the trace-form dual bases.  ``ghost_constants``
    records the pairing of the step nilpotent against each kernel vector.
    """

    pairs: int
    total: int
    u_basis: tuple[ExactMatrix, ...]
    u_duals: tuple[ExactMatrix, ...]
    v_basis: tuple[ExactMatrix, ...]
    v_duals: tuple[ExactMatrix, ...]
    ghost_constants: tuple[Fraction, ...]


def _positive_roots(piece) -> list[Root]:
    """Positive roots of a bigraded piece: its intersection with the nilradical."""
    if piece is None:
        return []
    return [r for r in piece.roots if r.is_positive]


def _omega_split(f1: ExactMatrix, f_circ: ExactMatrix, pieces: dict) -> OmegaSplit:
    n = f1.n
    roots01 = _positive_roots(pieces.get((0, 1)))
    roots10 = _positive_roots(pieces.get((1, 0)))
    basis01 = [ExactMatrix.unit(n, r.i, r.j) for r in roots01]
    basis10 = [ExactMatrix.unit(n, r.i, r.j) for r in roots10]

    kernel, pivots = _kernel_on_basis(f1, basis01)
    free = [k for k in range(len(basis01)) if k not in set(pivots)]
    complement = [basis01[p] for p in pivots]

    consts = [trace_form(f_circ, g) for g in kernel]
    anchor = next((l for l, c in enumerate(consts) if c), None)
    if anchor is not None:
        for idx, u in enumerate(complement):
            c = trace_form(f_circ, u)
            if c:
                complement[idx] = u - kernel[anchor] * (c / consts[anchor])

    n_pairs = len(complement)
    if len(basis10) != n_pairs:
        raise ValueError(
            f"pairing block is not square: {n_pairs} complement vectors "
            f"against {len(basis10)} vectors in the (1,0) cell"
        )

    v_basis: list[ExactMatrix] = []
    if n_pairs:
        omega = ExactMatrix(
            n_pairs,
            {
                (p + 1, q + 1): trace_form(f1, bracket(complement[p], basis10[q]))
                for p in range(n_pairs)
                for q in range(n_pairs)
            },
        )
        x = inverse(omega)
        for j in range(n_pairs):
            v = ExactMatrix.zero(f1.n)
            for q in range(n_pairs):
                c = x.entry(q + 1, j + 1)
                if c:
                    v = v + basis10[q] * c
            v_basis.append(v)

    total = n_pairs + len(kernel)
    u_basis = complement + kernel
    u_duals: list[ExactMatrix] = []
    if total:
        cols = list(pivots) + free
        coeffs = ExactMatrix(
            total,
            {
                (r + 1, c + 1): dict(u_basis[r].items()).get(tuple(roots01[cols[c]]), 0)
                for r in range(total)
                for c in range(total)
            },
        )
        dual_rows = inverse(coeffs.transpose())
        for j in range(total):
            d = ExactMatrix.zero(f1.n)
            for c in range(total):
                value = dual_rows.entry(j + 1, c + 1)
                if value:
                    p, q = roots01[cols[c]]
                    d = d + ExactMatrix.unit(f1.n, q, p) * value
            u_duals.append(d)

    v_duals = [bracket(f1, u) for u in complement]
    return OmegaSplit(
        pairs=n_pairs,
        total=total,
        u_basis=tuple(u_basis),
        u_duals=tuple(u_duals),
        v_basis=tuple(v_basis),
        v_duals=tuple(v_duals),
        ghost_constants=tuple(consts),
    )


# ----------------------------------------------------------------------
# screening coefficients
# ----------------------------------------------------------------------

_CASES = {(0, 0): "I_00", (0, 1): "I_01", (1, 0): "I_10", (1, 1): "I_11"}


@dataclass(frozen=True)
class ScreeningSet:
    """One screening coefficient per simple root, tagged by bidegree case."""

    n: int
    side: str
    cases: tuple[str, ...]
    coefficients: tuple[Poly, ...]
    chart_roots: tuple[Root, ...]
    split: OmegaSplit

    def case_of(self, i: int) -> str:
        return self.cases[i - 1]

    def coefficient(self, i: int) -> Poly:
        return self.coefficients[i - 1]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "side": self.side,
            "chart": [[i, j] for i, j in self.chart_roots],
            "screenings": [
                {"i": i, "case": case, "polynomial": poly.to_json()}
                for i, (case, poly) in enumerate(
                    zip(self.cases, self.coefficients), start=1
                )
            ],
        }


def screening_coeffs(
    datum: Union[ReductionDatum, GoodPair], side: str = "target"
) -> ScreeningSet:
    """Classical screening coefficients of a reduction datum or a good pair.

    ``side="source"`` builds the coefficients of the finer nilpotent's
    W-algebra (beta/gamma symbols over the omega splitting); ``"target"``
    builds the coarser side (beta-hat/gamma-hat symbols).  For a good pair
    the two sides coincide apart from the label.
    """
    if side not in ("source", "target"):
        raise ValueError(f"side must be 'source' or 'target', got {side!r}")
    if isinstance(datum, ReductionDatum):
        f1, f2, f_circ = datum.f_lam, datum.f_mu_tilde, datum.f_circ
        bi = BiGrading(
            grading_element_of(datum.pyr_lam), grading_element_of(datum.pyr_mu)
        )
    elif isinstance(datum, GoodPair):
        f1 = f2 = datum.f
        f_circ = ExactMatrix.zero(datum.f.n)
        bi = BiGrading(datum.x, datum.x)
    else:
        raise TypeError(f"expected a ReductionDatum or a GoodPair, got {type(datum)}")

    n = f1.n
    pieces = bigrade(bi)
    chart = UnipotentChart(n, _positive_roots(pieces.get((0, 0))))
    split = _omega_split(f1, f_circ, pieces)
    g = chart.generic_element()
    ginv = chart.generic_inverse()

    cases: list[str] = []
    coeffs: list[Poly] = []
    for i in range(1, n):
        degree = tuple(bi.degree_of(Root(i, i + 1)))
        if degree not in _CASES:
            raise ValueError(
                f"simple root {i} has bidegree {degree}; each grading must "
                "put simple roots in degree 0 or 1"
            )
        cases.append(_CASES[degree])
        if degree == (0, 0):
            total = Poly()
            for root, p in left_action_coeffs(i, chart).items():
                total = total + p * Poly.variable("beta", root)
            coeffs.append(total)
            continue

        w = ginv * PolyMatrix.from_exact(ExactMatrix.unit(n, i, i + 1)) * g
        if degree == (1, 1):
            coeffs.append(trace_pair(f1 if side == "source" else f2, w))
        elif degree == (0, 1):
            if side == "source":
                total = Poly()
                for j, dual in enumerate(split.u_duals, start=1):
                    total = total + trace_pair(dual, w) * Poly.variable("beta", j)
            else:
                total = trace_pair(f_circ, w)
                for j in range(1, split.pairs + 1):
                    total = total + trace_pair(split.u_duals[j - 1], w) * Poly.variable(
                        "gamma-hat", j
                    )
            coeffs.append(total)
        else:  # (1, 0)
            total = Poly()
            for j in range(1, split.pairs + 1):
                c = trace_pair(split.v_duals[j - 1], w)
                if side == "source":
                    total = total - c * Poly.variable("gamma", j)
                else:
                    total = total + c * Poly.variable("beta-hat", j)
            coeffs.append(total)

    return ScreeningSet(
        n=n,
        side=side,
        cases=tuple(cases),
        coefficients=tuple(coeffs),
        chart_roots=chart.roots,
        split=split,
    )


# ----------------------------------------------------------------------
# the Fourier-side comparison
# ----------------------------------------------------------------------


def fourier_signs(
    source: ScreeningSet,
    target: ScreeningSet,
    pairing: Optional[OmegaSplit] = None,
) -> tuple:
    """Per-simple-root sign matching the transported source against the target.

    Each entry is +1 or -1 when the transported coefficient equals the
    target one up to that sign, 0 when both vanish, and None on a genuine
    mismatch.
    """
    if pairing is None:
        pairing = source.split
    if source.side != "source" or target.side != "target":
        raise ValueError("expected a source set and a target set, in that order")
    if (
        source.n != target.n
        or source.chart_roots != target.chart_roots
        or source.cases != target.cases
        or pairing != source.split
        or pairing != target.split
    ):
        raise ValueError("screening sets were built over incompatible charts")

    substitution: dict[Var, Poly] = {}
    for j in range(1, pairing.pairs + 1):
        substitution[("beta", j)] = -Poly.variable("gamma-hat", j)
        substitution[("gamma", j)] = Poly.variable("beta-hat", j)
    for l, c in enumerate(pairing.ghost_constants, start=1):
        substitution[("beta", pairing.pairs + l)] = Poly.const(-c)

    signs: list = []
    for p, q in zip(source.coefficients, target.coefficients):
        image = p.substitute(substitution)
        if image.is_zero() and q.is_zero():
            signs.append(0)
        elif image == q:
            signs.append(1)
        elif image == -q:
            signs.append(-1)
        else:
            signs.append(None)
    return tuple(signs)


def fourier_compare(
    source: ScreeningSet,
    target: ScreeningSet,
    pairing: Optional[OmegaSplit] = None,
) -> bool:
    """Does the transported source coefficient match the target one up to sign?"""
    return all(s is not None for s in fourier_signs(source, target, pairing))
