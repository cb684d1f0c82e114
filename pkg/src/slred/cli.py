"""Command-line front end: orbit queries, certification runs, and renderings.

Every invocation prints a deterministic report.  Exit codes follow the
query's answer: 0 when the report passes, 1 when a verification or a yes/no
question comes back negative, 2 on usage errors.  JSON output is emitted
with sorted keys so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Optional

from .orbits import (
    Partition,
    box_move_witness,
    covers_of,
    is_adjacent,
    partitions_of,
    reduction_path,
    satisfies_box_move,
)
from .pyramids import align_for_theorem, build_pyramid, good_pair, left_aligned_offsets, render
from .reduction import adjacency_data, build_chain, build_reduction
from .screening import fourier_signs, screening_coeffs

#: verify-all refuses larger sweeps; the full N = 12 lattice is already
#: out of the supported runtime budget for the reduction pipeline.
MAX_VERIFY_N = 12

_EXIT_CODES = {"pass": 0, "fail": 1, "error": 2}


@dataclass
class Report:
    """Outcome of one command: a status, a one-line summary, and a payload."""

    status: str
    summary: str
    payload: dict
    lines: tuple = ()
    renderings: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.status]

    def to_json(self) -> dict:
        return {"status": self.status, "summary": self.summary, "payload": self.payload}


def emit(report: Report, format: str) -> str:
    """Serialize a report: 'json' always works, 'ascii'/'tikz' when rendered."""
    if format == "json":
        return json.dumps(report.to_json(), sort_keys=True, indent=2)
    if format in ("ascii", "tikz"):
        text = report.renderings.get(format)
        if text is None:
            raise ValueError(f"report carries no {format} rendering")
        return text
    raise ValueError(f"unsupported format {format!r}")


def _partition(text: str) -> Partition:
    try:
        parts = tuple(int(piece) for piece in text.split(","))
        return Partition(parts)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"invalid partition {text!r}: {exc}")


def _parts(p: Partition) -> list:
    return list(p.parts)


def _label(p: Partition) -> str:
    return "[" + ",".join(str(k) for k in p.parts) + "]"


# ----------------------------------------------------------------------
# command handlers
# ----------------------------------------------------------------------


def cmd_orbits(args) -> Report:
    if args.n < 1:
        raise ValueError(f"N must be positive, got {args.n}")
    orbits = sorted(partitions_of(args.n), key=lambda p: p.parts, reverse=True)
    payload = {
        "n": args.n,
        "count": len(orbits),
        "orbits": [
            {
                "partition": _parts(p),
                "covered_by": sorted(_parts(c) for c in covers_of(p)),
            }
            for p in orbits
        ],
    }
    lines = tuple(
        f"{_label(p)} covered by " + (
            ", ".join(_label(c) for c in sorted(covers_of(p), key=lambda q: q.parts))
            or "nothing (maximal)"
        )
        for p in orbits
    )
    return Report("pass", f"{len(orbits)} nilpotent orbits of sl_{args.n}", payload, lines)


def cmd_adjacent(args) -> Report:
    lam, mu = args.lam, args.mu
    witness = box_move_witness(lam, mu)
    adjacent = is_adjacent(lam, mu)
    payload = {
        "lam": _parts(lam),
        "mu": _parts(mu),
        "adjacent": adjacent,
        "satisfies_box_move": satisfies_box_move(lam, mu),
        "box_move": list(witness) if witness is not None else None,
    }
    if adjacent:
        i, j = witness
        summary = f"{_label(lam)} -> {_label(mu)}: adjacent (box moves row {j} -> row {i})"
        return Report("pass", summary, payload)
    detail = "box move exists but is not a covering" if witness else "no box move"
    return Report("fail", f"{_label(lam)} -> {_label(mu)}: not adjacent ({detail})", payload)


def cmd_path(args) -> Report:
    chain = reduction_path(args.lam, args.mu)
    steps = [_parts(p) for p in chain.steps]
    payload = {"steps": steps, "length": len(steps) - 1}
    arrow = " -> ".join(_label(p) for p in chain.steps)
    lines = (arrow,)
    summary = f"{_label(args.lam)} reaches {_label(args.mu)} in {len(steps) - 1} step(s)"
    return Report("pass", summary, payload, lines)


def _pair_renderings(lam: Partition, mu: Partition) -> dict:
    adj = adjacency_data(lam, mu)
    source = align_for_theorem(lam, adj.i, adj.j, "source")
    target = align_for_theorem(lam, adj.i, adj.j, "target")
    ascii_text = "\n".join(
        ["source " + _label(lam) + ":", render(source, "ascii"), "",
         "target " + _label(mu) + ":", render(target, "ascii")]
    )
    return {"ascii": ascii_text, "tikz": _tikz_pair(source, target)}


def _tikz_pair(source, target) -> str:
    xs = [x for (x, _r) in source.labels]
    shift = (max(xs) - min(x for (x, _r) in target.labels)) + 3
    lines = [
        r"\documentclass[tikz,border=2mm]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}[box/.style={draw,minimum size=6mm,inner sep=0pt}]",
    ]
    for offset, pyramid in ((0, source), (shift, target)):
        for (x, r) in sorted(pyramid.labels, key=lambda b: (b[1], b[0])):
            lines.append(
                rf"  \node[box] at ({x + offset},{r - 1}) {{{pyramid.labels[(x, r)]}}};"
            )
    lines.append(r"\end{tikzpicture}")
    lines.append(r"\end{document}")
    return "\n".join(lines) + "\n"


def cmd_reduce(args) -> Report:
    datum = build_reduction(args.lam, args.mu)
    summary = (
        f"{_label(args.lam)} -> {_label(args.mu)}: certified "
        f"({datum.membership_certified_by})"
    )
    return Report(
        "pass",
        summary,
        datum.to_json(),
        lines=(datum.summary(),),
        renderings=_pair_renderings(args.lam, args.mu),
    )


def cmd_chain(args) -> Report:
    data = build_chain(args.lam, args.mu)
    payload = {
        "lam": _parts(args.lam),
        "mu": _parts(args.mu),
        "steps": [
            {
                "lam": _parts(d.lam),
                "mu": _parts(d.mu),
                "case": d.adjacency.case,
                "membership_certified_by": d.membership_certified_by,
            }
            for d in data
        ],
    }
    lines = tuple(d.summary() for d in data)
    summary = f"{_label(args.lam)} -> {_label(args.mu)}: {len(data)} certified step(s)"
    return Report("pass", summary, payload, lines)


def cmd_check_star(args) -> Report:
    datum = build_reduction(args.lam, args.mu)
    cert = datum.certificate
    status = "pass" if cert.passes else "fail"
    verdict = "passes" if cert.passes else "fails"
    summary = f"{_label(args.lam)} -> {_label(args.mu)}: compatibility certificate {verdict}"
    lines = tuple(f"{check}: {detail}" for check, detail in sorted(cert.violations.items()))
    return Report(status, summary, cert.to_json(), lines)


def cmd_screenings(args) -> Report:
    lam = args.lam
    if args.mu is None:
        pair = good_pair(build_pyramid(lam, left_aligned_offsets(lam)))
        sset = screening_coeffs(pair)
        payload = {"mode": "good-pair", "set": sset.to_json()}
        lines = tuple(
            f"i={i} {case}: {poly!r}"
            for i, (case, poly) in enumerate(zip(sset.cases, sset.coefficients), start=1)
        )
        summary = f"{_label(lam)}: {len(sset.cases)} screening coefficient(s)"
        return Report("pass", summary, payload, lines)

    datum = build_reduction(lam, args.mu)
    source = screening_coeffs(datum, "source")
    target = screening_coeffs(datum, "target")
    signs = fourier_signs(source, target)
    matched = all(s is not None for s in signs)
    payload = {
        "mode": "reduction",
        "source": source.to_json(),
        "target": target.to_json(),
        "fourier_match": matched,
        "signs": list(signs),
    }
    lines = tuple(
        f"i={i} {case}: {poly!r}  (sign {sign})"
        for i, (case, poly, sign) in enumerate(
            zip(target.cases, target.coefficients, signs), start=1
        )
    )
    verdict = "matches up to sign" if matched else "MISMATCH"
    summary = f"{_label(lam)} -> {_label(args.mu)}: Fourier comparison {verdict}"
    return Report("pass" if matched else "fail", summary, payload, lines)


def cmd_render(args) -> Report:
    if args.mu is None:
        pyramid = build_pyramid(args.lam, left_aligned_offsets(args.lam))
        renderings = {"ascii": render(pyramid, "ascii"), "tikz": render(pyramid, "tikz")}
        summary = f"pyramid of {_label(args.lam)}"
    else:
        renderings = _pair_renderings(args.lam, args.mu)
        summary = f"aligned pyramid pair {_label(args.lam)} -> {_label(args.mu)}"
    payload = {"ascii": renderings["ascii"], "tikz": renderings["tikz"]}
    return Report("pass", summary, payload, (renderings["ascii"],), renderings)


def _verify_pair(pair) -> dict:
    lam, mu = pair
    try:
        datum = build_reduction(Partition(lam), Partition(mu))
        return {
            "lam": list(lam),
            "mu": list(mu),
            "ok": True,
            "membership_certified_by": datum.membership_certified_by,
        }
    except Exception as exc:  # failures are reported, never thrown
        return {"lam": list(lam), "mu": list(mu), "ok": False, "detail": str(exc)}


def verify_all(n_max: int, workers: Optional[int] = None) -> Report:
    """Run the full reduction pipeline on every box-move pair with N <= n_max."""
    if not (1 <= n_max <= MAX_VERIFY_N):
        raise ValueError(f"--max-n must be between 1 and {MAX_VERIFY_N}, got {n_max}")
    pairs = []
    for n in range(2, n_max + 1):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                if lam != mu and box_move_witness(lam, mu) is not None:
                    pairs.append((lam.parts, mu.parts))
    if workers is None:
        workers = int(os.environ.get("SLRED_WORKERS", "1") or "1")
    if workers > 1 and len(pairs) > 1:
        with Pool(workers) as pool:
            rows = pool.map(_verify_pair, pairs)
    else:
        rows = [_verify_pair(pair) for pair in pairs]
    rows.sort(key=lambda row: (sum(row["lam"]), row["lam"], row["mu"]))
    failures = [row for row in rows if not row["ok"]]
    payload = {"max_n": n_max, "checked": len(rows), "failed": len(failures), "pairs": rows}
    lines = tuple(
        ("ok   " if row["ok"] else "FAIL ")
        + f"[{','.join(map(str, row['lam']))}] -> [{','.join(map(str, row['mu']))}]"
        + ("" if row["ok"] else f": {row['detail']}")
        for row in rows
    )
    if failures:
        return Report("fail", f"{len(failures)} of {len(rows)} pairs failed", payload, lines)
    return Report("pass", f"{len(rows)} box-move pairs for N <= {n_max}: all certified", payload, lines)


def cmd_verify_all(args) -> Report:
    return verify_all(args.max_n, args.workers)


# ----------------------------------------------------------------------
# parsing and dispatch
# ----------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slred",
        description="Exact certification toolkit for nilpotent-orbit reductions of sl_N.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, renders=False):
        p.add_argument("--json", action="store_true", help="print the full report as JSON")
        p.add_argument("--quiet", action="store_true", help="suppress summary output")
        if renders:
            p.add_argument("--ascii", action="store_true", help="print the ascii rendering")
            p.add_argument("--tikz", action="store_true", help="print the TikZ rendering")

    p = sub.add_parser("orbits", help="list the nilpotent orbits of sl_N with cover relations")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(handler=cmd_orbits)

    p = sub.add_parser("adjacent", help="decide adjacency of two orbits")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    common(p)
    p.set_defaults(handler=cmd_adjacent)

    p = sub.add_parser("path", help="adjacent chain between comparable orbits")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    common(p)
    p.set_defaults(handler=cmd_path)

    p = sub.add_parser("reduce", help="build and certify one reduction datum")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    common(p, renders=True)
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("chain", help="certify every step of the chain between two orbits")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    common(p)
    p.set_defaults(handler=cmd_chain)

    p = sub.add_parser("check-star", help="compatibility certificate for an adjacent pair")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    common(p)
    p.set_defaults(handler=cmd_check_star)

    p = sub.add_parser("screenings", help="screening coefficients of a pair or a single orbit")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition, nargs="?", default=None)
    common(p)
    p.set_defaults(handler=cmd_screenings)

    p = sub.add_parser("render", help="ascii or TikZ pyramid pictures")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition, nargs="?", default=None)
    common(p, renders=True)
    p.set_defaults(handler=cmd_render)

    p = sub.add_parser("verify-all", help="run the reduction pipeline on all box-move pairs")
    p.add_argument("--max-n", type=int, default=6, help=f"largest N to sweep (<= {MAX_VERIFY_N})")
    p.add_argument(
        "--workers",
        type=int,
        default=None,
        help="worker processes (default: SLRED_WORKERS or 1)",
    )
    common(p)
    p.set_defaults(handler=cmd_verify_all)

    return parser


def _print_report(report: Report, args) -> None:
    wants_render = getattr(args, "ascii", False) or getattr(args, "tikz", False)
    if args.json:
        print(emit(report, "json"))
        return
    if wants_render:
        print(emit(report, "tikz" if getattr(args, "tikz", False) else "ascii"))
        return
    if args.quiet:
        return
    print(report.summary)
    for line in report.lines:
        print(line)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.json and (getattr(args, "ascii", False) or getattr(args, "tikz", False)):
        parser.error("--json cannot be combined with --ascii/--tikz")
    try:
        report = args.handler(args)
    except (ValueError, TypeError) as exc:
        report = Report("error", str(exc), {})
        print(f"error: {exc}", file=sys.stderr)
        if args.json:
            print(emit(report, "json"))
        return report.exit_code
    except RuntimeError as exc:
        report = Report("fail", str(exc), {})
        print(f"verification failed: {exc}", file=sys.stderr)
        if args.json:
            print(emit(report, "json"))
        return report.exit_code
    _print_report(report, args)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
