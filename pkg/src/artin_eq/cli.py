"""
Command-line front end.

Exit codes: 0 success, 1 domain error (bad range, cap exceeded, invalid
matrix, ...), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import center, coxeter, coxgroup, mcg, monoid, roots, theory
from .config import CapExceeded
from .coxeter import FamilySpec


class DomainError(Exception):
    pass


# -- table ---------------------------------------------------------------------

_TABLE_START = {"A": 1, "B": 2, "D": 4, "I2": 3}


def table_rows(family: str, max_param: int) -> list[dict]:
    """Rank, Coxeter number, center generator and λ(c_G), computed live."""
    family = family.upper()
    if family not in _TABLE_START:
        raise coxeter.SpecError(f"unknown family {family!r}; expected one of A, B, D, I2")
    if max_param < _TABLE_START[family]:
        raise coxeter.RangeError(f"{family} starts at {_TABLE_START[family]}, got max {max_param}")
    rows = []
    for param in range(_TABLE_START[family], max_param + 1):
        data = center.center_data(FamilySpec(family, param))
        rows.append({
            "group": data.spec.render(),
            "rank": coxeter.build_diagram(data.spec).n,
            "h": data.h,
            "generator": data.generator_label,
            "length": len(data.cG),
            "note": data.note,
        })
    return rows


def render_table(family: str, max_param: int) -> str:
    rows = table_rows(family, max_param)
    header = ("Group", "Rank", "h", "c_G", "λ(c_G)")
    body = [(r["group"], str(r["rank"]), str(r["h"]), r["generator"], str(r["length"])) for r in rows]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    lines = ["  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip() for line in (header, *body)]
    notes = [f"note ({r['group']}): {r['note']}" for r in rows if r["note"]]
    return "\n".join(lines + notes)


# -- verbs -----------------------------------------------------------------------


def _group(text: str) -> tuple[FamilySpec, str]:
    return coxeter.parse_group_arg(text)


def _monoid(spec: FamilySpec) -> monoid.ArtinMonoid:
    return center.monoid_for(spec)


def _word(text: str, spec: FamilySpec) -> monoid.Word:
    word = monoid.parse_word(text)
    if any(x > spec.rank for x in word):
        raise DomainError(f"word {text!r} uses a generator beyond rank {spec.rank}")
    return word


def cmd_nf(args) -> tuple[dict, str]:
    spec, label = _group(args.group)
    m = _monoid(spec)
    nf = m.normal_form(_word(args.word, spec))
    rendered = m.render(nf)
    return {
        "group": label,
        "deltaPower": nf.delta_power,
        "factors": [list(m.simple_word(s)) for s in nf.factors],
        "rendered": rendered,
    }, rendered


def cmd_equal(args):
    spec, label = _group(args.group)
    m = _monoid(spec)
    w1, w2 = _word(args.w1, spec), _word(args.w2, spec)
    out = {"group": label, "w1": list(w1), "w2": list(w2), "method": args.method}
    if args.method in ("nf", "both"):
        out["nf"] = m.equal(w1, w2)
    if args.method in ("bfs", "both"):
        out["bfs"] = m.equal_bfs(w1, w2)
    if args.method == "both":
        out["agree"] = out["nf"] == out["bfs"]
        if not out["agree"]:
            raise DomainError(f"deciders disagree: nf={out['nf']} bfs={out['bfs']}")
    out["equal"] = out.get("nf", out.get("bfs"))
    return out, None


def cmd_center(args):
    spec, label = _group(args.group)
    data = center.center_data(spec)
    out = {
        "group": label,
        "rank": data.rank,
        "h": data.h,
        "J1": list(data.J1word),
        "J2": list(data.J2word),
        "J": list(data.Jword),
        "delta": list(data.delta),
        "cG": list(data.cG),
        "cGIsDeltaSquared": data.cGIsDeltaSquared,
        "length": len(data.cG),
    }
    if data.note:
        out["note"] = data.note
    return out, None


def cmd_delta(args):
    spec, label = _group(args.group)
    data = center.center_data(spec)
    report = center.verify_delta_identities(spec)
    out = {"group": label, "delta": list(data.delta), "length": len(data.delta)}
    out.update({k: v for k, v in report.as_dict().items() if k != "group"})
    if not report.ok:
        raise DomainError("Δ identities failed: " + json.dumps(out))
    return out, None


def cmd_root(args):
    spec, label = _group(args.group)
    if args.k < 1:
        raise DomainError(f"k must be positive, got {args.k}")
    answer = roots.has_kth_root(spec, args.k)
    out = answer.as_dict()
    out["group"] = label
    if answer.decision == roots.UNDECIDED:
        raise CapExceeded(f"root search for {label}, k = {args.k} exceeds the search cap")
    return out, None


def cmd_spectrum(args):
    spec, label = _group(args.group)
    result = roots.root_spectrum(spec, args.kmax)
    out = result.as_dict()
    out["group"] = label
    return out, None


def cmd_distinguish(args):
    (s1, l1), (s2, l2) = _group(args.spec1), _group(args.spec2)
    verdict = theory.distinguish(s1, s2)
    out = verdict.as_dict(unicode=not args.ascii)
    out["groups"] = [l1, l2]
    return out, None


def cmd_table(args):
    rows = table_rows(args.family, args.max)
    return {"family": args.family.upper(), "rows": rows}, render_table(args.family, args.max)


def cmd_mcg(args):
    verdict = mcg.distinguish_mcg(args.g, args.h)
    return verdict.as_dict(unicode=not args.ascii), None


def read_matrix_file(path: str) -> tuple[coxeter.CoxeterMatrix, coxeter.ValidationReport]:
    with open(path, encoding="utf-8") as fh:
        matrix = coxeter.read_matrix_text(fh.read())
    return matrix, coxeter.validate(matrix)


def cmd_validate(args):
    matrix, report = read_matrix_file(args.matrix)
    out = {"n": matrix.n, **report.as_dict()}
    family = coxeter.identify_family(matrix)
    out["family"] = family.render() if family else None
    if not report.valid:
        raise DomainError("invalid Coxeter matrix: " + "; ".join(report.violations))
    return out, None


# -- plumbing --------------------------------------------------------------------


def _text(out: dict) -> str:
    lines = []
    for key, value in out.items():
        if isinstance(value, (list, tuple)) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines.extend("  " + json.dumps(v, ensure_ascii=False) for v in value)
            continue
        if isinstance(value, (list, tuple)):
            value = " ".join(json.dumps(v, ensure_ascii=False) for v in value)
        elif value is None:
            value = "-"
        elif isinstance(value, bool):
            value = str(value).lower()
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--ascii", action="store_true", help="print sentences with A/E and ASCII connectives")

    parser = argparse.ArgumentParser(
        prog="artin-eq",
        description="Word problem, roots of central elements and distinguishing sentences "
                    "for Artin groups of type A, B, D and I2.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("nf", parents=[common], help="left-greedy normal form of a positive word")
    p.add_argument("--group", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("equal", parents=[common], help="compare two positive words")
    p.add_argument("--group", required=True)
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p.add_argument("--method", choices=("nf", "bfs", "both"), default="nf")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("center", parents=[common], help="center generator and Coxeter data")
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("delta", parents=[common], help="fundamental element and its identities")
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("root", parents=[common], help="decide whether c_G has a k-th root")
    p.add_argument("--group", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_root)

    p = sub.add_parser("spectrum", parents=[common], help="all k <= kmax with a k-th root of c_G")
    p.add_argument("--group", required=True)
    p.add_argument("--kmax", type=int)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("distinguish", parents=[common], help="separate two groups by a sentence")
    p.add_argument("spec1")
    p.add_argument("spec2")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("table", parents=[common], help="center data for a family")
    p.add_argument("--family", required=True)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("mcg", parents=[common], help="separate two mapping class groups")
    p.add_argument("g", type=int)
    p.add_argument("h", type=int)
    p.set_defaults(func=cmd_mcg)

    p = sub.add_parser("validate", parents=[common], help="check a Coxeter matrix file")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_validate)
    return parser


_DOMAIN_ERRORS = (
    DomainError,
    CapExceeded,
    coxeter.SpecError,
    coxeter.DiagramError,
    coxgroup.GroupTooLarge,
    coxgroup.UnsupportedDiagram,
    center.UnsupportedSpec,
    mcg.GenusError,
    OSError,
    ValueError,
)


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, text = args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if args.format == "json":
        print(json.dumps(out, ensure_ascii=False), file=stdout)
    else:
        print(text if text is not None else _text(out), file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
