"""Command-line front end.

Exit status is 0 on success, 1 when the input is well formed but the
operation rejects it (not triangular, guard exceeded), and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import enumeration as en
from . import lattice as lat
from . import words as wd
from .core import (
    NotTriangularError,
    Partition,
    PartitionError,
    classify_wide_tall,
    format_partition,
    parse_partition,
    staircase,
)
from .hull import complement_hull, is_triangular, partition_hull, slope_interval


class DomainError(Exception):
    pass


# ----------------------------------------------------------------- arg types


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _word(text: str) -> str:
    if any(ch not in "01" for ch in text):
        raise argparse.ArgumentTypeError(f"not a binary word: {text!r}")
    return text


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


# ------------------------------------------------------------------- output


def _frac(x) -> str | None:
    if x is None:
        return None
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _cells(cells) -> list:
    return [[c[0], c[1]] for c in cells]


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj) + "\n")


def _emit_rows(rows: list[dict], fmt: str, out, key: str = "rows") -> None:
    if fmt == "json":
        _emit_json({key: rows}, out)
        return
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()) if rows else ["n"], lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in r.items()})
    out.write(buf.getvalue())


# ----------------------------------------------------------------- commands


def cmd_check(args, out):
    p = args.partition
    r = is_triangular(p, witness=False)
    doc = {
        "partition": format_partition(p),
        "triangular": r.triangular,
        "removable": _cells(r.removable),
        "addable": _cells(r.addable),
    }
    if p:
        s = slope_interval(p)
        doc["t_minus"], doc["t_plus"] = _frac(s.t_minus), _frac(s.t_plus)
        doc["witness"] = _frac((s.t_minus + s.t_plus) / 2) if r.triangular else None
    else:
        doc["t_minus"] = doc["t_plus"] = doc["witness"] = None
    if r.triangular and p:
        doc.update(classify_wide_tall(p))
    else:
        doc["wide"] = doc["tall"] = r.triangular
    _emit_json(doc, out)


def cmd_hull(args, out):
    p = args.partition
    if not p:
        raise DomainError("hulls of the empty partition are not defined")
    _emit_json(
        {
            "partition": format_partition(p),
            "hull": _cells(partition_hull(p)),
            "complement_hull": _cells(complement_hull(p)),
        },
        out,
    )


def cmd_removable(args, out):
    p = args.partition
    if len(p) < 2:
        r = is_triangular(p, witness=False)
        cells = r.removable
    else:
        cells = wd.removable_via_reduction(p)
    _emit_json({"removable": _cells(cells)}, out)


def cmd_count(args, out):
    n = args.max_n
    if args.method == "dfs":
        s = en.count_delta_dfs(n, args.threads)
    elif args.method == "gf":
        s = en.count_delta_gf(n)
    else:
        s = en.count_delta_brute(n)
    _emit_rows([{"n": i, "count": s[i]} for i in range(1, n + 1)], args.format, out)


def cmd_classes(args, out):
    n = args.max_n
    if n + 1 > en.GF_GUARD:
        raise DomainError(f"--max-n must be below {en.GF_GUARD}")
    delta = en.count_delta_dfs(n + 1, args.threads)
    delta2 = en.count_delta2(n + 1)
    cs = en.derive_class_series(delta, delta2)
    rows = [
        {
            "n": i,
            "d1": cs.d1[i],
            "d2": delta2[i],
            "up1": cs.d_up1[i],
            "up2": cs.d_up2[i],
            "d2up2": cs.d2_up2[i],
        }
        for i in range(1, n + 1)
    ]
    _emit_rows(rows, args.format, out)


def cmd_square(args, out):
    rows = []
    for l in range(0, args.max_l + 1):
        row = {"l": l, "count": en.square_count(l)}
        if args.cross_check:
            row["recurrence"] = lat.count_subpartitions(staircase(l))
            if row["recurrence"] != row["count"]:
                raise DomainError(f"closed form and recurrence disagree at l = {l}")
        rows.append(row)
    _emit_rows(rows, args.format, out)


def cmd_rect(args, out):
    doc = {"l": args.l}
    doc.update(en.rect_counts(args.l))
    _emit_json(doc, out)


def cmd_bench(args, out):
    rows = en.bench_rows(args.max_n, args.threads)
    for r in rows:
        r["pp_lower"] = repr(round(r["pp_lower"], 6))
        if r["ratio_nlogn"] is not None:
            r["ratio_nlogn"] = repr(round(r["ratio_nlogn"], 6))
    _emit_rows(rows, "csv", out)


def cmd_phi(args, out):
    q = en.phi_map(args.partition)
    _emit_json(q._asdict(), out)


def cmd_phi_inv(args, out):
    try:
        p = en.phi_inv(en.PhiQuad(args.a, args.b, args.d, args.e))
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit_json({"partition": format_partition(p)}, out)


def cmd_triangle(args, out):
    doc = {"d": args.d, "e": args.e, "l": args.l}
    doc.update(en.triangle_counts(args.d, args.e, args.l))
    _emit_json(doc, out)


def cmd_lattice(args, out):
    op = args.op
    if op == "join":
        _emit_json({"join": format_partition(lat.join(args.p, args.q))}, out)
    elif op == "meet":
        _emit_json({"meet": format_partition(lat.meet(args.p, args.q))}, out)
    elif op == "mobius":
        _emit_json({"mobius": lat.mobius(args.p, args.q)}, out)
    elif op == "covers":
        _emit_json(
            {
                "down": [format_partition(r) for r in lat.covers_down(args.p)],
                "up": [format_partition(r) for r in lat.covers_up(args.p)],
            },
            out,
        )
    elif op == "subcount":
        _emit_json({"count": lat.count_subpartitions(args.p, args.memo_cap)}, out)
    elif op == "interior":
        _emit_json(
            {
                "diagonal": _cells(lat.diagonal(args.p)),
                "interior": format_partition(lat.interior(args.p)),
            },
            out,
        )


def cmd_tableaux(args, out):
    if args.two_row:
        t1, t2 = args.two_row
        doc = {"shape": f"{t1},{t2}", "count": lat.tyt_count_two_row(t1, t2)}
        if args.brute:
            doc["brute"] = lat.tyt_count_brute(Partition([t1, t2]))
    elif args.shape is not None:
        doc = {"shape": format_partition(args.shape), "count": lat.tyt_count_brute(args.shape)}
    else:
        raise argparse.ArgumentError(None, "give --two-row T1 T2 or --shape PARTITION")
    _emit_json(doc, out)


def cmd_balanced(args, out):
    if args.op == "check":
        _emit_json({"word": args.word, "balanced": wd.is_balanced(args.word)}, out)
        return
    start = 0 if args.include_empty else 1
    rows = []
    for l in range(start, args.max_len + 1):
        row = {"len": l, "count": wd.balanced_count_formula(l)}
        if args.brute:
            row["brute"] = len(wd.balanced_enumerate(l))
        rows.append(row)
    _emit_rows(rows, args.format, out)


def cmd_mechanical(args, out):
    _emit_json({"word": wd.mechanical_word(args.alpha, args.beta, args.length)}, out)


def cmd_encode(args, out):
    if args.kind == "omega":
        _emit_json({"word": wd.omega(args.partition)}, out)
    else:
        t = wd.chi(args.partition)
        _emit_json({"m": t.m, "d": t.d, "w": t.w}, out)


def cmd_decode(args, out):
    try:
        if args.kind == "omega":
            if len(args.values) != 1:
                raise argparse.ArgumentError(None, "decode omega takes one WORD")
            p = wd.omega_inv(_word(args.values[0]))
        else:
            if len(args.values) != 3:
                raise argparse.ArgumentError(None, "decode chi takes M D WORD")
            m, d = (_positive(v) for v in args.values[:2])
            p = wd.xi(wd.ChiTriple(m, d, _word(args.values[2])))
    except argparse.ArgumentTypeError as exc:
        raise argparse.ArgumentError(None, str(exc)) from None
    _emit_json({"partition": format_partition(p)}, out)


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tripart",
        description="Triangular partitions: recognition, lattice operations and enumeration.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p, default):
        p.add_argument("--format", choices=["csv", "json"], default=default)

    def threads(p):
        p.add_argument("--threads", type=_positive, default=None, help="worker threads for the DFS engine")

    p = sub.add_parser("check", help="triangularity report with removable/addable cells")
    p.add_argument("partition", type=_partition)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hull", help="vertices of the partition and complement hull chains")
    p.add_argument("partition", type=_partition)
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("removable", help="removable cells via the small-proxy reduction")
    p.add_argument("partition", type=_partition)
    p.set_defaults(func=cmd_removable)

    p = sub.add_parser("count", help="|Delta(n)| for n = 1..N")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--method", choices=["dfs", "gf", "brute"], default="dfs")
    threads(p)
    fmt(p, "csv")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("classes", help="counts split by removable/addable cell numbers")
    p.add_argument("--max-n", type=_positive, required=True)
    threads(p)
    fmt(p, "csv")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("square", help="triangular partitions inside an l x l square")
    p.add_argument("--max-l", type=_nonneg, required=True)
    p.add_argument("--cross-check", action="store_true", help="also run the subpartition recurrence")
    fmt(p, "csv")
    p.set_defaults(func=cmd_square)

    p = sub.add_parser("rect", help="closed forms for near-square boxes")
    p.add_argument("--l", type=_positive, required=True)
    p.set_defaults(func=cmd_rect)

    p = sub.add_parser("bench", help="growth data with coprime-pair bounds (CSV)")
    p.add_argument("--max-n", type=_positive, required=True)
    threads(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("phi", help="quadruple (a,b,d,e) of a partition")
    p.add_argument("partition", type=_partition)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("phi-inv", help="partition of a quadruple (a,b,d,e)")
    for name in "abde":
        p.add_argument(name, type=_positive)
    p.set_defaults(func=cmd_phi_inv)

    p = sub.add_parser("triangle", help="lattice-point counts of the two square-fit triangles")
    for name in ("d", "e", "l"):
        p.add_argument(name, type=_positive)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("lattice", help="operations in the triangular Young lattice")
    lsub = p.add_subparsers(dest="op", required=True)
    for op in ("join", "meet", "mobius"):
        q = lsub.add_parser(op)
        q.add_argument("p", type=_partition)
        q.add_argument("q", type=_partition)
        q.set_defaults(func=cmd_lattice)
    q = lsub.add_parser("covers")
    q.add_argument("p", type=_partition)
    q.set_defaults(func=cmd_lattice)
    q = lsub.add_parser("interior")
    q.add_argument("p", type=_partition)
    q.set_defaults(func=cmd_lattice)
    q = lsub.add_parser("subcount")
    q.add_argument("p", type=_partition)
    q.add_argument("--memo-cap", type=_positive, default=lat.DEFAULT_MEMO_CAP)
    q.set_defaults(func=cmd_lattice)

    p = sub.add_parser("tableaux", help="count triangular Young tableaux")
    p.add_argument("--two-row", nargs=2, type=_positive, metavar=("T1", "T2"))
    p.add_argument("--shape", type=_partition, help="any shape, counted by brute force")
    p.add_argument("--brute", action="store_true", help="also count two-row shapes by brute force")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("balanced", help="balanced binary words")
    bsub = p.add_subparsers(dest="op", required=True)
    q = bsub.add_parser("check")
    q.add_argument("word", type=_word)
    q.set_defaults(func=cmd_balanced)
    q = bsub.add_parser("count")
    q.add_argument("--max-len", type=_nonneg, required=True)
    q.add_argument("--brute", action="store_true")
    q.add_argument("--include-empty", action="store_true", help="emit the length-0 row")
    fmt(q, "csv")
    q.set_defaults(func=cmd_balanced)

    p = sub.add_parser("mechanical", help="mechanical word for rational alpha, beta")
    p.add_argument("alpha", type=_fraction)
    p.add_argument("beta", type=_fraction)
    p.add_argument("length", type=_nonneg)
    p.set_defaults(func=cmd_mechanical)

    p = sub.add_parser("encode", help="encode a wide triangular partition")
    p.add_argument("kind", choices=["omega", "chi"])
    p.add_argument("partition", type=_partition)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode an omega word or a chi triple (M D WORD)")
    p.add_argument("kind", choices=["omega", "chi"])
    p.add_argument("values", nargs="+")
    p.set_defaults(func=cmd_decode)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except argparse.ArgumentError as exc:
        print(f"tripart: error: {exc.message}", file=sys.stderr)
        return 2
    except (DomainError, NotTriangularError, PartitionError, ValueError, OverflowError, lat.MemoBudgetExceeded) as exc:
        print(f"tripart: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
