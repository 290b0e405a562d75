"""Command-line front end: ``lefschetz <command> ...``.

Exit codes: 0 success, 2 malformed input, 3 mathematical/semantic error,
4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings

from . import __version__
from .algebra import ArtinianAlgebra
from .coinvariants import (
    DEFAULT_CAP,
    GroupSpec,
    RelativePair,
    almkvist_scan,
    coinvariant_ring,
    gr_conjugate_scan,
    hilbert_poly_closed,
    relative_coinvariant,
    relative_extension,
)
from .errors import LefschetzError, ParseError, ResourceCapExceeded, UnsupportedPair
from .extensions import verify_free_extension
from .jordan import algebra_summary, jordan_report
from .partitions import Dominance, Partition, dominates, is_unimodal
from .presentation import format_presentation, load_presentation
from .verdicts import DEFAULT_BOUND, random_element, sl_verdict, sljt_verdict, trial_rng

EXIT_OK, EXIT_PARSE, EXIT_SEMANTIC, EXIT_CAP = 0, 2, 3, 4


_SYM = {Dominance.LESS: "<", Dominance.EQUAL: "=", Dominance.GREATER: ">", Dominance.INCOMPARABLE: "incomparable to"}


def _p(P: Partition) -> str:
    return f"({P})"


def _table(rows: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _emit(args, data: dict, text: str, csv_rows: list[list] | None = None):
    if getattr(args, "csv", False) and csv_rows is not None:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows)
        sys.stdout.write(buf.getvalue())
    elif getattr(args, "json", False):
        sys.stdout.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text + "\n")


# -- shared report pieces ---------------------------------------------------------


def _hilbert_data(A: ArtinianAlgebra) -> tuple[dict, list[tuple[str, object]], list[list]]:
    G = A.assoc_graded_hilbert()
    Hc, Gc = A.hilbert.conjugate(), G.conjugate()
    uni = is_unimodal(A.hilbert)
    data = {
        "algebra": algebra_summary(A),
        "hilbert": list(A.hilbert.values),
        "hilbert_conjugate": list(Hc.parts),
        "gr_hilbert": list(G.values),
        "gr_conjugate": list(Gc.parts),
        "unimodal": uni.ok,
        "conjugates_equal": Hc == Gc,
    }
    rows = [
        ("ring", str(A.ring)),
        ("ideal", ", ".join(str(g) for g in A.generators) or "(0)"),
        ("dim", A.dim),
        ("socle degree", A.socle_degree),
        ("H", A.hilbert),
        ("H^v", _p(Hc)),
        ("H(Gr)", G),
        ("H(Gr)^v", _p(Gc)),
        ("unimodal", "yes" if uni else f"no, witness degrees {uni.witness}"),
    ]
    width = max(len(A.hilbert), len(G))
    table = [["degree", "hilbert", "gr_hilbert"]] + [[d, A.hilbert.get(d), G.get(d)] for d in range(width)]
    return data, rows, table


def _verdict_text(v) -> str:
    s = str(v)
    if v.jordan_type is not None:
        s += f"  P={_p(v.jordan_type)}"
    if v.status == "No" and v.certificate:
        details = ", ".join(f"{k}={_cert(val)}" for k, val in v.certificate.items())
        s += f"  [{details}]"
    return s


def _cert(val):
    if isinstance(val, Partition):
        return _p(val)
    return str(val)


def _verdicts_data(A: ArtinianAlgebra, trials: int, seed: int):
    sl = sl_verdict(A, trials=trials, seed=seed)
    sljt = sljt_verdict(A, trials=trials, seed=seed)
    data = {"algebra": algebra_summary(A), "trials": trials, "seed": seed,
            "sl": sl.to_dict(), "sljt": sljt.to_dict()}
    rows = [("algebra", repr(A)), ("H", A.hilbert), ("H^v", _p(A.hilbert.conjugate())),
            ("sl", _verdict_text(sl)), ("sljt", _verdict_text(sljt))]
    return data, rows


# -- commands -----------------------------------------------------------------------


def cmd_hilbert(args):
    A = load_presentation(args.file).algebra()
    data, rows, table = _hilbert_data(A)
    _emit(args, data, _table(rows), table)


def cmd_jordan(args):
    A = load_presentation(args.file).algebra()
    if args.element is not None:
        ell = A.element(args.element)
    else:
        idx = A.degree_indices(1) if args.linear else A.homogeneous_positive_basis()
        best = None
        for t in range(args.random):
            cand = random_element(A, trial_rng(args.seed, t), idx, args.bound)
            P = jordan_report(A, cand).jordan_type
            if best is None or dominates(P, best[1]) is Dominance.GREATER:
                best = (cand, P)
        ell = best[0]
    report = jordan_report(A, ell, with_strings=args.strings)
    data = report.to_dict()
    rows = [
        ("algebra", repr(A)),
        ("element", str(report.element)),
        ("jordan type", _p(report.jordan_type)),
        ("rank sequence", ", ".join(map(str, report.rank_sequence))),
        ("H^v", f"{_p(report.hilbert_conjugate)}  (P {_SYM[report.vs_hilbert]} H^v)"),
        ("H(Gr)^v", f"{_p(report.gr_conjugate)}  (P {_SYM[report.vs_gr]} H(Gr)^v)"),
        ("SL element", "yes" if report.is_sl_element else "no"),
        ("SLJT", "yes" if report.has_sljt else "no"),
    ]
    if report.strings is not None:
        for k, s in enumerate(report.strings, start=1):
            deg = f", degree {s.degree}" if s.degree is not None else ""
            rows.append((f"string {k}", f"length {s.length}{deg}: {s.generator}"))
    _emit(args, data, _table(rows))


def cmd_verdicts(args):
    A = load_presentation(args.file).algebra()
    data, rows = _verdicts_data(A, args.trials, args.seed)
    _emit(args, data, _table(rows))


def cmd_freeext(args):
    spec = load_presentation(args.file).extension_spec()
    rep = verify_free_extension(spec)
    data = rep.to_dict()
    rows = [
        ("dim C", rep.dim_C),
        ("dim A", f"{rep.dim_A}" + ("  (subalgebra generated by iota)" if rep.base_from_subalgebra else "")),
        ("dim B", rep.dim_B),
        ("H(B)", rep.B.hilbert),
        ("dim C = dim A * dim B", "yes" if rep.dim_product_ok else "no"),
        ("ker pi = iota(m_A) C", "yes" if rep.kernel_ok else "no"),
        ("free extension", "yes" if rep.verdict else "no"),
    ]
    _emit(args, data, _table(rows))


def cmd_coinv(args):
    if args.group:
        G = GroupSpec.parse(args.group)
        target, label = G, str(G)
    else:
        target = RelativePair.parse(args.pair)
        label = target.label
    cap = None if args.no_cap else args.cap

    if args.action == "freeext":
        if isinstance(target, GroupSpec):
            raise UnsupportedPair("freeext needs --pair, not --group")
        rep = verify_free_extension(relative_extension(target, cap=cap))
        data = {"pair": str(target), **rep.to_dict()}
        rows = [("pair", label), ("W", str(target.W)), ("K", str(target.K)),
                ("dim C = |W|", rep.dim_C), ("dim A", rep.dim_A), ("dim B = |K|", rep.dim_B),
                ("dim C = dim A * dim B", "yes" if rep.dim_product_ok else "no"),
                ("ker pi = iota(m_A) C", "yes" if rep.kernel_ok else "no"),
                ("free extension", "yes" if rep.verdict else "no")]
        return _emit(args, data, _table(rows))

    if isinstance(target, GroupSpec):
        A = coinvariant_ring(target, cap=cap)
    else:
        A = relative_coinvariant(target, cap=cap)

    if args.action == "build":
        data = {"label": label, "algebra": algebra_summary(A)}
        text = format_presentation(A, label).rstrip("\n") + f"\ndim: {A.dim}\nhilbert: {A.hilbert}"
        return _emit(args, data, text)
    if args.action == "hilbert":
        data, rows, table = _hilbert_data(A)
        rows.insert(0, ("label", label))
        if isinstance(target, RelativePair):
            closed = hilbert_poly_closed(target)
            data["closed_form"] = list(closed.values)
            data["closed_form_matches"] = closed == A.hilbert
            rows.append(("closed form", closed))
            rows.append(("closed form = H", "yes" if closed == A.hilbert else "no"))
        return _emit(args, data, _table(rows), table)
    if args.action == "verdicts":
        data, rows = _verdicts_data(A, args.trials, args.seed)
        rows[0] = ("algebra", label)
        return _emit(args, data, _table(rows))
    # scan
    (row,) = gr_conjugate_scan([A], trials=args.trials, seed=args.seed, cap=cap)
    data = {"label": label, "hilbert_conjugate": list(row.hilbert_conjugate.parts),
            "gr_conjugate": list(row.gr_conjugate.parts), "equal": row.equal,
            "sljt": row.sljt.to_dict()}
    rows = [("label", label), ("H^v", _p(row.hilbert_conjugate)), ("H(Gr)^v", _p(row.gr_conjugate)),
            ("equal", "yes" if row.equal else "no"), ("sljt", _verdict_text(row.sljt))]
    _emit(args, data, _table(rows))


def _int_range(text: str) -> list[int]:
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        try:
            if ".." in chunk:
                lo, hi = chunk.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            elif chunk:
                out.append(int(chunk))
        except ValueError:
            raise ParseError(f"bad range {text!r}; use forms like 2..8 or 2,4,6") from None
    if not out:
        raise ParseError(f"empty range {text!r}")
    return out


def cmd_almkvist(args):
    ns = _int_range(args.n)
    scan = almkvist_scan(args.m, ns)
    data = {
        "m": args.m,
        "rows": [{"n": r.n, "degree": r.degree, "unimodal": r.unimodal,
                  "violation": list(r.violation) if r.violation else None} for r in scan.rows],
        "non_unimodal": scan.non_unimodal,
        "largest_non_unimodal": scan.largest_violation,
        "stable_from": scan.stable_from,
    }
    lines = [f"{'n':>4}  {'N':>5}  unimodal  violation (degrees)"]
    for r in scan.rows:
        lines.append(f"{r.n:>4}  {r.degree:>5}  {'yes' if r.unimodal else 'NO':<8}  {r.violation or ''}".rstrip())
    lines.append(f"non-unimodal n: {scan.non_unimodal or 'none'}")
    lines.append(f"largest non-unimodal n: {scan.largest_violation or 'none'}")
    if scan.stable_from is None:
        lines.append("the last scanned n is not unimodal")
    else:
        lines.append(f"unimodal for every scanned n >= {scan.stable_from}")
    table = [["n", "degree", "unimodal", "violation"]] + [
        [r.n, r.degree, int(r.unimodal), " ".join(map(str, r.violation)) if r.violation else ""]
        for r in scan.rows
    ]
    _emit(args, data, "\n".join(lines), table)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz",
        description="Jordan types, Hilbert functions and Lefschetz verdicts for graded Artinian algebras.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p, with_csv=False):
        p.add_argument("--json", action="store_true", help="machine-readable JSON output")
        if with_csv:
            p.add_argument("--csv", action="store_true", help="CSV coefficient table")

    def sampling_flags(p):
        p.add_argument("--trials", type=int, default=20, help="random elements to try (default 20)")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("hilbert", help="Hilbert function, associated graded and conjugates")
    p.add_argument("file")
    output_flags(p, with_csv=True)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("jordan", help="Jordan type and strings of one element")
    p.add_argument("file")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--element", help="polynomial in the ring variables")
    which.add_argument("--random", type=int, metavar="T", help="sample T random elements, keep the largest type")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="coefficient range [-B, B]")
    p.add_argument("--linear", action="store_true", help="sample degree-one elements only")
    p.add_argument("--strings", action="store_true", help="include Jordan strings")
    output_flags(p)
    p.set_defaults(func=cmd_jordan)

    p = sub.add_parser("verdicts", help="strong Lefschetz and SLJT verdicts")
    p.add_argument("file")
    sampling_flags(p)
    output_flags(p)
    p.set_defaults(func=cmd_verdicts)

    p = sub.add_parser("freeext", help="check a free extension file")
    p.add_argument("file")
    output_flags(p)
    p.set_defaults(func=cmd_freeext)

    p = sub.add_parser("coinv", help="coinvariant rings of G(m,p,n) and relative coinvariants")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--group", metavar="m,p,n")
    target.add_argument("--pair", metavar="amn:m,n|ampn:m,p,n|gmmn:m,n")
    p.add_argument("action", choices=["build", "hilbert", "verdicts", "scan", "freeext"])
    sampling_flags(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help=f"refuse dimensions above this (default {DEFAULT_CAP})")
    p.add_argument("--no-cap", action="store_true", help="disable the dimension cap")
    output_flags(p, with_csv=True)
    p.set_defaults(func=cmd_coinv)

    p = sub.add_parser("almkvist", help="unimodality scan of the A(m,n) Hilbert polynomials")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", required=True, help="range such as 2..8 or 2,4,6")
    output_flags(p, with_csv=True)
    p.set_defaults(func=cmd_almkvist)
    return parser


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    warnings.showwarning = _show_warning
    try:
        args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (LefschetzError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
