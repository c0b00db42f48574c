"""Command-line interface.

Exit codes: 0 success; 1 a validation or identity failure (the input is
well-formed but the mathematics rejects it); 2 malformed input; 3 a
precondition failure such as a window that is too short.

All JSON output is emitted with sorted keys so identical inputs give
byte-identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .bps import BpsVector, PairsSeries, bps_decompose, bps_recompose, hilbert_decompose, validate_ggtc
from .curves import (
    NodalCurve,
    SingularityGerm,
    nodal_contribution,
    nodal_pairs_series,
    nonsingular_contribution,
    q_series_decompose,
    stratify_pairs_series,
)
from .errors import InputError, PreconditionError, ValidationError
from .k3 import kkv_decompose, kkv_product, ky_series, signed_conversion_check, yau_zaslow
from .series import TruncSeries, eta_power


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _read_json(path: str):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None


class _Out:
    def __init__(self, path: str):
        self.path = path

    def __enter__(self):
        if self.path == "-":
            self.f = sys.stdout
        else:
            self.f = open(self.path, "w", encoding="utf-8")
        return self.f

    def __exit__(self, *exc):
        if self.f is not sys.stdout:
            self.f.close()


def _emit_json(obj, out: str):
    with _Out(out) as f:
        json.dump(obj, f, sort_keys=True, indent=2)
        f.write("\n")


def _series_csv(series: TruncSeries, out: str, head=("n", "coeff")):
    with _Out(out) as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(head)
        for e in range(series.min_exp, series.order + 1):
            w.writerow([e, series.coeff(e)])


def _load_pairs(args) -> PairsSeries:
    obj = _read_json(args.infile)
    if isinstance(obj, dict) and "series" in obj:
        pairs = PairsSeries.from_json(obj)
        g = args.g if args.g is not None else pairs.g
        return PairsSeries(pairs.series, g)
    series = TruncSeries.from_json(obj)
    g = args.g if args.g is not None else 1 - series.min_exp
    if g < 0:
        raise InputError(
            f"genus inferred from min_exp {series.min_exp} is negative; pass --g"
        )
    return PairsSeries(series, g)


def _cmd_bps_recompose(args):
    try:
        entries = tuple(int(t) for t in args.n.split(","))
    except ValueError:
        raise InputError(f"--n must be comma-separated integers, got {args.n!r}") from None
    v = BpsVector(args.g, entries)
    order = args.order if args.order is not None else args.g + 15
    _emit_json(bps_recompose(v, order).to_json(), args.out)
    return 0


def _cmd_bps_decompose(args):
    _emit_json(bps_decompose(_load_pairs(args)).to_json(), args.out)
    return 0


def _cmd_bps_validate(args):
    report = validate_ggtc(_load_pairs(args))
    _emit_json(report.to_json(), args.out)
    if not report.passed:
        for name in ("identity_0", "identity_gg", "identity_g0"):
            check = getattr(report, name)
            if not check.passed:
                print(
                    f"{name} fails first at q^{check.first_fail_exponent}",
                    file=sys.stderr,
                )
        return 1
    return 0


def _cmd_hilb_decompose(args):
    series = TruncSeries.from_json(_read_json(args.infile))
    _emit_json(hilbert_decompose(series, args.g).to_json(), args.out)
    return 0


def _cmd_curve_nonsingular(args):
    order = args.order if args.order is not None else args.g + 15
    v, pairs = nonsingular_contribution(args.g, args.chi, order)
    _emit_json({"vector": v.to_json(), "series": pairs.series.to_json()}, args.out)
    return 0


def _cmd_curve_nodal(args):
    curve = NodalCurve.from_json(_read_json(args.infile))
    v = nodal_contribution(curve)
    out = {"vector": v.to_json()}
    if args.order is not None:
        out["series"] = nodal_pairs_series(curve, args.order).series.to_json()
    _emit_json(out, args.out)
    return 0


def _cmd_curve_qseries(args):
    germ = SingularityGerm.from_json(_read_json(args.infile))
    _emit_json({"n": q_series_decompose(germ)}, args.out)
    return 0


def _cmd_curve_stratify(args):
    germ = SingularityGerm.from_json(_read_json(args.infile))
    order = args.order if args.order is not None else args.g + 15
    pairs = stratify_pairs_series(germ, args.euler0, args.g, order)
    _emit_json(pairs.to_json(), args.out)
    return 0


def _cmd_k3_ky(args):
    _emit_json(ky_series(args.hmax, args.yorder).to_json(), args.out)
    return 0


def _cmd_k3_kkv(args):
    table = kkv_decompose(kkv_product(args.hmax))
    if args.format == "csv":
        with _Out(args.out) as f:
            table.write_csv(f)
    else:
        _emit_json(table.to_json(), args.out)
    return 0


def _cmd_k3_yz(args):
    series = yau_zaslow(args.hmax)
    if args.format == "csv":
        _series_csv(series, args.out, head=("h", "r_0h"))
    else:
        _emit_json(series.to_json(), args.out)
    return 0


def _cmd_k3_signed_check(args):
    report = signed_conversion_check(args.hmax, args.yorder)
    _emit_json(report.to_json(), args.out)
    if not report.passed:
        h, n = report.first_mismatch
        print(f"signed conversion fails first at y^{n} q^{h}", file=sys.stderr)
        return 1
    return 0


def _cmd_series_eta(args):
    series = eta_power(args.exponent, args.order)
    if args.format == "csv":
        _series_csv(series, args.out)
    else:
        _emit_json(series.to_json(), args.out)
    return 0


def _add_io(p, fmt=False):
    p.add_argument("--in", dest="infile", default="-", help="input path, - for stdin")
    p.add_argument("--out", default="-", help="output path, - for stdout")
    if fmt:
        p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bpskit", description=__doc__.splitlines()[0])
    groups = ap.add_subparsers(dest="group", required=True)

    bps = groups.add_parser("bps", help="BPS basis transform").add_subparsers(
        dest="verb", required=True
    )
    p = bps.add_parser("recompose", help="vector -> pairs series")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", required=True, help="comma-separated n_0..n_g")
    p.add_argument("--order", type=int, default=None)
    _add_io(p)
    p.set_defaults(fn=_cmd_bps_recompose)
    for verb, fn in (("decompose", _cmd_bps_decompose), ("validate", _cmd_bps_validate)):
        p = bps.add_parser(verb)
        p.add_argument("--g", type=int, default=None)
        _add_io(p)
        p.set_defaults(fn=fn)

    hilb = groups.add_parser("hilb", help="Hilbert-series decomposition").add_subparsers(
        dest="verb", required=True
    )
    p = hilb.add_parser("decompose")
    p.add_argument("--g", type=int, required=True)
    _add_io(p)
    p.set_defaults(fn=_cmd_hilb_decompose)

    curve = groups.add_parser("curve", help="local curve contributions").add_subparsers(
        dest="verb", required=True
    )
    p = curve.add_parser("nonsingular")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--order", type=int, default=None)
    _add_io(p)
    p.set_defaults(fn=_cmd_curve_nonsingular)
    p = curve.add_parser("nodal")
    p.add_argument("--order", type=int, default=None, help="also emit the pairs series")
    _add_io(p)
    p.set_defaults(fn=_cmd_curve_nodal)
    p = curve.add_parser("qseries")
    _add_io(p)
    p.set_defaults(fn=_cmd_curve_qseries)
    p = curve.add_parser("stratify")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--euler0", type=int, required=True,
                   help="Euler characteristic of the smooth locus")
    p.add_argument("--order", type=int, default=None)
    _add_io(p)
    p.set_defaults(fn=_cmd_curve_stratify)

    k3 = groups.add_parser("k3", help="primitive-class K3 pipeline").add_subparsers(
        dest="verb", required=True
    )
    p = k3.add_parser("ky")
    p.add_argument("--hmax", type=int, required=True)
    p.add_argument("--yorder", type=int, required=True)
    _add_io(p)
    p.set_defaults(fn=_cmd_k3_ky)
    p = k3.add_parser("kkv")
    p.add_argument("--hmax", type=int, required=True)
    _add_io(p, fmt=True)
    p.set_defaults(fn=_cmd_k3_kkv)
    p = k3.add_parser("yz")
    p.add_argument("--hmax", type=int, required=True)
    _add_io(p, fmt=True)
    p.set_defaults(fn=_cmd_k3_yz)
    p = k3.add_parser("signed-check")
    p.add_argument("--hmax", type=int, required=True)
    p.add_argument("--yorder", type=int, required=True)
    _add_io(p)
    p.set_defaults(fn=_cmd_k3_signed_check)

    series = groups.add_parser("series", help="series utilities").add_subparsers(
        dest="verb", required=True
    )
    p = series.add_parser("eta", help="prod (1 - q^n)^exponent")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--exponent", type=int, default=-24)
    _add_io(p, fmt=True)
    p.set_defaults(fn=_cmd_series_eta)

    return ap


def run(argv=None) -> int:
    """Parse argv and execute; returns the exit code instead of raising."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
