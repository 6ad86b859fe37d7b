"""Command-line front end.

    tmft transform --n 3 --ring bitvec:8 --in f.sig --out f.spec [--count]
    tmft inverse   --in f.spec --out f.sig [--count]
    tmft convolve  --n 4 --ring gf:8:11b --in r.sig s.sig --out c.sig --method spectral
    tmft cost      --n-min 1 --n-max 20 [--measured] [--out report.csv]
    tmft selftest

Exit codes: 0 ok, 1 usage, 2 file/format error, 3 invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from . import complexity
from .convolution import convolve_direct, convolve_via_tmft
from .fileio import (
    FormatError,
    parse_signal_file,
    parse_spectrum_file,
    write_signal_file,
    write_spectrum_file,
)
from .ring import RingError, make_ring
from .selftest import run_selftest
from .transform import SpectrumError, itmft, tmft_direct, tmft_fast

EXIT_OK, EXIT_USAGE, EXIT_FORMAT, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tmft", description="Two-modular Fourier transform tools")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ring_args(sp, required=True):
        sp.add_argument("--n", type=int, required=required)
        sp.add_argument("--ring", required=required, help="bitvec:<m> | poly:<m>:<hex> | gf:<m>:<hex>")

    t = sub.add_parser("transform", help="signal file -> spectrum file")
    ring_args(t)
    t.add_argument("--scheme", choices=["tree", "flat"], default="tree")
    t.add_argument("--method", choices=["fast", "direct"], default="fast")
    t.add_argument("--in", dest="inputs", nargs=1, required=True)
    t.add_argument("--out", required=True)
    t.add_argument("--count", action="store_true")

    i = sub.add_parser("inverse", help="spectrum file -> signal file")
    ring_args(i, required=False)
    i.add_argument("--scheme", choices=["tree", "flat"])
    i.add_argument("--in", dest="inputs", nargs=1, required=True)
    i.add_argument("--out", required=True)
    i.add_argument("--count", action="store_true")

    c = sub.add_parser("convolve", help="convolve two signal files")
    ring_args(c)
    c.add_argument("--scheme", choices=["tree", "flat"], default="tree")
    c.add_argument("--method", choices=["direct", "spectral"], default="spectral")
    c.add_argument("--in", dest="inputs", nargs=2, required=True)
    c.add_argument("--out", required=True)
    c.add_argument("--count", action="store_true")

    k = sub.add_parser("cost", help="closed-form cost report as CSV")
    k.add_argument("--n-min", type=int, default=1)
    k.add_argument("--n-max", type=int, default=20)
    k.add_argument("--measured", action="store_true")
    k.add_argument("--out")

    sub.add_parser("selftest", help="golden vectors and counter checks")
    return p


def _check_n(n):
    if n is not None and n < 1:
        raise UsageError("--n must be >= 1")


def _transform(args, out):
    ring = make_ring(args.ring)
    f = parse_signal_file(args.inputs[0], args.n, ring)
    algo = tmft_fast if args.method == "fast" else tmft_direct
    F, counter = algo(f, args.scheme)
    write_spectrum_file(args.out, F)
    if args.count:
        formula = (complexity.cost_fast_tmft if args.method == "fast" else complexity.cost_tmft)(args.n)
        out(f"additions={counter.additions}")
        out(f"formula={formula}")


def _inverse(args, out):
    F = parse_spectrum_file(args.inputs[0])
    if args.n is not None and args.n != F.n:
        raise FormatError(f"header n={F.n} does not match --n {args.n}")
    if args.ring is not None and make_ring(args.ring) != F.ring:
        raise FormatError(f"header ring {F.ring.spec} does not match --ring {args.ring}")
    if args.scheme is not None and args.scheme != F.scheme.value:
        raise FormatError(f"header scheme {F.scheme} does not match --scheme {args.scheme}")
    if F.n < 1:
        raise UsageError("spectrum must have n >= 1")
    f, counter = itmft(F)
    write_signal_file(args.out, f)
    if args.count:
        out(f"additions={counter.additions}")
        out(f"formula={complexity.cost_itmft(F.n)}")


def _convolve(args, out):
    ring = make_ring(args.ring)
    r = parse_signal_file(args.inputs[0], args.n, ring)
    s = parse_signal_file(args.inputs[1], args.n, ring)
    if args.method == "direct":
        result, counter = convolve_direct(r, s)
    else:
        result, counter = convolve_via_tmft(r, s, args.scheme)
    write_signal_file(args.out, result)
    if args.count:
        out(f"additions={counter.additions}")
        out(f"multiplications={counter.multiplications}")
        if args.method == "spectral":
            out(f"transform_additions={counter.stages['transforms'].additions}")
            out(f"formula_transform_additions={complexity.cost_spectral_convolution(args.n)}")
        else:
            out(f"formula_multiplications={complexity.cost_direct_convolution(args.n)}")


def _cost(args, out):
    try:
        rows = complexity.cost_report(args.n_min, args.n_max, measured=args.measured)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = complexity.report_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out(text.rstrip("\n"))
    if args.measured:
        for row in rows:
            if (row.measured_fast, row.measured_tmft, row.measured_itmft) != (row.fast_tmft, row.tmft, row.itmft):
                raise SpectrumError(f"measured counts differ from the formulas at n={row.n}")


def run(argv=None, out=print, err=None) -> int:
    err = err or (lambda msg: print(msg, file=sys.stderr))
    try:
        args = build_parser().parse_args(argv)
        _check_n(getattr(args, "n", None))
        if args.command == "selftest":
            return EXIT_OK if run_selftest(out) else EXIT_INVARIANT
        handler = {"transform": _transform, "inverse": _inverse,
                   "convolve": _convolve, "cost": _cost}[args.command]
        handler(args, out)
        return EXIT_OK
    except UsageError as exc:
        err(f"usage error: {exc}")
        return EXIT_USAGE
    except RingError as exc:
        err(f"usage error: {exc}")
        return EXIT_USAGE
    except FormatError as exc:
        err(f"format error: {exc}")
        return EXIT_FORMAT
    except SpectrumError as exc:
        err(f"invariant violation: {exc}")
        return EXIT_INVARIANT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
