"""Command-line front end.

Exit status: 0 when every requested verification passed, 1 when one failed,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import application as app
from . import identities as ids
from . import sweeps
from .combinat import gen_binom
from .partitions import Partition, enumerate_partitions
from .pjk import p_jk

log = logging.getLogger("partident")


def partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def alpha_arg(text: str) -> Fraction:
    try:
        a = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if a <= 0:
        raise argparse.ArgumentTypeError("alpha must be positive")
    return a


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def positive_int(text: str) -> int:
    v = nonneg_int(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def caps_arg(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("caps are three integers t,q,a")
    return tuple(nonneg_int(p) for p in parts)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON list of reports")
    common.add_argument("--jobs", type=positive_int, default=1,
                        help="worker processes for independent cases")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="partident", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="command", required=True)

    compute = top.add_parser("compute", help="print one object")
    csub = compute.add_subparsers(dest="what", required=True)
    c = csub.add_parser("genbinom", help="generalized binomial <lambda, r>")
    c.add_argument("--partition", type=partition_arg, required=True)
    c.add_argument("--r", type=nonneg_int, required=True)
    c = csub.add_parser("pjk", help="the polynomial P_jk(X)")
    c.add_argument("--j", type=nonneg_int, required=True)
    c.add_argument("--k", type=nonneg_int, required=True)
    c = csub.add_parser("partitions", help="partitions of n, reverse lexicographic")
    c.add_argument("--n", type=nonneg_int, required=True)
    c = csub.add_parser("zmu", help="z_mu of a partition")
    c.add_argument("--partition", type=partition_arg, required=True)
    c = csub.add_parser("dk", help="power sum of contents d_k(lambda)")
    c.add_argument("--partition", type=partition_arg, required=True)
    c.add_argument("--alpha", type=alpha_arg, default=Fraction(1))
    c.add_argument("--k", type=nonneg_int, required=True)
    c = csub.add_parser("fjk", help="F_jk(lambda) = P_jk(d_1, d_2, ...)")
    c.add_argument("--partition", type=partition_arg, required=True)
    c.add_argument("--alpha", type=alpha_arg, default=Fraction(1))
    c.add_argument("--j", type=nonneg_int, required=True)
    c.add_argument("--k", type=nonneg_int, required=True)
    c = csub.add_parser("pochhammer", help="(z)_lambda")
    c.add_argument("--partition", type=partition_arg, required=True)
    c.add_argument("--alpha", type=alpha_arg, default=Fraction(1))

    verify = top.add_parser("verify", help="run identity checks")
    vsub = verify.add_subparsers(dest="what", required=True)
    v = vsub.add_parser("theorem1", parents=[common])
    v.add_argument("--n-max", type=positive_int, default=5)
    v.add_argument("--u-cap", type=nonneg_int, default=5)
    v = vsub.add_parser("theorem2", parents=[common])
    v.add_argument("--n-max", type=positive_int, default=6)
    v.add_argument("--u-cap", type=nonneg_int, default=4)
    v = vsub.add_parser("theorem3", parents=[common])
    v.add_argument("--letters", type=nonneg_int, default=3)
    v.add_argument("--caps", type=caps_arg, default=(3, 3, 3))
    v = vsub.add_parser("theorem4", parents=[common])
    v.add_argument("--partition", type=partition_arg, required=True)
    v.add_argument("--alpha", type=alpha_arg, default=Fraction(1))
    v.add_argument("--w-cap", type=nonneg_int, default=6)
    v.add_argument("--x-cap", type=nonneg_int, default=None)
    v = vsub.add_parser("vanishing", parents=[common])
    v.add_argument("--partition", type=partition_arg, required=True)
    v.add_argument("--alpha", type=alpha_arg, default=Fraction(1))
    v.add_argument("--extra", type=positive_int, default=3, help="check |lambda| < i <= |lambda|+extra")
    v.add_argument("--j-max", type=nonneg_int, default=4)
    v = vsub.add_parser("chu", parents=[common], help="row partitions (n)")
    v.add_argument("--n", type=positive_int, default=4)
    v.add_argument("--w-cap", type=nonneg_int, default=6)
    v = vsub.add_parser("eq11", parents=[common], help="generating-function reformulation")
    v.add_argument("--n-max", type=positive_int, default=3)
    v.add_argument("--u-cap", type=nonneg_int, default=3)
    v.add_argument("--letters", type=nonneg_int, default=0)
    v.add_argument("--x-zero", action="store_true")
    vsub.add_parser("formulary", parents=[common],
                    help="partition, symmetric-function and lambda-ring formulary")
    vsub.add_parser("all", parents=[common], help="the full default sweep")
    return parser


def _compute(args) -> str:
    if args.what == "genbinom":
        return str(gen_binom(args.partition, args.r))
    if args.what == "pjk":
        return str(p_jk(args.j, args.k))
    if args.what == "partitions":
        return "\n".join(str(p) for p in enumerate_partitions(args.n))
    if args.what == "zmu":
        return str(args.partition.z())
    if args.what == "dk":
        return str(app.d_k(args.partition, args.alpha, args.k))
    if args.what == "fjk":
        return str(app.f_jk(args.partition, args.alpha, args.j, args.k))
    if args.what == "pochhammer":
        return str(app.pochhammer_lambda(args.partition, args.alpha))
    raise AssertionError(args.what)


def formulary(seed: int) -> list:
    return [
        sweeps.genbinom_oracle(), sweeps.pjk_dual(), sweeps.pjk_closed_forms(),
        sweeps.lambda_table(), sweeps.lambda_rules(seed), sweeps.lambda_q_formulas(),
        sweeps.cauchy_formulas(), sweeps.kernel_formulas(), sweeps.binomial_series(),
        sweeps.subset_products(),
    ]


def _verify(args) -> list:
    w = args.what
    if w == "theorem1":
        return ids.verify_theorem1(args.n_max, args.u_cap, args.jobs)
    if w == "theorem2":
        return ids.verify_theorem2(args.n_max, args.u_cap, args.jobs)
    if w == "theorem3":
        return [ids.verify_theorem3(args.letters, args.caps)]
    if w == "theorem4":
        return [app.verify_theorem4(args.partition, args.alpha, args.w_cap, args.x_cap)]
    if w == "vanishing":
        n = args.partition.weight
        return [app.verify_vanishing(args.partition, args.alpha,
                                     range(n + 1, n + args.extra + 1), range(args.j_max + 1))]
    if w == "chu":
        return [app.chu_vandermonde_demo(k, args.w_cap) for k in range(1, args.n + 1)]
    if w == "eq11":
        return [ids.verify_eq11_reformulation(args.n_max, cap_u=args.u_cap,
                                              x_zero=args.x_zero, letters=args.letters)]
    if w == "formulary":
        return formulary(args.seed)
    if w == "all":
        return sweeps.default_sweep(args.seed, args.jobs)
    raise AssertionError(w)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
                        format="%(message)s")

    if args.command == "compute":
        try:
            print(_compute(args))
        except ValueError as exc:
            print(f"partident: error: {exc}", file=sys.stderr)
            return 2
        return 0

    try:
        reports = _verify(args)
    except ValueError as exc:
        print(f"partident: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        json.dump([r.to_json() for r in reports], sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for r in reports:
            print(r.line())
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed}/{len(reports)} passed")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
