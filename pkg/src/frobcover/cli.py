"""Command-line front end.

Exit codes: 0 every check passed, 1 a check failed, 2 bad input,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
import warnings

from . import formats
from .catalog import random_element
from .coverings import (
    IncompatibleSpec,
    build_interval_covering,
    check_covering,
    check_resolution,
    covering_isomorphic_via,
    group_quotient_covering,
    minimal_branching_degree,
    resolve_covering,
    subgroup_quotient_covering,
)
from .errors import CapExceeded, InputError, RootFindingError
from .frobenius import (
    CYCLE_SUM_CAP,
    is_frobenius,
    phi_cycle_sum,
    phi_diagonal_determinant,
    phi_recursive,
    series_identity_check,
)
from .polycover import PolyTransfer, check_poly_transfer, finite_model, poly_covering_numeric_check
from .report import Report, failed, passed, serialize
from .scalars import DEFAULT_EPSILON, ComplexField, field_from_name
from .suite import CRITERIA, SuiteConfig, run_suite
from .transfer import (
    CoveringFunctionData,
    TransferTriple,
    check_transfer,
    check_transfer_consequences,
    kernel_triviality,
    theorem_5_2_roundtrip,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class Timer:
    """Adds results to a report together with their elapsed time."""

    def __init__(self, report):
        self.report = report

    def run(self, fn, *args, **kwargs):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        self.report.add(result, time.perf_counter() - start)
        return result


def _field(args):
    if args.scalar == "complex":
        return ComplexField(args.epsilon)
    return field_from_name(args.scalar)


# -- subcommands ------------------------------------------------------------------------


def cmd_check_frobenius(args):
    data = formats.load(args.input)
    f = formats.parse_map(data, _field(args))
    n = args.n if args.n is not None else data.get("n")
    if not isinstance(n, int) or n < 0:
        raise InputError("$.n: give the degree n in the input or with --n")
    if args.max_n is not None and n > args.max_n:
        raise CapExceeded(f"n = {n} exceeds --max-n {args.max_n}", count=n)
    report = Report("check-frobenius")
    timer = Timer(report)
    frob = timer.run(is_frobenius, f, n)
    A = f.domain
    rng = random.Random(args.seed)
    samples = [A.basis(i) for i in range(A.dim)] + [random_element(rng, A) for _ in range(2)]
    timer.run(_engine_agreement, f, n + 1, samples)
    timer.run(_unit_lemma, f, n, samples)
    if frob and A.field.exact and n >= 1:
        # the series identity is a property of Frobenius maps only
        timer.run(_series, f, n, samples)
    return report, {}


def _engine_agreement(f, m, samples):
    for j, a in enumerate(samples):
        values = [phi_recursive(f, m, [a] * m), phi_diagonal_determinant(f, m, a)]
        if m <= CYCLE_SUM_CAP:
            values.append(phi_cycle_sum(f, [a] * m))
        if any(v != values[0] for v in values):
            return failed("engine_agreement", j, values)
    return passed("engine_agreement", len(samples))


def _unit_lemma(f, n, samples):
    A = f.domain
    f1 = f(A.unit)
    for j, a in enumerate(samples):
        rhs = f(a)
        for k in range(1, n + 1):
            rhs = rhs * (f1 - k)
        lhs = phi_recursive(f, n + 1, [a] + [A.unit] * n)
        if lhs != rhs:
            return failed("unit_lemma", j, [lhs, rhs])
    return passed("unit_lemma", len(samples))


def _series(f, n, samples):
    for j, a in enumerate(samples):
        r = series_identity_check(f, n, a)
        if not r:
            return failed("series_identity", [j, r.witness], r.value)
    return passed("series_identity", len(samples))


def _build(data, args):
    """Covering (and optional DOT text) from any of the three input kinds."""
    if "partitions" in data:
        spec = formats.parse_interval_spec(data)
        ic = build_interval_covering(spec)
        return ic.covering, ic.to_dot(), {"minimal_degree": minimal_branching_degree(ic)}
    if "generators" in data:
        G, H = formats.parse_group_action(data)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            c = group_quotient_covering(G) if H is None else subgroup_quotient_covering(G, H)
        return c, covering_dot(c), {}
    if "coefficients" in data:
        pc, samples = formats.parse_polynomial(data, args.epsilon)
        if not samples:
            raise InputError("$.samples: a polynomial covering needs sample points")
        c = finite_model(pc, samples)
        return c, covering_dot(c), {}
    if "X" in data:
        c = formats.parse_covering(data)
        return c, covering_dot(c), {}
    raise InputError("$: expected an interval spec, a group action, a polynomial or a covering")


def covering_dot(c):
    lines = ["graph covering {", "  rankdir=BT;"]
    for y in c.Y:
        lines.append(f'  "{y}" [shape=box];')
    for x in c.X:
        m = c.t[c.h[x]].mult(x)
        lines.append(f'  "{x}" [label="{x} ({m})"];')
        lines.append(f'  "{x}" -- "{c.h[x]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_build_cover(args):
    data = formats.load(args.input)
    report = Report("build-cover")
    try:
        c, dot, extra = _build(data, args)
    except IncompatibleSpec as exc:
        report.add(failed("compatible_sequence", list(exc.pair), detail=str(exc)))
        return report, {}
    Timer(report).run(check_covering, c)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot)
    return report, {"covering": formats.dump_covering(c), **extra}


def cmd_check_cover(args):
    c = formats.parse_covering(formats.load(args.input))
    report = Report("check-cover")
    Timer(report).run(check_covering, c)
    return report, {}


def cmd_check_transfer(args):
    data = formats.load(args.input)
    report = Report("check-transfer")
    timer = Timer(report)
    if "f" in data:
        f = formats.parse_map(data["f"], _field(args), "$.f")
        tau_rows = formats.need(formats.need(data, "tau", "$"), "matrix", "$.tau")
        tau = formats.parse_matrix(tau_rows, f.codomain, f.domain, "$.tau.matrix")
        n = data.get("n")
        if not isinstance(n, int):
            raise InputError("$.n: expected an integer")
        tt = TransferTriple(f, tau, n)
        h = None
    else:
        c = formats.parse_covering(data)
        r = timer.run(check_covering, c)
        if not r:
            return report, {}
        cfd = CoveringFunctionData.of(c)
        tt = cfd.transfer()
        h = c.h
    r = timer.run(check_transfer, tt)
    if r:
        timer.run(check_transfer_consequences, tt)
        if tt.A.field.exact:
            timer.run(kernel_triviality, tt)
        if h is not None:
            timer.run(_rebuild, h, tt)
    return report, {}


def _rebuild(h, tt):
    return theorem_5_2_roundtrip(h, tt.tau, tt.n)[1]


def cmd_poly_cover(args):
    data = formats.load(args.input)
    pc, samples = formats.parse_polynomial(data, args.epsilon)
    if not samples:
        raise InputError("$.samples: give at least one sample point")
    report = Report("poly-cover")
    timer = Timer(report)
    timer.run(poly_covering_numeric_check, pc, samples)
    p = pc.exact_polynomial()
    D = data.get("degree_bound", 2 * pc.n)
    pt = PolyTransfer(p, D)
    timer.run(check_poly_transfer, pt)
    return report, {"tau": [serialize(pt.tau_monomial(k)) for k in range(D + 1)]}


def cmd_resolve(args):
    data = formats.load(args.input)
    c, _, _ = _build(data, args)
    report = Report("resolve")
    res = resolve_covering(c, max_size=args.max_size)
    Timer(report).run(check_resolution, res)
    ok = covering_isomorphic_via(res)
    report.add(passed("reconstruction") if ok else failed("reconstruction", "relabelled covering differs"))
    return report, {"labellings": len(res.E)}


def cmd_suite(args):
    only = set(args.only) if args.only else None
    cfg = SuiteConfig(seed=args.seed, epsilon=args.epsilon, max_n=args.max_n)
    return run_suite(cfg, only=only), {}


# -- parser --------------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scalar", choices=["rational", "complex"], default="rational",
                        help="scalar backend for algebra input (default rational)")
    common.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON,
                        help="comparison tolerance of the complex backend")
    common.add_argument("--max-n", type=int, default=None, help="cap on the degree n")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--dot", help="write a DOT diagram of the covering here")
    common.add_argument("--timings", action="store_true", help="include elapsed seconds per check")

    parser = argparse.ArgumentParser(prog="frobcover",
                                     description="Frobenius n-homomorphisms, transfers and branched coverings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-frobenius", parents=[common], help="is a linear map Frobenius of degree n")
    p.add_argument("input")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(fn=cmd_check_frobenius)

    p = sub.add_parser("build-cover", parents=[common], help="covering from an interval spec, group action or polynomial")
    p.add_argument("input")
    p.set_defaults(fn=cmd_build_cover)

    p = sub.add_parser("check-cover", parents=[common], help="check the covering axioms")
    p.add_argument("input")
    p.set_defaults(fn=cmd_check_cover)

    p = sub.add_parser("check-transfer", parents=[common], help="transfer conditions and their consequences")
    p.add_argument("input")
    p.set_defaults(fn=cmd_check_transfer)

    p = sub.add_parser("poly-cover", parents=[common], help="numeric and symbolic checks for z -> p(z)")
    p.add_argument("input")
    p.set_defaults(fn=cmd_poly_cover)

    p = sub.add_parser("resolve", parents=[common], help="resolution by labellings")
    p.add_argument("input")
    p.add_argument("--max-size", type=int, default=200_000)
    p.set_defaults(fn=cmd_resolve)

    p = sub.add_parser("suite", parents=[common], help="run the acceptance suite")
    p.add_argument("--only", type=int, nargs="+", choices=range(1, len(CRITERIA) + 1), metavar="K",
                   help="run only these criteria (1-based)")
    p.set_defaults(fn=cmd_suite)
    return parser


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, extra = args.fn(args)
    except CapExceeded as exc:
        print(f"error: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RootFindingError as exc:
        print(f"error: {exc} (residual {exc.residual})", file=sys.stderr)
        return EXIT_FAIL
    out = report.to_json(include_timings=args.timings)
    out.update(extra)
    _emit(json.dumps(out, indent=2) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
