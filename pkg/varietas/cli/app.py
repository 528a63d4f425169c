"""
app.py — Command-line entry point.

    varietas dim fixtures/as3.var --max-degree 5
    varietas koszul fixtures/as3.var fixtures/dual-as3.var -N 5
    varietas derived fixtures/as3.var --sign minus --degree 4 --generators fixtures/lie-nilp4.ids
    varietas paper-suite

Exit status: 0 when every check passes, 1 when a check fails, 2 on bad
arguments or unreadable input.
"""

import argparse
import sys
from pathlib import Path

from varietas.cli import checks
from varietas.cli.inputs import load_ids, load_ref, sign_signature
from varietas.cli.report import CheckRecord, RunReport
from varietas.cli.suite import run_suite
from varietas.core.config import get_settings
from varietas.core.errors import InputError, VarietasError
from varietas.core.logging import get_logger, setup_logging
from varietas.engine.presentation import load_identities
from varietas.terms.parser import parse
from varietas.terms.signature import DENDRIFORM, NOVIKOV, POLAR

logger = get_logger()


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split()]


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "kv"), default="text")
    common.add_argument("--output", help="write the report to this file instead of stdout")
    common.add_argument("--threads", type=int, default=None, help="worker threads for closures")
    common.add_argument("--timings", action="store_true", help="include elapsed times in the report")
    common.add_argument("--log-level", default=None)

    parser = argparse.ArgumentParser(prog="varietas", description="Verify identities of varieties of algebras.")
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("dim", parents=[common], help="dimensions of multilinear components")
    p.add_argument("variety")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--expect", type=_ints, help='expected dimensions, e.g. "1 2 4 1 1"')

    p = verbs.add_parser("dual", parents=[common], help="dual identities by Lie-admissibility")
    p.add_argument("variety")
    p.add_argument("--basis", help="comma-separated degree-3 basis monomials")
    p.add_argument("--compare", help="variety whose degree-3 relations the dual should equal")

    p = verbs.add_parser("koszul", parents=[common], help="Hilbert series composition test")
    p.add_argument("operad")
    p.add_argument("dual")
    p.add_argument("-N", dest="degree", type=int, default=5)
    p.add_argument("--expect", type=str.split, help='expected residual, e.g. "0 0 0 0 1/5"')

    p = verbs.add_parser("polarize", parents=[common], help="polarized identities")
    p.add_argument("variety")
    p.add_argument("--convention", choices=("paper", "standard"), default=settings.convention)
    p.add_argument("--compare", help="identity-list file over [,] and {,} to compare against")

    p = verbs.add_parser("derived", parents=[common], help="identities of the commutator or anti-commutator")
    p.add_argument("variety")
    p.add_argument("--sign", choices=("minus", "plus"), required=True)
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--generators", help="identity-list file of candidate generators")
    p.add_argument("--identity", help="test one identity for membership in the kernel")

    p = verbs.add_parser("check", parents=[common], help="whether an identity follows from a variety")
    p.add_argument("variety")
    p.add_argument("identity")
    p.add_argument("--certificate", action="store_true")

    p = verbs.add_parser("expand-check", parents=[common], help="identities through derivations or Rota-Baxter operators")
    p.add_argument("variety")
    p.add_argument("identity", nargs="?")
    p.add_argument("--kind", choices=("derivation", "rota_baxter", "star"), required=True)

    p = verbs.add_parser("opposite", parents=[common], help="opposite variety and comparison")
    p.add_argument("variety")
    p.add_argument("--compare", help="variety to compare the opposite with")
    p.add_argument("--max-degree", type=int, default=5)

    p = verbs.add_parser("s3-decomp", parents=[common], help="orbit decomposition of degree-3 word identities")
    p.add_argument("identities", nargs="*")

    p = verbs.add_parser("paper-suite", parents=[common], help="run every paper check")
    p.add_argument("--suite", default=settings.suite_file)
    p.add_argument("--quick", action="store_true", help="skip the checks marked slow")
    return parser


# ── Verbs ────────────────────────────────────────────────────────────────────

def _dim(args, report: RunReport):
    v = load_ref(args.variety)
    report.add(checks.timed(f"dim:{v.name}", checks.dims_check, v, args.max_degree, args.expect))


def _dual(args, report: RunReport):
    v = load_ref(args.variety)
    basis = [b.strip() for b in args.basis.split(",")] if args.basis else None
    expected = load_ref(args.compare) if args.compare else None
    report.add(checks.timed(f"dual:{v.name}", checks.dual_check, v, basis, expected))


def _koszul(args, report: RunReport):
    v, dual = load_ref(args.operad), load_ref(args.dual)
    report.add(checks.timed(f"koszul:{v.name}", checks.koszul_check, v, dual, args.degree, args.expect))


def _polarize(args, report: RunReport):
    v = load_ref(args.variety)
    expected = load_identities(args.compare, POLAR) if args.compare else None
    report.add(checks.timed(f"polarize:{v.name}", checks.polarization_check, v, args.convention, expected))


def _derived(args, report: RunReport):
    v = load_ref(args.variety)
    name = f"derived:{v.name}:{args.sign}"
    if args.identity:
        p = parse(args.identity, sign_signature(args.sign))
        report.add(checks.timed(name, checks.member_check, v, args.sign, [p]))
    elif args.generators:
        gens = load_ids(args.generators, sign_signature(args.sign))
        report.add(checks.timed(name, checks.derived_check, v, args.sign, gens, args.degree))
    else:
        def kernel_only() -> CheckRecord:
            kernel = checks.derived_kernel(v, args.sign, args.degree)
            return CheckRecord(
                name, f"kernel rank {kernel.rank}", True,
                inputs={"variety": v.name, "sign": args.sign, "degree": args.degree},
                values={"identities": checks.identity_list(kernel.polynomials())},
            )
        report.add(checks.timed(name, kernel_only))


def _check(args, report: RunReport):
    v = load_ref(args.variety)
    p = parse(args.identity, v.sig)
    report.add(checks.timed(f"check:{v.name}", checks.membership_check, v, p, args.certificate))


def _expand_check(args, report: RunReport):
    v = load_ref(args.variety)
    if args.kind == "star":
        report.add(checks.timed(f"star:{v.name}", checks.star_check, v))
        return
    if not args.identity:
        raise InputError(f"{args.kind} checks need an identity")
    if args.kind == "derivation":
        p = parse(args.identity, NOVIKOV)
        report.add(checks.timed("derivation:input", checks.derivation_check, "input", v, p))
    else:
        p = parse(args.identity, DENDRIFORM)
        report.add(checks.timed("rota-baxter:input", checks.rota_baxter_check, "input", v, p))


def _opposite(args, report: RunReport):
    v = load_ref(args.variety)
    if args.compare:
        other = load_ref(args.compare)
        report.add(checks.timed(
            f"opposite:{v.name}", checks.opposite_check, v, other, 3, args.max_degree,
        ))
        return
    from varietas.operads.opposite import opposite
    op = opposite(v)
    report.add(CheckRecord(
        f"opposite:{v.name}", op.name, True, values={"identities": checks.identity_list(op.identities)},
    ))


def _s3_decomp(args, report: RunReport):
    texts = args.identities or [
        "abc + bac + acb + cab + bca + cba",
        "abc - bac - acb + cab + bca - cba",
        "abc + bac - bca - cba",
        "abc + acb - cba - cab",
    ]
    report.add(checks.timed("s3-decomposition", checks.decomposition_check, texts))


_VERBS = {
    "dim": _dim,
    "dual": _dual,
    "koszul": _koszul,
    "polarize": _polarize,
    "derived": _derived,
    "check": _check,
    "expand-check": _expand_check,
    "opposite": _opposite,
    "s3-decomp": _s3_decomp,
}


def run(argv=None) -> tuple[RunReport, argparse.Namespace]:
    """Parse argv and execute one verb. Library errors propagate to the caller."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    if args.threads is not None:
        get_settings().threads = max(1, args.threads)
    command = " ".join(["varietas"] + list(sys.argv[1:] if argv is None else argv))
    if args.verb == "paper-suite":
        report = run_suite(args.suite, quick=args.quick)
        report.command = command
    else:
        report = RunReport(command)
        _VERBS[args.verb](args, report)
    logger.info("run_finished", verb=args.verb, checks=len(report.records), passed=report.passed)
    return report, args


def main(argv=None) -> int:
    parser = build_parser()
    try:
        report, args = run(argv)
    except VarietasError as exc:
        print(f"varietas: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    text = report.render(args.format, timings=args.timings)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
