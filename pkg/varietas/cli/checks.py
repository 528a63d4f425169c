"""
checks.py — One function per verification, each returning a CheckRecord.

The CLI verbs and the reproduction suite both go through these, so a check reads
the same whichever way it was started. A record passes when its claim holds;
informational checks with nothing to compare against always pass.
"""

import random
from fractions import Fraction
from typing import Callable, Optional, Sequence

from varietas.cli.report import CheckRecord
from varietas.core.check_log import CheckTimer
from varietas.core.errors import InputError, VarietasError
from varietas.engine.basis import multilinear_basis
from varietas.engine.consequences import consequence_space, dimensions, identity_holds
from varietas.engine.kernel import compare_spaces, generated_by, generator_closure, kernel_of_expansion
from varietas.engine.presentation import VarietyPresentation, to_tree_presentation
from varietas.engine.symmetric import s3_decomposition
from varietas.expansions.derivations import diff_identity_holds
from varietas.expansions.maps import ExpansionKind, ExpansionMap, retarget
from varietas.expansions.polarization import depolarizes_into, polarize
from varietas.expansions.rota_baxter import rb_identity_holds
from varietas.linalg.rational import RationalMatrix, format_rational, rref
from varietas.operads.dual import dual_dual_recovers, dual_of
from varietas.operads.hilbert import hilbert_prefix, koszul_test
from varietas.operads.opposite import opposite
from varietas.terms.parser import parse
from varietas.terms.polynomial import Polynomial, integral_form
from varietas.terms.printer import format_monomial, print_canonical
from varietas.terms.signature import JORDAN, LIE, MAGMA, POLAR, STAR, WORDS

_SIGN_KIND = {"minus": ExpansionKind.COMMUTATOR, "plus": ExpansionKind.ANTICOMMUTATOR}
_SIGN_SIG = {"minus": LIE, "plus": JORDAN}


def identity_list(polys: Sequence[Polynomial]) -> str:
    return "; ".join(print_canonical(p) for p in polys) or "none"


def timed(name: str, fn: Callable[..., CheckRecord], *args, **kwargs) -> CheckRecord:
    """Run one check under a CheckTimer; library errors become failed records."""
    with CheckTimer(name) as t:
        try:
            record = fn(*args, **kwargs)
        except VarietasError as exc:
            record = CheckRecord(name, "error", False, values={"error": str(exc)})
        record.name = name
        t.passed = record.passed
    record.elapsed_ms = t.elapsed_ms
    return record


# ── Components and operads ───────────────────────────────────────────────────

def dims_check(v: VarietyPresentation, max_degree: int, expected: Optional[Sequence[int]] = None) -> CheckRecord:
    dims = dimensions(v, max_degree)
    passed = expected is None or list(expected) == dims
    return CheckRecord(
        f"dim:{v.name}", " ".join(map(str, dims)), passed,
        inputs={"variety": v.name, "max_degree": max_degree},
        values={} if expected is None else {"expected": list(expected)},
    )


def koszul_check(
    v: VarietyPresentation,
    dual: VarietyPresentation,
    n: int,
    expected: Optional[Sequence[str]] = None,
) -> CheckRecord:
    h, hdual = hilbert_prefix(v, n), hilbert_prefix(dual, n)
    result = koszul_test(h, hdual, n)
    residual = [format_rational(x) for x in result.residual]
    values = {
        "dims": list(h.dims),
        "dual_dims": list(hdual.dims),
        "residual": residual,
        "reverse_residual": [format_rational(x) for x in result.reverse_residual],
    }
    if expected is not None:
        values["expected"] = list(expected)
    passed = expected is None or list(expected) == residual
    return CheckRecord(
        f"koszul:{v.name}", result.verdict, passed,
        inputs={"operad": v.name, "dual": dual.name, "degree": n}, values=values,
    )


def parse_basis(texts: Sequence[str], v: VarietyPresentation) -> list:
    out = []
    for text in texts:
        p = parse(text, v.sig)
        if len(p) != 1:
            raise InputError(f"basis entry {text!r} is not a single monomial")
        out.append(p.monomials()[0])
    return out


def dual_check(
    v: VarietyPresentation,
    basis: Optional[Sequence[str]] = None,
    expected: Optional[VarietyPresentation] = None,
) -> CheckRecord:
    chosen = parse_basis(basis, v) if basis else None
    result = dual_of(v, chosen)
    values = {
        "basis": ", ".join(format_monomial(m, v.sig) for m in result.basis),
        "relations": result.space.rank,
        "identities": identity_list(result.identities),
        "dual_dual_recovers": dual_dual_recovers(v),
    }
    verdict, passed = f"{result.space.rank} relations", True
    if expected is not None:
        target = consequence_space(to_tree_presentation(expected), 3)
        passed = result.space.equals(target)
        verdict = "equal" if passed else "differs"
        values["expected"] = expected.name
    return CheckRecord(f"dual:{v.name}", verdict, passed, inputs={"variety": v.name}, values=values)


def opposite_check(
    left: VarietyPresentation,
    right: VarietyPresentation,
    min_degree: int = 3,
    max_degree: int = 5,
    kernel_degree: int = 4,
) -> CheckRecord:
    op = opposite(left)
    spaces = {
        n: consequence_space(op, n).equals(consequence_space(right, n))
        for n in range(min_degree, max_degree + 1)
    }
    kernels = {}
    for sign in ("minus", "plus"):
        for n in range(2, kernel_degree + 1):
            kernels[f"{sign}{n}"] = derived_kernel(op, sign, n).equals(derived_kernel(right, sign, n))
    passed = all(spaces.values()) and all(kernels.values())
    return CheckRecord(
        f"opposite:{left.name}", "coincide" if passed else "differ", passed,
        inputs={"variety": left.name, "compare": right.name},
        values={
            "opposite": identity_list(op.identities),
            "spaces_equal": [spaces[n] for n in sorted(spaces)],
            "kernels_equal": [kernels[k] for k in sorted(kernels)],
        },
    )


def decomposition_check(texts: Sequence[str]) -> CheckRecord:
    ids = [parse(t, WORDS) for t in texts]
    result = s3_decomposition(ids)
    return CheckRecord(
        "s3-decomposition", "direct sum" if result.direct_sum else "not a direct sum", result.direct_sum,
        values={"orbit_dims": list(result.orbit_dims), "total_rank": result.total_rank, "columns": result.columns},
    )


# ── Derived algebras ─────────────────────────────────────────────────────────

def derived_kernel(v: VarietyPresentation, sign: str, n: int, scale=1):
    e = ExpansionMap(_SIGN_KIND[sign], Fraction(scale))
    return kernel_of_expansion(_SIGN_SIG[sign], n, e, v)


def derived_check(
    v: VarietyPresentation,
    sign: str,
    generators: Sequence[Polynomial],
    max_degree: int,
    expected: str = "equal",
) -> CheckRecord:
    verdicts, quotient = [], []
    for n in range(2, max_degree + 1):
        kernel = derived_kernel(v, sign, n)
        gens = [g for g in generators if g.degree <= n]
        verdicts.append(generated_by(gens, kernel).value)
        quotient.append(kernel.dim)
    verdict = next((x for x in verdicts if x != "equal"), "equal")
    values = {"verdicts": verdicts, "kernel_quotient": quotient}
    if expected != "equal":
        values["expected"] = expected
    return CheckRecord(
        f"derived:{v.name}:{sign}", verdict, verdict == expected,
        inputs={"variety": v.name, "sign": sign, "max_degree": max_degree},
        values=values,
    )


def member_check(
    v: VarietyPresentation,
    sign: str,
    candidates: Sequence[Polynomial],
    baseline: Optional[Sequence[Polynomial]] = None,
) -> CheckRecord:
    n = candidates[0].degree
    kernel = derived_kernel(v, sign, n)
    holds = all(kernel.contains(p) for p in candidates)
    values = {"kernel_rank": kernel.rank}
    if baseline is not None:
        closure = generator_closure([g for g in baseline if g.degree <= n], kernel.sig, n)
        values["baseline"] = compare_spaces(closure, kernel).value
    return CheckRecord(
        f"member:{v.name}:{sign}", "member" if holds else "not a member", holds,
        inputs={"variety": v.name, "sign": sign, "degree": n}, values=values,
    )


def basis_count_check(name: str, sign: str, generators: Sequence[Polynomial], expected=None) -> CheckRecord:
    sig = _SIGN_SIG[sign]
    dims = [
        generator_closure([g for g in generators if g.degree <= n], sig, n).dim for n in (3, 4)
    ]
    passed = expected is None or list(expected) == dims
    return CheckRecord(
        f"basis:{name}", " ".join(map(str, dims)), passed,
        values={} if expected is None else {"expected": list(expected)},
    )


# ── Membership and expansions ────────────────────────────────────────────────

def membership_check(v: VarietyPresentation, p: Polynomial, certificate: bool = False) -> CheckRecord:
    result = identity_holds(v, p, certificate)
    values = {}
    if certificate and result.certificate is not None:
        values["certificate"] = " + ".join(
            f"({format_rational(c)}) * [{print_canonical(g)}]" for c, g in result.certificate
        ) or "0"
    return CheckRecord(
        f"check:{v.name}", "holds" if result else "fails", result.holds,
        inputs={"identity": print_canonical(p)}, values=values,
    )


def derivation_check(name: str, v: VarietyPresentation, p: Polynomial) -> CheckRecord:
    result = diff_identity_holds(v, p)
    return CheckRecord(
        f"derivation:{name}", "holds" if result else "fails", result.holds,
        inputs={"variety": v.name, "identity": print_canonical(p)},
        values={
            "components": len(result.components),
            "failing": "; ".join(result.failing) or "none",
        },
    )


def rota_baxter_check(name: str, v: VarietyPresentation, p: Polynomial) -> CheckRecord:
    result = rb_identity_holds(v, p, ExpansionMap(ExpansionKind.ROTA_BAXTER))
    return CheckRecord(
        f"rota-baxter:{name}", "holds" if result else "fails", result.holds,
        inputs={"variety": v.name, "identity": print_canonical(p)},
        values={"universe": result.universe, "relations": result.relations},
    )


def star_check(v: VarietyPresentation) -> CheckRecord:
    e = ExpansionMap(ExpansionKind.STAR)
    results = [
        rb_identity_holds(v, retarget(f, STAR), e) for f in to_tree_presentation(v).identities
    ]
    holds = all(results)
    return CheckRecord(
        f"star:{v.name}", "holds" if holds else "fails", holds,
        inputs={"variety": v.name}, values={"identities": len(results)},
    )


def polarization_check(
    v: VarietyPresentation,
    convention: str,
    expected: Optional[Sequence] = None,
) -> CheckRecord:
    result = polarize(v, convention)
    values = {"identities": identity_list(result.identities)}
    passed = True
    if v.sig.is_word:
        values["depolarizes"] = depolarizes_into(result, v)
        passed = values["depolarizes"]
    verdict = f"{len(result.identities)} identities"
    if expected is not None:
        polys = [parse(x, POLAR) if isinstance(x, str) else x for x in expected]
        matches = result.matches(polys)
        values["matches_expected"] = matches
        passed = passed and matches
        verdict = "equal" if matches else "differs"
    return CheckRecord(
        f"polarize:{v.name}", verdict, passed,
        inputs={"variety": v.name, "convention": convention}, values=values,
    )


# ── Property checks ──────────────────────────────────────────────────────────

def ambient_check(varieties: Sequence[VarietyPresentation], max_degree: int) -> CheckRecord:
    bad = []
    for v in varieties:
        tree = to_tree_presentation(v)
        if dimensions(v, max_degree) != dimensions(tree, max_degree):
            bad.append(v.name)
    return CheckRecord(
        "property:ambient-agreement", "agree" if not bad else "disagree", not bad,
        values={"varieties": len(varieties), "failing": ", ".join(bad) or "none"},
    )


def stability_check(varieties: Sequence[VarietyPresentation], max_degree: int) -> CheckRecord:
    bad = [
        f"{v.name}:{n}"
        for v in varieties
        for n in range(2, max_degree + 1)
        if not consequence_space(v, n).is_sn_stable()
    ]
    return CheckRecord(
        "property:sn-stability", "stable" if not bad else "unstable", not bad,
        values={"failing": ", ".join(bad) or "none"},
    )


def scaling_check(v: VarietyPresentation, n: int, scales: Sequence) -> CheckRecord:
    bad = []
    for sign in ("minus", "plus"):
        base = derived_kernel(v, sign, n)
        for s in scales:
            if not derived_kernel(v, sign, n, Fraction(s)).equals(base):
                bad.append(f"{sign}:{s}")
    return CheckRecord(
        "property:scaling-invariance", "invariant" if not bad else "not invariant", not bad,
        inputs={"variety": v.name, "degree": n}, values={"failing": ", ".join(bad) or "none"},
    )


def _random_matrix(rng: random.Random) -> RationalMatrix:
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    return RationalMatrix.from_rows(
        [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)],
        cols=cols,
    )


def rref_check(trials: int, seed: int) -> CheckRecord:
    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        m = _random_matrix(rng)
        r = rref(m)
        rows = m.to_rows()
        rng.shuffle(rows)
        shuffled = rref(RationalMatrix.from_rows(rows, cols=m.cols))
        if rref(r.matrix).rows != r.rows or shuffled.rows != r.rows:
            failures += 1
    return CheckRecord(
        "property:rref", "idempotent and unique" if not failures else "violated", not failures,
        values={"trials": trials, "failures": failures},
    )


def random_identity(rng: random.Random) -> Polynomial:
    sig = rng.choice((MAGMA, WORDS, POLAR))
    n = rng.randint(2, 4)
    monos = multilinear_basis(sig, n).monomials
    chosen = rng.sample(monos, rng.randint(1, min(4, len(monos))))
    terms = {}
    for m in chosen:
        c = Fraction(rng.randint(1, 5), rng.randint(1, 4))
        terms[m] = c if rng.random() < 0.5 else -c
    return Polynomial(terms, sig)


def roundtrip_check(count: int, seed: int) -> CheckRecord:
    rng = random.Random(seed)
    failures = 0
    for _ in range(count):
        p = random_identity(rng)
        if parse(print_canonical(p), p.sig) != integral_form(p):
            failures += 1
    return CheckRecord(
        "property:parse-print", "round-trips" if not failures else "mismatch", not failures,
        values={"identities": count, "failures": failures},
    )
