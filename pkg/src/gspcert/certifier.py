"""Maximal-subgroup exclusion checks for the residual projective image.

The classification of maximal subgroups of PGSp(4, p) (p >= 7) leaves six
ways the image of a residual Galois representation with surjective
similitude multiplier can fail to be everything: stabilize a line or
hyperplane (reducible), stabilize a rational or conjugate pair of planes
(imprimitive / scalar extension), or land in one of the three exceptional
quotients.  Each check below rules out one route using nothing but the mod-p
Frobenius data; a check that fails proves nothing (the logic is one-sided),
so the only verdicts are LARGE_IMAGE and INCONCLUSIVE.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd as int_gcd
from math import lcm
from typing import Mapping, Sequence

from .eigen_data import (
    EigenformDataset,
    FrobeniusRecord,
    ResidualDataset,
    hecke_charpoly,
    specialize,
)
from .finite_field import in_subfield, legendre, make_field
from .polynomial import Polynomial, conjugate_poly, roots_in

VERDICT_LARGE_IMAGE = "LARGE_IMAGE"
VERDICT_INCONCLUSIVE = "INCONCLUSIVE"

PASS = "pass"
FAIL = "fail"

# hypotheses the certificate inherits from the construction of the
# residual representation; they are echoed, never verified
STANDING_ASSUMPTIONS = ("formal_reduction_admissible",)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one exclusion check.

    witnesses lists the Frobenius primes whose data carries the argument;
    data holds the numeric facts a reader needs to replay the check.
    """

    name: str
    status: str
    witnesses: tuple[int, ...]
    justification: str
    data: dict

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass(frozen=True)
class ExceptionalTable:
    """Orders of the exceptional maximal subgroups of PGSp(4, p)."""

    p: int
    entries: tuple[tuple[str, int], ...]


def builtin_exceptional_table(p: int) -> ExceptionalTable:
    """The p = 7 table; other primes must supply their own."""
    if p != 7:
        raise ValueError(f"no built-in exceptional-subgroup table for p = {p}")
    return ExceptionalTable(
        p=7,
        entries=(
            ("PGL(2,7)", 336),
            ("2^4.O4^-(2).2", 3840),
            ("A7.2", 5040),
        ),
    )


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable trace of one certification run."""

    weight: int
    level: int
    dataset_digest: str
    defining_poly: tuple[int, ...]
    p: int
    root: int
    residual_eigenvalues: tuple[tuple[int, int], ...]
    records: tuple[FrobeniusRecord, ...]
    checks: tuple[CheckResult, ...]
    assumptions: tuple[str, ...]
    verdict: str

    @property
    def certified(self) -> bool:
        return self.verdict == VERDICT_LARGE_IMAGE


# ---------------------------------------------------------------------------
# the six checks


def check_linear_constituent(records: Sequence[FrobeniusRecord]) -> CheckResult:
    """Exclude a one-dimensional constituent (reducible cases with a line).

    An unramified-outside-p character of conductor one is a power of the
    cyclotomic character, so a linear constituent would force an F_p root
    on every Frobenius characteristic polynomial.  One rootless polynomial
    refutes it; all rootless primes are recorded.
    """
    counts: dict[str, int] = {}
    witnesses = []
    for rec in records:
        n = len(roots_in(rec.charpoly, 1))
        counts[str(rec.q)] = n
        if n == 0:
            witnesses.append(rec.q)
    ok = bool(witnesses)
    if ok:
        just = (
            f"characteristic polynomials at q in {{{', '.join(str(q) for q in witnesses)}}} "
            "have no root in F_p, so no one-dimensional constituent exists; "
            "rules out every reducible case with a linear piece"
        )
    else:
        just = (
            "every characteristic polynomial has a root in F_p, which is "
            "consistent with a one-dimensional constituent; no exclusion"
        )
    return CheckResult(
        name="linear_constituent",
        status=PASS if ok else FAIL,
        witnesses=tuple(witnesses),
        justification=just,
        data={"base_field_root_counts": counts},
    )


def rational_split_exponent(p: int) -> int:
    """2 * lcm(p(p-1), p^2-1, p-1): annihilates every projective element
    order available inside the rational 2+2 stabilizer GL(2) wr S2."""
    return 2 * lcm(p * (p - 1), p * p - 1, p - 1)


def check_rational_22_split(records: Sequence[FrobeniusRecord], p: int) -> CheckResult:
    """Exclude the stabilizer of a rational 2+2 plane decomposition.

    Every projective element order in that stabilizer divides E2 =
    rational_split_exponent(p); a squarefree record whose companion has
    projective order not dividing E2 cannot lie in it.
    """
    bound = rational_split_exponent(p)
    orders: dict[str, int] = {}
    witnesses = []
    for rec in records:
        if not rec.squarefree or rec.projective_order is None:
            continue
        orders[str(rec.q)] = rec.projective_order
        if bound % rec.projective_order != 0:
            witnesses.append(rec.q)
    witnesses.sort()
    ok = bool(witnesses)
    if ok:
        q = witnesses[0]
        o = orders[str(q)]
        just = (
            f"projective Frobenius order {o} at q = {q} does not divide "
            f"E2 = {bound}, the exponent of the rational plane-pair stabilizer"
        )
    elif orders:
        just = (
            f"every computed projective order divides E2 = {bound}; "
            "consistent with the rational plane-pair stabilizer, no exclusion"
        )
    else:
        just = "no order witnesses available (no squarefree record); no exclusion"
    return CheckResult(
        name="rational_22_split",
        status=PASS if ok else FAIL,
        witnesses=(witnesses[0],) if ok else (),
        justification=just,
        data={"exponent_bound": bound, "projective_orders": orders},
    )


def _admissible_pairings(f: Polynomial) -> int | None:
    """Number of ways to split the roots of a squarefree quartic into a
    conjugate pair of F_{p^2}-rational quadratics with rational constant
    term; None when the quartic does not split over F_{p^4}."""
    field4 = make_field(f.field.p, 4)
    roots = roots_in(f, 4)
    if len(roots) != 4:
        return None
    one = field4.one()
    count = 0
    for first, second in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        ra, rb = roots[first[0]], roots[first[1]]
        rc, rd = roots[second[0]], roots[second[1]]
        g = Polynomial(field4, (ra * rb, -(ra + rb), one))
        if not all(in_subfield(c, 2) for c in g.coeffs):
            continue
        if not in_subfield(g.coeffs[0], 1):
            continue
        partner = Polynomial(field4, (rc * rd, -(rc + rd), one))
        if partner == conjugate_poly(g):
            count += 1
    return count


def check_conjugate_22_split(records: Sequence[FrobeniusRecord], p: int) -> CheckResult:
    """Exclude the stabilizer of a conjugate pair of planes (the 2-dim
    representation over F_{p^2} pulled back by restriction of scalars).

    An element preserving such a decomposition factors its characteristic
    polynomial as g * conjugate(g) with g quadratic over F_{p^2} and
    determinant-induced rational constant term.  For each squarefree record
    the three root pairings over F_{p^4} are enumerated; a record with no
    admissible pairing cannot arise that way.
    """
    counts: dict[str, int] = {}
    witnesses = []
    for rec in records:
        if not rec.squarefree:
            continue
        n = _admissible_pairings(rec.charpoly)
        if n is None:
            continue  # no cubic-factor quartic is similitude-shaped; be safe
        counts[str(rec.q)] = n
        if n == 0:
            witnesses.append(rec.q)
    witnesses.sort()
    ok = bool(witnesses)
    if ok:
        just = (
            f"no pairing of the Frobenius eigenvalues at q = {witnesses[0]} into "
            "conjugate F_{p^2}-quadratics with rational constant term exists, "
            "so the image preserves no conjugate plane pair"
        )
    else:
        just = (
            "every squarefree record admits a conjugate-quadratic pairing; "
            "consistent with a scalar-extension structure, no exclusion"
        )
    return CheckResult(
        name="conjugate_22_split",
        status=PASS if ok else FAIL,
        witnesses=(witnesses[0],) if ok else (),
        justification=just,
        data={"admissible_pairings": counts},
    )


def check_primitivity(rd: ResidualDataset) -> CheckResult:
    """Exclude imprimitive images (cases inducing from a quadratic field).

    Requires p = 3 mod 4, so that the only quadratic field unramified
    outside p that can carry the induction is imaginary: Q(sqrt(-p)).
    Induction forces trace zero at every prime inert in that field, i.e.
    every q with legendre(q, p) = -1.  The check demands a nonzero a_q at
    every inert prime in the dataset (and at least one inert prime).
    """
    p = rd.p
    if p % 4 != 3:
        raise ValueError(f"primitivity argument needs p = 3 mod 4, got p = {p}")
    inert = [q for q in rd.primes() if q != p and legendre(q, p) == -1]
    traces = {str(q): rd.eigenvalues[q].lift() for q in inert}
    zeros = [q for q in inert if rd.eigenvalues[q].is_zero()]
    ok = bool(inert) and not zeros
    if ok:
        just = (
            f"an image induced from Q(sqrt(-{p})) forces a_q = 0 at every inert "
            f"prime; inert primes {{{', '.join(str(q) for q in inert)}}} all have "
            "nonzero trace"
        )
    elif not inert:
        just = "no prime inert in Q(sqrt(-p)) appears in the dataset; no exclusion"
    else:
        just = (
            f"a_q = 0 at inert prime(s) {{{', '.join(str(q) for q in zeros)}}} is "
            "consistent with an induced image; no exclusion"
        )
    return CheckResult(
        name="primitivity",
        status=PASS if ok else FAIL,
        witnesses=tuple(inert) if ok else (),
        justification=just,
        data={"inert_primes": inert, "traces": traces},
    )


def check_exceptional(
    records: Sequence[FrobeniusRecord], table: ExceptionalTable, p: int
) -> CheckResult:
    """Exclude the exceptional maximal subgroups by element order: a
    projective Frobenius order dividing none of the group orders cannot
    occur inside any of them."""
    if table.p != p:
        raise ValueError(f"exceptional table is for p = {table.p}, not p = {p}")
    orders: dict[str, int] = {}
    witnesses = []
    for rec in records:
        if not rec.squarefree or rec.projective_order is None:
            continue
        orders[str(rec.q)] = rec.projective_order
        if all(group_order % rec.projective_order != 0 for _, group_order in table.entries):
            witnesses.append(rec.q)
    witnesses.sort()
    ok = bool(witnesses)
    groups = ", ".join(f"{name} (order {n})" for name, n in table.entries)
    if ok:
        q = witnesses[0]
        just = (
            f"projective Frobenius order {orders[str(q)]} at q = {q} divides none "
            f"of the exceptional subgroup orders [{groups}]"
        )
    elif orders:
        just = (
            "every computed projective order divides some exceptional subgroup "
            f"order [{groups}]; no exclusion"
        )
    else:
        just = "no order witnesses available (no squarefree record); no exclusion"
    return CheckResult(
        name="exceptional",
        status=PASS if ok else FAIL,
        witnesses=(witnesses[0],) if ok else (),
        justification=just,
        data={
            "subgroup_orders": {name: n for name, n in table.entries},
            "projective_orders": orders,
        },
    )


def check_multiplier_surjective(k: int, p: int) -> CheckResult:
    """Promote PSp to PGSp: the similitude multiplier is the (2k-3)rd power
    of the cyclotomic character, surjective onto F_p^* iff
    gcd(2k-3, p-1) = 1."""
    e = 2 * k - 3
    g = int_gcd(e, p - 1)
    ok = g == 1
    if ok:
        just = (
            f"the multiplier is the cyclotomic character to the power {e} and "
            f"gcd({e}, {p - 1}) = 1, so it hits every scalar similitude class"
        )
    else:
        just = (
            f"gcd({e}, {p - 1}) = {g} > 1: the multiplier misses part of F_p^*; "
            "no exclusion"
        )
    return CheckResult(
        name="multiplier_surjective",
        status=PASS if ok else FAIL,
        witnesses=(),
        justification=just,
        data={"character_power": e, "unit_group_order": p - 1, "gcd": g},
    )


# ---------------------------------------------------------------------------


def build_records(rd: ResidualDataset) -> tuple[FrobeniusRecord, ...]:
    """One FrobeniusRecord per dataset prime, ascending; q = p is skipped
    (it carries no Frobenius characteristic polynomial)."""
    return tuple(hecke_charpoly(rd, q) for q in rd.primes() if q != rd.p)


def run_checks(
    rd: ResidualDataset,
    records: Sequence[FrobeniusRecord],
    table: ExceptionalTable,
) -> tuple[CheckResult, ...]:
    return (
        check_linear_constituent(records),
        check_rational_22_split(records, rd.p),
        check_conjugate_22_split(records, rd.p),
        check_primitivity(rd),
        check_exceptional(records, table, rd.p),
        check_multiplier_surjective(rd.weight, rd.p),
    )


def certify(
    ds: EigenformDataset,
    p: int,
    root: int,
    table: ExceptionalTable | None = None,
) -> Certificate:
    """Run the full exclusion argument for one embedding alpha -> root.

    The verdict is LARGE_IMAGE exactly when all six checks pass; any
    failure leaves the verdict INCONCLUSIVE (the checks are one-sided and
    can never certify a small image).
    """
    if table is None:
        table = builtin_exceptional_table(p)
    rd = specialize(ds, p, root)
    records = build_records(rd)
    if not records:
        raise ValueError("no Frobenius data at primes q != p; nothing to certify")
    checks = run_checks(rd, records, table)
    verdict = VERDICT_LARGE_IMAGE if all(c.passed for c in checks) else VERDICT_INCONCLUSIVE
    return Certificate(
        weight=ds.weight,
        level=ds.level,
        dataset_digest=ds.digest(),
        defining_poly=ds.defining_poly,
        p=p,
        root=rd.root.lift(),
        residual_eigenvalues=tuple(
            (i, rd.eigenvalues[i].lift()) for i in sorted(rd.eigenvalues)
        ),
        records=records,
        checks=checks,
        assumptions=tuple(sorted(ds.assumptions)) + STANDING_ASSUMPTIONS,
        verdict=verdict,
    )
