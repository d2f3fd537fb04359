"""Tests for the six exclusion checks and the certificate assembly."""
from __future__ import annotations

import random

import pytest

from gspcert.certifier import (
    VERDICT_INCONCLUSIVE,
    VERDICT_LARGE_IMAGE,
    ExceptionalTable,
    build_records,
    builtin_exceptional_table,
    certify,
    check_conjugate_22_split,
    check_exceptional,
    check_linear_constituent,
    check_multiplier_surjective,
    check_primitivity,
    check_rational_22_split,
    rational_split_exponent,
)
from gspcert.eigen_data import EigenformDataset, FrobeniusRecord, specialize
from gspcert.finite_field import in_subfield, make_field
from gspcert.polynomial import Polynomial, conjugate_poly, factor

F7 = make_field(7, 1)
F49 = make_field(7, 2)

DEFINING = (-59412960, -294086, -1, 1)
EIGENVALUES = {2: (4,), 4: (5,), 3: (3,), 9: (2,), 5: (1,), 25: (2,)}
ASSUMPTIONS = frozenset({"not_maass_spezialform", "conductor_one"})


def paper_dataset(eigenvalues=None) -> EigenformDataset:
    return EigenformDataset(
        weight=28,
        level=1,
        defining_poly=DEFINING,
        eigenvalues=dict(eigenvalues or EIGENVALUES),
        assumptions=ASSUMPTIONS,
    )


def paper_records():
    return build_records(specialize(paper_dataset(), 7, 1))


def synthetic_record(q: int, f: Polynomial, order=None, squarefree=None) -> FrobeniusRecord:
    fac = factor(f)
    return FrobeniusRecord(
        q=q,
        charpoly=f,
        factorization=fac,
        squarefree=fac.is_squarefree() if squarefree is None else squarefree,
        projective_order=order,
        similitude=F7.one(),
    )


def prime_subfield_poly(f: Polynomial) -> Polynomial:
    assert all(in_subfield(c, 1) for c in f.coeffs)
    return Polynomial.from_ints(F7, [c.coeffs[0] for c in f.coeffs])


class TestLinearConstituent:
    def test_paper_records_pass_with_both_rootless_primes(self):
        res = check_linear_constituent(paper_records())
        assert res.passed
        assert res.witnesses == (2, 5)
        assert res.data["base_field_root_counts"] == {"2": 0, "3": 2, "5": 0}

    def test_single_pol3_record_fails(self):
        rec = next(r for r in paper_records() if r.q == 3)
        res = check_linear_constituent([rec])
        assert not res.passed
        assert res.witnesses == ()

    def test_fully_split_records_fail(self):
        split = paper_dataset({2: (0,), 4: (1,), 3: (6,), 9: (1,), 5: (4,), 25: (1,)})
        records = build_records(specialize(split, 7, 1))
        for rec in records:
            assert all(g.degree == 1 for g, _ in rec.factorization.factors)
        assert not check_linear_constituent(records).passed


class TestRational22Split:
    def test_exponent_bound_frozen(self):
        from math import lcm
        assert rational_split_exponent(7) == 2 * lcm(42, 48, 6) == 672

    def test_paper_records_pass_via_order_25(self):
        res = check_rational_22_split(paper_records(), 7)
        assert res.passed
        assert res.witnesses == (2,)
        assert 672 % 25 != 0

    def test_order_8_alone_fails(self):
        rec = next(r for r in paper_records() if r.q == 5)
        assert rec.projective_order == 8
        res = check_rational_22_split([rec], 7)
        assert not res.passed

    def test_no_squarefree_records_fail_with_explanation(self):
        g = Polynomial.from_ints(F7, (3, 1))
        rec = synthetic_record(2, g * g * g * g)
        res = check_rational_22_split([rec], 7)
        assert not res.passed
        assert "no order witnesses available" in res.justification


class TestConjugate22Split:
    def test_paper_records_pass_with_witness_3(self):
        res = check_conjugate_22_split(paper_records(), 7)
        assert res.passed
        assert res.witnesses == (3,)
        assert res.data["admissible_pairings"] == {"2": 1, "3": 0, "5": 0}

    def test_constructed_conjugate_product_is_not_excluded(self):
        t = F49.gen()
        g = Polynomial(F49, (F49.element(3), t, F49.one()))
        f = prime_subfield_poly(g * conjugate_poly(g))
        rec = synthetic_record(2, f)
        assert rec.squarefree
        res = check_conjugate_22_split([rec], 7)
        assert not res.passed
        assert res.data["admissible_pairings"]["2"] >= 1

    def test_pairing_enumeration_is_complete_for_random_products(self):
        rng = random.Random(31)
        tried = 0
        while tried < 25:
            beta = F49.element_from_index(rng.randrange(49))
            if in_subfield(beta, 1):
                continue
            gamma = F49.element(rng.randrange(1, 7))
            g = Polynomial(F49, (gamma, beta, F49.one()))
            f = prime_subfield_poly(g * conjugate_poly(g))
            rec = synthetic_record(2, f)
            if not rec.squarefree:
                continue
            tried += 1
            res = check_conjugate_22_split([rec], 7)
            assert not res.passed, str(f)

    def test_non_squarefree_records_are_skipped(self):
        g = Polynomial.from_ints(F7, (1, 4, 1))
        rec = synthetic_record(2, g * g)
        res = check_conjugate_22_split([rec], 7)
        assert not res.passed
        assert "2" not in res.data["admissible_pairings"]


class TestPrimitivity:
    def test_paper_dataset_passes_on_all_inert_primes(self):
        rd = specialize(paper_dataset(), 7, 1)
        res = check_primitivity(rd)
        assert res.passed
        assert res.witnesses == (3, 5)
        assert res.data["inert_primes"] == [3, 5]

    def test_zero_trace_at_any_inert_prime_fails(self):
        mutated = paper_dataset({**EIGENVALUES, 3: (0,)})
        res = check_primitivity(specialize(mutated, 7, 1))
        assert not res.passed
        assert "3" in res.justification

    def test_single_inert_prime_with_zero_trace_fails(self):
        ds = paper_dataset({2: (4,), 4: (5,), 3: (0,), 9: (2,)})
        res = check_primitivity(specialize(ds, 7, 1))
        assert not res.passed

    def test_no_inert_primes_fails(self):
        ds = paper_dataset({2: (4,), 4: (5,)})  # 2 is a residue mod 7
        res = check_primitivity(specialize(ds, 7, 1))
        assert not res.passed
        assert res.witnesses == ()

    def test_requires_p_three_mod_four(self):
        ds = EigenformDataset(
            weight=4, level=1, defining_poly=(0, 1),
            eigenvalues={2: (1,), 4: (1,)}, assumptions=frozenset(),
        )
        rd = specialize(ds, 5, 0)
        with pytest.raises(ValueError, match="3 mod 4"):
            check_primitivity(rd)


class TestExceptional:
    def test_builtin_table_frozen(self):
        table = builtin_exceptional_table(7)
        assert table.entries == (
            ("PGL(2,7)", 336),
            ("2^4.O4^-(2).2", 3840),
            ("A7.2", 5040),
        )

    def test_paper_records_pass_via_order_25(self):
        res = check_exceptional(paper_records(), builtin_exceptional_table(7), 7)
        assert res.passed
        assert res.witnesses == (2,)
        for n in (336, 3840, 5040):
            assert n % 25 != 0

    def test_order_8_fails(self):
        rec = next(r for r in paper_records() if r.q == 5)
        res = check_exceptional([rec], builtin_exceptional_table(7), 7)
        assert not res.passed
        assert 336 % 8 == 0

    def test_order_1_fails(self):
        f = Polynomial.from_ints(F7, (2, 5, 2, 3, 1))
        rec = synthetic_record(2, f, order=1)
        res = check_exceptional([rec], builtin_exceptional_table(7), 7)
        assert not res.passed

    def test_table_prime_mismatch_rejected(self):
        with pytest.raises(ValueError):
            check_exceptional(paper_records(), builtin_exceptional_table(7), 11)

    def test_no_builtin_table_for_other_primes(self):
        with pytest.raises(ValueError):
            builtin_exceptional_table(11)


class TestMultiplierSurjective:
    def test_weight_28_passes(self):
        res = check_multiplier_surjective(28, 7)
        assert res.passed
        assert res.witnesses == ()
        assert res.data == {"character_power": 53, "unit_group_order": 6, "gcd": 1}

    def test_weight_3_fails(self):
        res = check_multiplier_surjective(3, 7)
        assert not res.passed
        assert res.data["gcd"] == 3

    def test_other_prime(self):
        assert check_multiplier_surjective(28, 13).passed


class TestCertify:
    def test_paper_dataset_certifies_at_every_root(self):
        ds = paper_dataset()
        for root in (4, 3, 1):
            cert = certify(ds, 7, root)
            assert cert.verdict == VERDICT_LARGE_IMAGE
            assert cert.certified
            assert cert.root == root
            assert [c.name for c in cert.checks] == [
                "linear_constituent",
                "rational_22_split",
                "conjugate_22_split",
                "primitivity",
                "exceptional",
                "multiplier_surjective",
            ]
            assert all(c.passed for c in cert.checks)

    def test_certificate_carries_dataset_facts(self):
        ds = paper_dataset()
        cert = certify(ds, 7, 1)
        assert cert.weight == 28
        assert cert.level == 1
        assert cert.p == 7
        assert cert.dataset_digest == ds.digest()
        assert cert.defining_poly == DEFINING
        assert [rec.q for rec in cert.records] == [2, 3, 5]
        assert cert.residual_eigenvalues == ((2, 4), (3, 3), (4, 5), (5, 1), (9, 2), (25, 2))

    def test_assumptions_echoed_with_standing_hypothesis(self):
        cert = certify(paper_dataset(), 7, 1)
        assert cert.assumptions == (
            "conductor_one",
            "not_maass_spezialform",
            "formal_reduction_admissible",
        )

    def test_a3_zero_mutation_fails_exactly_primitivity(self):
        mutated = paper_dataset({**EIGENVALUES, 3: (0,)})
        cert = certify(mutated, 7, 1)
        assert cert.verdict == VERDICT_INCONCLUSIVE
        failing = {c.name for c in cert.checks if not c.passed}
        assert failing == {"primitivity"}

    def test_fully_split_control_fails_linear_constituent(self):
        split = paper_dataset({2: (0,), 4: (1,), 3: (6,), 9: (1,), 5: (4,), 25: (1,)})
        cert = certify(split, 7, 1)
        assert cert.verdict == VERDICT_INCONCLUSIVE
        failing = {c.name for c in cert.checks if not c.passed}
        assert "linear_constituent" in failing

    def test_single_mutation_soundness_exhaustive(self):
        # verdict is LARGE_IMAGE exactly when every check passes, for every
        # single-entry mutation of the dataset
        for index in (2, 4, 3, 9, 5, 25):
            for value in range(7):
                table = dict(EIGENVALUES)
                table[index] = (value,)
                cert = certify(paper_dataset(table), 7, 1)
                assert cert.verdict in (VERDICT_LARGE_IMAGE, VERDICT_INCONCLUSIVE)
                assert (cert.verdict == VERDICT_LARGE_IMAGE) == all(
                    c.passed for c in cert.checks
                )

    def test_explicit_table_matches_default(self):
        ds = paper_dataset()
        a = certify(ds, 7, 1)
        b = certify(ds, 7, 1, table=builtin_exceptional_table(7))
        assert a == b

    def test_only_q_equal_p_data_rejected(self):
        ds = EigenformDataset(
            weight=28, level=1, defining_poly=DEFINING,
            eigenvalues={7: (1,), 49: (1,)}, assumptions=ASSUMPTIONS,
        )
        with pytest.raises(ValueError, match="no Frobenius data"):
            certify(ds, 7, 1)

    def test_other_prime_with_user_table(self):
        ds = EigenformDataset(
            weight=4, level=1, defining_poly=(0, 1),
            eigenvalues={2: (1,), 4: (1,)}, assumptions=frozenset(),
        )
        table = ExceptionalTable(p=11, entries=(("PGL(2,11)", 1320),))
        cert = certify(ds, 11, 0, table=table)
        assert cert.p == 11
        assert len(cert.checks) == 6
        assert cert.verdict in (VERDICT_LARGE_IMAGE, VERDICT_INCONCLUSIVE)
