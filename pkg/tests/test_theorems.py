import pytest

from spherebraid.certificates import Verdict, to_json
from spherebraid.presentations import presentation_library, todd_coxeter
from spherebraid.theorems import (
    replay_certificate,
    verify_background,
    verify_dicyclic,
    verify_odd_obstruction,
    verify_q8,
    verify_torsion_table,
)


class TestVerifyQ8:
    def test_n4_verified_in_commutator(self):
        cert = verify_q8(4)
        assert cert.verdict is Verdict.VERIFIED
        assert cert.flags["in_commutator"] is True
        assert any(s.id == "s7" for s in cert.steps)

    def test_n6_verified_not_in_commutator(self):
        cert = verify_q8(6)
        assert cert.verdict is Verdict.VERIFIED
        assert cert.flags["in_commutator"] is False
        assert not any(s.id == "s7" for s in cert.steps)
        (s8,) = [s for s in cert.steps if s.id == "s8"]
        assert s8.data["xi_x"] == [5, 10]

    def test_n5_refuted_realization(self):
        cert = verify_q8(5)
        assert cert.verdict is Verdict.REFUTED_REALIZATION
        assert [s.id for s in cert.steps] == ["o1", "o2", "o3", "o4"]

    def test_trichotomy_and_commutator_flag(self):
        for n in range(3, 13):
            cert = verify_q8(n)
            if n % 2 == 0:
                assert cert.verdict is Verdict.VERIFIED
            else:
                assert cert.verdict is Verdict.REFUTED_REALIZATION
            assert cert.flags["in_commutator"] == (n % 4 == 0)

    def test_even_certificates_never_cite_a5(self):
        for n in (4, 6, 8, 10, 12):
            assert "A5" not in verify_q8(n).cited_axiom_ids()

    def test_step_dag_and_ledger_invariants(self):
        cert = verify_q8(8)
        seen = set()
        for step in cert.steps:
            assert all(d in seen for d in step.depends_on)
            seen.add(step.id)
        assert set(cert.cited_axiom_ids()) <= {"A1", "A2", "A3", "A4", "A5"}

    def test_precondition(self):
        with pytest.raises(ValueError):
            verify_q8(2)


class TestVerifyOddObstruction:
    def test_residues_n5(self):
        cert = verify_odd_obstruction(5)
        assert cert.verdict is Verdict.VERIFIED
        (o2,) = [s for s in cert.steps if s.id == "o2"]
        assert o2.data["residues"] == [2, 6]
        assert o2.data["modulus"] == 8

    def test_residues_n3(self):
        cert = verify_odd_obstruction(3)
        (o2,) = [s for s in cert.steps if s.id == "o2"]
        assert o2.data["residues"] == [1, 3]
        assert o2.data["modulus"] == 4

    def test_residues_nonzero_all_odd_n(self):
        for n in range(3, 12, 2):
            (o2,) = [s for s in verify_odd_obstruction(n).steps if s.id == "o2"]
            assert 0 not in o2.data["residues"]
            expected = sorted(
                {
                    n * (n - 1) // 2 % (2 * (n - 1)),
                    -(n * (n - 1) // 2) % (2 * (n - 1)),
                }
            )
            assert o2.data["residues"] == expected

    def test_even_n_rejected(self):
        with pytest.raises(ValueError):
            verify_odd_obstruction(4)

    def test_cites_only_a5(self):
        assert verify_odd_obstruction(7).cited_axiom_ids() == ("A5",)


class TestVerifyDicyclic:
    def test_n3_order_twelve_matches_b3_sphere(self):
        cert = verify_dicyclic(3)
        assert cert.verdict is Verdict.VERIFIED
        assert cert.flags["order"] == 12
        b3 = todd_coxeter(presentation_library("sphere_braid", 3), 10000)
        assert cert.flags["order"] == b3.order

    def test_n4_generalized_quaternion(self):
        cert = verify_dicyclic(4)
        assert cert.verdict is Verdict.VERIFIED
        assert cert.flags["generalized_quaternion"] is True
        assert cert.flags["order"] == 16
        assert any(s.id == "d7" for s in cert.steps)

    def test_n6_no_label(self):
        cert = verify_dicyclic(6)
        assert cert.verdict is Verdict.VERIFIED
        assert cert.flags["generalized_quaternion"] is False
        assert cert.flags["order"] == 24
        assert not any(s.id == "d7" for s in cert.steps)

    def test_d3_cites_no_axioms(self):
        for n in range(3, 11):
            cert = verify_dicyclic(n)
            d3_steps = [s for s in cert.steps if s.id.startswith("d3")]
            assert d3_steps
            assert all(s.axioms == () for s in d3_steps)

    def test_letter_identity_recorded(self):
        cert = verify_dicyclic(5)
        (d3b,) = [s for s in cert.steps if s.id == "d3b"]
        assert d3b.data["letter_identical"] is True

    def test_precondition(self):
        with pytest.raises(ValueError):
            verify_dicyclic(2)


class TestVerifyTorsionTable:
    def test_orders_reported(self):
        for n in (3, 4, 6):
            cert = verify_torsion_table(n)
            assert cert.verdict is Verdict.VERIFIED
            assert cert.flags["orders"] == {
                "alpha0": 2 * n,
                "alpha1": 2 * (n - 1),
                "alpha2": 2 * (n - 2),
            }

    def test_a5_flag_exactly_for_alpha2_odd_n(self):
        for n in range(3, 11):
            cert = verify_torsion_table(n)
            expected = ["alpha2"] if (n % 2 == 1 and n >= 5) else []
            assert cert.flags["a5_backed"] == expected

    def test_a5_steps_are_flagged(self):
        cert = verify_torsion_table(7)
        axiom_steps = [s for s in cert.steps if "A5" in s.axioms]
        assert axiom_steps
        for s in axiom_steps:
            assert s.data.get("flag") == "axiom-backed consistency"

    def test_n3_alpha2_square_rule(self):
        cert = verify_torsion_table(3)
        alpha2_steps = [s for s in cert.steps if s.id.startswith("alpha2.")]
        assert any(s.method == "square-rule" for s in alpha2_steps)
        assert any(s.method == "mod-center" for s in alpha2_steps)


class TestVerifyBackground:
    def test_n2(self):
        cert = verify_background(2)
        assert cert.verdict is Verdict.VERIFIED
        (b1,) = cert.steps
        assert b1.data["order"] == 2

    def test_n3(self):
        cert = verify_background(3)
        assert cert.verdict is Verdict.VERIFIED
        (b2,) = [s for s in cert.steps if s.id == "b2"]
        assert b2.data["order"] == 12
        assert b2.data["involutions"] == 1
        assert b2.data["derived_order"] == 3
        assert b2.data["derived_cyclic"] is True
        assert b2.data["abelianization_order"] == 4

    def test_n5_conjugation_identities(self):
        cert = verify_background(5)
        assert cert.verdict is Verdict.VERIFIED
        (b4,) = [s for s in cert.steps if s.id == "b4"]
        assert len(b4.data["pairs"]) == 4

    def test_precondition(self):
        with pytest.raises(ValueError):
            verify_background(1)

    def test_budget_yields_inconclusive(self):
        cert = verify_background(3, max_cosets=5)
        assert cert.verdict is Verdict.INCONCLUSIVE


class TestCertificateHygiene:
    def test_deterministic_serialization(self):
        for build in (lambda: verify_q8(6), lambda: verify_dicyclic(4), lambda: verify_torsion_table(5)):
            assert to_json(build().as_dict()) == to_json(build().as_dict())

    def test_replay(self):
        for cert in (
            verify_q8(4),
            verify_q8(5),
            verify_dicyclic(6),
            verify_torsion_table(5),
            verify_background(3),
        ):
            assert replay_certificate(cert)

    def test_ledger_matches_step_axioms(self):
        for cert in (verify_q8(4), verify_dicyclic(8), verify_torsion_table(7)):
            cited = sorted({a for s in cert.steps for a in s.axioms})
            assert list(cert.cited_axiom_ids()) == cited
