import json
from fractions import Fraction

import pytest

from sl2crit import harness
from sl2crit.harness import (CheckSpec, ChargeCutoffLeak, character,
                             character_csv, character_matches,
                             d_homogeneity_probe, state_basis,
                             strict_partitions, verify_clifford,
                             verify_current_relations, verify_e_identities,
                             verify_hwv, verify_z_suite, wedge_bases_of_degree)


class TestEnumeration:
    def test_strict_partitions(self):
        assert strict_partitions(0) == ((),)
        assert set(strict_partitions(5)) == {(5,), (4, 1), (3, 2)}

    def test_wedge_degree_counts(self):
        assert [len(wedge_bases_of_degree(k)) for k in range(6)] \
            == [1, 2, 3, 6, 9, 14]

    def test_state_basis_respects_grade_window(self):
        for fm, w, p in state_basis(6, 2):
            assert 2 * (sum(fm) + w.degree()) + p * p <= 6

    def test_bad_spec_rejected(self):
        with pytest.raises(ValueError):
            CheckSpec(mode_bound=-1)


class TestSuitesSmall:
    def test_clifford(self):
        r = verify_clifford(CheckSpec(mode_bound=3, wedge_deg_cap=4))
        assert r.passed and r.checks_run > 0

    def test_current(self):
        r = verify_current_relations(
            CheckSpec(mode_bound=2, max_twice_deg=4, charge_bound=1))
        assert r.passed

    def test_exp(self):
        r = verify_e_identities(CheckSpec(mode_bound=3, max_twice_deg=6))
        assert r.passed

    def test_hwv(self):
        r = verify_hwv()
        assert r.passed
        assert r.extra["weights"]["v0"] == ["-2", "0", "0"]
        assert r.extra["weights"]["v1"] == ["0", "-2", "-1/2"]

    def test_zalg(self):
        r = verify_z_suite(CheckSpec(mode_bound=2, wedge_deg_cap=2,
                                     charge_bound=1))
        assert r.passed

    def test_reports_deterministic(self):
        spec = CheckSpec(mode_bound=2, wedge_deg_cap=3)
        a = json.dumps(verify_clifford(spec).to_json(), sort_keys=True)
        b = json.dumps(verify_clifford(spec).to_json(), sort_keys=True)
        assert a == b


class TestCharacter:
    def test_low_degrees(self):
        tab = character(4)
        assert tab["V"][0] == {"twice_degree": 0, "enumerated": 1,
                               "formula": 1}
        assert tab["V"][1] == {"twice_degree": 1, "enumerated": 2,
                               "formula": 2}

    def test_matches_through_twelve(self):
        tab = character(12)
        assert character_matches(tab)

    def test_omega_has_no_fock_factor(self):
        tab = character(8)
        # Vacuum-space counts never exceed the full counts.
        for rv, ro in zip(tab["V"], tab["Omega"]):
            assert ro["enumerated"] <= rv["enumerated"]
        assert character_matches(tab)

    def test_charge_symmetry(self):
        tab = character(10)
        by_charge = tab["counts_by_charge"]
        for key, count in by_charge.items():
            p, td = (int(x) for x in key.split(":"))
            assert by_charge[f"{-p}:{td}"] == count

    def test_cutoff_leak_guard(self):
        with pytest.raises(ChargeCutoffLeak):
            character(9, charge_bound=2)

    def test_csv(self):
        text = character_csv(character(4), "V")
        assert text.splitlines()[0] == "twice_degree,enumerated,formula"
        assert text.splitlines()[1] == "0,1,1"

    def test_printed_index_discrepancy_documented(self):
        tab = character(6)
        assert any("m>=0" in note and "factor 4" in note
                   for note in tab["notes"])


class TestProbe:
    def test_probe_reports_and_passes(self):
        r = d_homogeneity_probe(CheckSpec(mode_bound=1, max_twice_deg=4,
                                          charge_bound=1))
        assert r.passed  # informational: passing means the probe ran
        stats = r.extra["residual_stats"]
        assert stats  # grouped by operator and charge
        # The Heisenberg grading is exactly homogeneous by construction.
        for key, val in stats.items():
            if key.startswith("H,"):
                assert val["nonzero_residuals"] == 0

    def test_probe_sees_charge_dependence(self):
        # The raising field is not degree-homogeneous on this tensor
        # product; the probe must detect nonzero residuals somewhere.
        r = d_homogeneity_probe(CheckSpec(mode_bound=1, max_twice_deg=4,
                                          charge_bound=1))
        stats = r.extra["residual_stats"]
        assert any(val["nonzero_residuals"] > 0
                   for key, val in stats.items() if key.startswith("X,"))


def test_failure_is_recorded_not_swallowed():
    r = harness.Report("demo", {})
    r.record("identity", [1], "basis", "residual")
    assert not r.passed
    assert r.to_json()["failures"][0]["identity"] == "identity"
