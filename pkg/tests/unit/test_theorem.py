from __future__ import annotations

import pytest

from cdlattice.catalog.catalog import CatalogEntry, entries
from cdlattice.catalog.spec import build_group
from cdlattice.groups.group import Group
from cdlattice.lattice.lattice import SubgroupLattice, all_subgroups
from cdlattice.measures.chermak_delgado import cd_lattice
from cdlattice.verification.theorem import (
    CONCLUSION_NAMES,
    COROLLARY_VERDICT_NAMES,
    TheoremReport,
    equal_cyclic_measure,
    nontrivial_cyclic_subgroups,
    recognize_cp_or_q8,
    verify_cp_or_q8_corollary,
    verify_equal_measure_theorem,
)


def _full_report(spec: str) -> TheoremReport:
    group = build_group(spec)
    lattice = all_subgroups(group)
    return verify_cp_or_q8_corollary(group, lattice, cd_lattice(group, lattice))


def test_quaternion_group_satisfies_everything(q8: Group, q8_lattice: SubgroupLattice) -> None:
    report = verify_equal_measure_theorem(q8, q8_lattice)

    assert report.hypothesis == "true"
    assert report.hypothesis_holds
    assert (report.p, report.n, report.m, report.k) == (2, 3, 2, 1)
    assert report.bound_slack == 0
    assert report.common_measure == 16
    assert all(report.conclusions[name] == "pass" for name in CONCLUSION_NAMES)
    assert report.violations() == []


def test_quaternion_corollary(q8: Group, q8_lattice: SubgroupLattice) -> None:
    report = verify_cp_or_q8_corollary(q8, q8_lattice, cd_lattice(q8, q8_lattice))

    corollary = report.corollary
    assert corollary is not None
    assert corollary.condition_a
    assert corollary.applies
    assert str(corollary.recognition) == "Q8"
    assert all(corollary.verdicts[name] == "pass" for name in COROLLARY_VERDICT_NAMES)


def test_dihedral_group_fails_hypothesis(d8: Group, d8_lattice: SubgroupLattice) -> None:
    report = verify_equal_measure_theorem(d8, d8_lattice)

    assert report.hypothesis == "false"
    assert set(report.conclusions.values()) == {"n/a"}
    assert (report.p, report.n, report.m, report.k) == (2, 3, 2, 1)
    assert report.bound_slack is None
    assert report.sylow_witness is None


def test_klein_group_holds_with_zero_slack() -> None:
    report = _full_report("C2xC2")

    assert report.hypothesis == "true"
    assert (report.n, report.m, report.k) == (2, 1, 2)
    assert report.bound_slack == 0
    assert report.violations() == []
    assert report.corollary is not None
    assert not report.corollary.applies
    assert set(report.corollary.verdicts.values()) == {"n/a"}


@pytest.mark.parametrize("prime", [2, 3, 5, 7])
def test_prime_cyclic_groups(prime: int) -> None:
    report = _full_report(f"C{prime}")

    assert report.hypothesis == "true"
    assert (report.n, report.m, report.k) == (1, 1, 1)
    assert report.bound_slack == 0
    assert report.common_measure == prime**2
    assert report.corollary is not None
    assert report.corollary.condition_a
    assert report.corollary.recognition.kind == "Cp"
    assert report.corollary.recognition.prime == prime
    assert report.violations() == []


def test_trivial_group_is_vacuous() -> None:
    report = _full_report("C1")

    assert report.hypothesis == "vacuous"
    assert report.p is None
    assert set(report.conclusions.values()) == {"n/a"}
    assert report.corollary is not None
    assert not report.corollary.condition_a
    assert not report.corollary.condition_b
    assert report.corollary.recognition.kind == "neither"


@pytest.mark.parametrize("spec", ["D6", "C6"])
def test_mixed_order_groups_get_sylow_witness(spec: str) -> None:
    report = _full_report(spec)

    assert report.hypothesis == "false"
    assert report.p is None
    witness = report.sylow_witness
    assert witness is not None
    assert (witness.first_prime, witness.second_prime) == (2, 3)
    assert witness.first_measure != witness.second_measure


@pytest.mark.parametrize("spec", ["Q8xC2", "SDP(4,4,3)"])
def test_nonabelian_order_sixteen_holders(spec: str) -> None:
    report = _full_report(spec)

    assert report.hypothesis == "true"
    assert (report.n, report.m, report.k) == (4, 2, 2)
    assert report.bound_slack == 0
    assert report.violations() == []
    assert report.corollary is not None
    assert not report.corollary.applies


def test_cyclic_four_fails_hypothesis() -> None:
    assert _full_report("C4").hypothesis == "false"


def test_equal_cyclic_measure_accepts_cd_report(q8: Group, q8_lattice: SubgroupLattice) -> None:
    report = cd_lattice(q8, q8_lattice)

    assert equal_cyclic_measure(q8, q8_lattice, cd_report=report) == "true"
    assert equal_cyclic_measure(q8, q8_lattice) == "true"


def test_nontrivial_cyclic_subgroups(q8_lattice: SubgroupLattice) -> None:
    ids = nontrivial_cyclic_subgroups(q8_lattice)

    assert 0 not in ids
    assert sorted(q8_lattice[i].size for i in ids) == [2, 4, 4, 4]


def test_corollary_reuses_given_theorem(q8: Group, q8_lattice: SubgroupLattice) -> None:
    theorem = verify_equal_measure_theorem(q8, q8_lattice)
    report = verify_cp_or_q8_corollary(
        q8, q8_lattice, cd_lattice(q8, q8_lattice), theorem=theorem
    )

    assert report.conclusions == theorem.conclusions
    assert theorem.corollary is None
    assert report.corollary is not None


@pytest.mark.parametrize(
    ("spec", "kind"),
    [("C7", "Cp"), ("Q8", "Q8"), ("D8", "neither"), ("C8", "neither"), ("Q16", "neither")],
)
def test_recognize_cp_or_q8(spec: str, kind: str) -> None:
    assert recognize_cp_or_q8(build_group(spec)).kind == kind


def test_recognition_string_form() -> None:
    assert str(recognize_cp_or_q8(build_group("C7"))) == "C7"
    assert str(recognize_cp_or_q8(build_group("D8"))) == "neither"


def test_report_rejects_conclusions_without_hypothesis() -> None:
    with pytest.raises(ValueError):
        TheoremReport(
            group="G",
            order=4,
            hypothesis="false",
            conclusions={name: "pass" for name in CONCLUSION_NAMES},
        )


def test_report_requires_every_conclusion() -> None:
    with pytest.raises(ValueError):
        TheoremReport(group="G", order=4, hypothesis="false", conclusions={})


@pytest.mark.slow
def test_order_eighty_one_metacyclic_group() -> None:
    report = _full_report("SDP(9,9,4)")

    assert report.hypothesis == "true"
    assert (report.p, report.n, report.m, report.k) == (3, 4, 2, 2)
    assert report.bound_slack == 0
    assert report.violations() == []


@pytest.mark.slow
@pytest.mark.parametrize("spec", ["Q8xC2xC2", "Q8xC2xC2xC2"])
def test_quaternion_times_elementary_abelian_family(spec: str) -> None:
    report = _full_report(spec)

    assert report.hypothesis == "true"
    assert report.bound_slack == 0
    assert report.violations() == []


@pytest.mark.parametrize("entry", entries(1, 16), ids=lambda entry: entry.name)
def test_condition_a_implies_equal_cyclic_measure(entry: CatalogEntry) -> None:
    report = _full_report(entry.recipe)

    assert report.corollary is not None
    if report.corollary.condition_a:
        assert report.hypothesis == "true"
