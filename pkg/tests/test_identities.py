import logging

import pytest

from lattice_crystals import limits
from lattice_crystals.errors import (
    InexactDivision,
    ResourceCapExceeded,
    UnknownIdentity,
)
from lattice_crystals.exactpoly import LaurentPoly, Q
from lattice_crystals.identities import (
    Comparison,
    Identity,
    IdentityReport,
    Registry,
    Status,
    appendix_hankels,
    as_mapping,
    branching_specializations,
    conjecture_scan,
    kappa,
    load_builtin_registry,
    motzkin_hankel,
    near_spin_nps,
    qmotzkin_prime,
    qmotzkin_tri_prime,
    qriordan_tri_prime,
    qt_catalan_prime,
    run_instance,
    touchard_triangle,
    verify,
    verify_many,
)
from lattice_crystals.identities.base import range_domain
from lattice_crystals.identities.scans import SCANS
from lattice_crystals.paths import stump_qt_catalan, wpm_qt_catalan

from .helpers import read_golden, read_golden_matrix

REGISTRY = Registry(load_builtin_registry())


def always_off(n):
    return Comparison(n, n + 1, False)


def too_large(n):
    raise ResourceCapExceeded("everything", 10**9, 10)


def not_divisible(n):
    raise InexactDivision(Q + 1, Q, LaurentPoly(1))


class TestQAnalogs:
    def test_motzkin(self):
        assert str(qmotzkin_prime(4)) == read_golden("qmotzkin_prime_4")
        assert str(qmotzkin_tri_prime(4, 0)) == read_golden("qmotzkin_tri_4_0")

    def test_motzkin_matrix(self):
        matrix = [[str(qmotzkin_tri_prime(n, r)) for r in range(4)] for n in range(4)]
        assert matrix == read_golden_matrix("motzkin_prime_matrix")

    def test_riordan_matrix(self):
        matrix = [[str(qriordan_tri_prime(n, r)) for r in range(5)] for n in range(5)]
        assert matrix == read_golden_matrix("riordan_prime_matrix")

    def test_negative_index(self):
        with pytest.raises(ValueError):
            qmotzkin_prime(-1)

    def test_qt_catalan(self):
        assert str(stump_qt_catalan(4)) == read_golden("qt_catalan_4")
        assert wpm_qt_catalan(4) == stump_qt_catalan(4)
        prime = qt_catalan_prime(4)
        assert str(prime) == read_golden("qt_catalan_prime_4")
        assert prime.is_symmetric()


class TestSingleInstances:
    def test_touchard(self):
        report = touchard_triangle(2, 2)
        assert report.status is Status.VERIFIED
        assert report.checked == 1
        assert report.bound is None
        with pytest.raises(ValueError):
            touchard_triangle(2, 3)

    @pytest.mark.parametrize("n, s", [(1, 0), (2, 1), (3, 3)])
    def test_near_spin_nps(self, n, s):
        assert near_spin_nps(n, s).ok

    @pytest.mark.parametrize(
        "which", ["catalan-cr", "catalan_cr_shifted", "cigler", "cigler-shifted"]
    )
    @pytest.mark.parametrize("n", range(1, 7))
    def test_hankel_closed_forms(self, which, n):
        assert appendix_hankels(which, n).status is Status.VERIFIED

    def test_hankel_arguments(self):
        assert appendix_hankels("tunnel", 0).ok
        with pytest.raises(ValueError):
            appendix_hankels("cigler", 0)
        with pytest.raises(ValueError):
            appendix_hankels("hankel", 2)

    def test_kappa(self):
        assert [kappa(n) for n in range(12)] == [1, 1, 0, -1, -1, 0] * 2

    def test_motzkin_hankels(self):
        assert str(motzkin_hankel(0, 2)) == "q"
        assert motzkin_hankel(0, 0) == 1
        assert not motzkin_hankel(5, 3).is_nonnegative()
        assert str(motzkin_hankel(5, 3)).startswith("-q^38 + 2*q^34 + 6*q^33")

    def test_branching(self):
        assert branching_specializations("spin-b", 3).status is Status.VERIFIED
        with pytest.raises(ValueError):
            branching_specializations("spin-c")


class TestRunner:
    def test_failure(self):
        identity = Identity("always-off", always_off, range_domain, (3, 5))
        report = verify(identity)
        assert report.status is Status.FAILED
        assert report.bound == 3
        assert report.checked == 1
        assert report.counterexample == {"parameters": {"n": 0}, "lhs": 0, "rhs": 1}
        assert "counterexample" in report.summary()

    def test_cap_skips(self, caplog):
        identity = Identity("too-large", too_large, range_domain, (3, 5))
        with caplog.at_level(logging.WARNING):
            report = verify(identity, 2)
        assert report.status is Status.SKIPPED
        assert report.ok
        assert "Skipping too-large" in caplog.text

    def test_inexact_division_fails(self):
        identity = Identity("not-divisible", not_divisible, range_domain, (3, 5))
        report = verify(identity, 1)
        assert report.status is Status.FAILED
        assert "not divisible" in report.counterexample["error"]

    def test_failure_needs_counterexample(self):
        identity = Identity("always-off", always_off, range_domain, (3, 5))
        with pytest.raises(ValueError):
            IdentityReport.failure(identity, 3, 1, {})

    def test_profiles(self):
        identity = REGISTRY["touchard"]
        assert identity.bound("small") < identity.bound("full")
        with pytest.raises(ValueError):
            identity.bound("huge")
        with limits.override(profile="full"):
            assert verify(identity).bound == identity.bound("full")

    def test_sample_is_reproducible(self):
        identity = REGISTRY["touchard"]
        with limits.override(seed=7):
            first = verify(identity, 6, sample=5)
            second = verify(identity, 6, sample=5)
        assert first == second
        assert first.checked == 5

    def test_worker_processes(self):
        identity = REGISTRY["catalan-from-motzkin"]
        assert verify(identity, 8, jobs=2) == verify(identity, 8)

    def test_run_instance(self):
        report = run_instance(REGISTRY["catalan-ratio"], n=4, i=2)
        assert report.ok and report.checked == 1

    def test_as_mapping(self):
        data = as_mapping(touchard_triangle(1, 1))
        assert data["status"] == "verified"
        assert data["counterexample"] is None


class TestRegistry:
    def test_lookup(self):
        assert "touchard" in REGISTRY
        assert list(REGISTRY) == sorted(REGISTRY)
        with pytest.raises(UnknownIdentity):
            REGISTRY["touchard-prime"]
        with pytest.raises(KeyError):
            REGISTRY.select(["touchard", "touchard-prime"])

    def test_select_all(self):
        assert len(REGISTRY.select(["all"])) == len(REGISTRY)
        assert len(REGISTRY.select([])) == len(REGISTRY)
        assert [x.name for x in REGISTRY.select(["spin-b"])] == ["spin-b"]

    def test_kinds(self):
        scans = {x.name for x in REGISTRY.of_kind("scan")}
        assert scans == {x.name for x in SCANS}
        assert "touchard" not in scans

    def test_both_2shifted_statements(self):
        f = REGISTRY["factored-motzkin-2shifted-f"]
        g = REGISTRY["factored-motzkin-2shifted-g"]
        assert "2shifted-g" in f.note and "2shifted-f" in g.note

    def test_duplicates(self, caplog):
        identity = REGISTRY["touchard"]
        with caplog.at_level(logging.WARNING):
            registry = Registry([identity, identity])
        assert len(registry) == 1
        assert "more than once" in caplog.text

    def test_descriptions(self):
        assert all(REGISTRY[name].description for name in REGISTRY)


@pytest.mark.parametrize("name", [x.name for x in REGISTRY.of_kind("identity")])
def test_builtin_identities(name):
    identity = REGISTRY[name]
    report = verify(identity, min(identity.bound("small"), 3))
    assert report.status is Status.VERIFIED, report.summary()


@pytest.mark.slow
def test_builtin_identities_small_profile():
    reports = verify_many(REGISTRY.of_kind("identity"))
    assert [r.name for r in reports if r.status is not Status.VERIFIED] == []


class TestScans:
    def test_motzkin_positivity(self):
        report = conjecture_scan("motzkin_pos", 8)
        assert report.status is Status.VERIFIED
        assert report.kind == "scan"
        assert report.checked == 9

    def test_unknown(self):
        with pytest.raises(UnknownIdentity):
            conjecture_scan("motzkin-neg")

    @pytest.mark.parametrize("name", [x.name for x in SCANS])
    def test_scans_report(self, name):
        report = conjecture_scan(name, 3)
        assert report.status in (Status.VERIFIED, Status.FAILED)
        if report.status is Status.FAILED:
            assert report.counterexample["parameters"]
