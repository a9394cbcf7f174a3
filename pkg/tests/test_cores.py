import pytest
from hypothesis import given, strategies as st

from frobcore import oracle
from frobcore.cores import (
    enumerate_core_vectors,
    count_cores,
    coordinate_bound,
    map3,
    map5_phi,
    map5_psi,
    map7_phi,
    map9_phi,
    map_size_report,
    on_charvec,
    verify_identity,
)
from frobcore.decomposition import core_of_charvec, core_size, selfconj_core_size
from frobcore.errors import DomainError
from frobcore.partition_core import conjugate, partition_of


class TestEnumeration:
    def test_examples(self):
        assert enumerate_core_vectors(3, 2).vectors == ((0, 1, -1), (1, -1, 0))
        cen = enumerate_core_vectors(3, 9)
        assert cen.vectors == ((-1, 2, -1), (1, -2, 1))
        assert sorted(partition_of(core_of_charvec(c)) for c in cen.vectors) == [
            (3, 2, 2, 1, 1),
            (5, 3, 1),
        ]
        for t in (2, 3, 5, 8):
            assert enumerate_core_vectors(t, 0).vectors == ((0,) * t,)

    def test_rejects(self):
        with pytest.raises(DomainError):
            enumerate_core_vectors(1, 3)
        with pytest.raises(DomainError):
            enumerate_core_vectors(3, -1)

    def test_against_partition_filter(self):
        for n in range(21):
            parts = oracle.enumerate_partitions(n)
            for t in range(2, 7):
                want = sorted(p for p in parts if oracle.is_core(p, t))
                cen = enumerate_core_vectors(t, n)
                got = sorted(partition_of(core_of_charvec(c)) for c in cen.vectors)
                assert got == want
                sc = enumerate_core_vectors(t, n, self_conjugate=True)
                got_sc = sorted(partition_of(core_of_charvec(c)) for c in sc.vectors)
                assert got_sc == [p for p in want if oracle.conjugate_parts(p) == p]

    def test_coordinate_bound_holds(self):
        for t in (2, 3, 4, 5):
            for n in range(40):
                for c in enumerate_core_vectors(t, n).vectors:
                    assert max(map(abs, c)) <= coordinate_bound(t, n)

    def test_sizes(self):
        for t in (3, 5, 7):
            for n in range(30):
                for c in enumerate_core_vectors(t, n).vectors:
                    assert core_size(c) == n


class TestMaps:
    def test_map3(self):
        assert map3(2, (0, 1, -1)) == (1, -2, 1)
        assert map3(2, (1, -1, 0)) == (-1, 2, -1)
        for c in enumerate_core_vectors(3, 7).vectors:
            assert map3(1, c) == c
        with pytest.raises(DomainError):
            map3(3, (0, 0, 0))
        assert map3(7, (1, 0, -1)) == (5, 0, -5)

    def test_map3_non_surjective(self):
        assert count_cores(3, 65) == 3 and count_cores(3, 1) == 1
        assert set(enumerate_core_vectors(3, 65).vectors) == {(-5, 2, 3), (5, 0, -5), (-3, -2, 5)}

    def test_map5_phi(self):
        assert map5_phi(1, (0, 0)) == (0, -1)
        assert selfconj_core_size(map5_phi(1, (0, 0)), 5) == 1
        assert map5_phi(2, (0, 0)) == (-1, -1)
        assert selfconj_core_size((-1, -1), 5) == 4
        for n in range(20):
            for h in enumerate_core_vectors(5, n, True).halves():
                assert map5_phi(3, h) == map5_phi(2, map5_phi(1, h))

    @pytest.mark.parametrize("k", range(1, 11))
    def test_map5_phi_sizes(self, k):
        for n in range(25):
            for h in enumerate_core_vectors(5, n, True).halves():
                assert selfconj_core_size(map5_phi(k, h), 5) == (k * k + 1) * n + k * k

    def test_map5_psi(self):
        assert map5_psi(1, (3, -2)) == (3, -2)
        assert map5_psi(4, (0, 0)) == (-1, -2)
        assert selfconj_core_size((-1, -2), 5) == 15
        assert map5_psi(6, (0, 0)) == (1, 2)
        assert selfconj_core_size((1, 2), 5) == 35
        with pytest.raises(DomainError):
            map5_psi(5, (0, 0))

    @pytest.mark.parametrize("k", [1, 4, 6, 9, 11, 14])
    def test_map5_psi_unit_branch_sizes(self, k):
        rep = map_size_report("psi5", k, 30)
        assert rep.mismatches == 0 and rep.injective

    def test_map7_phi(self):
        assert map7_phi(2, (0, 0, 0)) == (-1, 0, -1)
        assert selfconj_core_size((-1, 0, -1), 7) == 6
        assert count_cores(7, 1, True) == count_cores(7, 10, True)
        with pytest.raises(DomainError):
            map7_phi(7, (0, 0, 0))
        # the k = 7q+1 branch as written collapses y and z onto x
        assert map7_phi(1, (1, 2, 3)) == (1, 1, 1)
        assert map7_phi(1, (1, 2, 3), corrected=True) == (1, 2, 3)

    @pytest.mark.parametrize("k", [2, 3, 4, 5, 9, 10, 11, 12])
    def test_map7_phi_sizes(self, k):
        rep = map_size_report("phi7", k, 30)
        assert rep.mismatches == 0 and rep.injective

    @pytest.mark.parametrize("k", [1, 6, 8, 13])
    def test_map7_phi_corrected_branches(self, k):
        assert map_size_report("phi7", k, 30).mismatches > 0
        rep = map_size_report("phi7", k, 30, corrected=True)
        assert rep.mismatches == 0 and rep.injective

    def test_map9(self):
        assert map9_phi((0, 0, -1, 0)) == (-1, 0, 1, 0)
        assert map9_phi((0, 0, 0, 0)) == (-1, 0, -1, 0)
        assert selfconj_core_size((-1, 0, -1, 0), 9) == 10
        assert count_cores(9, 3, True) == 1 and count_cores(9, 22, True) == 2
        # (2,1) is the self-conjugate 9-core with half vector (0,0,-1,0)
        assert partition_of(core_of_charvec((0, 1, 0, 0, 0, 0, 0, -1, 0))) == (2, 1)

    @given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
    def test_on_charvec(self, half):
        from frobcore.decomposition import symmetric_vector

        c = symmetric_vector(half, 5)
        out = on_charvec(lambda h: map5_phi(2, h), c)
        f = core_of_charvec(out)
        assert conjugate(f) == f


class TestIdentities:
    @pytest.mark.parametrize(
        "name", ["a3_4n1", "asc5_2n1", "asc5_5n4", "asc5_10n9", "asc7_4n6", "asc5_psi4", "asc5_psi6"]
    )
    def test_pass(self, name):
        rep = verify_identity(name, 30)
        assert rep.passed and rep.first_failure is None

    def test_asc9(self):
        assert verify_identity("asc9_8n10", 20).passed
        assert verify_identity("asc9_4n10", 20).passed

    def test_bundle(self):
        rep = verify_identity("core3_k2m", 15)
        assert rep.passed
        assert {r.label for r in rep.rows} == {"a3_4n1", "core3_k4", "core3_k5", "core3_k8"}

    def test_k7_is_injection_only(self):
        rep = verify_identity("core3_k7", 10)
        assert rep.passed
        assert not all(r.surjective for r in rep.rows)

    def test_unknown(self):
        with pytest.raises(KeyError):
            verify_identity("nope", 3)

    def test_render(self):
        text = verify_identity("asc5_5n4", 2).render()
        assert text.splitlines()[-1] == "PASS"


def test_psi_discrepancy_values():
    rep = map_size_report("psi5", 2, 5)
    assert rep.samples[0] == ((0, 0), 0, 7, 3)
    rep = map_size_report("psi5", 3, 5)
    assert rep.samples[0] == ((0, 0), 0, 40, 8)
    assert map5_psi(3, (0, 0)) == (-3, -1)
