import pytest

from exact1q.classify import (
    classify_all,
    enumerate_reduced,
    group_orbits,
    is_dj_computable,
    maximal_feasible,
    nontrivial_catalog,
    orbit_canonical,
    reproduce_tables,
)
from exact1q.core import string_to_mask
from exact1q.errors import ArityTooLargeError


def masks(n, *bits):
    return tuple(sorted(string_to_mask(b, n) for b in bits))


def test_record_counts(records3):
    assert len(records3) == 127


def test_n1_classification():
    (rec,) = classify_all(1)
    assert rec.support == (1,)
    assert rec.feasible and rec.symmetric and rec.dj_computable and rec.maximal
    assert not rec.fewer_bits and not rec.non_trivial


def test_n2_feasible_set_matches_bruteforce():
    from bruteforce import bf_feasible

    recs = classify_all(2)
    assert len(recs) == 7
    for rec in recs:
        assert rec.feasible == bf_feasible(2, rec.support)
    feasible = {rec.support for rec in recs if rec.feasible}
    # six of the seven supports admit weights; only the full set fails
    assert feasible == {
        masks(2, "01"),
        masks(2, "10"),
        masks(2, "11"),
        masks(2, "01", "10"),
        masks(2, "01", "11"),
        masks(2, "10", "11"),
    }


def test_no_nontrivial_three_bit(records3):
    assert all(not rec.non_trivial for rec in records3)


def test_three_bit_maximal_supports(records3):
    got = {rec.support for rec in records3 if rec.maximal}
    expected = {
        masks(3, "110", "101", "011"),              # one level, symmetric
        masks(3, "100", "010", "101", "011"),        # disagreement on bits 1,2
        masks(3, "010", "001", "110", "101"),
        masks(3, "100", "001", "110", "011"),
        masks(3, "100", "110", "101", "111"),        # everything containing bit 1
        masks(3, "010", "110", "011", "111"),
        masks(3, "001", "101", "011", "111"),
    }
    assert got == expected


def test_included_by_points_to_maximal_superset(records3):
    by_support = {rec.support: rec for rec in records3}
    for rec in records3:
        if rec.feasible and not rec.maximal:
            assert rec.included_by is not None
            parent = by_support[rec.included_by]
            assert parent.maximal
            assert set(rec.support) < set(parent.support)
        elif rec.feasible:
            assert rec.included_by is None


def test_dj_flag():
    assert is_dj_computable(4, masks(4, "1100", "1010"))
    assert not is_dj_computable(4, masks(4, "1100", "0111"))  # two levels
    assert not is_dj_computable(4, masks(4, "1000"))  # level below ceil(n/2)
    assert is_dj_computable(3, masks(3, "110", "011"))


def test_enumerate_matches_classify(records3):
    assert list(enumerate_reduced(3)) == records3


def test_sharding_determinism():
    assert classify_all(3, workers=3) == classify_all(3)


def test_arity_guards():
    with pytest.raises(ArityTooLargeError):
        classify_all(5)
    with pytest.raises(ArityTooLargeError):
        nontrivial_catalog(5)
    with pytest.raises(ArityTooLargeError):
        list(enumerate_reduced(6))
    with pytest.raises(ArityTooLargeError):
        reproduce_tables(5)


def test_orbit_canonicalization():
    a = masks(4, "1100", "1010", "1001", "0111")
    b = masks(4, "0011", "0101", "1001", "1110")  # relabelled image of a
    assert orbit_canonical(a, 4) == orbit_canonical(b, 4)
    orbits = group_orbits([a, b], 4)
    assert len(orbits) == 1


def test_witness_first_mode_matches_full_mode_maximal():
    for n in (2, 3):
        full = {rec.support for rec in classify_all(n) if rec.maximal}
        vertex = {rec.support for rec in maximal_feasible(n)}
        assert vertex == full


def test_witness_first_runs_at_n5_spotcheck():
    # n=5 maximal supports are produced without subset enumeration; the
    # single-level supports must be among them
    from exact1q.construct import level_set

    recs = maximal_feasible(5)
    supports = {rec.support for rec in recs}
    assert level_set(5, 3) in supports
    assert all(rec.maximal for rec in recs)


def test_unique_system_witnesses_reproduced_exactly():
    # wherever a catalog row's equality system pins a unique solution, the
    # engine returns exactly the catalogued rationals
    from bruteforce import bf_unique_solution

    from exact1q.catalog import rows_for
    from exact1q.feasibility import decide_reduced
    from exact1q.reduction import ReducedFn

    checked = 0
    for n in (3, 4):
        for row in rows_for(n):
            claimed = row.weight_fractions()
            if claimed is None:
                continue
            support = tuple(sorted(string_to_mask(s, n) for s in row.support))
            unique = bf_unique_solution(n, support)
            if unique is None or tuple(unique) != claimed:
                continue  # families and the two known-inconsistent rows
            res = decide_reduced(ReducedFn(n, support))
            assert res.feasible
            assert res.witness.z == claimed
            checked += 1
    assert checked == 7  # the level rows plus the four pinned star supports


def test_reproduce_tables_n3_rows_agree():
    report = reproduce_tables(3)
    assert all(row.agree for row in report.rows)
    assert report.derived_nontrivial_count == 0
    assert report.claimed_nontrivial_count == 0
    assert report.count_matches_claim
    # the two zero-weight maximal orbits are surfaced, flagged trivial
    assert len(report.unlisted_maximal_orbits) == 2


def test_maximal_feasible_n4_vertex_cross_check(records4):
    from exact1q.classify import _vertex_mode_records

    full = {rec.support for rec in records4 if rec.maximal}
    vertex = {rec.support for rec in _vertex_mode_records(4)}
    assert vertex == full
