import pytest

from chipfire import refdata
from chipfire.duality import (
    duality,
    duality_inverse,
    duality_table,
    fixed_points,
    involution_mu,
    mu_case,
    nonzero_criteria,
    predicted_fixed_point_count,
)
from chipfire.fixtures import DIAMOND_M
from chipfire.linalg import vec_sub
from chipfire.mmatrix import MMatrix
from chipfire.pairs import ChipFiringPair


def test_mu_table(diamond):
    for s, (image, case) in refdata.MU_TABLE.items():
        assert mu_case(diamond, s) == case
        assert involution_mu(diamond, s) == image


def test_mu_is_an_involution(diamond):
    for s in refdata.MU_TABLE:
        assert involution_mu(diamond, involution_mu(diamond, s)) == s


def test_mu_rejects_non_superstable(diamond):
    with pytest.raises(ValueError):
        involution_mu(diamond, (5, 5, 5))


def test_worked_example(diamond):
    assert duality(diamond, refdata.WORKED_DUALITY_INPUT) == refdata.WORKED_DUALITY_OUTPUT
    src, dst = refdata.WORKED_DUALITY_CONFIGS
    assert diamond.to_config(refdata.WORKED_DUALITY_INPUT) == src
    assert diamond.to_config(refdata.WORKED_DUALITY_OUTPUT) == dst


def test_duality_bijection_and_inverse(diamond):
    rows = diamond.enumerate_pair_superstables()
    crit_pre = {r.preimage for r in diamond.enumerate_pair_criticals()}
    images = set()
    for r in rows:
        y = duality(diamond, r.preimage)
        assert duality_inverse(diamond, y) == r.preimage
        images.add(y)
    assert images == crit_pre


def test_duality_table_matches_masked_reference(diamond):
    table = duality_table(diamond)
    got = {tuple(row["config"]): tuple(row["dual_config"]) for row in table}
    assert got == refdata.MASKED_DUALITY
    # the printed alignment differs on exactly four rows
    diff = {c for c in got if got[c] != refdata.PRINTED_DUALITY[c]}
    assert diff == {(0, 0, 0), (1, 1, 0), (2, 2, 0), (3, 3, 0)}


def test_fixed_points(diamond):
    assert fixed_points(diamond) == refdata.FIXED_POINTS
    assert predicted_fixed_point_count(diamond) == 4


def test_nonzero_criteria_fields(diamond):
    crit = nonzero_criteria(diamond)
    assert crit["quotient"].invariant_factors == refdata.M_QUOTIENT_FACTORS
    assert crit["cmax_order"] == 1
    assert crit["odd_order_guarantee"] is True
    assert crit["cyclic_even_criterion"] is None


def test_cyclic_even_criterion_both_ways():
    # ord([c_max]) is even in both; the criterion decides emptiness exactly
    empty = ChipFiringPair(((-4, -2), (4, -3)), ((3, -1), (-2, 2)))
    crit = nonzero_criteria(empty)
    assert crit["cyclic_even_criterion"] is False
    assert fixed_points(empty) == ()

    full = ChipFiringPair(
        ((-2, 4, -4), (3, 4, 2), (2, 2, 2)),
        ((5, -1, 0), (0, 5, -1), (-2, -1, 3)),
    )
    crit = nonzero_criteria(full)
    assert crit["cyclic_even_criterion"] is True
    assert len(fixed_points(full)) == 2


def test_equal_pair_duality_is_complement():
    m = MMatrix(DIAMOND_M)
    pair = ChipFiringPair(DIAMOND_M, m)
    for s in m.superstables():
        assert involution_mu(pair, s) == s
        assert duality(pair, s) == vec_sub(m.c_max, s)


def test_naive_complement_really_fails(diamond):
    gap = vec_sub(refdata.NAIVE_MAP_CRITICAL, refdata.NAIVE_MAP_SUPERSTABLE)
    assert gap == refdata.NAIVE_MAP_DIFFERENCE
    # the difference is critical on its own, the subtraction just leaves the class
    assert diamond.classify(gap).is_critical
    assert diamond.class_id(gap) != diamond.class_id(refdata.NAIVE_MAP_CRITICAL)
