from fractions import Fraction

import pytest

from chipfire import refdata
from chipfire.fixtures import DIAMOND_L, DIAMOND_M
from chipfire.linalg import frac_part, identity, mat_vec, vec_add
from chipfire.mmatrix import MMatrix
from chipfire.pairs import ChipFiringPair


def test_reference_enumeration(diamond):
    got = [(r.config, r.preimage, r.floor) for r in diamond.enumerate_pair_superstables()]
    assert got == [(c, p, f) for c, p, f in refdata.PAIR_SUPERSTABLE_ROWS]
    # the critical reference rows are aligned per class, ours sort by config
    got = [(r.config, r.preimage, r.floor) for r in diamond.enumerate_pair_criticals()]
    assert got == sorted((c, p, f) for c, p, f in refdata.PAIR_CRITICAL_ROWS)


def test_row_counts_match_det(diamond):
    assert len(diamond.enumerate_pair_superstables()) == abs(diamond.det_l) == 12
    assert diamond.det_m == 8


def test_transfer_roundtrip(diamond):
    for r in diamond.enumerate_pair_superstables():
        assert diamond.to_preimage(r.config) == r.preimage
        assert diamond.to_config(r.preimage) == r.config
        assert frac_part(r.preimage) == r.frac


def test_membership_predicates(diamond):
    rows = diamond.enumerate_pair_superstables()
    for r in rows:
        assert diamond.splus_member(r.config)
        assert diamond.rplus_member(r.preimage)
    assert not diamond.rplus_member((Fraction(1, 2), 0, 0))
    with pytest.raises(ValueError):
        diamond.to_config((Fraction(1, 2), 0, 0))


def test_classify(diamond):
    ss = {r.config for r in diamond.enumerate_pair_superstables()}
    crit = {r.config for r in diamond.enumerate_pair_criticals()}
    for cfg in ss:
        verdict = diamond.classify(cfg)
        assert verdict.is_superstable
        assert verdict.is_critical == (cfg in crit)
    # the erratum case: both tables contain it, and classify agrees
    assert diamond.classify(refdata.NAIVE_MAP_DIFFERENCE).is_critical


def test_stabilize_rplus(diamond):
    # M (1,1,1) = (1,0,1) keeps the bumped point inside R+
    bump = mat_vec(diamond.m.m, (1, 1, 1))
    for r in diamond.enumerate_pair_superstables()[:4]:
        bumped = vec_add(r.preimage, bump)
        settled = diamond.stabilize_rplus(bumped)
        assert diamond.rplus_member(settled)
        assert all(not diamond.ready_to_fire(settled, i) for i in range(diamond.n))
        assert diamond.class_id(diamond.to_config(settled)) == diamond.class_id(r.config)


def test_rplus_rejects_negative(diamond):
    with pytest.raises(ValueError):
        diamond.stabilize_rplus(vec_add(diamond.m_column(0), (0, 0, 0)))


def test_stabilize_splus(diamond):
    rows = diamond.enumerate_pair_superstables()
    cfg = vec_add(rows[0].config, mat_vec(diamond.l, (1, 1, 1)))
    settled = diamond.stabilize_splus(cfg)
    assert diamond.class_id(settled) == diamond.class_id(rows[0].config)


def test_identity_pair_degenerates_to_mmatrix():
    m = MMatrix(DIAMOND_M)
    pair = ChipFiringPair(identity(3), m)
    assert pair.ml_inv == m.m
    rows = pair.enumerate_pair_superstables()
    assert [r.config for r in rows] == [(0, 0, 0)]


def test_equal_pair_matches_classical_tables():
    m = MMatrix(DIAMOND_M)
    pair = ChipFiringPair(DIAMOND_M, m)
    assert [r.config for r in pair.enumerate_pair_superstables()] == list(m.superstables())
    assert [r.config for r in pair.enumerate_pair_criticals()] == sorted(m.criticals())
    for r in pair.enumerate_pair_superstables():
        assert r.preimage == r.config
        assert r.frac == (0, 0, 0)


def test_rejects_bad_l():
    m = MMatrix(DIAMOND_M)
    with pytest.raises(ValueError):
        ChipFiringPair(((1, 0, 0), (0, 1, 0), (1, 1, 0)), m)
    with pytest.raises(ValueError):
        ChipFiringPair(((Fraction(1, 2), 0, 0), (0, 1, 0), (0, 0, 1)), m)


def test_grid_or_instance_equivalent():
    a = ChipFiringPair(DIAMOND_L, DIAMOND_M)
    b = ChipFiringPair(DIAMOND_L, MMatrix(DIAMOND_M))
    assert a.l == b.l and a.m.m == b.m.m
