from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chipfire import refdata
from chipfire.fixtures import DIAMOND_M
from chipfire.linalg import mat_vec, vec_sub
from chipfire.mmatrix import MMatrix, is_m_matrix


@st.composite
def m_matrices(draw, n_max=3):
    n = draw(st.integers(1, n_max))
    grid = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                grid[i][j] = -draw(st.integers(0, 2))
    for j in range(n):
        slack = draw(st.integers(1, 3))
        grid[j][j] = sum(-grid[i][j] for i in range(n) if i != j) + slack
    return MMatrix(tuple(tuple(r) for r in grid))


def test_is_m_matrix():
    assert is_m_matrix(((2, -1), (-1, 2)))
    assert not is_m_matrix(((1, -5), (-5, 1)))
    assert not is_m_matrix(((2, 1), (1, 2)))
    assert not is_m_matrix(((0, 0), (0, 0)))


def test_reference_m_matrix_tables():
    m = MMatrix(DIAMOND_M)
    assert m.det == 8
    assert m.c_max == (2, 1, 2)
    assert tuple(m.superstables()) == refdata.M_SUPERSTABLES
    assert tuple(m.criticals()) == refdata.M_CRITICALS
    for s, c in zip(refdata.M_SUPERSTABLES, refdata.M_CRITICALS):
        assert m.classical_dual(s) == c


def test_fire_moves_chips():
    m = MMatrix(DIAMOND_M)
    c = (3, 0, 0)
    fired = m.fire(c, 0)
    assert fired == vec_sub(c, mat_vec(m.m, (1, 0, 0)))
    assert m.ready_sites(c) == [0]
    assert not m.is_stable(c)
    assert m.is_stable(fired)


@settings(max_examples=40, deadline=None)
@given(m_matrices())
def test_superstable_count_and_classes(m):
    ss = m.superstables()
    assert len(ss) == abs(m.det)
    assert len({m.class_id(s) for s in ss}) == len(ss)
    for s in ss:
        assert m.sstab_of_class(s) == s


@settings(max_examples=25, deadline=None)
@given(m_matrices(), st.randoms(use_true_random=False))
def test_stabilize_schedule_independent(m, rng):
    c = tuple(rng.randint(0, m.m[i][i] + 2) for i in range(m.n))
    ordered = m.stabilize(c)
    chaotic = c
    while True:
        ready = [i for i in range(m.n) if chaotic[i] >= m.m[i][i]]
        if not ready:
            break
        chaotic = m.fire(chaotic, rng.choice(ready))
    assert ordered == chaotic
    assert m.is_stable(ordered)


@settings(max_examples=25, deadline=None)
@given(m_matrices(n_max=2))
def test_z_superstable_against_brute_force(m):
    # brute definition: no nonzero z >= 0 keeps s - M z nonnegative.
    # column dominance is strict, so each unit of z burns at least one
    # chip in total and sum(s) bounds every coordinate of a witness.
    for s in product(*(range(m.m[i][i]) for i in range(m.n))):
        cap = sum(s)
        brute = True
        for z in product(range(cap + 1), repeat=m.n):
            if not any(z):
                continue
            if all(q >= 0 for q in vec_sub(s, mat_vec(m.m, z))):
                brute = False
                break
        assert m.is_z_superstable(s) == brute


def test_z_superstable_rejects_negative():
    m = MMatrix(DIAMOND_M)
    with pytest.raises(ValueError):
        m.is_z_superstable((-1, 0, 0))


def test_criticals_are_stable_and_dual():
    m = MMatrix(DIAMOND_M)
    for c in m.criticals():
        assert m.is_stable(c)
        assert m.crit_of_class(c) == c
    # duality is a bijection between the two tables
    assert {m.classical_dual(s) for s in m.superstables()} == set(m.criticals())
