import random

import pytest

from vvmacd.hecke import (act_T, act_T_inv, act_phi_bar, act_theta_bar, restrict, specht, symmetrize)
from vvmacd.qt_arith import ONE, T as t, t_power
from vvmacd.tableaux import Labelling, Partition, all_partitions, padded
from oracles import naive_symmetrize_specht, random_specht

SMALL_SHAPES = [p for n in range(2, 7) for p in all_partitions(n)]


def test_same_row_and_same_column():
    M = specht((2, 1))
    row = M.index[Labelling((2, 1), [[1, 2], [3]])]
    col = M.index[Labelling((2, 1), [[1, 3], [2]])]
    assert act_T(1, M.basis_vector(row)) == M.basis_vector(row)
    assert act_T(1, M.basis_vector(col)) == M.basis_vector(col).scale(-t)
    assert act_T_inv(1, M.basis_vector(row)) == M.basis_vector(row)
    assert act_T_inv(1, M.basis_vector(col)) == M.basis_vector(col).scale(-1 / t)


def test_swap_case_coefficient():
    M = specht((2, 1))
    k = M.index[Labelling((2, 1), [[1, 2], [3]])]
    other = M.index[Labelling((2, 1), [[1, 3], [2]])]
    v = act_T(2, M.basis_vector(k))
    assert v.terms[k] == (1 - t) * t / (t - 1 / t)
    assert v.terms[other] == ONE


@pytest.mark.parametrize("shape", SMALL_SHAPES, ids=str)
def test_braid_and_commutation(shape):
    rng = random.Random(hash(shape) & 0xFFFF)
    n = sum(shape)
    v = random_specht(rng, shape)
    for i in range(1, n - 1):
        a = act_T(i, act_T(i + 1, act_T(i, v)))
        b = act_T(i + 1, act_T(i, act_T(i + 1, v)))
        assert a == b
    for i in range(1, n):
        for j in range(i + 2, n):
            assert act_T(i, act_T(j, v)) == act_T(j, act_T(i, v))


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2), (3, 2), (2, 1, 1)], ids=str)
def test_quadratic_and_inverse(shape):
    rng = random.Random(7)
    v = random_specht(rng, shape)
    for i in range(1, sum(shape)):
        Tv = act_T(i, v)
        assert (act_T(i, Tv) - Tv + Tv.scale(t) - v.scale(t)).is_zero()  # (T-1)(T+t) = 0
        assert act_T(i, act_T_inv(i, v)) == v
        assert act_T_inv(i, act_T(i, v)) == v


def test_theta_bar_examples():
    M = specht((2, 1))
    k = M.index[Labelling((2, 1), [[1, 2], [3]])]
    e = M.basis_vector(k)
    assert act_theta_bar(2, e) == e.scale(t)
    for j in range(M.dim()):
        assert act_theta_bar(1, M.basis_vector(j)) == M.basis_vector(j)


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2), (3, 2)], ids=str)
def test_theta_bar_commute(shape):
    rng = random.Random(9)
    v = random_specht(rng, shape)
    n = sum(shape)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            assert act_theta_bar(i, act_theta_bar(j, v)) == act_theta_bar(j, act_theta_bar(i, v))


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2), (3, 2)], ids=str)
def test_phi_bar_relations(shape):
    rng = random.Random(13)
    v = random_specht(rng, shape)
    n = sum(shape)
    for i in range(1, n):
        for j in range(1, n + 1):
            sj = i + 1 if j == i else i if j == i + 1 else j
            assert act_phi_bar(i, act_theta_bar(j, v)) == act_theta_bar(sj, act_phi_bar(i, v))
        lhs = act_phi_bar(i, act_phi_bar(i, v))
        w = act_theta_bar(i + 1, v).scale(t) - act_theta_bar(i, v)
        rhs = act_theta_bar(i, w).scale(t) - act_theta_bar(i + 1, w)
        assert lhs == rhs


def test_phi_bar_on_basis():
    M = specht((3, 2))
    for k, S in enumerate(M.syts):
        c = M.contents[k]
        for i in range(1, M.n):
            j = M.swap(k, i)
            if j is None:
                continue
            # s_i(S) > S when i sits in an earlier column than i+1 would after swapping
            (r1, c1), (r2, c2) = M.positions[k][i], M.positions[k][i + 1]
            if r1 < r2:  # s_i moves i+1 up a row: larger tableau
                got = act_phi_bar(i, M.basis_vector(k))
                assert got == M.basis_vector(j).scale(t_power(c[i - 1]) - t_power(c[i]))


@pytest.mark.parametrize("shape", [(2,), (2, 1), (3, 1), (2, 2), (2, 1, 1), (3, 2)], ids=str)
def test_symmetrizer_matches_naive(shape):
    rng = random.Random(21)
    v = random_specht(rng, shape)
    assert symmetrize(v) == naive_symmetrize_specht(v)


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (3,), (4, 1)], ids=str)
def test_symmetrizer_idempotent_and_invariant(shape):
    rng = random.Random(4)
    v = random_specht(rng, shape)
    e = symmetrize(v)
    assert symmetrize(e) == e
    for i in range(1, sum(shape)):
        assert act_T(i, e) == e


@pytest.mark.parametrize("base,n", [((), 3), ((1,), 3), ((1,), 4), ((2, 1), 5), ((1, 1), 4)], ids=str)
def test_restriction_is_module_map(base, n):
    big = padded(Partition(base), n + 1)
    rng = random.Random(n)
    v = random_specht(rng, big, terms=4)
    for i in range(1, n):
        assert restrict(act_T(i, v)) == act_T(i, restrict(v))


def test_restriction_keeps_or_kills():
    M = specht((2, 1))  # base (1), rank 3
    keep = M.index[Labelling((2, 1), [[1, 3], [2]])]
    kill = M.index[Labelling((2, 1), [[1, 2], [3]])]
    small = restrict(M.basis_vector(keep))
    assert small.module.shape == Partition((1, 1))
    assert small == small.module.basis_vector(Labelling((1, 1), [[1], [2]]))
    assert restrict(M.basis_vector(kill)).is_zero()
