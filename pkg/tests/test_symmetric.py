import itertools

import pytest

from vvmacd.daha import VElement, act_T_on_V, build_F, fbasis, symmetrize_V, theta_power_sum
from vvmacd.qt_arith import ONE, Q as q, T as t, ZERO, laurent_monomial, mu_factorial, t_factorial
from vvmacd.symmetric import (MacdonaldP, StableMacD, build_P, distinguish_shapes, eigenvalue_P0l, k_coeff,
                              p_coeff, stability_check, symmetrization_ratio)
from vvmacd.tableaux import (AsymLabelling, Labelling, all_partitions, enumerate_omega, enumerate_psyt,
                             enumerate_rssyt, min_of, mu_of, padded, psyt_leq, s_i, t_min, top_of)
from oracles import classical_p2_ratio, content_multiset, naive_symmetrize_V

SHAPES = [(2,), (1, 1), (2, 1), (3,), (3, 1), (2, 2), (2, 1, 1)]


def rssyt(shape, m=2):
    return enumerate_rssyt(shape, m)


# ---------------------------------------------------------------------------
# kappa and P


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_kappa_of_top_is_one(shape):
    for T in rssyt(shape):
        assert p_coeff(top_of(T)) == ONE


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2)], ids=str)
def test_kappa_ratio_along_s_i(shape):
    n = sum(shape)
    for T in rssyt(shape):
        for tau in enumerate_psyt(T):
            for i in range(1, n):
                up = s_i(tau, i)
                if up is None or not psyt_leq(tau, up) or up == tau:
                    continue
                x = laurent_monomial(tau.w[i - 1], tau.c[i - 1])
                y = laurent_monomial(tau.w[i], tau.c[i])
                yt = laurent_monomial(tau.w[i], tau.c[i] + 1)
                assert p_coeff(up, T) / p_coeff(tau, T) == (x - y) / (x - yt)


def test_one_row_zero_is_constant():
    for n in range(1, 5):
        T = Labelling((n,), [[0] * n])
        assert len(enumerate_psyt(T)) == 1
        P = build_P(T)
        assert P.element == VElement.basis((n,), (0,) * n, 0)
        assert k_coeff(T) == ONE


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_P_is_hecke_invariant_and_fixed_by_eps(shape):
    for T in rssyt(shape, 1):
        P = build_P(T, verify=True)
        assert P.is_hecke_invariant()
        assert symmetrize_V(P.element) == P.element


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_P_fiber_sum_equals_symmetrized_min(shape):
    for T in rssyt(shape):
        assert build_P(T, method="sum") == build_P(T)


def test_P_matches_naive_symmetrizer_fixed_point():
    T = Labelling((2, 1), [[1, 0], [0]])
    P = build_P(T).element
    assert naive_symmetrize_V(P) == P


def test_classical_two_variables():
    # lambda empty, n = 2: one-row shape (2), so V is polynomials in X1, X2
    P2 = build_P(Labelling((2,), [[2, 0]])).element
    lead = P2.coefficient((2, 0), 0)
    assert P2.coefficient((0, 2), 0) == lead
    assert P2.coefficient((1, 1), 0) / lead == classical_p2_ratio()
    P10 = build_P(Labelling((2,), [[1, 0]])).element
    assert P10.coefficient((1, 0), 0) == P10.coefficient((0, 1), 0)
    assert set(a for a, _ in P10.terms) == {(1, 0), (0, 1)}
    P11 = build_P(Labelling((2,), [[1, 1]])).element
    assert set(a for a, _ in P11.terms) == {(1, 1)}


def test_macdonald_json_roundtrip():
    P = build_P(Labelling((2, 1), [[1, 1], [0]]))
    assert MacdonaldP.from_json(P.to_json()) == P


# ---------------------------------------------------------------------------
# K and symmetrization of F


def test_k_examples():
    assert k_coeff(Labelling((3,), [[0, 0, 0]])) == ONE
    # lambda empty, n = 2, T = (1, 0): mu = (1, 1) and one inversion pair, boxes of content 0 and 1
    assert k_coeff(Labelling((2,), [[1, 0]])) == (q - t**2) / (q - t) / (1 + t)
    with pytest.raises(ValueError):
        k_coeff(Labelling((1, 1), [[0], [0]]))


@pytest.mark.parametrize("shape", [(2,), (1, 1), (2, 1), (3,), (3, 1), (2, 2)], ids=str)
def test_eps_of_top_and_min(shape):
    for T in rssyt(shape, 1):
        P = build_P(T, method="sum").element
        assert symmetrize_V(build_F(top_of(T))) == P.scale(k_coeff(T))
        scal = t_factorial(T.n) / mu_factorial(mu_of(T))
        assert symmetrize_V(build_F(min_of(T))).scale(scal) == P


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2)], ids=str)
def test_eps_ratio_over_fiber(shape):
    for T in rssyt(shape, 1):
        top = symmetrize_V(build_F(top_of(T)))
        for tau in enumerate_psyt(T):
            assert symmetrize_V(build_F(tau)) == top.scale(symmetrization_ratio(tau, T))


@pytest.mark.parametrize("shape", [(1, 1), (2, 1), (2, 2), (2, 1, 1)], ids=str)
def test_eps_kills_non_semistandard(shape):
    seen = 0
    for T in enumerate_rssyt(shape, 1, strict_columns=False):
        if not T.is_rssyt():
            seen += 1
            assert symmetrize_V(build_F(top_of(T))).is_zero()
    assert seen


# ---------------------------------------------------------------------------
# eigenvalues


@pytest.mark.parametrize("shape", [(2, 1), (3,), (3, 1), (2, 2)], ids=str)
@pytest.mark.parametrize("ell", [1, 2])
def test_power_sum_eigenvalues(shape, ell):
    for T in rssyt(shape, 1):
        P = build_P(T).element
        assert theta_power_sum(ell, P) == P.scale(eigenvalue_P0l(T, ell))


def test_stable_eigenvalue_example():
    T = AsymLabelling((3, 2, 1), [5, 3, 3, 2, 1], [[3, 2, 0], [1, 1], [0]])
    ti = 1 / t
    expected = ((q**5 - 1) + (q**3 - 1) * (ti + t + t**2) + (q**2 - 1) * (1 + t**3)
                + (q - 1) * (ti**2 + ti + t**4))
    assert eigenvalue_P0l(T, 1) == expected


def test_stable_eigenvalue_of_zero():
    assert eigenvalue_P0l(AsymLabelling((), []), 1) == ZERO


def test_eigenvalue_rejects_zero_power():
    with pytest.raises(ValueError):
        eigenvalue_P0l(Labelling((1,), [[0]]), 0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_simple_spectrum(n):
    for base in all_partitions_upto(n):
        shape = padded(base, n)
        evs = [eigenvalue_P0l(T, 1) for T in enumerate_rssyt(shape, 2)]
        assert len(evs) == len(set(evs))


def all_partitions_upto(n):
    out = [()]
    for k in range(1, n):
        out += [tuple(p) for p in all_partitions(k)]
    return [b for b in out if (b[0] if b else 0) + sum(b) <= n]


# ---------------------------------------------------------------------------
# stability


@pytest.mark.parametrize("n", [2, 3, 4])
def test_stability_empty_base(n):
    for T in enumerate_omega((), 2):
        if T.rank <= n:
            assert stability_check(T, n)


@pytest.mark.parametrize("n", [2, 3])
def test_stability_t_min_one_box(n):
    assert stability_check(t_min((1,)), n)


def test_stability_base_21():
    # T_min has degree 4 and rank 5 here; take it and every raise of it
    pool = enumerate_omega((2, 1), 5)
    assert len(pool) == 4
    for T in pool:
        assert stability_check(T, max(T.rank, 5))


def test_stability_rejects_low_rank():
    with pytest.raises(ValueError):
        stability_check(AsymLabelling((), [1, 1]), 1)


def test_stable_proxy_rank():
    S = StableMacD(AsymLabelling((), [1]), rank=3)
    assert S.realized_rank == 3
    assert S.proxy == build_P(Labelling((3,), [[1, 0, 0]]))


# ---------------------------------------------------------------------------
# shapes are told apart by contents


def test_distinguish_examples():
    assert not distinguish_shapes((2, 1), (2, 1))
    assert distinguish_shapes((2, 1), (3,))


def test_distinguish_exhaustive():
    parts = [tuple(p) for n in range(0, 7) for p in all_partitions(n)]
    for a, b in itertools.product(parts, repeat=2):
        assert distinguish_shapes(a, b) == (content_multiset(a) != content_multiset(b))
        assert distinguish_shapes(a, b) == (a != b)
