from math import comb

import pytest

from vvmacd.identities import (IdentityReport, asymptotic_identity, finite_identity, k_valuation_gap, limit_k,
                               partial_sum, q_infinity_identity, rank_bound, sum_term)
from vvmacd.qt_arith import ONE, ZERO, T as t, laurent_monomial, to_series_upto
from vvmacd.symmetric import k_coeff
from vvmacd.tableaux import (AsymLabelling, Labelling, Partition, enumerate_apsyt, enumerate_psyt, enumerate_rssyt,
                             all_partitions, inv_count, n_lambda, padded, t_min)
from oracles import brute_fiber

QI = laurent_monomial(-1, 0)
ONE_ROW = AsymLabelling((), [1])
ONE_BOX = AsymLabelling((1,), [1], [[0]])


def tp(k):
    return t**k if k >= 0 else 1 / t**(-k)


# ---------------------------------------------------------------------------
# the two worked series, summed by hand


def one_row_lhs():
    return (1 - QI * t) / (1 - t)


def one_row_rhs(prec):
    out = ZERO
    for k in range(prec + 1):
        term = tp(k)
        for j in range(1, k + 1):
            term = term * (1 - QI * tp(j - 1)) / (1 - QI * tp(j + 1))
        out = out + term
    return to_series_upto(out, prec)


def one_box_lhs():
    return (1 - QI * t) * (1 - t**2) * (1 - QI / t) / ((1 - t) ** 2 * (1 - QI))


def one_box_rhs(prec, q_infinite=False, literal=False):
    """The explicit double sum over (i, j), the labels in boxes (1,1) and (2,1).

    ``literal`` follows the published display.  Otherwise the two product
    ranges depend on which label is larger, which is what the tableau terms
    give: for i < j the q-product runs over k = 1..i-1 and the t-product over
    k = 2..j-1; for j < i they run over k = 1..i-2 and k = 2..j.
    """
    qi = ZERO if q_infinite else QI
    out = ZERO
    # each term has t-valuation at least i + j - 5
    for i in range(1, prec + 7):
        for j in range(1, prec + 7 - i):
            if i == j:
                continue
            term = tp(i + j - 3)
            itop = i - 1 if i < j and not literal else i - 2
            for k in range(1, itop + 1):
                term = term * (1 - qi * tp(k - 1)) / (1 - qi * tp(k + 1))
            jtop = j - 1 if literal or i < j else j
            for k in range(2, jtop + 1):
                term = term * (1 - tp(k - 1)) / (1 - tp(k + 1))
            if j <= i - 1:
                term = term * t * ((1 - qi * tp(-2)) / (1 - qi) if not q_infinite else ONE)
            elif literal:
                term = term * ((1 - qi) / (1 - qi * t**2) if not q_infinite else ONE)
            out = out + term
    return to_series_upto(out, prec)


def test_one_row_limit_k():
    assert limit_k(ONE_ROW).inverse() == one_row_lhs()


def test_one_box_limit_k():
    assert limit_k(ONE_BOX).inverse() == one_box_lhs()


def test_empty_limit_k():
    assert limit_k(AsymLabelling((), [])) == ONE


def test_one_row_identity_order_8():
    rep = asymptotic_identity(ONE_ROW, 8)
    assert rep.verdict
    assert rep.rhs.agrees_with(one_row_rhs(8), 8)
    assert rep.lhs.agrees_with(to_series_upto(one_row_lhs(), 8), 8)


def test_one_box_identity_order_8():
    rep = asymptotic_identity(ONE_BOX, 8)
    prec = one_box_lhs().t_valuation() + 8
    assert rep.verdict
    assert rep.rhs.agrees_with(one_box_rhs(prec), prec)
    assert to_series_upto(one_box_lhs(), prec).agrees_with(one_box_rhs(prec), prec)


def test_one_box_display_as_printed():
    # every i < j term with the extra factor: off by -1/q already at t^0
    prec = one_box_lhs().t_valuation() + 8
    assert to_series_upto(one_box_lhs(), prec).agrees_with(one_box_rhs(prec, literal=True), prec)


def test_one_box_terms_match_tableaux():
    rank = 8
    L = ONE_BOX.restrict(rank)
    for tau in enumerate_psyt(L):
        i, j = tau[(1, 1)][0], tau[(2, 1)][0]
        if i + j > rank - 1:
            continue
        term = tp(i + j - 3)
        for k in range(1, (i - 1 if i < j else i - 2) + 1):
            term = term * (1 - QI * tp(k - 1)) / (1 - QI * tp(k + 1))
        for k in range(2, (j - 1 if i < j else j) + 1):
            term = term * (1 - tp(k - 1)) / (1 - tp(k + 1))
        if j < i:
            term = term * t * (1 - QI * tp(-2)) / (1 - QI)
        assert sum_term(tau, L) == term, tau


@pytest.mark.parametrize("T", [ONE_ROW, ONE_BOX, AsymLabelling((), [2]), AsymLabelling((), [1, 1]), t_min((1,))],
                         ids=lambda T: str(T.to_json()))
def test_agreement_at_every_order(T):
    for order in range(0, 6):
        assert asymptotic_identity(T, order).verdict


def test_q_infinity_one_row():
    rep = q_infinity_identity(ONE_ROW, 8)
    assert rep.verdict
    geo = to_series_upto(1 / (1 - t), 8)
    assert rep.lhs.agrees_with(geo, 8) and rep.rhs.agrees_with(geo, 8)


def test_q_infinity_one_box():
    rep = q_infinity_identity(ONE_BOX, 6)
    assert rep.verdict
    lhs = (1 - t**2) / (1 - t) ** 2
    prec = lhs.t_valuation() + 6
    assert rep.lhs.agrees_with(to_series_upto(lhs, prec), prec)
    assert rep.rhs.agrees_with(one_box_rhs(prec, q_infinite=True), prec)


@pytest.mark.parametrize("base", [(), (1,), (1, 1)], ids=str)
def test_q_infinity_constant_term_for_t_min(base):
    rep = q_infinity_identity(t_min(base), 2)
    assert rep.verdict
    assert rep.lhs.coefficient(0) == rep.rhs.coefficient(0)


# ---------------------------------------------------------------------------
# the finite identity


def test_finite_trivial():
    rep = finite_identity(Labelling((3,), [[0, 0, 0]]))
    assert rep.lhs == ONE and rep.rhs == ONE and rep.verdict


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_finite_identity_all_small(n):
    count = 0
    for k in range(n):
        for base in ([()] if k == 0 else [tuple(p) for p in all_partitions(k)]):
            base = Partition(base)
            if n_lambda(base) > n:
                continue
            for T in enumerate_rssyt(padded(base, n), 2):
                assert finite_identity(T).verdict, T
                count += 1
    assert count


def test_finite_against_brute_fiber():
    T = Labelling((1, 1), [[1], [0]])
    total = ZERO
    for tau in brute_fiber(T):
        total = total + sum_term(tau, T)
    assert total == k_coeff(T).inverse()
    assert finite_identity(T).term_count == len(enumerate_psyt(T))


def test_partial_sum_at_rank_matches_finite():
    for T in [ONE_ROW, ONE_BOX, t_min((2, 1))]:
        assert partial_sum(T, T.rank) == finite_identity(T.restrict(T.rank)).rhs


# ---------------------------------------------------------------------------
# convergence


def test_k_converges():
    for T in [ONE_BOX, ONE_ROW, AsymLabelling((), [2, 1])]:
        for n in (T.rank + 9, T.rank + 10):
            gap = k_valuation_gap(T, n)
            assert gap is None or gap > 8


def test_k_gap_grows_with_rank():
    gaps = [k_valuation_gap(ONE_BOX, n) for n in range(2, 12)]
    assert gaps == list(range(2, 12))


@pytest.mark.parametrize("T", [ONE_ROW, ONE_BOX, AsymLabelling((), [1, 1])], ids=lambda T: str(T.to_json()))
def test_partial_sums_cauchy(T):
    rk = T.rank
    exact = limit_k(T).inverse()
    for n in range(rk, rk + 6):
        d = exact - partial_sum(T, n)
        assert d.is_zero() or d.t_valuation() >= n + 1 - rk - 2 * comb(rk, 2)


@pytest.mark.parametrize("T", [ONE_ROW, ONE_BOX, AsymLabelling((), [2])], ids=lambda T: str(T.to_json()))
def test_boundary_shell_is_beyond_precision(T):
    order = 3
    prec = limit_k(T).inverse().t_valuation() + order
    R = rank_bound(T, prec)
    shell = [a for a in enumerate_apsyt(T, R + 1) if a.rank == R + 1]
    assert shell
    for a in shell:
        assert inv_count(a.tableau) - 2 * comb(T.rank, 2) > prec
        assert sum_term(a.tableau).t_valuation() > prec


def test_report_json():
    rep = asymptotic_identity(ONE_ROW, 2)
    js = rep.to_json(timings=False)
    assert js["elapsed_ms"] is None and js["verdict"] is True and js["mode"] == "asymptotic_truncated"
    assert isinstance(rep, IdentityReport)
