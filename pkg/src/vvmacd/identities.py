"""Product-sum identities from inversion statistics of periodic tableaux.

Finite rank identities are checked exactly in Q(q,t).  The asymptotic
identity lives in Q(q)((t)) and is checked through a fixed t-adic precision.
"""

from __future__ import annotations

import time
from math import comb

from .parallel import pmap
from .qt_arith import ONE, ZERO, RatQT, TSeries, laurent_monomial, mu_factorial, t_power, to_series_upto
from .symmetric import k_coeff
from .tableaux import (AsymLabelling, Labelling, Psyt, content, enumerate_apsyt, enumerate_psyt, inversions,
                       min_of, mu_of, p_map, padded)


class IdentityReport:
    def __init__(self, labelling, mode: str, order, lhs, rhs, verdict: bool, term_count: int, elapsed_ms: float | None):
        self.labelling = labelling
        self.mode = mode
        self.order = order
        self.lhs = lhs
        self.rhs = rhs
        self.verdict = verdict
        self.term_count = term_count
        self.elapsed_ms = elapsed_ms

    def to_json(self, timings: bool = True) -> dict:
        return {
            "labelling": self.labelling.to_json(),
            "mode": self.mode,
            "order": self.order,
            "verdict": self.verdict,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "term_count": self.term_count,
            "elapsed_ms": round(self.elapsed_ms, 3) if timings and self.elapsed_ms is not None else None,
        }

    def __repr__(self):
        return f"IdentityReport({self.mode}, verdict={self.verdict}, terms={self.term_count})"


def _factor(T: Labelling, pair, shift_num: int, shift_den: int) -> RatQT:
    """(1 - q^{dT} t^{dc + shift_num}) / (1 - q^{dT} t^{dc + shift_den}) with d = box2 - box1."""
    b1, b2 = pair
    dT = T[b2] - T[b1]
    dc = content(b2) - content(b1)
    return (1 - laurent_monomial(dT, dc + shift_num)) / (1 - laurent_monomial(dT, dc + shift_den))


def sum_term(tau: Psyt, T: Labelling | None = None) -> RatQT:
    """t^{inv} prod over Inv(tau) of (1 - q^{dT} t^{dc-1}) / (1 - q^{dT} t^{dc+1})."""
    if T is None:
        T = p_map(tau)
    inv = inversions(tau)
    out = t_power(len(inv))
    for pair in inv:
        out = out * _factor(T, pair, -1, 1)
    return out


def finite_identity(T: Labelling, threads: int | None = None) -> IdentityReport:
    """1/K_T against the sum over the fiber of ``sum_term``."""
    start = time.perf_counter()
    lhs = k_coeff(T).inverse()
    fiber = enumerate_psyt(T)
    terms = pmap(lambda tau: sum_term(tau, T), fiber, threads)
    rhs = ZERO
    for x in terms:
        rhs = rhs + x
    ms = (time.perf_counter() - start) * 1000
    return IdentityReport(T, "finite_exact", None, lhs, rhs, lhs == rhs, len(fiber), ms)


def limit_k(T: AsymLabelling) -> RatQT:
    """Closed form of the t-adic limit of K at large rank."""
    rk = T.rank
    L = T.restrict(rk)
    lam = T.base.size
    out = (1 - t_power(1)) ** rk * mu_factorial(mu_of(L))
    for b, v in L.items():
        out = out / (1 - laurent_monomial(-v, rk - lam - content(b)))
    for pair in inversions(min_of(L)):
        out = out * _factor(L, pair, 1, 0)
    return out


def k_valuation_gap(T: AsymLabelling, n: int) -> int | None:
    """t-adic valuation of K_{T|n} - limit_k(T); ``None`` when they coincide."""
    d = k_coeff(T.restrict(n)) - limit_k(T)
    return None if d.is_zero() else d.t_valuation()


def rank_bound(T: AsymLabelling, precision: int) -> int:
    """Rank past which every asymptotic tableau contributes only beyond t^precision."""
    rk = T.rank
    return max(rk, precision + rk + 2 * comb(rk, 2))


def partial_sum(T: AsymLabelling, n: int) -> RatQT:
    """Sum of terms over asymptotic tableaux of rank at most n (exact)."""
    L = T.restrict(n)
    out = ZERO
    for tau in enumerate_psyt(L):
        out = out + sum_term(tau, L)
    return out


def asymptotic_identity(T: AsymLabelling, order: int, threads: int | None = None) -> IdentityReport:
    """Compare 1/limit_k(T) with the tableau sum through t^(val(LHS) + order)."""
    start = time.perf_counter()
    lhs_exact = limit_k(T).inverse()
    precision = lhs_exact.t_valuation() + order
    lhs = to_series_upto(lhs_exact, precision)
    R = rank_bound(T, precision)
    L = T.restrict(R)
    fiber = enumerate_psyt(L)
    series = pmap(lambda tau: to_series_upto(sum_term(tau, L), precision), fiber, threads)
    rhs = TSeries(precision + 1, [], precision)
    for s in series:
        rhs = rhs + s
    ms = (time.perf_counter() - start) * 1000
    return IdentityReport(T, "asymptotic_truncated", order, lhs, rhs, lhs.agrees_with(rhs, precision), len(fiber), ms)


def _q_infinity_lhs(T: AsymLabelling) -> RatQT:
    rk = T.rank
    L = T.restrict(rk)
    lam = T.base.size
    out = ((1 - t_power(1)) ** rk * mu_factorial(mu_of(L))).inverse()
    for b, v in L.items():
        if v == 0:
            out = out * (1 - t_power(rk - lam - content(b)))
    for b1, b2 in inversions(min_of(L)):
        if L[b1] == L[b2]:
            dc = content(b2) - content(b1)
            out = out * (1 - t_power(dc)) / (1 - t_power(dc + 1))
    return out


def _q_infinity_term(tau: Psyt, T: Labelling) -> RatQT:
    inv = inversions(tau)
    out = t_power(len(inv))
    for b1, b2 in inv:
        if T[b1] == T[b2]:
            dc = content(b2) - content(b1)
            out = out * (1 - t_power(dc - 1)) / (1 - t_power(dc + 1))
    return out


def q_infinity_identity(T: AsymLabelling, order: int, threads: int | None = None) -> IdentityReport:
    """The q -> infinity specialization: keep only equal-value factors on both sides."""
    start = time.perf_counter()
    lhs_exact = _q_infinity_lhs(T)
    precision = lhs_exact.t_valuation() + order
    lhs = to_series_upto(lhs_exact, precision)
    L = T.restrict(rank_bound(T, precision))
    fiber = enumerate_psyt(L)
    series = pmap(lambda tau: to_series_upto(_q_infinity_term(tau, L), precision), fiber, threads)
    rhs = TSeries(precision + 1, [], precision)
    for s in series:
        rhs = rhs + s
    ms = (time.perf_counter() - start) * 1000
    return IdentityReport(T, "q_infinity_truncated", order, lhs, rhs, lhs.agrees_with(rhs, precision), len(fiber), ms)
