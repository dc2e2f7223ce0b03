"""Pieri coefficients for multiplication by e_r, finite and stable."""

from __future__ import annotations

from .daha import VElement, mul_e_r, theta_power_sum
from .parallel import pmap
from .qt_arith import ONE, ZERO, RatQT, e_r_principal, t_power
from .symmetric import build_P, eigenvalue_P0l, k_coeff, p_coeff, symmetrization_ratio
from .tableaux import (AsymLabelling, Box, Labelling, enumerate_psyt, inv_count, p_map, psi,
                       raises_finite, raising_pairs, s_of)


class PieriRow:
    """Coefficients of e_r * P_T (or of the stable version) in the P basis."""

    def __init__(self, source, r: int, entries: dict):
        self.source = source
        self.r = r
        self.entries = {S: c for S, c in entries.items() if not c.is_zero()}

    def _key(self, S):
        return S.to_json() if isinstance(S, Labelling) else S.to_json()["rows"]

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "r": self.r,
            "entries": [{"target": S.to_json(), "coeff": c.to_json()}
                        for S, c in sorted(self.entries.items(), key=lambda kv: self._key(kv[0]))],
        }

    @classmethod
    def from_json(cls, data) -> "PieriRow":
        def parse(x):
            return AsymLabelling.from_json(x) if isinstance(x, dict) else Labelling.from_json(x)

        return cls(parse(data["source"]), int(data["r"]),
                   {parse(e["target"]): RatQT.from_json(e["coeff"]) for e in data["entries"]})

    def __eq__(self, other):
        return isinstance(other, PieriRow) and (self.source, self.r, self.entries) == (other.source, other.r, other.entries)


def _contribution(T: Labelling, r: int, tau):
    sigma = tau
    for _ in range(r):
        sigma = psi(sigma)
    S = p_map(sigma)
    if not S.is_rssyt():
        return None
    weight = t_power(sum(tau.c[:r]))
    return S, weight * p_coeff(tau, T) * symmetrization_ratio(sigma, S)


def pieri_finite(T: Labelling, r: int, threads: int | None = None) -> PieriRow:
    """d^(r)_{S,T}: coefficients of e_r(X_1..X_n) P_T in the basis P_S."""
    n = T.n
    if not 1 <= r <= n:
        raise ValueError(f"r must lie in [1, {n}], got {r}")
    if not T.is_rssyt():
        raise ValueError(f"{T!r} is not reverse semistandard")
    contribs = pmap(lambda tau: _contribution(T, r, tau), enumerate_psyt(T), threads)
    sums: dict[Labelling, RatQT] = {}
    for item in contribs:
        if item is not None:
            S, c = item
            sums[S] = sums.get(S, ZERO) + c
    # e_r(1, t, ..., t^{n-1}) already carries t^{C(r,2)}; no further power of t
    pref = e_r_principal(r, n)
    targets = sorted(sums, key=lambda S: S.rows)
    ks = pmap(k_coeff, targets, threads)
    return PieriRow(T, r, {S: pref * K * sums[S] for S, K in zip(targets, ks)})


def pieri_stable(T: AsymLabelling, r: int, rank: int | None = None, threads: int | None = None) -> PieriRow:
    """Stable coefficients, computed at rank rk(T) + r (or a larger given rank)."""
    if r < 1:
        raise ValueError("r must be positive")
    n = max(T.rank + r, rank or 0)
    row = pieri_finite(T.restrict(n), r, threads)
    return PieriRow(T, r, {AsymLabelling.from_labelling(T.base, S): c for S, c in row.entries.items()})


def check_e1_nonvanishing(T: AsymLabelling, T2: AsymLabelling) -> bool:
    """Whether the stable e_1 coefficient from T to its raise T2 is nonzero."""
    if T2 not in {S for _, S in raising_pairs(T)}:
        raise ValueError(f"{T2!r} is not a raise of {T!r}")
    return not pieri_stable(T, 1).entries.get(T2, ZERO).is_zero()


def lemma_witnesses(T: AsymLabelling, box: Box) -> list:
    """Tableaux at rank rk(T)+1 with label 1 in ``box`` and inv = S(T)(box) - 1."""
    n = T.rank + 1
    L = T.restrict(n)
    target = s_of(L)[box] - 1
    return [tau for tau in enumerate_psyt(L) if tau[box][0] == 1 and inv_count(tau) == target]


def cyclicity_step(T: AsymLabelling, T2: AsymLabelling, rank: int | None = None) -> bool:
    """Check that (1/d) X (e_1 P_T) = P_{T2}, X the spectral projection onto T2.

    X = prod over raises S != T2 of (sum theta_i - ev_S) / (ev_{T2} - ev_S).
    """
    raises = [S for _, S in raising_pairs(T)]
    if T2 not in raises:
        raise ValueError(f"{T2!r} is not a raise of {T!r}")
    n = max(T.rank + 1, rank or 0)
    LT = T.restrict(n)
    v = mul_e_r(1, build_P(LT).element)
    ev2 = eigenvalue_P0l(T2.restrict(n), 1)
    for S in raises_finite(LT, 1):
        if S == T2.restrict(n):
            continue
        evS = eigenvalue_P0l(S, 1)
        gap = ev2 - evS
        if gap.is_zero():
            raise ArithmeticError(f"eigenvalues of {S!r} and {T2!r} coincide")
        v = (theta_power_sum(1, v) - v.scale(evS)).scale(gap.inverse())
    d = pieri_finite(LT, 1).entries.get(T2.restrict(n), ZERO)
    if d.is_zero():
        return False
    return v.scale(d.inverse()) == build_P(T2.restrict(n)).element
