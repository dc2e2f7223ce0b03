"""Symmetric vector-valued Macdonald polynomials P_T and their scalars."""

from __future__ import annotations

from typing import Sequence

from .daha import FBasis, VElement, connecting_map, fbasis, act_T_on_V, symmetrize_V
from .parallel import pmap
from .qt_arith import ONE, ZERO, RatQT, T as t, laurent_monomial, mu_factorial, rat_sum, t_factorial, t_power
from .tableaux import (AsymLabelling, Labelling, Partition, Psyt, content, enumerate_psyt, inversions,
                       min_of, mu_of, p_map, padded, top_of)


def _pair_data(T: Labelling, pair):
    b1, b2 = pair
    return T[b1], content(b1), T[b2], content(b2)


def p_coeff(tau: Psyt, T: Labelling | None = None) -> RatQT:
    """kappa_tau: product over inversion pairs of
    (q^{T1} t^{c1+1} - q^{T2} t^{c2}) / (q^{T1} t^{c1} - q^{T2} t^{c2})."""
    if T is None:
        T = p_map(tau)
    out = ONE
    for pair in inversions(tau):
        a1, c1, a2, c2 = _pair_data(T, pair)
        num = laurent_monomial(a1, c1 + 1) - laurent_monomial(a2, c2)
        den = laurent_monomial(a1, c1) - laurent_monomial(a2, c2)
        out = out * num / den
    return out


def symmetrization_ratio(tau: Psyt, T: Labelling | None = None) -> RatQT:
    """The scalar r with eps(F_tau) = K_T * r * P_T: product over inversion pairs of
    (q^{T1} t^{c1} - q^{T2} t^{c2}) / (q^{T1} t^{c1} - q^{T2} t^{c2+1})."""
    if T is None:
        T = p_map(tau)
    out = ONE
    for pair in inversions(tau):
        a1, c1, a2, c2 = _pair_data(T, pair)
        num = laurent_monomial(a1, c1) - laurent_monomial(a2, c2)
        den = laurent_monomial(a1, c1) - laurent_monomial(a2, c2 + 1)
        out = out * num / den
    return out


def k_coeff(T: Labelling) -> RatQT:
    """K_T = ([mu(T)]!/[n]!) prod over I(T) of
    (q^{T1} t^{c1} - q^{T2} t^{c2+1}) / (q^{T1} t^{c1} - q^{T2} t^{c2})."""
    if not T.is_rssyt():
        raise ValueError(f"{T!r} is not reverse semistandard")
    out = mu_factorial(mu_of(T)) / t_factorial(T.n)
    for pair in inversions(min_of(T)):
        a1, c1, a2, c2 = _pair_data(T, pair)
        num = laurent_monomial(a1, c1) - laurent_monomial(a2, c2 + 1)
        den = laurent_monomial(a1, c1) - laurent_monomial(a2, c2)
        out = out * num / den
    return out


class MacdonaldP:
    """P_T as an F-expansion together with its VElement."""

    def __init__(self, labelling: Labelling, f_expansion: dict[Psyt, RatQT], element: VElement):
        self.labelling = labelling
        self.f_expansion = f_expansion
        self.element = element

    def to_json(self) -> dict:
        return {
            "labelling": self.labelling.to_json(),
            "coefficients": [{"tableau": tau.to_json(), "coeff": c.to_json()}
                             for tau, c in sorted(self.f_expansion.items(), key=lambda kv: kv[0].rows)],
        }

    @classmethod
    def from_json(cls, data, basis: FBasis | None = None) -> "MacdonaldP":
        T = Labelling.from_json(data["labelling"])
        exp = {Psyt.from_json(item["tableau"]): RatQT.from_json(item["coeff"]) for item in data["coefficients"]}
        B = basis or fbasis(T.shape)
        return cls(T, exp, _combine(B, exp))

    def __eq__(self, other):
        return isinstance(other, MacdonaldP) and self.labelling == other.labelling and self.f_expansion == other.f_expansion

    def is_hecke_invariant(self) -> bool:
        v = self.element
        return all(act_T_on_V(i, v) == v for i in range(1, v.n))


def _combine(basis: FBasis, coeffs: dict[Psyt, RatQT]) -> VElement:
    out: dict = {}
    for tau, c in coeffs.items():
        for key, m in basis.F(tau).terms.items():
            out.setdefault(key, []).append(c * m)
    return VElement(basis.module, {key: rat_sum(cs) for key, cs in out.items()})


def build_P(T: Labelling, basis: FBasis | None = None, threads: int | None = None, verify: bool = False,
            method: str = "min") -> MacdonaldP:
    """P_T = sum over the fiber of kappa_tau F_tau.

    ``method="sum"`` assembles that sum from every F_tau in the fiber.  The
    default ``"min"`` gets the same vector as ([n]!/[mu]!) eps(F_{Min(T)}),
    which needs one F instead of the whole fiber; the kappa expansion is
    still recorded from the product formula.
    """
    if not T.is_rssyt():
        raise ValueError(f"{T!r} is not reverse semistandard")
    if method not in ("min", "sum"):
        raise ValueError(f"unknown method {method!r}")
    basis = basis or fbasis(T.shape)
    fiber = enumerate_psyt(T)
    kappas = pmap(lambda tau: p_coeff(tau, T), fiber, threads)
    exp = dict(zip(fiber, kappas))
    if method == "sum":
        for tau in fiber:  # build the F cache sequentially
            basis.F(tau)
        element = _combine(basis, exp)
    else:
        scal = t_factorial(T.n) / mu_factorial(mu_of(T))
        element = symmetrize_V(basis.F(min_of(T))).scale(scal)
    P = MacdonaldP(T, exp, element)
    if verify and not P.is_hecke_invariant():
        raise AssertionError(f"P_T is not Hecke invariant for {T!r}")
    return P


def eigenvalue_P0l(T, ell: int) -> RatQT:
    """Eigenvalue of sum_i theta_i^ell on P_T.

    For a finite labelling: sum over boxes of q^{ell T} t^{ell c}.  For an
    asymptotic labelling: the stable version sum (q^{ell T} - 1) t^{ell c}.
    """
    if ell == 0:
        raise ValueError("ell must be nonzero")
    out = ZERO
    if isinstance(T, AsymLabelling):
        L = T.restrict(T.rank)
        for b, v in L.items():
            if v:
                out = out + (laurent_monomial(ell * v, 0) - 1) * t_power(ell * content(b))
        return out
    for b, v in T.items():
        out = out + laurent_monomial(ell * v, ell * content(b))
    return out


def content_sum(shape: Sequence[int], ell: int = 1) -> RatQT:
    out = ZERO
    for b in Partition(shape).boxes():
        out = out + t_power(ell * content(b))
    return out


def distinguish_shapes(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff the content generating sums of the two diagrams differ."""
    return content_sum(lam) != content_sum(mu)


class StableMacD:
    """A finite-rank stand-in for the stable limit of P_{T|n}."""

    def __init__(self, labelling: AsymLabelling, rank: int | None = None):
        self.labelling = labelling
        self.realized_rank = max(labelling.rank, rank or 0)
        self.proxy = build_P(labelling.restrict(self.realized_rank))

    def at_rank(self, n: int) -> MacdonaldP:
        return build_P(self.labelling.restrict(n))


def stability_check(T: AsymLabelling, n: int) -> bool:
    """Whether the connecting map sends P at rank n+1 to P at rank n."""
    if n < T.rank:
        raise ValueError(f"rank {n} is below rk(T) = {T.rank}")
    big = build_P(T.restrict(n + 1))
    small = build_P(T.restrict(n))
    return connecting_map(big.element) == small.element
