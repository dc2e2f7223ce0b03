"""The induced module V = Q(q,t)[X_1..X_n] (x) S_lambda and its weight basis.

Elements are ``VElement`` maps from (alpha, tableau index) to coefficients,
standing for sums of X^alpha (x) e_tau.  ``FBasis`` builds and memoizes the
weight vectors F_tau.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .hecke import SpechtModule, SpechtVector, _restriction_cached, specht, symmetrize_generic
from .qt_arith import ONE, ZERO, Q as q, RatQT, T as t, laurent_monomial, rat_sum, t_power
from .tableaux import Labelling, Partition, Psyt, enumerate_psyt, enumerate_rssyt, psi_inv, s_i, s_raises

_ONE_MINUS_T = 1 - t
_T_INV = t.inverse()


class VElement:
    """A finite sum of coeff * X^alpha (x) e_tau over a fixed shape."""

    __slots__ = ("module", "terms")

    def __init__(self, module: SpechtModule, terms: dict | None = None, clean: bool = True):
        self.module = module
        if terms is None:
            terms = {}
        elif clean:
            terms = {k: c for k, c in terms.items() if not c.is_zero()}
        self.terms = terms

    @classmethod
    def zero(cls, shape: Sequence[int]) -> "VElement":
        return cls(specht(tuple(shape)))

    @classmethod
    def basis(cls, shape: Sequence[int], alpha: Sequence[int], S: Labelling | int, coeff: RatQT = ONE) -> "VElement":
        M = specht(tuple(Partition(shape)))
        k = S if isinstance(S, int) else M.index[S]
        alpha = tuple(alpha)
        if len(alpha) != M.n:
            raise ValueError(f"exponent vector {alpha} has length {len(alpha)}, expected {M.n}")
        return cls(M, {(alpha, k): coeff})

    @classmethod
    def from_fiber(cls, v: SpechtVector, alpha: Sequence[int] | None = None) -> "VElement":
        alpha = tuple(alpha) if alpha is not None else (0,) * v.module.n
        return cls(v.module, {(alpha, k): c for k, c in v.terms.items()})

    @property
    def shape(self) -> Partition:
        return self.module.shape

    @property
    def n(self) -> int:
        return self.module.n

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "VElement") -> "VElement":
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        for key, c in other.terms.items():
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
        return VElement(self.module, out)

    def __sub__(self, other: "VElement") -> "VElement":
        return self + other.scale(-ONE)

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c: RatQT) -> "VElement":
        if c.is_zero():
            return VElement(self.module)
        if c.is_one():
            return self
        return VElement(self.module, {k: v * c for k, v in self.terms.items()}, clean=False)

    def __eq__(self, other):
        return isinstance(other, VElement) and self.module.shape == other.module.shape and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, alpha: Sequence[int], S: Labelling | int) -> RatQT:
        k = S if isinstance(S, int) else self.module.index[S]
        return self.terms.get((tuple(alpha), k), ZERO)

    def sorted_terms(self) -> list:
        """Terms in canonical order: total degree, then exponents descending, then tableau."""
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0][0]), tuple(-a for a in kv[0][0]), self.module.syts[kv[0][1]].rows))

    def __repr__(self):
        return "VElement(" + " + ".join(f"({c})*X^{list(a)}*e{self.module.syts[k].to_json()}" for (a, k), c in self.sorted_terms()) + ")"

    def to_json(self) -> list:
        return [{"alpha": list(a), "tableau": self.module.syts[k].to_json(), "coeff": c.to_json()}
                for (a, k), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, shape: Sequence[int], data) -> "VElement":
        M = specht(tuple(Partition(shape)))
        terms = {}
        for item in data:
            key = (tuple(item["alpha"]), M.index[Labelling.from_rows(item["tableau"])])
            terms[key] = terms.get(key, ZERO) + RatQT.from_json(item["coeff"])
        return cls(M, terms)

    def to_latex(self) -> str:
        parts = []
        for (a, k), c in self.sorted_terms():
            mono = "".join(f"X_{{{i + 1}}}" + (f"^{{{e}}}" if e > 1 else "") for i, e in enumerate(a) if e)
            tab = "/".join("".join(str(x) for x in row) for row in self.module.syts[k].rows)
            coeff = c.latex()
            if c.is_one():
                coeff = ""
            elif (-c).is_one():
                coeff = "-"
            else:
                coeff = f"\\left({coeff}\\right)"
            parts.append(f"{coeff}{mono or '1'}\\otimes e_{{{tab}}}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def to_plain(self) -> str:
        parts = []
        for (a, k), c in self.sorted_terms():
            mono = "*".join(f"X{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(a) if e) or "1"
            tab = "/".join(" ".join(str(x) for x in row) for row in self.module.syts[k].rows)
            parts.append(f"({c}) * {mono} (x) e[{tab}]")
        return "\n".join(parts) if parts else "0"


def _add_into(out: dict, key, c: RatQT):
    out.setdefault(key, []).append(c)


def _collect(out: dict) -> dict:
    return {key: cs[0] if len(cs) == 1 else rat_sum(cs) for key, cs in out.items()}


# ---------------------------------------------------------------------------
# basic operators


def mul_X(alpha: Sequence[int], v: VElement) -> VElement:
    alpha = tuple(alpha)
    if len(alpha) != v.n:
        raise ValueError(f"exponent vector {alpha} has length {len(alpha)}, expected {v.n}")
    return VElement(v.module, {(tuple(a + b for a, b in zip(al, alpha)), k): c for (al, k), c in v.terms.items()}, clean=False)


def mul_Xi(i: int, v: VElement, power: int = 1) -> VElement:
    alpha = [0] * v.n
    alpha[i - 1] = power
    return mul_X(alpha, v)


def mul_e_r(r: int, v: VElement) -> VElement:
    """Multiply by the elementary symmetric polynomial e_r(X_1..X_n)."""
    from itertools import combinations

    out = VElement(v.module)
    for subset in combinations(range(v.n), r):
        alpha = [0] * v.n
        for j in subset:
            alpha[j] = 1
        out = out + mul_X(alpha, v)
    return out


def act_T_on_V(i: int, v: VElement) -> VElement:
    """T_i (X^a (x) e) = X^{s_i a} (x) T_i e + (1-t) X_i (X^a - X^{s_i a})/(X_i - X_{i+1}) (x) e."""
    n = v.n
    if not 1 <= i < n:
        raise ValueError(f"T_{i} is undefined for n = {n}")
    tab = v.module.T_table(i)
    out: dict = {}
    i0 = i - 1
    for (alpha, k), c in v.terms.items():
        a, b = alpha[i0], alpha[i]
        sw = alpha[:i0] + (b, a) + alpha[i + 1:]
        for j, m in tab[k]:
            _add_into(out, (sw, j), c * m)
        if a == b:
            continue
        # (1-t) X_i * divided difference, as an explicit telescoping sum
        if a > b:
            lo, d, coef = b, a - b, c * _ONE_MINUS_T
        else:
            lo, d, coef = a, b - a, -(c * _ONE_MINUS_T)
        for j in range(d):
            beta = alpha[:i0] + (lo + d - 1 - j + 1, lo + j) + alpha[i + 1:]
            _add_into(out, (beta, k), coef)
    return VElement(v.module, _collect(out))


def act_T_inv_on_V(i: int, v: VElement) -> VElement:
    """T_i^{-1} = t^{-1} (T_i + t - 1)."""
    return (act_T_on_V(i, v) + v.scale(t - 1)).scale(_T_INV)


def _fiber_matrix(M: SpechtModule, word: list[tuple[int, bool]], scalar: RatQT) -> list[list[tuple[int, RatQT]]]:
    """Sparse matrix of scalar * (product of T_j^{+-1}), word applied left to right."""
    from .hecke import act_T, act_T_inv

    rows = []
    for k in range(M.dim()):
        v = M.basis_vector(k)
        for j, inverse in word:
            v = act_T_inv(j, v) if inverse else act_T(j, v)
        rows.append([(j, c * scalar) for j, c in sorted(v.terms.items())])
    return rows


_PI_CACHE: dict = {}


def _pi_matrices(M: SpechtModule):
    key = M.shape
    if key not in _PI_CACHE:
        n = M.n
        # rho(pi) = t^{n-1} T_1^{-1} ... T_{n-1}^{-1}: T_{n-1}^{-1} acts first
        fwd = _fiber_matrix(M, [(j, True) for j in range(n - 1, 0, -1)], t_power(n - 1))
        # rho(pi)^{-1} = t^{-(n-1)} T_{n-1} ... T_1: T_1 acts first
        bwd = _fiber_matrix(M, [(j, False) for j in range(1, n)], t_power(-(n - 1)))
        _PI_CACHE[key] = (fwd, bwd)
    return _PI_CACHE[key]


def act_pi(v: VElement) -> VElement:
    """pi (X^a (x) u) = q^{a_n} X^{(a_n, a_1, ..., a_{n-1})} (x) rho(pi) u."""
    if v.n == 0:
        return v
    fwd, _ = _pi_matrices(v.module)
    out: dict = {}
    for (alpha, k), c in v.terms.items():
        beta = (alpha[-1],) + alpha[:-1]
        cq = c * laurent_monomial(alpha[-1], 0) if alpha[-1] else c
        for j, m in fwd[k]:
            _add_into(out, (beta, j), cq * m)
    return VElement(v.module, _collect(out))


def act_pi_inv(v: VElement) -> VElement:
    """pi^{-1} (X^b (x) u) = q^{-b_1} X^{(b_2, ..., b_n, b_1)} (x) rho(pi)^{-1} u."""
    if v.n == 0:
        return v
    _, bwd = _pi_matrices(v.module)
    out: dict = {}
    for (alpha, k), c in v.terms.items():
        beta = alpha[1:] + (alpha[0],)
        cq = c * laurent_monomial(-alpha[0], 0) if alpha[0] else c
        for j, m in bwd[k]:
            _add_into(out, (beta, j), cq * m)
    return VElement(v.module, _collect(out))


def act_theta(i: int, v: VElement) -> VElement:
    """theta_i = t^{-(n-i)} T_{i-1}^{-1} ... T_1^{-1} pi T_{n-1} ... T_i."""
    n = v.n
    if not 1 <= i <= n:
        raise ValueError(f"theta_{i} is undefined for n = {n}")
    for j in range(i, n):
        v = act_T_on_V(j, v)
    v = act_pi(v)
    for j in range(1, i):
        v = act_T_inv_on_V(j, v)
    return v.scale(t_power(-(n - i)))


def act_theta_inv(i: int, v: VElement) -> VElement:
    """theta_i^{-1} = t^{n-i} T_i^{-1} ... T_{n-1}^{-1} pi^{-1} T_1 ... T_{i-1}."""
    n = v.n
    if not 1 <= i <= n:
        raise ValueError(f"theta_{i} is undefined for n = {n}")
    for j in range(i - 1, 0, -1):
        v = act_T_on_V(j, v)
    v = act_pi_inv(v)
    for j in range(n - 1, i - 1, -1):
        v = act_T_inv_on_V(j, v)
    return v.scale(t_power(n - i))


def act_theta_power(i: int, ell: int, v: VElement) -> VElement:
    op = act_theta if ell > 0 else act_theta_inv
    for _ in range(abs(ell)):
        v = op(i, v)
    return v


def theta_power_sum(ell: int, v: VElement) -> VElement:
    """sum_i theta_i^ell applied to v."""
    out = VElement(v.module)
    for i in range(1, v.n + 1):
        out = out + act_theta_power(i, ell, v)
    return out


def act_phi(i: int, v: VElement) -> VElement:
    """phi_i = t T_i^{-1} theta_i - theta_i t T_i^{-1}."""
    a = act_T_inv_on_V(i, act_theta(i, v))
    b = act_theta(i, act_T_inv_on_V(i, v))
    return (a - b).scale(t)


def act_gamma(v: VElement) -> VElement:
    """gamma_n = X_n T_{n-1} ... T_1."""
    n = v.n
    for j in range(1, n):
        v = act_T_on_V(j, v)
    return mul_Xi(n, v)


def symmetrize_V(v: VElement) -> VElement:
    return symmetrize_generic(v, v.n, act_T_on_V, lambda a, b: a + b, lambda a, c: a.scale(c))


def connecting_map(v: VElement) -> VElement:
    """Restriction from rank n+1 to rank n: keep alpha_{n+1} = 0 terms and restrict fibers."""
    shape = v.module.shape
    big, small, idx = _restriction_cached(tuple(shape))
    out = {}
    for (alpha, k), c in v.terms.items():
        if alpha[-1] == 0 and k in idx:
            out[(alpha[:-1], idx[k])] = c
    return VElement(small, out)


# ---------------------------------------------------------------------------
# the weight basis


def weight(tau: Psyt, i: int) -> RatQT:
    """q^{w_tau(i)} t^{c_tau(i)}."""
    return laurent_monomial(tau.w[i - 1], tau.c[i - 1])


class FBasis:
    """Memoized weight basis F_tau of one shape.

    ``strategy`` picks the descent used to reach smaller tableaux: ``"s_first"``
    prefers an s_i step, ``"psi_first"`` prefers undoing Psi.  Both give the
    same vectors; the option exists to test that.
    """

    def __init__(self, shape: Sequence[int], strategy: str = "s_first"):
        if strategy not in ("s_first", "psi_first"):
            raise ValueError(f"unknown strategy {strategy!r}")
        self.shape = Partition(shape)
        self.module = specht(tuple(self.shape))
        self.strategy = strategy
        self.cache: dict[Psyt, VElement] = {}

    def _descent(self, tau: Psyt):
        """A smaller tableau and the step that recovers tau from it."""
        n = tau.n
        if self.strategy == "psi_first" and n and tau.w[n - 1] > 0:
            return psi_inv(tau), ("psi",)
        for i in range(1, n):
            sigma = s_i(tau, i)
            if sigma is not None and not s_raises(tau, i):
                return sigma, ("s", i)
        if n and tau.w[n - 1] > 0:
            return psi_inv(tau), ("psi",)
        raise ValueError(f"{tau!r} has no descent")  # unreachable for valid PSYT

    def _step(self, sigma: Psyt, move, F: VElement) -> VElement:
        if move[0] == "psi":
            # F_{Psi sigma} = q^{w_sigma(1)} X_n pi^{-1} F_sigma
            return mul_Xi(sigma.n, act_pi_inv(F)).scale(laurent_monomial(sigma.w[0], 0))
        i = move[1]
        x, y = weight(sigma, i), weight(sigma, i + 1)
        # (t T_i^{-1} + (t-1) y / (x-y)) F_sigma
        return act_T_inv_on_V(i, F).scale(t) + F.scale((t - 1) * y / (x - y))

    def F(self, tau: Psyt) -> VElement:
        if tau.shape != self.shape:
            raise ValueError(f"tableau shape {list(tau.shape)} differs from basis shape {list(self.shape)}")
        if tau in self.cache:
            return self.cache[tau]
        chain = []
        cur = tau
        while cur not in self.cache and not cur.is_syt():
            sigma, move = self._descent(cur)
            chain.append((sigma, move, cur))
            cur = sigma
        if cur not in self.cache:
            self.cache[cur] = VElement(self.module, {((0,) * self.module.n, self.module.index[cur.labels()]): ONE})
        F = self.cache[cur]
        for sigma, move, target in reversed(chain):
            F = self._step(sigma, move, F)
            self.cache[target] = F
        return F

    def build_all(self, power_bound: int) -> dict[Psyt, VElement]:
        """F_tau for every tau whose powers are at most ``power_bound``."""
        out = {}
        for T in enumerate_rssyt(self.shape, power_bound, strict_columns=False):
            for tau in enumerate_psyt(T):
                out[tau] = self.F(tau)
        return out


_FBASES: dict = {}


def fbasis(shape: Sequence[int]) -> FBasis:
    key = tuple(Partition(shape))
    if key not in _FBASES:
        _FBASES[key] = FBasis(key)
    return _FBASES[key]


def build_F(tau: Psyt, cache: FBasis | None = None) -> VElement:
    return (cache or fbasis(tau.shape)).F(tau)


def check_weight(tau: Psyt, F: VElement) -> bool:
    return all(act_theta(i, F) == F.scale(weight(tau, i)) for i in range(1, tau.n + 1))


# ---------------------------------------------------------------------------
# expansion in a spanning family


class SpanError(ValueError):
    """The vector is not in the span of the supplied family."""


def _leading_key(terms: dict):
    return max(terms, key=lambda k: (sum(k[0]), k[0], -k[1]))


def solve_in_span(v: VElement, family: Sequence[tuple[object, VElement]]) -> dict:
    """Exact coefficients c with v = sum c[label] * vec over a linearly independent family.

    Gaussian elimination with pivots on leading keys (total degree, then
    exponent lex, then tableau index).  Raises ``SpanError`` if the residual
    is nonzero.
    """
    pivots: dict = {}  # key -> (reduced terms, combination of family labels)
    for label, vec in family:
        terms = dict(vec.terms)
        comb = {label: ONE}
        while terms:
            key = _leading_key(terms)
            if key not in pivots:
                pivots[key] = (terms, comb)
                break
            pterms, pcomb = pivots[key]
            f = terms[key] / pterms[key]
            for k2, c2 in pterms.items():
                nv = terms.get(k2, ZERO) - f * c2
                if nv.is_zero():
                    terms.pop(k2, None)
                else:
                    terms[k2] = nv
            for l2, c2 in pcomb.items():
                nv = comb.get(l2, ZERO) - f * c2
                if nv.is_zero():
                    comb.pop(l2, None)
                else:
                    comb[l2] = nv
        else:
            raise ValueError(f"family is linearly dependent at {label!r}")
    terms = dict(v.terms)
    result: dict = {}
    while terms:
        key = _leading_key(terms)
        if key not in pivots:
            raise SpanError(f"residual term at exponent {list(key[0])} is outside the span")
        pterms, pcomb = pivots[key]
        f = terms[key] / pterms[key]
        for k2, c2 in pterms.items():
            nv = terms.get(k2, ZERO) - f * c2
            if nv.is_zero():
                terms.pop(k2, None)
            else:
                terms[k2] = nv
        for l2, c2 in pcomb.items():
            result[l2] = result.get(l2, ZERO) + f * c2
    return {k: c for k, c in result.items() if not c.is_zero()}


def expand_in_F(v: VElement, basis: FBasis, candidates: Iterable[Psyt] | None = None) -> dict[Psyt, RatQT]:
    """Coefficients of v in the F basis.

    By default the candidates are all PSYT whose total power matches an
    X-degree occurring in v and whose powers are bounded by the largest
    exponent of v.
    """
    if candidates is None:
        degrees = {sum(a) for a, _ in v.terms}
        bound = max((max(a) if a else 0) for a, _ in v.terms) if v.terms else 0
        candidates = []
        for T in enumerate_rssyt(basis.shape, bound, strict_columns=False):
            if T.degree() in degrees:
                candidates.extend(enumerate_psyt(T))
    family = [(tau, basis.F(tau)) for tau in candidates]
    return solve_in_span(v, family)
