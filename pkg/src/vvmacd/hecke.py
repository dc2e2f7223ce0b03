"""The finite Hecke algebra acting on Specht modules in the content eigenbasis.

A ``SpechtModule`` caches the standard tableaux of a shape and the sparse
matrices of T_i and T_i^{-1}.  Vectors are ``SpechtVector`` objects holding
a map from tableau index to coefficient.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .qt_arith import ONE, ZERO, RatQT, T as t, t_factorial, t_power
from .tableaux import Labelling, Partition, enumerate_syt, padded, box_zero

_T_INV = t.inverse()


class SpechtModule:
    """Basis e_tau (tau standard) of the irreducible module of ``shape``."""

    def __init__(self, shape: Sequence[int]):
        self.shape = Partition(shape)
        self.n = self.shape.size
        self.syts: list[Labelling] = enumerate_syt(self.shape)
        self.index: dict[Labelling, int] = {S: k for k, S in enumerate(self.syts)}
        self.positions = []
        self.contents = []
        for S in self.syts:
            pos = [None] * (self.n + 1)
            for b, a in S.items():
                pos[a] = b
            self.positions.append(pos)
            self.contents.append(tuple(b[1] - b[0] for b in pos[1:]))
        self._t_tables = [self._build_T(i) for i in range(1, self.n)]
        self._tinv_tables = [self._invert_table(tab) for tab in self._t_tables]

    def dim(self) -> int:
        return len(self.syts)

    def swap(self, k: int, i: int) -> int | None:
        """Index of s_i applied to tableau k, or None when i, i+1 are adjacent."""
        pos = self.positions[k]
        (r1, c1), (r2, c2) = pos[i], pos[i + 1]
        if r1 == r2 or c1 == c2:
            return None
        S = self.syts[k]
        rows = [[i + 1 if a == i else i if a == i + 1 else a for a in row] for row in S.rows]
        return self.index[Labelling(self.shape, rows)]

    def _build_T(self, i: int) -> list[list[tuple[int, RatQT]]]:
        table = []
        for k in range(self.dim()):
            pos = self.positions[k]
            (r1, c1), (r2, c2) = pos[i], pos[i + 1]
            if r1 == r2:
                table.append([(k, ONE)])
                continue
            if c1 == c2:
                table.append([(k, -t)])
                continue
            ci, cj = c1 - r1, c2 - r2
            x, y = t_power(ci), t_power(cj)
            diag = (1 - t) * x / (x - y)
            other = self.swap(k, i)
            if ci - cj > 1:
                table.append([(other, ONE), (k, diag)])
            else:
                off = (t * x - y) * (x - t * y) / ((x - y) * (x - y))
                table.append([(other, off), (k, diag)])
        return table

    @staticmethod
    def _invert_table(tab):
        # T^{-1} = t^{-1} (T + t - 1)
        out = []
        for k, row in enumerate(tab):
            acc: dict[int, RatQT] = {}
            for j, c in row:
                acc[j] = acc.get(j, ZERO) + c * _T_INV
            acc[k] = acc.get(k, ZERO) + (t - 1) * _T_INV
            out.append([(j, c) for j, c in acc.items() if not c.is_zero()])
        return out

    def T_table(self, i: int):
        return self._t_tables[i - 1]

    def Tinv_table(self, i: int):
        return self._tinv_tables[i - 1]

    def vector(self, terms: dict) -> "SpechtVector":
        return SpechtVector(self, terms)

    def basis_vector(self, S: Labelling | int) -> "SpechtVector":
        k = S if isinstance(S, int) else self.index[S]
        return SpechtVector(self, {k: ONE})


@lru_cache(maxsize=None)
def specht(shape: tuple[int, ...]) -> SpechtModule:
    return SpechtModule(tuple(shape))


class SpechtVector:
    """A finite combination of basis vectors e_tau."""

    __slots__ = ("module", "terms")

    def __init__(self, module: SpechtModule, terms: dict[int, RatQT] | None = None):
        self.module = module
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    @property
    def shape(self) -> Partition:
        return self.module.shape

    def __add__(self, other: "SpechtVector") -> "SpechtVector":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return SpechtVector(self.module, out)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, c: RatQT) -> "SpechtVector":
        if c.is_zero():
            return SpechtVector(self.module)
        return SpechtVector(self.module, {k: v * c for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, SpechtVector) and self.module.shape == other.module.shape and self.terms == other.terms

    def __repr__(self):
        return "SpechtVector(" + " + ".join(f"({c})*e{self.module.syts[k].to_json()}" for k, c in sorted(self.terms.items())) + ")"

    def to_json(self) -> list:
        return [{"tableau": self.module.syts[k].to_json(), "coeff": c.to_json()} for k, c in sorted(self.terms.items())]


def _apply_table(tab, v: SpechtVector) -> SpechtVector:
    out: dict[int, RatQT] = {}
    for k, c in v.terms.items():
        for j, m in tab[k]:
            out[j] = out.get(j, ZERO) + c * m
    return SpechtVector(v.module, out)


def act_T(i: int, v: SpechtVector) -> SpechtVector:
    if not 1 <= i < v.module.n:
        raise ValueError(f"T_{i} is undefined for n = {v.module.n}")
    return _apply_table(v.module.T_table(i), v)


def act_T_inv(i: int, v: SpechtVector) -> SpechtVector:
    if not 1 <= i < v.module.n:
        raise ValueError(f"T_{i} is undefined for n = {v.module.n}")
    return _apply_table(v.module.Tinv_table(i), v)


def act_theta_bar(i: int, v: SpechtVector) -> SpechtVector:
    if not 1 <= i <= v.module.n:
        raise ValueError(f"theta_{i} is undefined for n = {v.module.n}")
    cs = v.module.contents
    return SpechtVector(v.module, {k: c * t_power(cs[k][i - 1]) for k, c in v.terms.items()})


def act_phi_bar(i: int, v: SpechtVector) -> SpechtVector:
    """phi_i = t T_i^{-1} theta_i - theta_i t T_i^{-1}."""
    a = act_T_inv(i, act_theta_bar(i, v)).scale(t)
    b = act_theta_bar(i, act_T_inv(i, v)).scale(t)
    return a - b


def symmetrize_generic(v, n: int, apply_T: Callable, add: Callable, scale: Callable):
    """(1/[n]!) sum over S_n of t^{C(n,2) - l(s)} T_s applied to v.

    Uses the coset factorization S_n = S_{n-1} x {1, s_{n-1}, s_{n-1}s_{n-2}, ...}
    so that sum t^{-l(s)} T_s = (sum over S_{n-1}) * D_n with
    D_n = 1 + t^{-1} T_{n-1} (1 + t^{-1} T_{n-2} (... (1 + t^{-1} T_1))).
    """
    for m in range(n, 1, -1):
        u = v
        for j in range(1, m):
            u = add(v, scale(apply_T(j, u), _T_INV))
        v = u
    return scale(v, t_power(comb(n, 2)) / t_factorial(n))


def symmetrize(v: SpechtVector) -> SpechtVector:
    return symmetrize_generic(v, v.module.n, act_T, lambda a, b: a + b, lambda a, c: a.scale(c))


def restriction_index(big: SpechtModule, small: SpechtModule, base: Partition) -> dict[int, int]:
    """Map tableau indices of rank n+1 to rank n where n+1 sits in the added box."""
    n = small.n
    b0 = box_zero(base, n)
    out = {}
    for k, S in enumerate(big.syts):
        if S[b0] == n + 1:
            rows = [list(S.rows[0][:-1])] + [list(r) for r in S.rows[1:]]
            out[k] = small.index[Labelling(small.shape, rows)]
    return out


@lru_cache(maxsize=None)
def _restriction_cached(shape: tuple[int, ...]):
    shape = Partition(shape)
    base = Partition(shape[1:])
    n = shape.size - 1
    big = specht(tuple(shape))
    small = specht(tuple(padded(base, n)))
    return big, small, restriction_index(big, small, base)


def restrict(v: SpechtVector) -> SpechtVector:
    """Restriction from the rank n+1 padded shape to rank n."""
    shape = v.module.shape
    base = Partition(shape[1:])
    if not shape or shape[0] - 1 < (base[0] if base else 0):
        raise ValueError(f"shape {list(shape)} has no smaller padded shape with base {list(base)}")
    big, small, idx = _restriction_cached(tuple(shape))
    return SpechtVector(small, {idx[k]: c for k, c in v.terms.items() if k in idx})
