"""Slow, independent reference computations used only by the tests.

Nothing here calls the library code it is used to check: the symmetrizer sums
over all of S_n, fibers are found by trying every labelling, and the Pieri
oracle multiplies by e_r directly and solves for coefficients by plain
Gaussian elimination on a monomial-by-monomial matrix.
"""

from __future__ import annotations

import itertools
import random
from math import comb

from vvmacd.daha import VElement, act_T_on_V, mul_e_r
from vvmacd.hecke import SpechtVector, act_T, specht
from vvmacd.qt_arith import ONE, ZERO, RatQT, laurent_monomial, t_factorial, t_power
from vvmacd.tableaux import Labelling, Psyt, content, enumerate_rssyt

# ---------------------------------------------------------------------------
# random data


def random_rat(rng: random.Random, deg: int = 2, den: bool = True) -> RatQT:
    def poly():
        p = ZERO
        for _ in range(rng.randint(1, 3)):
            p = p + laurent_monomial(rng.randint(0, deg), rng.randint(0, deg)) * rng.randint(-3, 3)
        return p

    num = poly()
    if not den:
        return num
    d = poly()
    while d.is_zero():
        d = poly()
    return num / d


def random_specht(rng: random.Random, shape, terms: int = 3) -> SpechtVector:
    M = specht(tuple(shape))
    out = {}
    for _ in range(terms):
        out[rng.randrange(M.dim())] = random_rat(rng, den=False)
    return M.vector({k: c for k, c in out.items() if not c.is_zero()})


def random_velement(rng: random.Random, shape, terms: int = 3, max_exp: int = 2) -> VElement:
    M = specht(tuple(shape))
    out = {}
    for _ in range(terms):
        alpha = tuple(rng.randint(0, max_exp) for _ in range(M.n))
        out[(alpha, rng.randrange(M.dim()))] = random_rat(rng, deg=1, den=False)
    return VElement(M, out)


# ---------------------------------------------------------------------------
# symmetrizer over all permutations


def _reduced_word(perm) -> list[int]:
    """A reduced word s_{i1} ... s_{ik} for perm, by bubble sort."""
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                changed = True
    return word[::-1]


def naive_symmetrize(v, n: int, apply_T):
    """(1/[n]!) sum over S_n of t^{C(n,2) - l(w)} T_w v, one reduced word per w."""
    total = None
    for perm in itertools.permutations(range(n)):
        word = _reduced_word(perm)
        w = v
        for i in reversed(word):
            w = apply_T(i, w)
        w = w.scale(t_power(comb(n, 2) - len(word)))
        total = w if total is None else total + w
    return total.scale(t_factorial(n).inverse())


def naive_symmetrize_specht(v: SpechtVector) -> SpechtVector:
    return naive_symmetrize(v, v.module.n, act_T)


def naive_symmetrize_V(v: VElement) -> VElement:
    return naive_symmetrize(v, v.n, act_T_on_V)


# ---------------------------------------------------------------------------
# fibers by exhaustion


def _psyt_ok(shape, rows) -> bool:
    def less(a, b):  # i q^m < j q^l  iff  m > l, or m == l and i < j
        return a[1] > b[1] or (a[1] == b[1] and a[0] < b[0])

    for r, row in enumerate(rows):
        for c, e in enumerate(row):
            if c + 1 < len(row) and not less(e, row[c + 1]):
                return False
            if r + 1 < len(rows) and c < len(rows[r + 1]) and not less(e, rows[r + 1][c]):
                return False
    return True


def brute_fiber(T: Labelling) -> set:
    """All periodic standard tableaux with power map T, by trying every labelling."""
    shape = list(T.shape)
    boxes = [(r, c) for r, p in enumerate(shape) for c in range(p)]
    n = len(boxes)
    out = set()
    for perm in itertools.permutations(range(1, n + 1)):
        rows = [[None] * p for p in shape]
        for (r, c), lab in zip(boxes, perm):
            rows[r][c] = (lab, T.rows[r][c])
        if _psyt_ok(shape, rows):
            out.add(Psyt(shape, rows))
    return out


# ---------------------------------------------------------------------------
# linear algebra


def gauss_solve(target: VElement, family: dict) -> dict:
    """Solve target = sum x_k family[k] exactly; raise ValueError if inconsistent."""
    labels = list(family)
    keys = sorted({k for v in family.values() for k in v.terms} | set(target.terms))
    rows = []
    for key in keys:
        rows.append([family[l].terms.get(key, ZERO) for l in labels] + [target.terms.get(key, ZERO)])
    m = len(labels)
    piv_cols = []
    r = 0
    for col in range(m):
        pr = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    for i in range(r, len(rows)):
        if not rows[i][m].is_zero():
            raise ValueError("target is not in the span of the family")
    if len(piv_cols) != m:
        raise ValueError("family is linearly dependent")
    return {labels[c]: rows[i][m] for i, c in enumerate(piv_cols) if not rows[i][m].is_zero()}


def pieri_oracle(T: Labelling, r: int, build_P) -> dict:
    """Expand e_r * P_T in the P basis by direct multiplication and elimination.

    Candidates are every RSSYT of degree deg(T)+r with entries at most
    max(T)+1, so the oracle does not assume which targets occur.
    """
    source = build_P(T).element
    prod = mul_e_r(r, source)
    top = max(T.rows[0]) + 1 if T.rows else 1
    family = {}
    for S in enumerate_rssyt(T.shape, top):
        if S.degree() == T.degree() + r:
            family[S] = build_P(S).element
    return gauss_solve(prod, family)


# ---------------------------------------------------------------------------
# classical two-variable Macdonald polynomial


def classical_p2_ratio() -> RatQT:
    """Coefficient of m_{11} in P_{(2)}(x1, x2; q^{-1}, t) relative to m_2.

    P_{(2)}(x; q, t) = m_2 + (1+q)(1-t)/(1-qt) m_{11}, which is the Schur
    function at q = t and m_2 at t = 1; then substitute q -> 1/q.
    """
    qi = laurent_monomial(-1, 0)
    return (1 + qi) * (1 - t_power(1)) / (1 - qi * t_power(1))


def content_multiset(shape) -> list[int]:
    return sorted(c - r for r, p in enumerate(shape, start=1) for c in range(1, p + 1))


__all__ = [
    "random_rat", "random_specht", "random_velement", "naive_symmetrize_specht", "naive_symmetrize_V",
    "brute_fiber", "gauss_solve", "pieri_oracle", "classical_p2_ratio", "content_multiset", "content", "ONE",
]
