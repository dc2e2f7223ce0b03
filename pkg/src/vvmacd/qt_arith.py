"""Exact arithmetic in Z[q,t], Q(q,t) and truncated Laurent series in t.

Polynomials are backed by FLINT's sparse multivariate integer polynomials
(``flint.fmpz_mpoly``), which supplies the multivariate gcd used for
canonical forms.  Everything above that layer (canonical sign, fast paths,
series expansion, evaluation, serialization) lives here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import flint

_CTX = flint.fmpz_mpoly_ctx.get(("q", "t"), "lex")
_ZERO_P = _CTX.constant(0)
_ONE_P = _CTX.constant(1)


class QTZeroDivisionError(ZeroDivisionError):
    """Raised when dividing by the zero rational function."""


class EvaluationPoleError(ArithmeticError):
    """Raised when a denominator vanishes at the requested evaluation point.

    Callers doing randomized checks should pick a fresh point and retry.
    """


def _as_mpoly(x) -> "flint.fmpz_mpoly":
    if isinstance(x, flint.fmpz_mpoly):
        return x
    if isinstance(x, IntPoly):
        return x._p
    if isinstance(x, int):
        return _CTX.constant(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a polynomial in q, t")


def _term_str(c: int, dq: int, dt: int, latex: bool) -> str:
    mono = []
    for name, e in (("q", dq), ("t", dt)):
        if e == 1:
            mono.append(name)
        elif e > 1:
            mono.append(f"{name}^{{{e}}}" if latex else f"{name}^{e}")
    sep = " " if latex else "*"
    body = sep.join(mono)
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}{sep}{body}"


def _poly_str(p, latex: bool = False) -> str:
    terms = sorted(p.to_dict().items(), key=lambda kv: (kv[0][1], kv[0][0]))
    if not terms:
        return "0"
    out = ""
    for (dq, dt), c in terms:
        s = _term_str(int(c), int(dq), int(dt), latex)
        if not out:
            out = s
        elif s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out


class IntPoly:
    """An element of Z[q, t] with exponents (dq, dt) >= 0."""

    __slots__ = ("_p",)

    def __init__(self, value=0):
        if isinstance(value, dict):
            self._p = _CTX.from_dict({tuple(k): int(v) for k, v in value.items() if v}) if value else _ZERO_P
        else:
            self._p = _as_mpoly(value)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return {(int(k[0]), int(k[1])): int(v) for k, v in self._p.to_dict().items()}

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def __add__(self, other):
        return IntPoly(self._p + _as_mpoly(other))

    __radd__ = __add__

    def __sub__(self, other):
        return IntPoly(self._p - _as_mpoly(other))

    def __rsub__(self, other):
        return IntPoly(_as_mpoly(other) - self._p)

    def __mul__(self, other):
        return IntPoly(self._p * _as_mpoly(other))

    __rmul__ = __mul__

    def __neg__(self):
        return IntPoly(-self._p)

    def __eq__(self, other):
        try:
            return self._p == _as_mpoly(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __str__(self):
        return _poly_str(self._p)

    def __repr__(self):
        return f"IntPoly({self})"

    def to_json(self) -> list:
        return [[dq, dt, str(c)] for (dq, dt), c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data) -> "IntPoly":
        return cls({(int(dq), int(dt)): int(c) for dq, dt, c in data})


class RatQT:
    """An exact element of Q(q, t) kept in canonical reduced form.

    ``num`` and ``den`` are coprime in Z[q, t] (so the pair has content 1) and
    the leading coefficient of ``den`` in lex order (q > t) is positive.
    Canonical form makes equality a comparison of the stored polynomials.
    """

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, RatQT) and isinstance(den, int) and den == 1:
            self._n, self._d, self._hash = num._n, num._d, num._hash
            return
        if isinstance(num, Fraction):
            num, den = num.numerator, num.denominator * den if isinstance(den, int) else den
        n = _as_mpoly(num)
        d = _as_mpoly(den)
        if d.is_zero():
            raise QTZeroDivisionError("zero denominator")
        self._hash = None
        self._set_reduced(n, d)

    def _set_reduced(self, n, d):
        if n.is_zero():
            self._n, self._d = _ZERO_P, _ONE_P
            return
        if not d.is_one():
            g = n.gcd(d)
            if not g.is_one():
                n = n / g
                d = d / g
            if d.leading_coefficient() < 0:
                n, d = -n, -d
        self._n, self._d = n, d

    @classmethod
    def _raw(cls, n, d) -> "RatQT":
        """Build from an already-canonical pair without re-reducing."""
        obj = cls.__new__(cls)
        obj._n, obj._d, obj._hash = n, d, None
        return obj

    @classmethod
    def _reduce(cls, n, d) -> "RatQT":
        obj = cls.__new__(cls)
        obj._hash = None
        obj._set_reduced(n, d)
        return obj

    # -- accessors ---------------------------------------------------------
    @property
    def num(self) -> IntPoly:
        return IntPoly(self._n)

    @property
    def den(self) -> IntPoly:
        return IntPoly(self._d)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_one(self) -> bool:
        return self._n.is_one() and self._d.is_one()

    def is_polynomial(self) -> bool:
        return self._d.is_one()

    def __bool__(self):
        return not self._n.is_zero()

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o._n.is_zero():
            return self
        if self._n.is_zero():
            return o
        d1, d2 = self._d, o._d
        if d1 == d2:
            if d1.is_one():
                return RatQT._raw_poly(self._n + o._n)
            return RatQT._reduce(self._n + o._n, d1)
        if d1.is_one():
            return RatQT._raw(self._n * d2 + o._n, d2)
        if d2.is_one():
            return RatQT._raw(self._n + o._n * d1, d1)
        g = d1.gcd(d2)
        if g.is_one():
            return RatQT._raw(self._n * d2 + o._n * d1, d1 * d2)
        d2g = d2 / g
        return RatQT._reduce(self._n * d2g + o._n * (d1 / g), d1 * d2g)

    __radd__ = __add__

    @classmethod
    def _raw_poly(cls, n) -> "RatQT":
        if n.is_zero():
            return ZERO
        return cls._raw(n, _ONE_P)

    def __neg__(self):
        return RatQT._raw(-self._n, self._d)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._n.is_zero() or o._n.is_zero():
            return ZERO
        n1, d1, n2, d2 = self._n, self._d, o._n, o._d
        if d1.is_one() and d2.is_one():
            return RatQT._raw(n1 * n2, _ONE_P)
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 / g, d2 / g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 / g, d1 / g
        n, d = n1 * n2, d1 * d2
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return RatQT._raw(n, d)

    __rmul__ = __mul__

    def inverse(self) -> "RatQT":
        if self._n.is_zero():
            raise QTZeroDivisionError("division by the zero rational function")
        n, d = self._d, self._n
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return RatQT._raw(n, d)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return ONE
        return RatQT._raw(self._n ** k, self._d ** k)

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._n == o._n and self._d == o._d

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(sorted(self._n.to_dict().items())), tuple(sorted(self._d.to_dict().items()))))
        return self._hash

    def probably_equal(self, other, points: Iterable[tuple[Fraction, Fraction]]) -> bool:
        """Randomized pre-check: compare values at the given points.

        A ``False`` answer is definitive; ``True`` must still be confirmed by
        ``==``.  Points hitting a pole are skipped.
        """
        for q0, t0 in points:
            try:
                if eval_at(self, q0, t0) != eval_at(other, q0, t0):
                    return False
            except EvaluationPoleError:
                continue
        return True

    # -- conversion --------------------------------------------------------
    def t_valuation(self) -> int:
        """Lowest power of t in the t-adic expansion (requires self != 0)."""
        if self._n.is_zero():
            raise ValueError("the zero function has no valuation")
        return _min_t_exp(self._n) - _min_t_exp(self._d)

    def __str__(self):
        if self._d.is_one():
            return _poly_str(self._n)
        return f"({_poly_str(self._n)})/({_poly_str(self._d)})"

    def __repr__(self):
        return f"RatQT({self})"

    def latex(self) -> str:
        if self._d.is_one():
            return _poly_str(self._n, latex=True)
        return r"\frac{" + _poly_str(self._n, latex=True) + "}{" + _poly_str(self._d, latex=True) + "}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RatQT":
        return cls(IntPoly.from_json(data["num"]), IntPoly.from_json(data["den"]))


def _coerce(x):
    if isinstance(x, RatQT):
        return x
    if isinstance(x, int):
        return RatQT._raw_poly(_CTX.constant(x)) if x else ZERO
    if isinstance(x, (Fraction, IntPoly)):
        return RatQT(x)
    return None


def _min_t_exp(p) -> int:
    return min(int(m[1]) for m in p.monoms())


ZERO = RatQT._raw(_ZERO_P, _ONE_P)
ONE = RatQT._raw(_ONE_P, _ONE_P)
Q = RatQT._raw(_CTX.gens()[0], _ONE_P)
T = RatQT._raw(_CTX.gens()[1], _ONE_P)

_MONO_CACHE: dict[tuple[int, int], RatQT] = {}


def rat_sum(values: Iterable[RatQT]) -> RatQT:
    """Sum many rational functions with a single final reduction.

    Terms sharing a denominator are added as polynomials first; the distinct
    denominators are then merged through their lcm.
    """
    buckets: dict = {}
    for v in values:
        if v._n.is_zero():
            continue
        key = str(v._d)  # flint polynomials are unhashable
        prev = buckets.get(key)
        buckets[key] = (v._d, v._n) if prev is None else (prev[0], prev[1] + v._n)
    if not buckets:
        return ZERO
    if len(buckets) == 1:
        (d, n), = buckets.values()
        return RatQT._reduce(n, d) if not d.is_one() else RatQT._raw_poly(n)
    L = _ONE_P
    for d, _ in buckets.values():
        if not d.is_one():
            g = L.gcd(d)
            L = L * (d / g) if not g.is_one() else L * d
    num = _ZERO_P
    for d, n in buckets.values():
        num = num + n * (L / d)
    return RatQT._reduce(num, L)


def rat_arith(a: RatQT, b: RatQT, op: str) -> RatQT:
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two rational functions."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def laurent_monomial(a: int, b: int) -> RatQT:
    """q^a t^b, with negative exponents moved to the denominator."""
    key = (a, b)
    m = _MONO_CACHE.get(key)
    if m is None:
        num = _CTX.from_dict({(max(a, 0), max(b, 0)): 1})
        den = _CTX.from_dict({(max(-a, 0), max(-b, 0)): 1})
        m = RatQT._raw(num, den)
        if len(_MONO_CACHE) < 100000:
            _MONO_CACHE[key] = m
    return m


def t_power(b: int) -> RatQT:
    return laurent_monomial(0, b)


def t_integer(n: int) -> RatQT:
    """[n]_t = 1 + t + ... + t^(n-1)."""
    return RatQT(_CTX.from_dict({(0, i): 1 for i in range(n)}) if n > 0 else _ZERO_P)


def t_factorial(n: int) -> RatQT:
    """[n]_t! = prod_{i=1..n} (1 - t^i)/(1 - t)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = _ONE_P
    for i in range(2, n + 1):
        out = out * _CTX.from_dict({(0, j): 1 for j in range(i)})
    return RatQT._raw(out, _ONE_P)


def mu_factorial(mu: Iterable[int]) -> RatQT:
    """[mu]_t! = product of [mu_i]_t! over the parts."""
    out = ONE
    for part in mu:
        if part < 0:
            raise ValueError("composition parts must be nonnegative")
        out = out * t_factorial(part)
    return out


def e_r_principal(r: int, n: int) -> RatQT:
    """e_r(1, t, ..., t^(n-1)), i.e. e_r[(1 - t^n)/(1 - t)].

    Uses the q-binomial closed form t^{C(r,2)} [n choose r]_t.
    """
    if r < 0 or r > n:
        return ZERO
    return t_power(r * (r - 1) // 2) * t_factorial(n) / (t_factorial(r) * t_factorial(n - r))


def _eval_poly(p, q0: Fraction, t0: Fraction) -> Fraction:
    total = Fraction(0)
    for (dq, dt), c in p.to_dict().items():
        total += int(c) * q0 ** int(dq) * t0 ** int(dt)
    return total


def eval_at(f: RatQT, q0, t0) -> Fraction:
    """Exact value of f at (q0, t0) as a Fraction."""
    q0, t0 = Fraction(q0), Fraction(t0)
    d = _eval_poly(f._d, q0, t0)
    if d == 0:
        raise EvaluationPoleError(f"denominator vanishes at q={q0}, t={t0}")
    return _eval_poly(f._n, q0, t0) / d


def t_coefficients(p) -> dict[int, RatQT]:
    """Split a polynomial into {power of t: coefficient in Z[q]}."""
    groups: dict[int, dict] = {}
    for (dq, dt), c in p.to_dict().items():
        groups.setdefault(int(dt), {})[(int(dq), 0)] = c
    return {dt: RatQT._raw(_CTX.from_dict(g), _ONE_P) for dt, g in groups.items()}


class TSeries:
    """A truncated Laurent series in t with coefficients in Q(q).

    Represents sum_{k} coeffs[k] t^(val + k) + O(t^(prec + 1)), i.e. every
    coefficient of t^e with e <= prec is known.  A nonzero series has
    ``coeffs[0] != 0``; a series that vanishes to its precision has no
    coefficients.
    """

    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, val: int, coeffs, prec: int | None = None):
        coeffs = list(coeffs)
        if prec is None:
            prec = val + len(coeffs) - 1
        coeffs = coeffs[: max(prec - val + 1, 0)]
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            val += 1
        if not coeffs:
            val = prec + 1
        self.val = val
        self.coeffs = tuple(coeffs)
        self.prec = prec

    @property
    def order(self) -> int:
        """Truncation degree relative to the valuation."""
        return self.prec - self.val

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, e: int) -> RatQT:
        if e > self.prec:
            raise ValueError(f"coefficient of t^{e} is beyond the precision t^{self.prec}")
        k = e - self.val
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def truncate(self, prec: int) -> "TSeries":
        if prec > self.prec:
            raise ValueError("cannot raise the precision of a truncated series")
        return TSeries(self.val, self.coeffs, prec)

    def __add__(self, other: "TSeries") -> "TSeries":
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        if lo > prec:
            return TSeries(prec + 1, [], prec)
        return TSeries(lo, [self.coefficient(e) + other.coefficient(e) for e in range(lo, prec + 1)], prec)

    def __neg__(self):
        return TSeries(self.val, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RatQT):
            if other.is_zero():
                return TSeries(self.prec + 1, [], self.prec)
            return self * to_series(other, self.order if self.coeffs else 0)
        if self.is_zero() or other.is_zero():
            lo_a = self.val if self.coeffs else self.prec + 1
            lo_b = other.val if other.coeffs else other.prec + 1
            prec = min(self.prec + lo_b, other.prec + lo_a)
            return TSeries(prec + 1, [], prec)
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(order + 1):
            s = ZERO
            for j in range(max(0, k - len(b) + 1), min(k, len(a) - 1) + 1):
                s = s + a[j] * b[k - j]
            out.append(s)
        val = self.val + other.val
        return TSeries(val, out, val + order)

    def inverse(self) -> "TSeries":
        if self.is_zero():
            raise QTZeroDivisionError("series vanishes to its precision")
        a = self.coeffs
        inv0 = a[0].inverse()
        out = [inv0]
        for k in range(1, self.order + 1):
            s = ZERO
            for j in range(1, min(k, len(a) - 1) + 1):
                s = s + a[j] * out[k - j]
            out.append(-s * inv0)
        return TSeries(-self.val, out, -self.val + self.order)

    def agrees_with(self, other: "TSeries", prec: int | None = None) -> bool:
        """Coefficientwise equality through t^prec (default: common precision)."""
        top = min(self.prec, other.prec) if prec is None else prec
        if top > self.prec or top > other.prec:
            raise ValueError("requested precision exceeds a truncation")
        lo = min(self.val, other.val)
        return all(self.coefficient(e) == other.coefficient(e) for e in range(lo, top + 1))

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.prec == other.prec and self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.val, self.prec, self.coeffs))

    def __repr__(self):
        terms = [f"({c})*t^{self.val + k}" for k, c in enumerate(self.coeffs) if not c.is_zero()]
        return "TSeries(" + (" + ".join(terms) or "0") + f" + O(t^{self.prec + 1}))"

    def to_json(self) -> dict:
        return {"val": self.val, "prec": self.prec, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "TSeries":
        return cls(int(data["val"]), [RatQT.from_json(c) for c in data["coeffs"]], int(data["prec"]))


def to_series(f: RatQT, order: int) -> TSeries:
    """t-adic expansion of f with ``order + 1`` coefficients from its valuation."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if f.is_zero():
        return TSeries(order + 1, [], order)
    num = t_coefficients(f._n)
    den = t_coefficients(f._d)
    a, b = min(num), min(den)
    d0_inv = den[b].inverse()
    out = []
    for k in range(order + 1):
        s = num.get(a + k, ZERO)
        for j in range(1, k + 1):
            dj = den.get(b + j)
            if dj is not None:
                s = s - dj * out[k - j]
        out.append(s * d0_inv)
    val = a - b
    return TSeries(val, out, val + order)


def to_series_upto(f: RatQT, prec: int) -> TSeries:
    """t-adic expansion of f with every coefficient through t^prec."""
    if f.is_zero():
        return TSeries(prec + 1, [], prec)
    v = f.t_valuation()
    if v > prec:
        return TSeries(prec + 1, [], prec)
    return to_series(f, prec - v)
