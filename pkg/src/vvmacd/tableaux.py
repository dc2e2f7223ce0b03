"""Young diagram combinatorics: labellings, periodic standard tableaux, statistics.

Boxes are 1-based ``(row, col)`` pairs in English notation.  The content of a
box is ``col - row``.  A periodic standard tableau (``Psyt``) stores in each
box a pair ``(label, power)``, written ``label q^power`` below.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

Box = tuple[int, int]


# ---------------------------------------------------------------------------
# partitions and shapes


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def boxes(self) -> list[Box]:
        """Boxes in row reading order."""
        return [(r + 1, c + 1) for r, p in enumerate(self) for c in range(p)]

    def __repr__(self):
        return f"Partition({list(self)})"


def content(b: Box) -> int:
    return b[1] - b[0]


def n_lambda(base: Partition) -> int:
    """Smallest n for which the padded diagram of ``base`` is a partition."""
    return base.size + (base[0] if base else 0)


def padded(base: Partition, n: int) -> Partition:
    """The diagram (n - |base|, base_1, base_2, ...)."""
    base = Partition(base)
    if n < n_lambda(base):
        raise ValueError(f"rank {n} is below the minimum {n_lambda(base)} for base {list(base)}")
    return Partition((n - base.size,) + tuple(base))


def box_zero(base: Partition, n: int) -> Box:
    """The box added when passing from rank n to rank n + 1."""
    return (1, n + 1 - Partition(base).size)


def is_padded_of(shape: Partition, base: Partition) -> bool:
    if not shape:
        return not base
    return tuple(shape[1:]) == tuple(base) and shape[0] >= (base[0] if base else 0)


def base_of(shape: Partition) -> Partition:
    return Partition(shape[1:])


def all_partitions(size: int, max_part: int | None = None) -> Iterator[Partition]:
    if max_part is None:
        max_part = size
    if size == 0:
        yield Partition()
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in all_partitions(size - first, first):
            yield Partition((first,) + tuple(rest))


# ---------------------------------------------------------------------------
# integer labellings (RYT, RSSYT, SYT)


class Labelling:
    """A map from the boxes of ``shape`` to integers, stored row-major."""

    __slots__ = ("shape", "rows", "_hash")

    def __init__(self, shape: Sequence[int], rows: Sequence[Sequence[int]]):
        shape = Partition(shape)
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if tuple(len(r) for r in rows) != tuple(shape):
            raise ValueError(f"row lengths {[len(r) for r in rows]} do not match shape {list(shape)}")
        self.shape = shape
        self.rows = rows
        self._hash = hash((shape, rows))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Labelling":
        return cls([len(r) for r in rows], rows)

    def __getitem__(self, b: Box) -> int:
        return self.rows[b[0] - 1][b[1] - 1]

    def __eq__(self, other):
        return isinstance(other, Labelling) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Labelling({[list(r) for r in self.rows]})"

    def boxes(self) -> list[Box]:
        return self.shape.boxes()

    def items(self) -> Iterator[tuple[Box, int]]:
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                yield (r + 1, c + 1), v

    @property
    def n(self) -> int:
        return self.shape.size

    def degree(self) -> int:
        return sum(sum(r) for r in self.rows)

    def is_ryt(self) -> bool:
        for (r, c), v in self.items():
            if v < 0:
                return False
            if c > 1 and self[(r, c - 1)] < v:
                return False
            if r > 1 and self[(r - 1, c)] < v:
                return False
        return True

    def is_rssyt(self) -> bool:
        if not self.is_ryt():
            return False
        return all(r == 1 or self[(r - 1, c)] > v for (r, c), v in self.items())

    def is_syt(self) -> bool:
        vals = sorted(v for _, v in self.items())
        if vals != list(range(1, self.n + 1)):
            return False
        for (r, c), v in self.items():
            if c > 1 and self[(r, c - 1)] >= v:
                return False
            if r > 1 and self[(r - 1, c)] >= v:
                return False
        return True

    def with_value(self, b: Box, v: int) -> "Labelling":
        rows = [list(r) for r in self.rows]
        rows[b[0] - 1][b[1] - 1] = v
        return Labelling(self.shape, rows)

    def to_json(self) -> list:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "Labelling":
        return cls.from_rows(data)


def row_standard(shape: Sequence[int]) -> Labelling:
    shape = Partition(shape)
    rows, k = [], 1
    for p in shape:
        rows.append(list(range(k, k + p)))
        k += p
    return Labelling(shape, rows)


def column_standard(shape: Sequence[int]) -> Labelling:
    shape = Partition(shape)
    rows = [[0] * p for p in shape]
    k = 1
    for c in range(shape[0] if shape else 0):
        for r in range(len(shape)):
            if shape[r] > c:
                rows[r][c] = k
                k += 1
    return Labelling(shape, rows)


def enumerate_syt(shape: Sequence[int]) -> list[Labelling]:
    """All standard Young tableaux, in lexicographic order of row-major labels."""
    shape = Partition(shape)
    n = shape.size
    out = []
    fill = [[0] * p for p in shape]
    heights = [0] * len(shape)

    def place(k):
        if k > n:
            out.append(Labelling(shape, fill))
            return
        for r in range(len(shape)):
            c = heights[r]
            if c < shape[r] and (r == 0 or heights[r - 1] > c):
                fill[r][c] = k
                heights[r] += 1
                place(k + 1)
                heights[r] -= 1
                fill[r][c] = 0

    place(1)
    return sorted(out, key=lambda L: L.rows)


def enumerate_rssyt(shape: Sequence[int], max_value: int, strict_columns: bool = True,
                    max_degree: int | None = None) -> list[Labelling]:
    """All reverse (semi-)standard labellings with entries in [0, max_value].

    With ``strict_columns=False`` this lists all RYT instead.
    """
    shape = Partition(shape)
    boxes = shape.boxes()
    fill = [[0] * p for p in shape]
    out = []

    def rec(k, total):
        if k == len(boxes):
            out.append(Labelling(shape, fill))
            return
        r, c = boxes[k][0] - 1, boxes[k][1] - 1
        hi = max_value
        if c > 0:
            hi = min(hi, fill[r][c - 1])
        if r > 0:
            hi = min(hi, fill[r - 1][c] - 1 if strict_columns else fill[r - 1][c])
        if max_degree is not None:
            hi = min(hi, max_degree - total)
        for v in range(hi, -1, -1):
            fill[r][c] = v
            rec(k + 1, total + v)
        fill[r][c] = 0

    rec(0, 0)
    return out


# ---------------------------------------------------------------------------
# statistics of a labelling


def s_order_boxes(T: Labelling) -> list[Box]:
    """Boxes ordered by T decreasing, ties in column reading order."""
    return sorted(T.boxes(), key=lambda b: (-T[b], b[1], b[0]))


def s_of(T: Labelling) -> Labelling:
    """The standard tableau S(T): labels in the order of ``s_order_boxes``."""
    rows = [[0] * p for p in T.shape]
    for k, (r, c) in enumerate(s_order_boxes(T), start=1):
        rows[r - 1][c - 1] = k
    return Labelling(T.shape, rows)


def nu_of(T: Labelling) -> tuple[int, ...]:
    return tuple(sorted((v for _, v in T.items()), reverse=True))


def b_stat(T: Labelling) -> int:
    """b_T = sum_i nu_i (c_{S(T)}(i) + i - 1)."""
    order = s_order_boxes(T)
    return sum(T[b] * (content(b) + i) for i, b in enumerate(order))


def _min_order_boxes(T: Labelling) -> list[Box]:
    return sorted(T.boxes(), key=lambda b: (T[b], b[0], b[1]))


def mu_of(T: Labelling) -> tuple[int, ...]:
    """Sizes of the maximal constant horizontal strips, in Min-label order."""
    out: list[int] = []
    prev = None
    for b in _min_order_boxes(T):
        key = (T[b], b[0])
        if key == prev:
            out[-1] += 1
        else:
            out.append(1)
            prev = key
    return tuple(out)


# ---------------------------------------------------------------------------
# periodic standard Young tableaux


def _key(entry: tuple[int, int]) -> tuple[int, int]:
    label, power = entry
    return (-power, label)


class Psyt:
    """A periodic standard Young tableau: boxes hold (label, power) pairs."""

    __slots__ = ("shape", "rows", "_hash", "__dict__")

    def __init__(self, shape: Sequence[int], rows, check: bool = True):
        self.shape = Partition(shape)
        self.rows = tuple(tuple((int(a), int(b)) for a, b in row) for row in rows)
        self._hash = hash(self.rows)
        if check:
            problem = self.validation_error()
            if problem:
                raise ValueError(problem)

    def validation_error(self) -> str | None:
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            return "row lengths do not match the shape"
        labels = sorted(e[0] for row in self.rows for e in row)
        if labels != list(range(1, self.shape.size + 1)):
            return "labels must be exactly 1..n"
        for r, row in enumerate(self.rows):
            for c, e in enumerate(row):
                if e[1] < 0:
                    return f"negative power at box ({r + 1},{c + 1})"
                if c > 0 and not _key(row[c - 1]) < _key(e):
                    return f"row {r + 1} is not increasing at column {c + 1}"
                if r > 0 and not _key(self.rows[r - 1][c]) < _key(e):
                    return f"column {c + 1} is not increasing at row {r + 1}"
        return None

    def __eq__(self, other):
        return isinstance(other, Psyt) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Psyt(" + " / ".join(" ".join(f"{a}q{b}" if b else str(a) for a, b in row) for row in self.rows) + ")"

    def __getitem__(self, b: Box) -> tuple[int, int]:
        return self.rows[b[0] - 1][b[1] - 1]

    @property
    def n(self) -> int:
        return self.shape.size

    @cached_property
    def positions(self) -> tuple[Box, ...]:
        """positions[i] is the box of label i (index 0 unused)."""
        pos: list = [None] * (self.n + 1)
        for r, row in enumerate(self.rows):
            for c, (a, _) in enumerate(row):
                pos[a] = (r + 1, c + 1)
        return tuple(pos)

    @cached_property
    def w(self) -> tuple[int, ...]:
        """Weights w(1..n): the power carried by each label (0-based tuple)."""
        return tuple(self[self.positions[i]][1] for i in range(1, self.n + 1))

    @cached_property
    def c(self) -> tuple[int, ...]:
        """Contents c(1..n) of the boxes holding each label (0-based tuple)."""
        return tuple(content(self.positions[i]) for i in range(1, self.n + 1))

    def is_syt(self) -> bool:
        return all(b == 0 for row in self.rows for _, b in row)

    def total_power(self) -> int:
        return sum(self.w)

    def labels(self) -> Labelling:
        return Labelling(self.shape, [[a for a, _ in row] for row in self.rows])

    def to_json(self) -> list:
        return [[[a, b] for a, b in row] for row in self.rows]

    @classmethod
    def from_json(cls, data) -> "Psyt":
        return cls([len(r) for r in data], [[tuple(e) for e in row] for row in data])

    @classmethod
    def from_syt(cls, S: Labelling, powers: Labelling | None = None) -> "Psyt":
        if powers is None:
            return cls(S.shape, [[(a, 0) for a in row] for row in S.rows])
        return cls(S.shape, [[(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(S.rows, powers.rows)])


def p_map(tau: Psyt) -> Labelling:
    """Forget labels, keep powers."""
    return Labelling(tau.shape, [[b for _, b in row] for row in tau.rows])


def psi(tau: Psyt) -> Psyt:
    n = tau.n
    rows = [[(a - 1, b) if a > 1 else (n, b + 1) for a, b in row] for row in tau.rows]
    return Psyt(tau.shape, rows, check=False)


def psi_inv(tau: Psyt) -> Psyt | None:
    """Inverse of ``psi``; absent when label n carries power 0."""
    n = tau.n
    if tau.w[n - 1] == 0:
        return None
    rows = [[(a + 1, b) if a < n else (1, b - 1) for a, b in row] for row in tau.rows]
    return Psyt(tau.shape, rows, check=False)


def _local_ok(rows, b: Box) -> bool:
    r, c = b[0] - 1, b[1] - 1
    k = _key(rows[r][c])
    if c > 0 and not _key(rows[r][c - 1]) < k:
        return False
    if c + 1 < len(rows[r]) and not k < _key(rows[r][c + 1]):
        return False
    if r > 0 and not _key(rows[r - 1][c]) < k:
        return False
    if r + 1 < len(rows) and c < len(rows[r + 1]) and not k < _key(rows[r + 1][c]):
        return False
    return True


def s_i(tau: Psyt, i: int) -> Psyt | None:
    """Swap labels i and i+1 if the result is a PSYT, else ``None``."""
    if not 1 <= i < tau.n:
        raise ValueError(f"s_{i} is undefined for n = {tau.n}")
    b1, b2 = tau.positions[i], tau.positions[i + 1]
    if tau.w[i - 1] == tau.w[i] and abs(b1[0] - b2[0]) + abs(b1[1] - b2[1]) == 1:
        return None
    rows = [list(row) for row in tau.rows]
    p1, p2 = rows[b1[0] - 1][b1[1] - 1][1], rows[b2[0] - 1][b2[1] - 1][1]
    rows[b1[0] - 1][b1[1] - 1] = (i + 1, p1)
    rows[b2[0] - 1][b2[1] - 1] = (i, p2)
    if not (_local_ok(rows, b1) and _local_ok(rows, b2)):
        return None
    return Psyt(tau.shape, rows, check=False)


def s_raises(tau: Psyt, i: int) -> bool:
    """Whether s_i(tau) > tau is a cover relation (assumes s_i(tau) exists)."""
    wi, wj = tau.w[i - 1], tau.w[i]
    if wi != wj:
        return wi < wj
    return tau.c[i - 1] - tau.c[i] > 1


def apply_word(tau: Psyt, word: Iterable) -> Psyt | None:
    """Apply a word of moves left to right; entries are ints (s_i) or 'psi'.

    Returns ``None`` if some move is undefined.
    """
    for g in word:
        if g == "psi":
            tau = psi(tau)
        elif g == "psi_inv":
            tau = psi_inv(tau)
        else:
            tau = s_i(tau, g)
        if tau is None:
            return None
    return tau


def min_of(T: Labelling) -> Psyt:
    """Minimal element of the fiber over T."""
    rows = [[None] * p for p in T.shape]
    for k, (r, c) in enumerate(_min_order_boxes(T), start=1):
        rows[r - 1][c - 1] = (k, T[(r, c)])
    return Psyt(T.shape, rows)


def top_of(T: Labelling) -> Psyt:
    """Maximal element of the fiber over T."""
    return Psyt.from_syt(s_of(T), T)


def inversions(tau) -> list[tuple[Box, Box]]:
    """Inversion pairs (b1, b2): S(T)(b1) < S(T)(b2) but label(b1) > label(b2)."""
    if isinstance(tau, Apsyt):
        tau = tau.tableau
    T = p_map(tau)
    order = s_order_boxes(T)
    return [(b1, b2) for b1, b2 in combinations(order, 2) if tau[b1][0] > tau[b2][0]]


def inv_count(tau) -> int:
    return len(inversions(tau))


def enumerate_psyt(T: Labelling) -> list[Psyt]:
    """The fiber over T, by closure of Min(T) under defined s_i moves.

    Returned in BFS order (Min(T) first); deterministic.
    """
    start = min_of(T)
    seen = {start}
    out = [start]
    queue = deque([start])
    while queue:
        tau = queue.popleft()
        for i in range(1, tau.n):
            nxt = s_i(tau, i)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                out.append(nxt)
                queue.append(nxt)
    return out


def fiber_size(T: Labelling) -> int:
    """n! / prod mu_i! (valid for RSSYT)."""
    return factorial(T.n) // prod(factorial(m) for m in mu_of(T))


def psyt_leq(a: Psyt, b: Psyt) -> bool:
    """Whether a <= b in the order generated by the cover relations."""
    if a == b:
        return True
    bound = b.total_power()
    if a.total_power() > bound:
        return False
    seen = {a}
    queue = deque([a])
    while queue:
        tau = queue.popleft()
        nxt = []
        for i in range(1, tau.n):
            s = s_i(tau, i)
            if s is not None and s_raises(tau, i):
                nxt.append(s)
        if tau.total_power() < bound:
            nxt.append(psi(tau))
        for x in nxt:
            if x == b:
                return True
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return False


def enumerate_psyt_bounded(shape: Sequence[int], max_power: int) -> list[Psyt]:
    """All PSYT on ``shape`` whose powers are at most ``max_power``."""
    out = []
    for T in enumerate_rssyt(shape, max_power, strict_columns=False):
        out.extend(enumerate_psyt(T))
    return out


# ---------------------------------------------------------------------------
# zeta words and the bijection with (min coset reps) x SYT


def zeta_word(i: int, n: int) -> list:
    """zeta_i = (s_i ... s_{n-1} Psi)^i as a left-to-right application list."""
    one = ["psi"] + list(range(n - 1, i - 1, -1))
    return one * i


def translation_word(nu: Sequence[int]) -> list:
    """zeta_1^{nu1-nu2} ... zeta_n^{nu_n}, applied right to left, for weakly decreasing nu."""
    n = len(nu)
    word: list = []
    for i in range(n, 0, -1):
        e = nu[i - 1] - (nu[i] if i < n else 0)
        if e < 0:
            raise ValueError("nu must be weakly decreasing")
        word += zeta_word(i, n) * e
    return word


def coset_word(beta: Sequence[int]) -> list[int]:
    """Reduced word (applied left to right) of the minimal permutation taking sort(beta) to beta."""
    cur = sorted(beta, reverse=True)
    word = []
    n = len(beta)
    for p in range(n):
        j = next(k for k in range(p, n) if cur[k] == beta[p])
        for k in range(j, p, -1):
            cur[k - 1], cur[k] = cur[k], cur[k - 1]
            word.append(k)
    return word


def xi_inverse(beta: Sequence[int], S: Labelling) -> Psyt | None:
    """sigma_beta applied to the standard tableau S."""
    nu = sorted(beta, reverse=True)
    tau = apply_word(Psyt.from_syt(S), translation_word(nu) + coset_word(beta))
    return tau


def _inverse_word(word: list) -> list:
    return ["psi_inv" if g == "psi" else g for g in reversed(word)]


def xi(tau: Psyt) -> tuple[tuple[int, ...], Labelling]:
    """(w_tau, S(tau)) with tau = sigma_{w_tau}(S(tau))."""
    beta = tau.w
    nu = sorted(beta, reverse=True)
    back = apply_word(tau, _inverse_word(translation_word(nu) + coset_word(beta)))
    if back is None or not back.is_syt():
        raise ValueError(f"{tau!r} does not unwind to a standard tableau")
    return beta, back.labels()


def top_via_zeta(T: Labelling) -> Psyt | None:
    return apply_word(Psyt.from_syt(s_of(T)), translation_word(nu_of(T)))


# ---------------------------------------------------------------------------
# Bruhat order on compositions


def gamma_tilde(alpha: Sequence[int]) -> tuple[int, ...]:
    return tuple(alpha[1:]) + (alpha[0] + 1,)


def bruhat_lower_covers(alpha: Sequence[int]) -> list[tuple[int, ...]]:
    """Elements generated directly below alpha by the two defining relations."""
    a = list(alpha)
    n = len(a)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] > a[j]:
                b = a[:]
                b[i], b[j] = b[j], b[i]
                out.append(tuple(b))
            if a[i] + 1 < a[j]:
                b = a[:]
                b[i] += 1
                b[j] -= 1
                out.append(tuple(b))
    return out


def bruhat_below(alpha: Sequence[int]) -> set[tuple[int, ...]]:
    """All beta with beta <= alpha (reflexive)."""
    alpha = tuple(alpha)
    seen = {alpha}
    stack = [alpha]
    while stack:
        x = stack.pop()
        for y in bruhat_lower_covers(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def bruhat_lt(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    alpha, beta = tuple(alpha), tuple(beta)
    return alpha != beta and sum(alpha) == sum(beta) and alpha in bruhat_below(beta)


# ---------------------------------------------------------------------------
# asymptotic labellings


class AsymLabelling:
    """A finitely supported labelling of the infinite padded diagram of ``base``.

    ``first`` holds the first row with trailing zeros removed; ``lower`` holds
    the rows coming from ``base`` in full.
    """

    __slots__ = ("base", "first", "lower", "_hash")

    def __init__(self, base: Sequence[int], first: Sequence[int], lower: Sequence[Sequence[int]] = ()):
        self.base = Partition(base)
        first = list(int(x) for x in first)
        while first and first[-1] == 0:
            first.pop()
        lower = tuple(tuple(int(x) for x in row) for row in lower)
        if not lower and self.base:
            lower = tuple((0,) * p for p in self.base)
        if tuple(len(r) for r in lower) != tuple(self.base):
            raise ValueError(f"lower rows {[list(r) for r in lower]} do not match base {list(self.base)}")
        self.first = tuple(first)
        self.lower = lower
        self._hash = hash((self.base, self.first, self.lower))
        if not self.is_valid():
            raise ValueError(f"not a reverse semistandard labelling of the infinite diagram: {self!r}")

    @classmethod
    def from_labelling(cls, base: Sequence[int], T: Labelling) -> "AsymLabelling":
        if not is_padded_of(T.shape, Partition(base)):
            raise ValueError(f"shape {list(T.shape)} is not a padding of {list(base)}")
        return cls(base, T.rows[0] if T.rows else (), T.rows[1:])

    def value(self, b: Box) -> int:
        r, c = b
        if r == 1:
            return self.first[c - 1] if c <= len(self.first) else 0
        return self.lower[r - 2][c - 1]

    def is_valid(self) -> bool:
        T = self._on(max(self.rank, n_lambda(self.base)), check=False)
        return T.is_rssyt()

    @property
    def rank(self) -> int:
        """rk(T): least n >= n_lambda with the support inside the rank-n diagram."""
        return max(n_lambda(self.base), self.base.size + len(self.first))

    def degree(self) -> int:
        return sum(self.first) + sum(sum(r) for r in self.lower)

    def _on(self, n: int, check: bool = True) -> Labelling:
        shape = padded(self.base, n)
        if check and n < self.rank:
            raise ValueError(f"rank {n} is below rk(T) = {self.rank}")
        if not shape:
            return Labelling(shape, [])
        first = [self.first[c] if c < len(self.first) else 0 for c in range(shape[0])]
        return Labelling(shape, [first] + [list(r) for r in self.lower])

    def restrict(self, n: int) -> Labelling:
        """T restricted to the rank-n diagram (requires n >= rk(T))."""
        return self._on(n)

    def boxes_upto(self, n: int) -> list[Box]:
        return padded(self.base, n).boxes()

    def __eq__(self, other):
        return (isinstance(other, AsymLabelling) and self.base == other.base
                and self.first == other.first and self.lower == other.lower)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"AsymLabelling(base={list(self.base)}, rows={[list(self.first)] + [list(r) for r in self.lower]})"

    def to_json(self) -> dict:
        return {"base": list(self.base), "rank": self.rank, "rows": self.restrict(self.rank).to_json()}

    @classmethod
    def from_json(cls, data) -> "AsymLabelling":
        rows = data["rows"]
        return cls(data["base"], rows[0] if rows else [], rows[1:])


def t_min(base: Sequence[int]) -> AsymLabelling:
    """The labelling counting, in each box, the boxes strictly below it."""
    base = Partition(base)
    conj = base.conjugate()
    first = [conj[c] for c in range(len(conj))]
    lower = [[conj[c] - (r + 1) for c in range(p)] for r, p in enumerate(base)]
    return AsymLabelling(base, first, lower)


def enumerate_omega(base: Sequence[int], max_degree: int) -> list[AsymLabelling]:
    """All elements of Omega(base) with degree at most ``max_degree``."""
    base = Partition(base)
    n = n_lambda(base) + max_degree
    out = []
    for T in enumerate_rssyt(padded(base, n), max_degree, max_degree=max_degree):
        out.append(AsymLabelling.from_labelling(base, T))
    return sorted(set(out), key=lambda A: (A.degree(), A.to_json()["rows"]))


def raising_pairs(T: AsymLabelling) -> list[tuple[Box, AsymLabelling]]:
    """All (box, T') where T' adds 1 to one box of T and stays in Omega."""
    n = T.rank + 1
    L = T.restrict(n)
    out = []
    for b in L.boxes():
        R = L.with_value(b, L[b] + 1)
        if R.is_rssyt():
            out.append((b, AsymLabelling.from_labelling(T.base, R)))
    return out


def lowering_pairs(T: AsymLabelling) -> list[tuple[Box, AsymLabelling]]:
    L = T.restrict(T.rank)
    out = []
    for b in L.boxes():
        if L[b] > 0:
            R = L.with_value(b, L[b] - 1)
            if R.is_rssyt():
                out.append((b, AsymLabelling.from_labelling(T.base, R)))
    return out


def raises_finite(T: Labelling, r: int = 1, strict_columns: bool = True) -> list[Labelling]:
    """Labellings obtained by adding 1 to r distinct boxes, staying RSSYT."""
    out = []
    for bs in combinations(T.boxes(), r):
        S = T
        for b in bs:
            S = S.with_value(b, S[b] + 1)
        if S.is_rssyt() if strict_columns else S.is_ryt():
            out.append(S)
    return out


# ---------------------------------------------------------------------------
# asymptotic periodic standard tableaux


class Apsyt:
    """An asymptotic PSYT, stored by its restriction to its own rank."""

    __slots__ = ("base", "tableau", "_hash")

    def __init__(self, base: Sequence[int], tableau: Psyt):
        self.base = Partition(base)
        self.tableau = tableau
        self._hash = hash((self.base, tableau))

    @property
    def rank(self) -> int:
        return self.tableau.n

    def labelling(self) -> AsymLabelling:
        return AsymLabelling.from_labelling(self.base, p_map(self.tableau))

    def __eq__(self, other):
        return isinstance(other, Apsyt) and self.base == other.base and self.tableau == other.tableau

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Apsyt(base={list(self.base)}, {self.tableau!r})"


def _restrict_psyt(tau: Psyt, shape: Partition) -> Psyt:
    rows = [row[:p] for row, p in zip(tau.rows, shape)]
    return Psyt(shape, rows, check=False)


def apsyt_from_finite(base: Sequence[int], tau: Psyt, min_rank: int) -> Apsyt:
    """The asymptotic tableau whose rank-n restriction is ``tau``."""
    base = Partition(base)
    n = tau.n
    first = tau.rows[0]
    m = n
    # shrink while the last first-row box holds the largest label with power 0
    while m > min_rank and first[m - 1 - base.size][0] == m and first[m - 1 - base.size][1] == 0:
        m -= 1
    return Apsyt(base, _restrict_psyt(tau, padded(base, m)))


def enumerate_apsyt(T: AsymLabelling, rank_bound: int) -> list[Apsyt]:
    """All asymptotic tableaux over T with rank at most ``rank_bound``."""
    if rank_bound < T.rank:
        raise ValueError(f"rank_bound {rank_bound} is below rk(T) = {T.rank}")
    return [apsyt_from_finite(T.base, tau, T.rank) for tau in enumerate_psyt(T.restrict(rank_bound))]


# ---------------------------------------------------------------------------
# brute force (used to cross-check the BFS closure)


def enumerate_fiber_brute(T: Labelling) -> list[Psyt]:
    """Every PSYT with p_map equal to T, by trying all label bijections."""
    from itertools import permutations

    boxes = T.boxes()
    out = []
    for perm in permutations(range(1, T.n + 1)):
        rows = [[None] * p for p in T.shape]
        for (r, c), a in zip(boxes, perm):
            rows[r - 1][c - 1] = (a, T[(r, c)])
        tau = Psyt(T.shape, rows, check=False)
        if tau.validation_error() is None:
            out.append(tau)
    return out


def binom2(n: int) -> int:
    return comb(n, 2)
