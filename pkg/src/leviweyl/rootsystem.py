"""Classical root systems of types A, B, C, D in epsilon coordinates.

Weights are stored as *doubled* integer epsilon coordinates so that the spin
weights of B_n and D_n (half-integer entries) stay exact.  For type A the
ambient space has n+1 coordinates and weights are classes modulo the all-ones
vector; the stored representative has minimal coordinate 0.

A :class:`RootSystem` may also be a product of several simple factors laid out
in consecutive coordinate blocks.  This is how the root system of a
semisimple Levi subalgebra is realised (see :mod:`leviweyl.levi`).

Internally most of the heavy lifting is done on *Dynkin labels* (fundamental
weight coordinates), which are plain integer tuples.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod
from typing import Iterable, Sequence

from .errors import ConstructionError, DomainError

FAMILIES = ("A", "B", "C", "D")
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}

Labels = tuple[int, ...]


@dataclass(frozen=True)
class Weight:
    """An exact weight in doubled epsilon coordinates.

    ``a_blocks`` lists the ``(start, stop)`` coordinate ranges that belong to
    type-A factors; inside each such block the vector is only defined modulo
    the all-ones vector and is kept in canonical form (minimum 0).
    """

    coords: tuple[int, ...]
    a_blocks: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.a_blocks:
            c = list(self.coords)
            for lo, hi in self.a_blocks:
                m = min(c[lo:hi])
                if m:
                    for k in range(lo, hi):
                        c[k] -= m
            object.__setattr__(self, "coords", tuple(c))

    @classmethod
    def from_eps(cls, values: Iterable, a_blocks=()) -> "Weight":
        """Build a weight from (possibly half-integer) epsilon coordinates."""
        doubled = []
        for v in values:
            d = Fraction(v) * 2
            if d.denominator != 1:
                raise DomainError(f"epsilon coordinate {v} is not a half-integer")
            doubled.append(int(d))
        return cls(tuple(doubled), tuple(a_blocks))

    @property
    def ambient_dim(self) -> int:
        return len(self.coords)

    def eps(self) -> tuple[Fraction, ...]:
        """Epsilon coordinates of the stored representative."""
        return tuple(Fraction(c, 2) for c in self.coords)

    def zero_sum_eps(self) -> tuple[Fraction, ...]:
        """Epsilon coordinates with every type-A block shifted to sum zero."""
        out = list(self.eps())
        for lo, hi in self.a_blocks:
            shift = sum(out[lo:hi]) / (hi - lo)
            for k in range(lo, hi):
                out[k] -= shift
        return tuple(out)

    def _same_space(self, other: "Weight") -> None:
        if len(self.coords) != len(other.coords) or self.a_blocks != other.a_blocks:
            raise DomainError("weights live in different ambient spaces")

    def __add__(self, other: "Weight") -> "Weight":
        self._same_space(other)
        return Weight(tuple(x + y for x, y in zip(self.coords, other.coords)), self.a_blocks)

    def __sub__(self, other: "Weight") -> "Weight":
        self._same_space(other)
        return Weight(tuple(x - y for x, y in zip(self.coords, other.coords)), self.a_blocks)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-x for x in self.coords), self.a_blocks)

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * x for x in self.coords), self.a_blocks)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def dot(self, other: "Weight") -> int:
        """A positive multiple of the invariant form, exact.

        Outside type-A blocks this is the plain dot product of doubled
        coordinates; on a type-A block of length L it is the dot product of
        the projections to the sum-zero hyperplane, scaled by L so it stays
        integral.  Within a single simple factor the scale is uniform.
        """
        self._same_space(other)
        x, y = self.coords, other.coords
        if not self.a_blocks:
            return sum(a * b for a, b in zip(x, y))
        total = 0
        covered = set()
        for lo, hi in self.a_blocks:
            n = hi - lo
            xs, ys = x[lo:hi], y[lo:hi]
            total += n * sum(a * b for a, b in zip(xs, ys)) - sum(xs) * sum(ys)
            covered.update(range(lo, hi))
        total += sum(x[k] * y[k] for k in range(len(x)) if k not in covered)
        return total


def pairing(lam: Weight, alpha: Weight):
    """``<lam, alpha^vee> = 2 (lam, alpha) / (alpha, alpha)``.

    Returns an ``int`` when the value is integral, otherwise a ``Fraction``.
    """
    den = alpha.dot(alpha)
    if den == 0:
        raise DomainError("pairing with the zero vector")
    q = Fraction(2 * lam.dot(alpha), den)
    return int(q) if q.denominator == 1 else q


def _unit(dim: int, i: int, v: int = 2) -> list[int]:
    e = [0] * dim
    e[i] = v
    return e


def _block_data(family: str, n: int):
    """Simple roots, positive roots and fundamental weights of one factor,
    as doubled coordinate lists in a local block."""
    if family == "A":
        dim = n + 1
        simple = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n)]
        pos = [_sub(_unit(dim, i), _unit(dim, j)) for i in range(dim) for j in range(i + 1, dim)]
        fund = [[2] * (i + 1) + [0] * (dim - i - 1) for i in range(n)]
        return dim, simple, pos, fund
    dim = n
    simple = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n - 1)]
    pos = []
    for i in range(n):
        for j in range(i + 1, n):
            pos.append(_sub(_unit(dim, i), _unit(dim, j)))
            pos.append(_add(_unit(dim, i), _unit(dim, j)))
    fund = [[2] * (i + 1) + [0] * (dim - i - 1) for i in range(n)]
    if family == "B":
        simple.append(_unit(dim, n - 1))
        pos += [_unit(dim, i) for i in range(n)]
        fund[n - 1] = [1] * n
    elif family == "C":
        simple.append(_unit(dim, n - 1, 4))
        pos += [_unit(dim, i, 4) for i in range(n)]
    elif family == "D":
        simple.append(_add(_unit(dim, n - 2), _unit(dim, n - 1)))
        fund[n - 2] = [1] * (n - 1) + [-1]
        fund[n - 1] = [1] * n
    return dim, simple, pos, fund


def _add(x, y):
    return [a + b for a, b in zip(x, y)]


def _sub(x, y):
    return [a - b for a, b in zip(x, y)]


def _invert(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(matrix)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [v / p for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _weyl_group_order(family: str, n: int) -> int:
    if family == "A":
        return prod(range(1, n + 2))
    if family in ("B", "C"):
        return 2 ** n * prod(range(1, n + 1))
    return 2 ** (n - 1) * prod(range(1, n + 1))


class RootSystem:
    """A (product of) classical root system(s), immutable after construction.

    Simple roots are in Bourbaki order within each factor; factors are
    concatenated in the order given.
    """

    def __init__(self, blocks: Sequence[tuple[str, int]]):
        if not blocks:
            raise ConstructionError("a root system needs at least one simple factor")
        for fam, n in blocks:
            _check_family_rank(fam, n, allow_small=len(blocks) > 1)
        self.blocks: tuple[tuple[str, int], ...] = tuple((f, int(n)) for f, n in blocks)

        data = [_block_data(f, n) for f, n in self.blocks]
        dim = sum(d[0] for d in data)
        a_blocks = []
        offsets = []
        off = 0
        for (fam, _), d in zip(self.blocks, data):
            offsets.append(off)
            if fam == "A":
                a_blocks.append((off, off + d[0]))
            off += d[0]
        self._a_blocks = tuple(a_blocks)

        def embed(vec, o):
            full = [0] * dim
            full[o:o + len(vec)] = vec
            return Weight(tuple(full), self._a_blocks)

        self.simple_roots: tuple[Weight, ...] = tuple(
            embed(v, o) for d, o in zip(data, offsets) for v in d[1])
        self.positive_roots: tuple[Weight, ...] = tuple(
            embed(v, o) for d, o in zip(data, offsets) for v in d[2])
        self.fundamental_weights: tuple[Weight, ...] = tuple(
            embed(v, o) for d, o in zip(data, offsets) for v in d[3])
        self.rank = len(self.simple_roots)
        self.ambient_dim = dim
        self.zero = Weight((0,) * dim, self._a_blocks)
        self.rho = _sum_weights(self.fundamental_weights, self.zero)
        self._root_set = frozenset(self.positive_roots) | frozenset(-a for a in self.positive_roots)
        # node -> (block index, local node index)
        self.node_block = tuple((b, i) for b, (_, n) in enumerate(self.blocks) for i in range(n))

        # Label engine.  cartan[i] is the label vector of alpha_i.
        self.cartan: tuple[Labels, ...] = tuple(self.labels(a) for a in self.simple_roots)
        self._inv_cartan = _invert(self.cartan)
        # integer numerators over a common denominator, for fast coordinate changes
        self._inv_den = lcm(*(c.denominator for row in self._inv_cartan for c in row))
        self._inv_num = tuple(tuple(int(c * self._inv_den) for c in row) for row in self._inv_cartan)
        self.positive_root_labels: tuple[Labels, ...] = tuple(self.labels(a) for a in self.positive_roots)
        self.positive_root_coeffs: tuple[tuple[int, ...], ...] = tuple(
            self._int_coeffs(l) for l in self.positive_root_labels)
        self._gram = tuple(tuple(w.dot(v) for v in self.fundamental_weights)
                           for w in self.fundamental_weights)
        self.rho_labels: Labels = (1,) * self.rank
        self.weyl_group_order = prod(_weyl_group_order(f, n) for f, n in self.blocks)

    # -- identity ---------------------------------------------------------
    @property
    def name(self) -> str:
        return "+".join(f"{f}{n}" for f, n in self.blocks)

    @property
    def family(self) -> str | None:
        """Family letter for a simple system, ``None`` for a product."""
        return self.blocks[0][0] if len(self.blocks) == 1 else None

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and other.blocks == self.blocks

    def __hash__(self) -> int:
        return hash(("RootSystem", self.blocks))

    # -- weights ----------------------------------------------------------
    @property
    def roots(self) -> frozenset[Weight]:
        return self._root_set

    def is_root(self, w: Weight) -> bool:
        return w in self._root_set

    def weight(self, eps_coords: Iterable) -> Weight:
        """A weight of this system from epsilon coordinates."""
        vals = list(eps_coords)
        if len(vals) != self.ambient_dim:
            raise DomainError(f"{self.name} weights need {self.ambient_dim} coordinates")
        return Weight.from_eps(vals, self._a_blocks)

    def labels(self, w: Weight) -> Labels:
        """Dynkin labels ``<w, alpha_i^vee>``; raises for non-integral ``w``."""
        cache = self.__dict__.setdefault("_label_cache", {})
        hit = cache.get(w)
        if hit is not None:
            return hit
        out = []
        for a in self.simple_roots:
            p = pairing(w, a)
            if not isinstance(p, int):
                raise DomainError(f"weight {w.eps()} is not integral for {self.name}")
            out.append(p)
        out = tuple(out)
        cache[w] = out
        return out

    def from_labels(self, labels: Sequence[int]) -> Weight:
        if len(labels) != self.rank:
            raise DomainError(f"{self.name} needs {self.rank} fundamental coordinates")
        key = tuple(labels)
        cache = self.__dict__.setdefault("_weight_cache", {})
        hit = cache.get(key)
        if hit is not None:
            return hit
        acc = [0] * self.ambient_dim
        for m, w in zip(labels, self.fundamental_weights):
            if m:
                for k, c in enumerate(w.coords):
                    acc[k] += m * c
        w = cache[key] = Weight(tuple(acc), self._a_blocks)
        return w

    def simple_root_coords(self, labels: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates in the basis of simple roots, from Dynkin labels."""
        r = self.rank
        den = self._inv_den
        num = self._inv_num
        return tuple(Fraction(sum(labels[i] * num[i][j] for i in range(r) if labels[i]), den)
                     for j in range(r))

    def _int_coeffs(self, labels: Labels) -> tuple[int, ...]:
        cs = self.simple_root_coords(labels)
        if any(c.denominator != 1 for c in cs):
            raise ConstructionError("positive root outside the root lattice")
        return tuple(int(c) for c in cs)

    # -- label engine -----------------------------------------------------
    def form_labels(self, x: Sequence[int], y: Sequence[int]) -> int:
        g = self._gram
        return sum(x[i] * g[i][j] * y[j] for i in range(self.rank) if x[i]
                   for j in range(self.rank) if y[j])

    def reflect_labels(self, x: Sequence[int], i: int) -> Labels:
        c = x[i]
        if not c:
            return tuple(x)
        row = self.cartan[i]
        return tuple(a - c * b for a, b in zip(x, row))

    def dominant_labels(self, x: Sequence[int]) -> Labels:
        x = tuple(x)
        while True:
            for i, c in enumerate(x):
                if c < 0:
                    x = self.reflect_labels(x, i)
                    break
            else:
                return x

    def orbit_labels(self, x: Sequence[int]) -> set[Labels]:
        """Breadth-first closure under simple reflections."""
        start = tuple(x)
        seen = {start}
        queue = deque([start])
        while queue:
            y = queue.popleft()
            for i in range(self.rank):
                if y[i]:
                    z = self.reflect_labels(y, i)
                    if z not in seen:
                        seen.add(z)
                        queue.append(z)
        return seen

    def orbit_size(self, dominant: Sequence[int]) -> int:
        """|W| / |W_J| where J is the set of zero labels of a dominant weight.

        Uses ``|W_J| = prod (ht(a)+1)/ht(a)`` over positive roots supported in J.
        """
        zero = {i for i, c in enumerate(dominant) if c == 0}
        stab = Fraction(1)
        for coeffs in self.positive_root_coeffs:
            if all(c == 0 or i in zero for i, c in enumerate(coeffs)):
                h = sum(coeffs)
                stab *= Fraction(h + 1, h)
        return int(Fraction(self.weyl_group_order) / stab)


def _sum_weights(ws: Iterable[Weight], zero: Weight) -> Weight:
    acc = zero
    for w in ws:
        acc = acc + w
    return acc


def _check_family_rank(family: str, rank: int, allow_small: bool = False) -> None:
    if family not in FAMILIES:
        raise ConstructionError(f"unknown family {family!r}; expected one of A, B, C, D")
    if not isinstance(rank, int) or rank < 1:
        raise ConstructionError(f"rank must be a positive integer, got {rank!r}")
    lo = 1 if allow_small and family in ("B", "C") else MIN_RANK[family]
    if allow_small and family == "D":
        lo = 3
    if rank < lo:
        raise ConstructionError(f"type {family} requires rank >= {lo}, got {rank}")


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """The simple root system of type ``family`` and rank ``rank``."""
    _check_family_rank(family, rank)
    return RootSystem([(family, rank)])


@lru_cache(maxsize=None)
def product_root_system(blocks: tuple[tuple[str, int], ...]) -> RootSystem:
    """Product of simple factors, used for semisimple Levi subalgebras.

    Rank-1 factors of types B and C are accepted (they are copies of A1).
    """
    return RootSystem(list(blocks))


def parse_system_name(text: str) -> RootSystem:
    """``"B3"`` -> B3 root system."""
    t = text.strip().upper()
    if len(t) < 2 or t[0] not in FAMILIES or not t[1:].isdigit():
        raise ConstructionError(f"cannot parse root system {text!r}; expected e.g. B3")
    return build_root_system(t[0], int(t[1:]))


def is_dominant(rs: RootSystem, lam: Weight) -> bool:
    return all(c >= 0 for c in rs.labels(lam))


def reflect(rs: RootSystem, mu: Weight, i: int) -> Weight:
    """Simple reflection ``s_i``."""
    a = rs.simple_roots[i]
    p = pairing(mu, a)
    return mu - a * p if isinstance(p, int) else Weight.from_eps(
        [m - p * c for m, c in zip(mu.eps(), a.eps())], mu.a_blocks)


def weyl_orbit(rs: RootSystem, lam: Weight) -> set[Weight]:
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for i in range(rs.rank):
            nu = reflect(rs, mu, i)
            if nu not in seen:
                seen.add(nu)
                queue.append(nu)
    return seen


def _solve_exact(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]):
    """Solve ``sum x_j columns[j] = target`` exactly.

    Returns the unique solution, or ``None`` if inconsistent.  Raises
    :class:`DomainError` if the columns are linearly dependent.
    """
    k = len(columns)
    rows = len(target)
    m = [[Fraction(columns[j][r]) for j in range(k)] + [Fraction(target[r])] for r in range(rows)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, rows) if m[i][col] != 0), None)
        if piv is None:
            raise DomainError("basis vectors are linearly dependent")
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [v / p for v in m[r]]
        for i in range(rows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(r)
        r += 1
    if any(m[i][k] != 0 for i in range(r, rows)):
        return None
    return [m[i][k] for i in pivots]


def in_nonneg_root_span(mu: Weight, basis: Sequence[Weight]) -> bool:
    """True iff ``mu`` is a nonnegative integer combination of ``basis``.

    On type-A blocks the test is made on classes: everything is projected to
    the sum-zero hyperplane first (the basis vectors already live there), so
    the all-ones shift of ``mu`` is forced.
    """
    if not basis:
        if mu.is_zero():
            return True
        return all(c == 0 for c in mu.zero_sum_eps())
    target = mu.zero_sum_eps()
    cols = [b.zero_sum_eps() for b in basis]
    sol = _solve_exact(cols, target)
    if sol is None:
        return False
    return all(x.denominator == 1 and x >= 0 for x in sol)
