"""Exact character arithmetic.

Irreducible characters come from Freudenthal's recursion on the dominant
chamber followed by Weyl-orbit expansion; dimensions come from the Weyl
dimension formula.  The two are independent routes and are cross-checked in
the test-suite.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, NotAModuleCharacterError
from .rootsystem import Labels, RootSystem, Weight


class Character:
    """A finite map ``Weight -> positive int`` over a fixed root system."""

    __slots__ = ("system", "mults")

    def __init__(self, system: RootSystem, mults: Mapping[Weight, int]):
        clean = {}
        for w, m in mults.items():
            if m < 0:
                raise NotAModuleCharacterError(f"negative multiplicity {m} at {w.eps()}")
            if m:
                clean[w] = m
        self.system = system
        self.mults: dict[Weight, int] = clean

    @classmethod
    def from_labels(cls, system: RootSystem, mults: Mapping[Labels, int]) -> "Character":
        return cls(system, {system.from_labels(l): m for l, m in mults.items()})

    def label_mults(self) -> dict[Labels, int]:
        lab = self.system.labels
        return {lab(w): m for w, m in self.mults.items()}

    @property
    def mass(self) -> int:
        return sum(self.mults.values())

    def __getitem__(self, w: Weight) -> int:
        return self.mults.get(w, 0)

    def __len__(self) -> int:
        return len(self.mults)

    def __iter__(self):
        return iter(self.mults)

    def items(self):
        return self.mults.items()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Character) and other.system == self.system
                and other.mults == self.mults)

    def __add__(self, other: "Character") -> "Character":
        _same_ambient(self, other)
        out = dict(self.mults)
        for w, m in other.mults.items():
            out[w] = out.get(w, 0) + m
        return Character(self.system, out)

    def scaled(self, k: int) -> "Character":
        return Character(self.system, {w: k * m for w, m in self.mults.items()})

    def __repr__(self) -> str:
        return f"Character({self.system.name}, {len(self.mults)} weights, mass {self.mass})"


def _same_ambient(c1: Character, c2: Character) -> None:
    if c1.system != c2.system:
        raise DomainError(f"characters over {c1.system.name} and {c2.system.name} cannot be combined")


def trivial_character(rs: RootSystem) -> Character:
    return Character(rs, {rs.zero: 1})


def _dominant_labels_of(rs: RootSystem, lam) -> Labels:
    labels = tuple(lam) if not isinstance(lam, Weight) else rs.labels(lam)
    if len(labels) != rs.rank:
        raise DomainError(f"{rs.name} needs {rs.rank} fundamental coordinates")
    if any(c < 0 for c in labels):
        raise DomainError(f"weight with labels {labels} is not dominant for {rs.name}")
    return labels


def dominant_weights_below(rs: RootSystem, lam: Labels) -> list[tuple[Labels, int]]:
    """Dominant ``mu <= lam`` paired with the height of ``lam - mu``, by height."""
    coeffs = rs.simple_root_coords(lam)
    bounds = [range(int(math.floor(c)) + 1) for c in coeffs]
    cartan = rs.cartan
    r = rs.rank
    out = []
    for d in itertools.product(*bounds):
        mu = list(lam)
        for i, di in enumerate(d):
            if di:
                row = cartan[i]
                for j in range(r):
                    mu[j] -= di * row[j]
        if all(c >= 0 for c in mu):
            out.append((tuple(mu), sum(d)))
    out.sort(key=lambda t: t[1])
    return out


@lru_cache(maxsize=4096)
def dominant_multiplicities(rs: RootSystem, lam: Labels) -> tuple[tuple[Labels, int], ...]:
    """Freudenthal's recursion over the dominant weights of ``V(lam)``.

    ``m(mu) [(lam+rho,lam+rho) - (mu+rho,mu+rho)]
        = 2 sum_{a>0} sum_{k>=1} m(mu+k a) (mu+k a, a)``

    Multiplicities of non-dominant weights on the right are read off their
    dominant conjugates, which always sit strictly higher and are therefore
    already known.
    """
    lam = tuple(lam)
    r = rs.rank
    gram = rs._gram
    roots = rs.positive_root_labels
    # (x, a) = x . ga  with ga = Gram * a
    g_roots = [tuple(sum(gram[i][j] * a[j] for j in range(r)) for i in range(r)) for a in roots]
    aa = [sum(a[i] * ga[i] for i in range(r)) for a, ga in zip(roots, g_roots)]
    rho = rs.rho_labels
    lr = tuple(x + y for x, y in zip(lam, rho))
    top = rs.form_labels(lr, lr)

    mult: dict[Labels, int] = {}
    dominant = rs.dominant_labels
    for mu, height in dominant_weights_below(rs, lam):
        if height == 0:
            mult[mu] = 1
            continue
        total = 0
        for a, ga, a2 in zip(roots, g_roots, aa):
            base = sum(mu[i] * ga[i] for i in range(r))
            k = 1
            nu = mu
            while True:
                nu = tuple(x + y for x, y in zip(nu, a))
                m = mult.get(dominant(nu))
                if not m:
                    break
                total += m * (base + k * a2)
                k += 1
        mr = tuple(x + y for x, y in zip(mu, rho))
        den = top - rs.form_labels(mr, mr)
        q, rem = divmod(2 * total, den)
        if rem:
            raise ArithmeticError(f"Freudenthal recursion not integral at {mu} in {rs.name}({lam})")
        mult[mu] = q
    return tuple(mult.items())


def freudenthal_mass(rs: RootSystem, lam) -> int:
    """Total dimension from Freudenthal multiplicities and orbit sizes."""
    lam = _dominant_labels_of(rs, lam)
    return sum(m * rs.orbit_size(mu) for mu, m in dominant_multiplicities(rs, lam))


@lru_cache(maxsize=4096)
def _irreducible_label_mults(rs: RootSystem, lam: Labels) -> dict[Labels, int]:
    out = {}
    for mu, m in dominant_multiplicities(rs, lam):
        for nu in rs.orbit_labels(mu):
            out[nu] = m
    return out


def irreducible_character(rs: RootSystem, lam) -> Character:
    """Character of ``V(lam)``; ``lam`` is a dominant Weight or label tuple."""
    lam = _dominant_labels_of(rs, lam)
    return Character.from_labels(rs, _irreducible_label_mults(rs, lam))


def dim_irreducible(rs: RootSystem, lam) -> int:
    """Weyl dimension formula ``prod_{a>0} (lam+rho, a) / (rho, a)``."""
    lam = _dominant_labels_of(rs, lam)
    lr = tuple(x + 1 for x in lam)
    num = Fraction(1)
    for a in rs.positive_root_labels:
        num *= Fraction(rs.form_labels(lr, a), rs.form_labels(rs.rho_labels, a))
    if num.denominator != 1:
        raise ArithmeticError("Weyl dimension formula returned a non-integer")
    return int(num)


def tensor_character(c1: Character, c2: Character) -> Character:
    """Weight convolution ``(c1 * c2)(nu) = sum_mu c1(mu) c2(nu - mu)``."""
    _same_ambient(c1, c2)
    rs = c1.system
    l1 = c1.label_mults()
    l2 = c2.label_mults()
    out: dict[Labels, int] = {}
    for x, m in l1.items():
        for y, n in l2.items():
            z = tuple(a + b for a, b in zip(x, y))
            out[z] = out.get(z, 0) + m * n
    return Character.from_labels(rs, out)


def tensor_power(c: Character, k: int) -> Character:
    out = trivial_character(c.system)
    for _ in range(k):
        out = tensor_character(out, c)
    return out


def sum_of_irreducibles(rs: RootSystem, terms: Iterable[tuple[Sequence[int] | Weight, int]]) -> Character:
    acc: dict[Labels, int] = {}
    for lam, k in terms:
        labels = _dominant_labels_of(rs, lam)
        for nu, m in _irreducible_label_mults(rs, labels).items():
            acc[nu] = acc.get(nu, 0) + k * m
    return Character.from_labels(rs, acc)


def decompose(rs: RootSystem, c: Character) -> dict[Weight, int]:
    """Multiplicities of irreducible constituents of a module character.

    Repeatedly peels off ``V(mu)`` for the dominant weight ``mu`` of maximal
    norm still present (ties broken by the largest epsilon tuple).
    """
    if c.system != rs:
        raise DomainError(f"character over {c.system.name} decomposed over {rs.name}")
    remaining = dict(c.label_mults())
    out: dict[Weight, int] = {}
    while remaining:
        dom = [l for l, m in remaining.items() if m > 0 and all(x >= 0 for x in l)]
        if not dom:
            raise NotAModuleCharacterError("no dominant weight left but character is nonzero")

        def key(l):
            w = rs.from_labels(l)
            return (rs.form_labels(l, l), w.zero_sum_eps())

        top = max(dom, key=key)
        k = remaining[top]
        for nu, m in _irreducible_label_mults(rs, top).items():
            left = remaining.get(nu, 0) - k * m
            if left < 0:
                raise NotAModuleCharacterError(
                    f"multiplicity of {nu} would become {left} while removing V{top}")
            if left:
                remaining[nu] = left
            else:
                remaining.pop(nu, None)
        w = rs.from_labels(top)
        out[w] = out.get(w, 0) + k
    return out


def restrict_character(c: Character, a) -> Character:
    """Push a g-character forward along the weight projection to a Levi ``a``."""
    if c.system != a.ambient:
        raise DomainError(f"character over {c.system.name} restricted to a Levi of {a.ambient.name}")
    out: dict[Labels, int] = {}
    for w, m in c.items():
        tau = a.project(w)
        out[tau] = out.get(tau, 0) + m
    return Character.from_labels(a.levi_system, out)


def branching_multiplicities(rs: RootSystem, lam, a) -> dict[Weight, int]:
    """``c_lam^tau``: constituents of ``V(lam)`` restricted to ``a``."""
    res = restrict_character(irreducible_character(rs, lam), a)
    return decompose(a.levi_system, res)
