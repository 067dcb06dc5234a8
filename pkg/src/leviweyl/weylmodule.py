"""Characters and bookkeeping for local and global Weyl modules of current algebras.

Everything here is support independent: a current weight only matters through
the sum of its values, so evaluation points are opaque string labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .characters import (Character, _dominant_labels_of, dim_irreducible, irreducible_character,
                         sum_of_irreducibles, tensor_character, trivial_character)
from .errors import ConstructionError, DomainError
from .rootsystem import Labels, RootSystem, Weight


def _system(ctx) -> RootSystem:
    """Accept either a root system or a Levi subalgebra (its abstract system)."""
    return ctx if isinstance(ctx, RootSystem) else ctx.levi_system


@dataclass(frozen=True)
class CurrentWeight:
    """Finitely supported map from point labels to nonzero dominant weights."""

    entries: Mapping[str, Weight]
    ambient: RootSystem

    def __post_init__(self):
        clean = {}
        for point, w in self.entries.items():
            if w.is_zero():
                raise ConstructionError(f"point {point!r} carries the zero weight")
            if any(c < 0 for c in self.ambient.labels(w)):
                raise ConstructionError(f"point {point!r} carries a non-dominant weight")
            clean[str(point)] = w
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __hash__(self) -> int:
        return hash((self.ambient, tuple(self.entries.items())))


def current_weight(rs: RootSystem, entries: Mapping[str, Sequence[int] | Weight]) -> CurrentWeight:
    """Build a current weight from label tuples or weights per point."""
    conv = {p: (w if isinstance(w, Weight) else rs.from_labels(w)) for p, w in entries.items()}
    return CurrentWeight(conv, rs)


def wt(psi: CurrentWeight) -> Weight:
    acc = psi.ambient.zero
    for w in psi.entries.values():
        acc = acc + w
    return acc


def supp(psi: CurrentWeight) -> frozenset[str]:
    return frozenset(psi.entries)


def fundamental_chain(rs: RootSystem, i: int) -> tuple[int, ...]:
    """0-based nodes ``j`` such that ``W(psi_i)`` is the sum of ``V(omega_j)``.

    ``-1`` stands for the zero weight.  Works factor by factor on products.
    """
    if not 0 <= i < rs.rank:
        raise DomainError(f"node {i + 1} out of range for {rs.name}")
    b, local = rs.node_block[i]
    fam, n = rs.blocks[b]
    offset = i - local
    k = local + 1
    if (fam == "B" and k < n) or (fam == "D" and k < n - 1):
        chain = list(range(k, 0, -2))
        if k % 2 == 0:
            chain.append(0)
    else:
        chain = [k]
    return tuple(offset + c - 1 if c else -1 for c in chain)


def _unit(rank: int, j: int) -> Labels:
    return tuple(int(t == j) for t in range(rank))


@lru_cache(maxsize=None)
def _fundamental_char(rs: RootSystem, i: int) -> Character:
    terms = [(_unit(rs.rank, j) if j >= 0 else (0,) * rs.rank, 1) for j in fundamental_chain(rs, i)]
    return sum_of_irreducibles(rs, terms)


def fundamental_weyl_character(rs: RootSystem, i: int) -> Character:
    """``char W(psi_i)`` for the 0-based node ``i``."""
    return _fundamental_char(rs, i)


def fundamental_weyl_dim(rs: RootSystem, i: int) -> int:
    """Chain sum of Weyl-formula dimensions, independent of any character."""
    return sum(dim_irreducible(rs, _unit(rs.rank, j) if j >= 0 else (0,) * rs.rank)
               for j in fundamental_chain(rs, i))


@lru_cache(maxsize=2048)
def _local_char(rs: RootSystem, lam: Labels) -> Character:
    out = trivial_character(rs)
    for i, m in enumerate(lam):
        for _ in range(m):
            out = tensor_character(out, _fundamental_char(rs, i))
    return out


def local_weyl_character(ctx, lam) -> Character:
    """``char W(psi)`` for any current weight psi of weight ``lam``.

    ``ctx`` is a root system or a Levi; for a Levi ``lam`` is given in its
    concatenated tau-coordinates.
    """
    rs = _system(ctx)
    return _local_char(rs, _dominant_labels_of(rs, lam))


def local_weyl_dim(ctx, lam) -> int:
    rs = _system(ctx)
    lam = _dominant_labels_of(rs, lam)
    out = 1
    for i, m in enumerate(lam):
        if m:
            out *= _fundamental_char(rs, i).mass ** m
    return out


def local_weyl_character_of(psi: CurrentWeight) -> Character:
    """Character of ``W(psi)``; delegates to the weight ``wt(psi)``."""
    return local_weyl_character(psi.ambient, wt(psi))


@dataclass(frozen=True)
class GlobalWeylDescriptor:
    lam: Labels
    variable_multiplicities: tuple[tuple[int, int], ...]
    rank: int

    @property
    def variable_count(self) -> int:
        return sum(m for _, m in self.variable_multiplicities)


def global_weyl_descriptor(rs: RootSystem, lam) -> GlobalWeylDescriptor:
    """Polynomial-variable counts (1-based nodes) and free rank of ``W(lam)``."""
    lam = _dominant_labels_of(rs, lam)
    variables = tuple((i + 1, m) for i, m in enumerate(lam) if m)
    return GlobalWeylDescriptor(lam, variables, local_weyl_dim(rs, lam))


def irreducible_vs_local_gap(rs: RootSystem, lam) -> Character:
    """``char W(lam) - char V(lam)``; raises if it is not a module character."""
    w = local_weyl_character(rs, lam).mults
    v = irreducible_character(rs, lam).mults
    return Character(rs, {mu: w.get(mu, 0) - v.get(mu, 0) for mu in set(w) | set(v)})
