"""Global and local admissibility of (Levi, weight) pairs, and a surjectivity oracle.

A pair is globally admissible when every fundamental weight occurring in the
weight projects, on every simple component, to zero or a single fundamental
weight.  Local admissibility fails only in two configurations: a B_s component
(s > 1) inside B_n hit at twice its last fundamental weight, and an A_s
component inside C_n hit at anything other than zero or a fundamental weight.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .characters import _dominant_labels_of
from .levi import LeviSubalgebra
from .rootsystem import Labels


class Case(str, enum.Enum):
    ZERO = "zero"
    FUNDAMENTAL = "fundamental"
    B_TWICE_LAST = "b-twice-last"
    C_INSIDE_A = "c-a-non-fundamental"
    OTHER = "non-fundamental"


@dataclass(frozen=True)
class Reason:
    component: int
    k: int
    case: Case
    projection: str

    def as_dict(self) -> dict:
        return {"component": self.component, "k": self.k, "case": self.case.value,
                "projection": self.projection}


@dataclass(frozen=True)
class AdmissibilityVerdict:
    globally: bool
    locally: bool
    reasons: tuple[Reason, ...] = field(default=())

    def as_dict(self) -> dict:
        return {"globally": self.globally, "locally": self.locally,
                "reasons": [r.as_dict() for r in self.reasons]}


def render_tau(coords) -> str:
    """``(0,2)`` -> ``2t2``; ``(0,1,1)`` -> ``t2+t3``; zero -> ``0``."""
    parts = [f"{'' if c == 1 else c}t{j + 1}" for j, c in enumerate(coords) if c]
    return "+".join(parts) if parts else "0"


def _case(ambient_family: str | None, comp_family: str, piece: Labels) -> Case:
    s = len(piece)
    if not any(piece):
        return Case.ZERO
    if sum(piece) == 1:
        return Case.FUNDAMENTAL
    if ambient_family == "B" and comp_family == "B" and s > 1 and piece == (0,) * (s - 1) + (2,):
        return Case.B_TWICE_LAST
    if ambient_family == "C" and comp_family == "A":
        return Case.C_INSIDE_A
    return Case.OTHER


_LOCAL_FAILURES = (Case.B_TWICE_LAST, Case.C_INSIDE_A)


def classify_fundamental_pair(a: LeviSubalgebra, component: int, k: int) -> Reason:
    """Case of ``(a_component, omega_k)`` for the 0-based node ``k``."""
    rs = a.ambient
    pieces = a.split(a.project(rs.fundamental_weights[k]))
    comp = a.components[component]
    return Reason(component, k + 1, _case(rs.family, comp.family, pieces[component]),
                  render_tau(pieces[component]))


def classify_pair(a: LeviSubalgebra, lam) -> AdmissibilityVerdict:
    """Conjunction over components and over fundamentals present in ``lam``."""
    lam = _dominant_labels_of(a.ambient, lam)
    reasons = [classify_fundamental_pair(a, c, k)
               for k, m in enumerate(lam) if m
               for c in range(len(a.components))]
    globally = all(r.case in (Case.ZERO, Case.FUNDAMENTAL) for r in reasons)
    locally = not any(r.case in _LOCAL_FAILURES for r in reasons)
    return AdmissibilityVerdict(globally, locally, tuple(reasons))


class Surjectivity(enum.Enum):
    SURJECTIVE = "surjective"
    NOT_SURJECTIVE = "not-surjective"
    INCONCLUSIVE = "inconclusive"


def vector_partitions(target: Labels) -> Iterator[list[Labels]]:
    """Multiset partitions of a nonnegative integer vector into nonzero parts."""
    target = tuple(target)
    if not any(target):
        yield []
        return
    parts = sorted(p for p in itertools.product(*(range(t + 1) for t in target)) if any(p))

    def rec(rest: Labels, min_idx: int):
        if not any(rest):
            yield []
            return
        for idx in range(min_idx, len(parts)):
            p = parts[idx]
            if all(x <= r for x, r in zip(p, rest)):
                nxt = tuple(r - x for r, x in zip(rest, p))
                for tail in rec(nxt, idx):
                    yield [p] + tail

    yield from rec(target, 0)


def _has_lift(lam: Labels, images: list[Labels], nus: list[Labels]) -> bool:
    """Can the copies of omega_i (with nonzero image) be binned so bin l projects to nu_l?"""
    k = len(nus)
    items = [i for i, m in enumerate(lam) for _ in range(m) if any(images[i])]
    sums = [tuple(0 for _ in nus[0]) for _ in range(k)]

    def fits(v, target):
        return all(x <= t for x, t in zip(v, target))

    def rec(pos: int) -> bool:
        if pos == len(items):
            return all(s == n for s, n in zip(sums, nus))
        img = images[items[pos]]
        tried = set()
        for b in range(k):
            # identical remaining targets and sums give symmetric branches
            key = (sums[b], nus[b])
            if key in tried:
                continue
            tried.add(key)
            new = tuple(x + y for x, y in zip(sums[b], img))
            if fits(new, nus[b]):
                old = sums[b]
                sums[b] = new
                if rec(pos + 1):
                    return True
                sums[b] = old
        return False

    return rec(0)


def surjectivity_oracle(a: LeviSubalgebra, lam, bound: int = 6) -> Surjectivity:
    """Does every decomposition of ``pi(lam)`` lift to a decomposition of ``lam``?

    ``bound`` caps the total coordinate sum of ``pi(lam)`` (the maximal number
    of parts); beyond it the answer is ``INCONCLUSIVE``.
    """
    rs = a.ambient
    lam = _dominant_labels_of(rs, lam)
    target = a.project(rs.from_labels(lam))
    if sum(target) > bound:
        return Surjectivity.INCONCLUSIVE
    images = [a.project(w) for w in rs.fundamental_weights]
    for nus in vector_partitions(target):
        if nus and not _has_lift(lam, images, nus):
            return Surjectivity.NOT_SURJECTIVE
    return Surjectivity.SURJECTIVE
