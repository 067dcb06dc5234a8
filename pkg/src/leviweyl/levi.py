"""Levi subalgebras from closed symmetric root subsets, and the projection pi.

A Levi subalgebra here is the semisimple subalgebra generated by the root
spaces of a subset R' of roots with R' = -R' and closed under those sums that
are again roots.  Its simple roots are the indecomposable elements of
R' intersected with the positive roots.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import LeviValidationError, NonClassicalComponentError
from .rootsystem import (Labels, RootSystem, Weight, build_root_system, pairing,
                         product_root_system)
from .syntax import format_root


@dataclass(frozen=True)
class SimpleComponent:
    """One simple factor of a Levi, simple roots in its own Bourbaki order."""

    family: str
    rank: int
    simple_roots: tuple[Weight, ...]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def fundamental_weights(self) -> tuple[Labels, ...]:
        """tau_1..tau_s as coordinate vectors in the component's own basis."""
        s = self.rank
        return tuple(tuple(int(i == j) for j in range(s)) for i in range(s))

    @property
    def root_system(self) -> RootSystem:
        return product_root_system(((self.family, self.rank),))


@dataclass(frozen=True, eq=False)
class LeviSubalgebra:
    ambient: RootSystem
    components: tuple[SimpleComponent, ...]
    roots: frozenset = field(repr=False)

    @cached_property
    def simple_roots_flat(self) -> tuple[Weight, ...]:
        return tuple(b for c in self.components for b in c.simple_roots)

    @cached_property
    def positive_roots(self) -> frozenset:
        pos = set(self.ambient.positive_roots)
        return frozenset(r for r in self.roots if r in pos)

    @property
    def is_simple_root_generated(self) -> bool:
        simple = set(self.ambient.simple_roots)
        return all(b in simple for b in self.simple_roots_flat)

    @property
    def is_simple(self) -> bool:
        return len(self.components) == 1

    @property
    def rank(self) -> int:
        return len(self.simple_roots_flat)

    @cached_property
    def levi_system(self) -> RootSystem:
        """Abstract root system of the Levi: product of its component types."""
        return product_root_system(tuple((c.family, c.rank) for c in self.components))

    @property
    def type_name(self) -> str:
        return "+".join(c.name for c in self.components)

    @cached_property
    def name(self) -> str:
        """Canonical string: Pi_a in epsilon syntax, in ambient root order."""
        order = {r: i for i, r in enumerate(self.ambient.positive_roots)}
        return ",".join(format_root(b) for b in sorted(self.simple_roots_flat, key=order.__getitem__))

    @cached_property
    def simple_root_indices(self) -> tuple[int, ...]:
        """Ambient node indices of Pi_a, defined only when Pi_a is a subset of Pi."""
        idx = {r: i for i, r in enumerate(self.ambient.simple_roots)}
        return tuple(idx[b] for b in self.simple_roots_flat)

    def project(self, w: Weight) -> Labels:
        """``pi(w)`` in the concatenated tau-coordinates of the components."""
        out = []
        for b in self.simple_roots_flat:
            p = pairing(w, b)
            if not isinstance(p, int):
                raise LeviValidationError(f"weight {w.eps()} is not integral")
            out.append(p)
        return tuple(out)

    def split(self, labels: Sequence[int]) -> list[tuple[int, ...]]:
        """Cut concatenated tau-coordinates into per-component pieces."""
        out, k = [], 0
        for c in self.components:
            out.append(tuple(labels[k:k + c.rank]))
            k += c.rank
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, LeviSubalgebra) and other.ambient == self.ambient
                and other.roots == self.roots)

    def __hash__(self) -> int:
        return hash((self.ambient, self.roots))

    def __repr__(self) -> str:
        return f"LeviSubalgebra({self.ambient.name} > {self.type_name} [{self.name}])"


def root_closure(rs: RootSystem, generators: Iterable[Weight]) -> frozenset:
    """Smallest symmetric closed subset of roots containing ``generators``."""
    gens = list(generators)
    for g in gens:
        if not rs.is_root(g):
            raise LeviValidationError(f"{g.eps()} is not a root of {rs.name}")
    current = set(gens) | {-g for g in gens}
    while True:
        new = {a + b for a, b in itertools.combinations(current, 2)}
        new = {r for r in new if rs.is_root(r) and r not in current}
        if not new:
            return frozenset(current)
        current |= new


def _validate(rs: RootSystem, roots: frozenset) -> None:
    if not roots:
        raise LeviValidationError("root subset is empty")
    for r in roots:
        if not rs.is_root(r):
            raise LeviValidationError(f"{r.eps()} is not a root of {rs.name}")
        if -r not in roots:
            raise LeviValidationError(f"not symmetric: {format_root(r)} present but its negative is not")
    for a, b in itertools.combinations(roots, 2):
        s = a + b
        if rs.is_root(s) and s not in roots:
            raise LeviValidationError(
                f"not closed: {format_root(a)} + {format_root(b)} = {format_root(s)} is a root outside the subset")


def _indecomposables(positive: Sequence[Weight]) -> list[Weight]:
    sums = {a + b for a, b in itertools.combinations(positive, 2)}
    return [r for r in positive if r not in sums]


def _connected_components(roots: Sequence[Weight]) -> list[list[Weight]]:
    remaining = list(roots)
    comps = []
    while remaining:
        comp = [remaining.pop(0)]
        grew = True
        while grew:
            grew = False
            for r in list(remaining):
                if any(r.dot(c) != 0 for c in comp):
                    comp.append(r)
                    remaining.remove(r)
                    grew = True
        comps.append(comp)
    return comps


def _single_eps_form(w: Weight) -> int | None:
    """``1`` for +-eps_i, ``2`` for +-2eps_i, else None."""
    nz = [c for c in w.zero_sum_eps() if c]
    if len(nz) == 1 and abs(nz[0]) in (1, 2):
        return int(abs(nz[0]))
    return None


def _is_pm_pair(x: Weight, y: Weight) -> bool:
    """``{x, y} = {e_i - e_j, e_i + e_j}`` up to a common sign."""
    return _two_eps(x + y) and _two_eps(x - y)


def _two_eps(w: Weight) -> bool:
    nz = [c for c in w.zero_sum_eps() if c]
    return len(nz) == 1 and abs(nz[0]) == 2


def _walk(start: Weight, adj: dict, stop: set) -> list[Weight]:
    path, prev, cur = [start], None, start
    while True:
        nxt = [v for v in adj[cur] if v != prev and v not in stop]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def _eps_key(w: Weight):
    return w.zero_sum_eps()


def classify_component(simple_roots: Sequence[Weight]):
    """Cartan-type of a connected set of simple roots.

    Returns ``(family, rank, ordered_roots)`` where ``ordered_roots`` follows
    the Bourbaki numbering of that type: for B the short root is last, for C
    the long root is last, for D the two spin nodes (an ``e_i -+ e_j`` pair)
    are last.  Rank-1 components are reported as A1; an A3 chain whose two ends
    form an ``e_i -+ e_j`` pair is reported as D3.
    """
    roots = list(simple_roots)
    s = len(roots)
    if s == 0:
        raise NonClassicalComponentError("empty component")
    if s == 1:
        return "A", 1, tuple(roots)
    adj = {r: [q for q in roots if q != r and q.dot(r) != 0] for r in roots}
    if any(len(v) > 3 for v in adj.values()):
        raise NonClassicalComponentError("node of degree > 3")
    branch = [r for r in roots if len(adj[r]) == 3]
    norms = {r: r.dot(r) for r in roots}

    if branch:
        if len(branch) > 1:
            raise NonClassicalComponentError("more than one branch node")
        b = branch[0]
        nbrs = adj[b]
        leaves = [v for v in nbrs if len(adj[v]) == 1]
        spin = next(((x, y) for x, y in itertools.combinations(leaves, 2) if _is_pm_pair(x, y)), None)
        if spin is None:
            spin = tuple(sorted(leaves, key=_eps_key)[:2])
        tail_start = next(v for v in nbrs if v not in spin)
        tail = _walk(tail_start, adj, {b})
        spin = sorted(spin, key=_eps_key)
        ordered = list(reversed(tail)) + [b] + list(spin)
        family = "D"
    else:
        ends = [r for r in roots if len(adj[r]) <= 1]
        if len(ends) != 2:
            raise NonClassicalComponentError("component is not a chain")
        if len(set(norms.values())) == 1:
            if s == 3 and _is_pm_pair(ends[0], ends[1]):
                mid = next(r for r in roots if r not in ends)
                family, ordered = "D", [mid] + sorted(ends, key=_eps_key)
            else:
                start = max(ends, key=_eps_key)
                family, ordered = "A", _walk(start, adj, set())
        else:
            short = min(norms.values())
            long_ = max(norms.values())
            n_short = sum(1 for v in norms.values() if v == short)
            n_long = s - n_short
            forms = {r: _single_eps_form(r) for r in ends}
            last = None
            if s == 2:
                b_end = [r for r in ends if forms[r] == 1 and norms[r] == short]
                c_end = [r for r in ends if forms[r] == 2 and norms[r] == long_]
                if b_end:
                    family, last = "B", b_end[0]
                elif c_end:
                    family, last = "C", c_end[0]
            if last is None:
                if n_short == 1:
                    family = "B"
                    last = next(r for r in ends if norms[r] == short)
                elif n_long == 1:
                    family = "C"
                    last = next(r for r in ends if norms[r] == long_)
                else:
                    raise NonClassicalComponentError("double-bond chain with mixed lengths")
            ordered = list(reversed(_walk(last, adj, set())))
    std = build_root_system(family, s) if (family, s) != ("D", 2) else None
    if std is None or len(ordered) != s:
        raise NonClassicalComponentError(f"no classical type matches {s} roots")
    cartan = tuple(tuple(pairing(x, y) for y in ordered) for x in ordered)
    if cartan != std.cartan:
        raise NonClassicalComponentError(f"Cartan matrix {cartan} does not match {family}{s}")
    return family, s, tuple(ordered)


def levi_from_root_subset(rs: RootSystem, roots: Iterable[Weight]) -> LeviSubalgebra:
    """Validate a closed symmetric root subset and build its Levi subalgebra."""
    r_prime = frozenset(roots)
    _validate(rs, r_prime)
    order = {r: i for i, r in enumerate(rs.positive_roots)}
    positive = sorted((r for r in r_prime if r in order), key=order.__getitem__)
    simple = _indecomposables(positive)
    comps = []
    for comp in _connected_components(simple):
        family, s, ordered = classify_component(comp)
        comps.append(SimpleComponent(family, s, ordered))
    comps.sort(key=lambda c: min(order[b] for b in c.simple_roots))
    return LeviSubalgebra(rs, tuple(comps), r_prime)


def levi_from_generators(rs: RootSystem, generators: Iterable[Weight]) -> LeviSubalgebra:
    """Levi generated by the root spaces of ``+-generators`` (closure taken)."""
    return levi_from_root_subset(rs, root_closure(rs, generators))


def levi_from_simple_nodes(rs: RootSystem, nodes: Iterable[int]) -> LeviSubalgebra:
    """Levi with Pi_a = {alpha_i : i in nodes} (0-based)."""
    return levi_from_generators(rs, [rs.simple_roots[i] for i in nodes])


def _eps_root(rs: RootSystem, terms: dict[int, int]) -> Weight:
    eps = [0] * rs.ambient_dim
    for k, c in terms.items():
        eps[k] += c
    return rs.weight(eps)


def _pattern_candidates(rs: RootSystem):
    """Candidate Pi_a sets from the written classification patterns."""
    fam = rs.family
    n = rs.rank
    if fam == "A":
        for size in range(2, n + 2):
            for idx in itertools.combinations(range(n + 1), size):
                yield [_eps_root(rs, {a: 1, b: -1}) for a, b in zip(idx, idx[1:])]
        return
    # A-type strings, possibly through one e_i + e_j: signed index sets sorted
    # as +e_1 > ... > +e_n > -e_n > ... > -e_1, consecutive differences.
    for size in range(2, n + 1):
        for idx in itertools.combinations(range(n), size):
            for signs in itertools.product((1, -1), repeat=size):
                vecs = [(k, s) for k, s in zip(idx, signs)]
                vecs.sort(key=lambda t: (t[1] == -1, t[0] if t[1] == 1 else -t[0]))
                cand = []
                for (k, s), (l, t) in zip(vecs, vecs[1:]):
                    terms = {k: s}
                    terms[l] = terms.get(l, 0) - t
                    cand.append(_eps_root(rs, terms))
                yield cand
    for size in range(1, n + 1):
        for idx in itertools.combinations(range(n), size):
            chain = [_eps_root(rs, {a: 1, b: -1}) for a, b in zip(idx, idx[1:])]
            last = idx[-1]
            if fam == "B":
                yield chain + [_eps_root(rs, {last: 1})]
            elif fam == "C":
                yield chain + [_eps_root(rs, {last: 2})]
            if fam in ("B", "D") and size >= 3:
                yield chain + [_eps_root(rs, {idx[-2]: 1, last: 1})]


def enumerate_simple_levis(rs: RootSystem) -> list[LeviSubalgebra]:
    """Every simple Levi subalgebra of ``rs``, deduplicated by Pi_a."""
    seen = {}
    for cand in _pattern_candidates(rs):
        if not all(rs.is_root(c) for c in cand):
            continue
        try:
            levi = levi_from_generators(rs, cand)
        except (LeviValidationError, NonClassicalComponentError):
            continue
        if not levi.is_simple or set(levi.simple_roots_flat) != set(cand):
            continue
        seen.setdefault(frozenset(cand), levi)
    return sorted(seen.values(), key=lambda a: (a.rank, a.type_name, a.name))


def simple_root_generated_levis(rs: RootSystem, simple_only: bool = False) -> list[LeviSubalgebra]:
    """All Levis with Pi_a a nonempty subset of Pi (semisimple ones included)."""
    out = []
    for size in range(1, rs.rank + 1):
        for nodes in itertools.combinations(range(rs.rank), size):
            levi = levi_from_simple_nodes(rs, nodes)
            if simple_only and not levi.is_simple:
                continue
            out.append(levi)
    return out


def project_weight(a: LeviSubalgebra, lam: Weight) -> Labels:
    """``pi(lam)``: coordinate j is ``<lam, beta_j^vee>``."""
    return a.project(lam)


def project_current_weight(a: LeviSubalgebra, psi):
    """Pointwise projection of a current weight; points mapping to 0 are dropped."""
    from .weylmodule import CurrentWeight

    target = a.levi_system
    entries = {}
    for point, w in psi.entries.items():
        tau = a.project(w)
        if any(tau):
            entries[point] = target.from_labels(tau)
    return CurrentWeight(entries, target)
