"""Exact numerical checks of the embedding and admissibility results, with reports.

Every check returns a :class:`VerificationReport`; status is ``pass`` exactly
when the expected and computed values are equal.  No tolerances exist.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Iterator, Sequence

from .admissibility import Surjectivity, classify_pair, render_tau, surjectivity_oracle
from .characters import (_dominant_labels_of, decompose, restrict_character,
                         branching_multiplicities, tensor_character,
                         irreducible_character)
from .errors import PreconditionError
from .levi import LeviSubalgebra, enumerate_simple_levis, simple_root_generated_levis
from .rootsystem import Labels, RootSystem, build_root_system, in_nonneg_root_span
from .syntax import format_labels
from .weylmodule import local_weyl_character, local_weyl_dim

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class VerificationReport:
    check: str
    g: str
    levi: str
    lam: str
    expected: object
    computed: object
    status: str
    provenance: str
    reason: str | None = None

    def as_dict(self) -> dict:
        d = asdict(self)
        d["lambda"] = d.pop("lam")
        if d["reason"] is None:
            del d["reason"]
        return d

    @property
    def passed(self) -> bool:
        return self.status == PASS


def _report(check, rs, a, lam, expected, computed, provenance) -> VerificationReport:
    return VerificationReport(check, rs.name, a.name if a is not None else "",
                              format_labels(lam), _jsonable(expected), _jsonable(computed),
                              PASS if expected == computed else FAIL, provenance)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def report_schema() -> dict:
    """JSON schema of ``verify`` output."""
    return json.loads(resources.files("leviweyl").joinpath("report.schema.json").read_text())


def command_schema(name: str) -> dict:
    """JSON schema of one non-verify command's output, e.g. ``"weyl-char"``."""
    doc = json.loads(resources.files("leviweyl").joinpath("cli.schema.json").read_text())
    return {"$schema": doc["$schema"], "$defs": doc["$defs"], "$ref": f"#/$defs/{name}"}


# -- highest-weight component ------------------------------------------------

@lru_cache(maxsize=4096)
def _mass_by_support(rs: RootSystem, lam: Labels) -> dict[frozenset, int]:
    """Mass of ``char W(lam)`` grouped by the node support of ``lam - nu``."""
    out: dict[frozenset, int] = {}
    for nu, m in local_weyl_character(rs, lam).label_mults().items():
        diff = tuple(x - y for x, y in zip(lam, nu))
        coeffs = rs.simple_root_coords(diff)
        key = frozenset(i for i, c in enumerate(coeffs) if c)
        out[key] = out.get(key, 0) + m
    return out


def _require_simple_root_generated(a: LeviSubalgebra) -> None:
    if not a.is_simple_root_generated:
        raise PreconditionError(f"Levi {a.name} is not generated by simple roots of {a.ambient.name}")


def highest_component_dim(rs: RootSystem, a: LeviSubalgebra, lam) -> int:
    """Total multiplicity of weights ``nu`` of ``W(lam)`` with ``lam - nu`` in the span of Pi_a."""
    _require_simple_root_generated(a)
    lam = _dominant_labels_of(rs, lam)
    nodes = set(a.simple_root_indices)
    return sum(m for key, m in _mass_by_support(rs, lam).items() if key <= nodes)


def check_highest_component(rs: RootSystem, a: LeviSubalgebra, lam) -> VerificationReport:
    lam = _dominant_labels_of(rs, lam)
    computed = highest_component_dim(rs, a, lam)
    expected = local_weyl_dim(a, a.project(rs.from_labels(lam)))
    return _report("highest-component", rs, a, lam, expected, computed, "levi local Weyl dimension")


def check_quotient_bound(rs: RootSystem, a: LeviSubalgebra, lam) -> VerificationReport:
    """The count never exceeds the Levi local Weyl dimension."""
    lam = _dominant_labels_of(rs, lam)
    count = highest_component_dim(rs, a, lam)
    bound = local_weyl_dim(a, a.project(rs.from_labels(lam)))
    return _report("quotient-bound", rs, a, lam, True, count <= bound,
                   f"count {count} <= levi local Weyl dimension {bound}")


def check_global_rank(rs: RootSystem, a: LeviSubalgebra, lam) -> VerificationReport:
    lam = _dominant_labels_of(rs, lam)
    if not classify_pair(a, lam).globally:
        raise PreconditionError(f"({a.name}, {format_labels(lam)}) is not globally admissible")
    first = check_highest_component(rs, a, lam)
    n_sum = sum(a.project(rs.from_labels(lam)))
    computed = {"dimension": first.computed, "levi_variables_le_variables": n_sum <= sum(lam)}
    expected = {"dimension": first.expected, "levi_variables_le_variables": True}
    return _report("global-rank", rs, a, lam, expected, computed,
                   "levi local Weyl dimension and polynomial-variable counts")


def fundamental_multiset(lam: Labels) -> list[int]:
    return [i for i, m in enumerate(lam) for _ in range(m)]


def multiset_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """Set partitions of the positions, deduplicated as multisets of multisets."""
    seen = set()

    def rec(rest: list[int]):
        if not rest:
            yield []
            return
        first, others = rest[0], rest[1:]
        for r in range(len(others) + 1):
            for combo in itertools.combinations(range(len(others)), r):
                block = [first] + [others[i] for i in combo]
                left = [others[i] for i in range(len(others)) if i not in combo]
                for tail in rec(left):
                    yield [block] + tail

    for p in rec(list(items)):
        key = tuple(sorted(tuple(sorted(b)) for b in p))
        if key not in seen:
            seen.add(key)
            yield [list(b) for b in key]


def _labels_of_nodes(rank: int, nodes: Iterable[int]) -> Labels:
    out = [0] * rank
    for i in nodes:
        out[i] += 1
    return tuple(out)


def check_support_independence(rs: RootSystem, a: LeviSubalgebra, lam,
                               partition: Sequence[Sequence[int]]) -> VerificationReport:
    """Joint count for ``lam`` against the product of counts over the parts.

    ``partition`` lists 0-based fundamental nodes per part.
    """
    lam = _dominant_labels_of(rs, lam)
    if _labels_of_nodes(rs.rank, (i for part in partition for i in part)) != lam:
        raise PreconditionError("partition does not sum to the weight")
    joint = highest_component_dim(rs, a, lam)
    product = 1
    for part in partition:
        product *= highest_component_dim(rs, a, _labels_of_nodes(rs.rank, part))
    r = _report("support-independence", rs, a, lam, joint, product, "joint count")
    r.reason = "parts " + "|".join(format_labels(_labels_of_nodes(rs.rank, p)) for p in partition)
    return r


def check_simple_restriction(rs: RootSystem, a: LeviSubalgebra, lam) -> VerificationReport:
    """``V(pi(lam))`` occurs in ``V(lam)|a`` and the highest weight line is a-primitive.

    Primitive means no weight of ``V(lam)`` lies in ``lam`` plus a nonzero
    nonnegative combination of Pi_a, so the a-weight ``pi(lam)`` is maximal
    among the a-weights reachable from the highest weight vector.
    """
    lam = _dominant_labels_of(rs, lam)
    top = rs.from_labels(lam)
    tau = a.levi_system.from_labels(a.project(top))
    consts = branching_multiplicities(rs, lam, a)
    basis = a.simple_roots_flat
    above = []
    for nu in irreducible_character(rs, lam).label_mults():
        diff = tuple(x - y for x, y in zip(nu, lam))
        # Pi_a is made of positive roots, so anything above lam must be above it in Q+
        if any(diff) and all(c >= 0 for c in rs.simple_root_coords(diff)):
            if in_nonneg_root_span(rs.from_labels(nu) - top, basis):
                above.append(nu)
    computed = {"occurs": consts.get(tau, 0) >= 1, "maximal": not above}
    return _report("simple-restriction", rs, a, lam, {"occurs": True, "maximal": True}, computed,
                   "branching multiplicities")


def check_surjectivity(rs: RootSystem, a: LeviSubalgebra, lam, bound: int = 6) -> VerificationReport:
    lam = _dominant_labels_of(rs, lam)
    verdict = surjectivity_oracle(a, lam, bound)
    expected = classify_pair(a, lam).globally
    if verdict is Surjectivity.INCONCLUSIVE:
        return VerificationReport("surjectivity", rs.name, a.name, format_labels(lam), expected,
                                  None, SKIPPED, "global admissibility", "inconclusive: bound")
    return _report("surjectivity", rs, a, lam, expected, verdict is Surjectivity.SURJECTIVE,
                   "global admissibility")


def check_global_local(rs: RootSystem, a: LeviSubalgebra, lam) -> VerificationReport:
    """Globally admissible implies locally admissible."""
    lam = _dominant_labels_of(rs, lam)
    v = classify_pair(a, lam)
    return _report("global-local", rs, a, lam, True, (not v.globally) or v.locally,
                   "admissibility classifier")


# -- Levi-side decomposition identities ---------------------------------------

@dataclass(frozen=True)
class IdentityCase:
    identity: str
    g: RootSystem
    levi: LeviSubalgebra
    k: int
    projection: Labels
    expected: tuple[tuple[Labels, int], ...]

    @property
    def label(self) -> str:
        return f"{self.identity}:{self.g.name}:{self.levi.type_name}[{self.levi.name}]:w{self.k + 1}"


def _tau(s: int, *idx: int) -> Labels:
    """Sum of the 1-based tau indices; indices outside 1..s count as zero."""
    out = [0] * s
    for j in idx:
        if 1 <= j <= s:
            out[j - 1] += 1
    return tuple(out)


def _chain(s: int, start: int, step_end: int) -> list[Labels]:
    """``tau_start, tau_{start-2}, ...`` while the index stays >= step_end."""
    return [_tau(s, j) for j in range(start, step_end - 1, -2)]


def _expected_for(family: str, s: int, piece: Labels):
    """(identity, expected constituents) for a projected fundamental, or None."""
    nz = [(j + 1, c) for j, c in enumerate(piece) if c]
    if not nz:
        return None
    if family == "B" and len(nz) == 1 and nz[0][1] == 1 and nz[0][0] < s:
        ell = nz[0][0]
        return "b-chain", _chain(s, ell, 0 if ell % 2 == 0 else 1)
    if family == "D":
        if piece == _tau(s, s - 1, s):
            return "d-spin-pair", [piece] + _chain(s, s - 3, 0)
        if piece == _tau(s, s, s):
            return "d-spin-square", [piece] + _chain(s, s - 2, 0)
        if len(nz) == 1 and nz[0][1] == 1:
            ell = nz[0][0]
            if ell >= s - 1:
                return "d-chain", [piece]
            return "d-chain", _chain(s, ell, 0 if ell % 2 == 0 else 1)
    if family == "A" and sum(piece) == 2:
        p, q = (nz[0][0], nz[0][0]) if len(nz) == 1 else (nz[0][0], nz[1][0])
        terms = [_tau(s, p - m, q + m) for m in range(0, min(p, s + 1 - q) + 1)]
        return "a-pieri", terms
    return None


def identity_cases(systems: Iterable[RootSystem], max_levi_rank: int = 4) -> list[IdentityCase]:
    """All (g, simple Levi, omega_k) instances covered by a decomposition identity."""
    out = []
    for rs in systems:
        for a in enumerate_simple_levis(rs):
            if a.rank > max_levi_rank:
                continue
            comp = a.components[0]
            for k, w in enumerate(rs.fundamental_weights):
                piece = a.project(w)
                found = _expected_for(comp.family, comp.rank, piece)
                if found is None:
                    continue
                identity, terms = found
                counts: dict[Labels, int] = {}
                for t in terms:
                    counts[t] = counts.get(t, 0) + 1
                out.append(IdentityCase(identity, rs, a, k, piece, tuple(sorted(counts.items()))))
    out.sort(key=lambda c: (c.identity, c.g.name, c.levi.rank, c.levi.name, c.k))
    return out


def check_levi_identity(case: IdentityCase) -> VerificationReport:
    """Decomposition of the Levi local Weyl character against the listed constituents.

    Also checks that the mass equals the Levi local Weyl dimension and that
    every listed constituent occurs in ``char W(omega_k)`` restricted to the Levi
    with at least the listed multiplicity.
    """
    a, rs = case.levi, case.g
    sys_a = a.levi_system
    char_a = local_weyl_character(a, case.projection)
    got = {sys_a.labels(w): m for w, m in decompose(sys_a, char_a).items()}
    want = dict(case.expected)
    fund = tuple(int(i == case.k) for i in range(rs.rank))
    restricted = decompose(sys_a, restrict_character(local_weyl_character(rs, fund), a))
    restricted = {sys_a.labels(w): m for w, m in restricted.items()}
    contained = all(restricted.get(t, 0) >= m for t, m in want.items())
    computed = {"constituents": _render_consts(got), "mass": char_a.mass, "contained": contained}
    expected = {"constituents": _render_consts(want),
                "mass": local_weyl_dim(a, case.projection), "contained": True}
    return VerificationReport(case.identity, rs.name, a.name, format_labels(fund), expected, computed,
                              PASS if expected == computed else FAIL,
                              f"{a.type_name} at {render_tau(case.projection)}")


def tensor_identity_cases(max_rank: int = 4) -> list[tuple[str, str, int, int, int]]:
    """``(identity, family, s, p, q)``: products ``V(tau_p) x V(tau_q)`` with a closed form."""
    out = []
    for s in range(3, max_rank + 1):
        out.append(("d-spin-pair", "D", s, s - 1, s))
        out.append(("d-spin-square", "D", s, s, s))
    for s in range(1, max_rank + 1):
        for p in range(1, s + 1):
            for q in range(p, s + 1):
                out.append(("a-pieri", "A", s, p, q))
    return out


def check_tensor_identity(identity: str, family: str, s: int, p: int, q: int) -> VerificationReport:
    """Decompose ``V(tau_p) x V(tau_q)`` and compare with the closed-form constituent list."""
    rs = build_root_system(family, s)
    piece = _tau(s, p, q)
    found = _expected_for(family, s, piece)
    if found is None or found[0] != identity:
        raise PreconditionError(f"no {identity} identity for {family}{s} at {render_tau(piece)}")
    want: dict[Labels, int] = {}
    for t in found[1]:
        want[t] = want.get(t, 0) + 1
    prod = tensor_character(irreducible_character(rs, _tau(s, p)), irreducible_character(rs, _tau(s, q)))
    got = {rs.labels(w): m for w, m in decompose(rs, prod).items()}
    return VerificationReport(identity, rs.name, rs.name, format_labels(piece), _render_consts(want),
                              _render_consts(got), PASS if want == got else FAIL,
                              f"V(t{p}) x V(t{q})")


def _render_consts(d: dict[Labels, int]) -> dict[str, int]:
    return {render_tau(t): m for t, m in sorted(d.items())}


# -- sweeps -------------------------------------------------------------------

def weight_grid(rank: int, max_sum: int) -> list[Labels]:
    """Nonzero dominant label vectors with coordinate sum at most ``max_sum``."""
    out = [m for m in itertools.product(range(max_sum + 1), repeat=rank) if 0 < sum(m) <= max_sum]
    out.sort(key=lambda m: (sum(m), tuple(-x for x in m)))
    return out


DEFAULT_SYSTEMS = (("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
                   ("C", 2), ("C", 3), ("C", 4), ("D", 3), ("D", 4))

CHECKS = ("highest-component", "global-rank", "support", "quotient", "levi-identities", "surjectivity",
          "global-local", "simple-restriction")


@dataclass
class SweepConfig:
    systems: tuple[tuple[str, int], ...] = DEFAULT_SYSTEMS
    max_sum: int = 3
    checks: tuple[str, ...] = CHECKS
    admissibility_max_sum: int = 2
    surjectivity_bound: int = 6
    include_conjectural: bool = True

    def root_systems(self) -> list[RootSystem]:
        return [build_root_system(f, n) for f, n in self.systems]


def _skip(check: str, rs: RootSystem, a: LeviSubalgebra, lam: Labels, reason: str) -> VerificationReport:
    return VerificationReport(check, rs.name, a.name, format_labels(lam), None, None, SKIPPED,
                              "", reason)


def sweep(config: SweepConfig) -> list[VerificationReport]:
    """Run the configured checks over the grid; failures are recorded, never raised."""
    reports: list[VerificationReport] = []
    checks = set(config.checks)
    for rs in config.root_systems():
        grid = weight_grid(rs.rank, config.max_sum)
        if checks & {"highest-component", "global-rank", "support", "quotient"}:
            for a in simple_root_generated_levis(rs):
                for lam in grid:
                    if "highest-component" in checks:
                        reports.append(check_highest_component(rs, a, lam))
                    if "global-rank" in checks:
                        reports.append(check_global_rank(rs, a, lam))
                    if "quotient" in checks:
                        reports.append(check_quotient_bound(rs, a, lam))
                    if "support" in checks:
                        for part in multiset_partitions(fundamental_multiset(lam)):
                            if len(part) > 1:
                                reports.append(check_support_independence(rs, a, lam, part))
            if config.include_conjectural and "highest-component" in checks:
                for a in enumerate_simple_levis(rs):
                    if not a.is_simple_root_generated:
                        for lam in grid:
                            reports.append(_skip("highest-component", rs, a, lam, "conjectural"))
        adm = {"surjectivity", "global-local", "simple-restriction"} & checks
        if adm:
            for a in enumerate_simple_levis(rs):
                for lam in weight_grid(rs.rank, config.admissibility_max_sum):
                    if "surjectivity" in checks:
                        reports.append(check_surjectivity(rs, a, lam, config.surjectivity_bound))
                    if "global-local" in checks:
                        reports.append(check_global_local(rs, a, lam))
                    if "simple-restriction" in checks:
                        reports.append(check_simple_restriction(rs, a, lam))
    if "levi-identities" in checks:
        systems = [rs for rs in config.root_systems() if rs.family in ("B", "D")]
        reports.extend(check_levi_identity(c) for c in identity_cases(systems))
        top = max((n for _, n in config.systems), default=0)
        reports.extend(check_tensor_identity(*c) for c in tensor_identity_cases(top))
    return reports


def summarize(reports: Sequence[VerificationReport]) -> dict[str, int]:
    out = {PASS: 0, FAIL: 0, SKIPPED: 0}
    for r in reports:
        out[r.status] += 1
    return out
