"""Independent oracles shared by the test modules.

Nothing here calls the enumeration, chain, or dimension code under test.
"""

import itertools
from fractions import Fraction

import pytest

from leviweyl.errors import LeviValidationError, NonClassicalComponentError
from leviweyl.levi import levi_from_root_subset
from leviweyl.rootsystem import build_root_system

SMALL = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
         ("C", 2), ("C", 3), ("C", 4), ("D", 3), ("D", 4)]


def brute_force_simple_levis(rs):
    """Pi_a sets of every simple Levi, by trying all subsets of positive roots."""
    pos = rs.positive_roots
    out = set()
    for mask in range(1, 1 << len(pos)):
        chosen = [pos[i] for i in range(len(pos)) if mask >> i & 1]
        subset = frozenset(chosen) | frozenset(-r for r in chosen)
        try:
            a = levi_from_root_subset(rs, subset)
        except (LeviValidationError, NonClassicalComponentError):
            continue
        if a.is_simple:
            out.add(frozenset(a.simple_roots_flat))
    return out


def weyl_dimension_eps(rs, labels):
    """Weyl dimension formula evaluated with plain Euclidean dot products on eps vectors.

    Independent of the label engine: uses only positive roots and fundamental
    weights as rational epsilon vectors, with type-A vectors projected to the
    sum-zero hyperplane.
    """
    def vec(w):
        return [Fraction(c) for c in w.zero_sum_eps()]

    def dot(x, y):
        return sum(a * b for a, b in zip(x, y))

    lam = [Fraction(0)] * rs.ambient_dim
    rho = [Fraction(0)] * rs.ambient_dim
    for m, w in zip(labels, rs.fundamental_weights):
        v = vec(w)
        lam = [a + m * b for a, b in zip(lam, v)]
        rho = [a + b for a, b in zip(rho, v)]
    out = Fraction(1)
    for alpha in rs.positive_roots:
        a = vec(alpha)
        out *= dot([x + y for x, y in zip(lam, rho)], a) / dot(rho, a)
    assert out.denominator == 1
    return int(out)


def prop_chain(family, n, i):
    """1-based fundamental indices (0 for the trivial weight) in W(psi_i)."""
    if (family == "B" and i < n) or (family == "D" and i < n - 1):
        return list(range(i, 0, -2)) + ([0] if i % 2 == 0 else [])
    return [i]


def unit(rank, i):
    """Label vector of omega_i (1-based); i = 0 is the zero weight."""
    return tuple(int(j == i - 1) for j in range(rank))


@pytest.fixture(params=SMALL, ids=lambda p: f"{p[0]}{p[1]}")
def small_system(request):
    return build_root_system(*request.param)


def label_grid(rank, max_coord):
    return list(itertools.product(range(max_coord + 1), repeat=rank))
