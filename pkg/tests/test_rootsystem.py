import itertools
from fractions import Fraction

import pytest

from leviweyl.errors import ConstructionError, DomainError
from leviweyl.rootsystem import (RootSystem, Weight, build_root_system, in_nonneg_root_span,
                                 is_dominant, pairing, parse_system_name, product_root_system,
                                 reflect, weyl_orbit)


def expected_positive(family, n):
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}[family]


def eps_roots(family, n):
    """The positive roots written out from their epsilon description."""
    dim = n + 1 if family == "A" else n
    out = []
    for i, j in itertools.combinations(range(dim), 2):
        v = [0] * dim
        v[i], v[j] = 1, -1
        out.append(v)
        if family != "A":
            w = [0] * dim
            w[i] = w[j] = 1
            out.append(w)
    if family in ("B", "C"):
        for i in range(n):
            v = [0] * dim
            v[i] = 1 if family == "B" else 2
            out.append(v)
    return out


@pytest.mark.parametrize("family,n", [(f, n) for f in "ABCD" for n in range(1, 6)
                                      if n >= {"A": 1, "B": 2, "C": 2, "D": 3}[f]])
def test_positive_roots_match_eps_description(family, n):
    rs = build_root_system(family, n)
    assert len(rs.positive_roots) == expected_positive(family, n)
    assert set(rs.positive_roots) == {rs.weight(v) for v in eps_roots(family, n)}


def test_examples_positive_counts():
    assert len(build_root_system("A", 2).positive_roots) == 3
    b3 = build_root_system("B", 3).positive_roots
    assert len(b3) == 9
    assert sum(1 for r in b3 if sum(1 for c in r.eps() if c) == 1) == 3
    assert len(build_root_system("D", 3).positive_roots) == 6


def test_fundamental_weights_dual_to_coroots(small_system):
    rs = small_system
    for i, w in enumerate(rs.fundamental_weights):
        assert [pairing(w, a) for a in rs.simple_roots] == [int(i == j) for j in range(rs.rank)]


def test_rho_is_half_sum_of_positive_roots(small_system):
    rs = small_system
    total = rs.zero
    for a in rs.positive_roots:
        total = total + a
    assert rs.rho * 2 == total


def test_positive_roots_nonnegative_in_simple_roots(small_system):
    for coeffs in small_system.positive_root_coeffs:
        assert all(c >= 0 for c in coeffs) and any(coeffs)


def test_root_set_closed_under_simple_reflections(small_system):
    rs = small_system
    for r in rs.roots:
        for i in range(rs.rank):
            assert rs.is_root(reflect(rs, r, i))


def test_weyl_group_order_is_regular_orbit(small_system):
    rs = small_system
    assert len(weyl_orbit(rs, rs.rho)) == rs.weyl_group_order


@pytest.mark.parametrize("family,n", [("X", 2), ("A", 0), ("B", 1), ("C", 1), ("D", 2)])
def test_invalid_family_or_rank(family, n):
    with pytest.raises(ConstructionError):
        build_root_system(family, n)


def test_parse_system_name():
    assert parse_system_name("b3") == build_root_system("B", 3)
    with pytest.raises(ConstructionError):
        parse_system_name("E8")


def test_pairing_examples():
    b2 = build_root_system("B", 2)
    assert pairing(b2.fundamental_weights[0], b2.simple_roots[0]) == 1
    b3 = build_root_system("B", 3)
    assert pairing(b3.zero, b3.simple_roots[1]) == 0
    assert pairing(b3.fundamental_weights[1], b3.weight([0, 1, 0])) == 2
    with pytest.raises(DomainError):
        pairing(b3.fundamental_weights[0], b3.zero)


def test_is_dominant_examples():
    a2 = build_root_system("A", 2)
    w1, w2 = a2.fundamental_weights
    assert is_dominant(a2, w1 + w2)
    assert not is_dominant(a2, -w1)
    b3 = build_root_system("B", 3)
    # e1 - e3 pairs to -1 with alpha_3 = e3
    assert not is_dominant(b3, b3.weight([1, 0, -1]))


def test_orbit_examples():
    a1 = build_root_system("A", 1)
    assert len(weyl_orbit(a1, a1.fundamental_weights[0])) == 2
    b3 = build_root_system("B", 3)
    assert weyl_orbit(b3, b3.zero) == {b3.zero}
    orbit = weyl_orbit(b3, b3.fundamental_weights[0])
    assert len(orbit) == 6
    assert {tuple(w.eps()) for w in orbit} == {tuple(s * int(i == j) for j in range(3))
                                               for i in range(3) for s in (1, -1)}


def test_label_orbit_agrees_with_weight_orbit(small_system):
    rs = small_system
    lam = tuple(range(1, rs.rank + 1))
    assert {rs.labels(w) for w in weyl_orbit(rs, rs.from_labels(lam))} == rs.orbit_labels(lam)
    assert rs.orbit_size(lam) == len(rs.orbit_labels(lam))


def test_nonneg_root_span_examples():
    a2 = build_root_system("A", 2)
    a1, a2r = a2.simple_roots
    assert in_nonneg_root_span(a2.zero, [a1])
    assert in_nonneg_root_span(a1 + a2r, [a1, a2r])
    assert not in_nonneg_root_span(-a1, [a1, a2r])
    b3 = build_root_system("B", 3)
    assert not in_nonneg_root_span(b3.simple_roots[0], b3.simple_roots[1:])
    with pytest.raises(DomainError):
        in_nonneg_root_span(a1, [a1, a1])


def test_type_a_canonical_representative():
    a2 = build_root_system("A", 2)
    w = a2.weight([1, 1, 1])
    assert w == a2.zero
    x = a2.weight([0, -1, 2])
    assert min(x.coords) == 0
    assert x.zero_sum_eps() == (Fraction(-1, 3), Fraction(-4, 3), Fraction(5, 3))


def test_labels_roundtrip(small_system):
    rs = small_system
    for lab in itertools.product(range(-1, 2), repeat=rs.rank):
        assert rs.labels(rs.from_labels(lab)) == lab


def test_product_system_blocks():
    p = product_root_system((("A", 2), ("B", 2)))
    assert p.name == "A2+B2" and p.family is None
    assert p.rank == 4 and len(p.positive_roots) == 3 + 4
    assert p.cartan[1][2] == 0 and p.cartan[2][1] == 0


def test_weight_arithmetic_exact():
    b3 = build_root_system("B", 3)
    w = b3.fundamental_weights[2]
    assert w.eps() == (Fraction(1, 2),) * 3
    assert (w * 2 - w) == w
    assert isinstance(RootSystem, type)
    assert Weight.from_eps([Fraction(1, 2)] * 3) == w
