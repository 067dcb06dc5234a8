import random

import pytest

from conftest import label_grid, weyl_dimension_eps
from leviweyl.characters import (Character, decompose, dim_irreducible, freudenthal_mass,
                                 irreducible_character, restrict_character, sum_of_irreducibles,
                                 tensor_character, tensor_power, trivial_character,
                                 branching_multiplicities)
from leviweyl.errors import DomainError, NotAModuleCharacterError
from leviweyl.levi import levi_from_generators, levi_from_simple_nodes
from leviweyl.rootsystem import build_root_system, reflect
from leviweyl.syntax import parse_roots


def labels_of(rs, d):
    return {rs.labels(w): m for w, m in d.items()}


def test_sl2_string():
    a1 = build_root_system("A", 1)
    assert irreducible_character(a1, (2,)).label_mults() == {(2,): 1, (0,): 1, (-2,): 1}


def test_trivial_weight(small_system):
    assert irreducible_character(small_system, (0,) * small_system.rank) == trivial_character(small_system)


def test_adjoint_of_a2():
    a2 = build_root_system("A", 2)
    c = irreducible_character(a2, (1, 1))
    assert c.mass == 8 and c[a2.zero] == 2


@pytest.mark.parametrize("family,n,lam,dim", [("A", 1, (3,), 4), ("B", 3, (0, 1, 0), 21),
                                              ("C", 2, (0, 1), 5), ("D", 4, (0, 1, 0, 0), 28),
                                              ("B", 4, (0, 0, 0, 1), 16)])
def test_dimension_examples(family, n, lam, dim):
    rs = build_root_system(family, n)
    assert dim_irreducible(rs, lam) == dim == freudenthal_mass(rs, lam)


def test_dimension_formula_matches_eps_oracle(small_system):
    rs = small_system
    for lam in label_grid(rs.rank, 2):
        assert dim_irreducible(rs, lam) == weyl_dimension_eps(rs, lam)


def test_character_is_weyl_invariant(small_system):
    rs = small_system
    lam = (1,) + (0,) * (rs.rank - 2) + (1,) if rs.rank > 1 else (2,)
    c = irreducible_character(rs, lam)
    for w, m in c.items():
        for i in range(rs.rank):
            assert c[reflect(rs, w, i)] == m


def test_non_dominant_rejected():
    a2 = build_root_system("A", 2)
    with pytest.raises(DomainError):
        irreducible_character(a2, (-1, 0))
    with pytest.raises(DomainError):
        dim_irreducible(a2, (1, -1))


def test_tensor_examples():
    a1 = build_root_system("A", 1)
    v2 = irreducible_character(a1, (2,))
    assert tensor_character(v2, trivial_character(a1)) == v2
    assert labels_of(a1, decompose(a1, tensor_character(v2, v2))) == {(4,): 1, (2,): 1, (0,): 1}
    a2 = build_root_system("A", 2)
    prod = tensor_character(irreducible_character(a2, (1, 0)), irreducible_character(a2, (0, 1)))
    assert labels_of(a2, decompose(a2, prod)) == {(1, 1): 1, (0, 0): 1}
    assert tensor_power(irreducible_character(a2, (1, 0)), 3).mass == 27


def test_tensor_ambient_mismatch():
    with pytest.raises(DomainError):
        tensor_character(trivial_character(build_root_system("A", 2)),
                         trivial_character(build_root_system("B", 2)))


def test_decompose_additivity_example():
    b3 = build_root_system("B", 3)
    c = irreducible_character(b3, (1, 0, 0)) + trivial_character(b3)
    assert labels_of(b3, decompose(b3, c)) == {(1, 0, 0): 1, (0, 0, 0): 1}


def test_decompose_rejects_non_module():
    a1 = build_root_system("A", 1)
    with pytest.raises(NotAModuleCharacterError):
        decompose(a1, Character.from_labels(a1, {(2,): 1, (0,): 1}))
    with pytest.raises(NotAModuleCharacterError):
        Character.from_labels(a1, {(0,): -1})


def test_decompose_roundtrip_random(small_system):
    rs = small_system
    rng = random.Random(rs.name)
    for _ in range(5):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            lam = tuple(rng.randint(0, 1) for _ in range(rs.rank))
            terms[lam] = terms.get(lam, 0) + rng.randint(1, 3)
        c = sum_of_irreducibles(rs, terms.items())
        assert labels_of(rs, decompose(rs, c)) == terms


def test_restriction_examples():
    a3 = build_root_system("A", 3)
    a = levi_from_generators(a3, parse_roots(a3, "e1-e2,e2-e4"))
    res = restrict_character(irreducible_character(a3, (1, 0, 0)), a)
    assert res.mass == 4 and res.label_mults()[(1, 0)] == 1
    assert restrict_character(trivial_character(a3), a) == trivial_character(a.levi_system)
    a2 = build_root_system("A", 2)
    b = levi_from_simple_nodes(a2, [0])
    assert labels_of(b.levi_system, branching_multiplicities(a2, (1, 0), b)) == {(1,): 1, (0,): 1}


def test_full_levi_branching_is_identity(small_system):
    rs = small_system
    full = levi_from_simple_nodes(rs, range(rs.rank))
    lam = (1,) * rs.rank
    got = labels_of(full.levi_system, branching_multiplicities(rs, lam, full))
    assert got == {lam: 1}


def test_restriction_preserves_mass(small_system):
    rs = small_system
    c = irreducible_character(rs, (1,) + (0,) * (rs.rank - 1))
    for i in range(rs.rank):
        assert restrict_character(c, levi_from_simple_nodes(rs, [i])).mass == c.mass
