import itertools

import pytest

from conftest import brute_force_simple_levis
from leviweyl.errors import LeviValidationError, NonClassicalComponentError
from leviweyl.levi import (classify_component, enumerate_simple_levis, levi_from_generators,
                           levi_from_root_subset, levi_from_simple_nodes, project_current_weight,
                           project_weight, root_closure, simple_root_generated_levis)
from leviweyl.rootsystem import build_root_system, is_dominant, pairing
from leviweyl.syntax import format_root, parse_root, parse_roots
from leviweyl.weylmodule import current_weight, wt


def roots(rs, text):
    return parse_roots(rs, text)


def test_a3_example_is_sl3():
    a3 = build_root_system("A", 3)
    r = roots(a3, "e1-e2,e2-e4,e1-e4")
    a = levi_from_root_subset(a3, set(r) | {-x for x in r})
    assert a.type_name == "A2"
    assert set(a.simple_roots_flat) == set(roots(a3, "e1-e2,e2-e4"))
    assert not a.is_simple_root_generated


def test_single_root_is_a1(small_system):
    rs = small_system
    a = levi_from_root_subset(rs, {rs.simple_roots[0], -rs.simple_roots[0]})
    assert a.type_name == "A1"


def test_b3_closure_gives_b2():
    b3 = build_root_system("B", 3)
    a = levi_from_generators(b3, roots(b3, "e1-e2,e2"))
    assert a.type_name == "B2"
    assert a.components[0].simple_roots[-1] == parse_root(b3, "e2")
    assert len(a.roots) == 8


@pytest.mark.parametrize("g,text,family,rank", [
    ("A3", "e1-e2,e2-e3", "A", 2),
    ("B3", "e1-e2,e2", "B", 2),
    ("B3", "e1-e2,e2+e3,e2-e3", "D", 3),
    ("C3", "e2-e3,2e3", "C", 2),
    ("D4", "e1-e2,e2-e3,e3-e4,e3+e4", "D", 4),
])
def test_classify_component_examples(g, text, family, rank):
    rs = build_root_system(g[0], int(g[1:]))
    fam, s, ordered = classify_component(roots(rs, text))
    assert (fam, s) == (family, rank)
    std = build_root_system(fam, s)
    assert tuple(tuple(pairing(x, y) for y in ordered) for x in ordered) == std.cartan


def test_classify_rejects_disconnected_diagram_as_chain():
    a3 = build_root_system("A", 3)
    with pytest.raises(NonClassicalComponentError):
        classify_component(roots(a3, "e1-e2,e3-e4"))


def test_validation_errors():
    b3 = build_root_system("B", 3)
    e12, e2 = roots(b3, "e1-e2,e2")
    with pytest.raises(LeviValidationError, match="not closed"):
        levi_from_root_subset(b3, {e12, -e12, e2, -e2})
    with pytest.raises(LeviValidationError, match="not symmetric"):
        levi_from_root_subset(b3, {e12})
    with pytest.raises(LeviValidationError):
        levi_from_root_subset(b3, set())


@pytest.mark.parametrize("name", ["A2", "B2", "C2", "A3", "B3", "C3", "D4"])
def test_enumeration_matches_brute_force(name):
    rs = build_root_system(name[0], int(name[1:]))
    assert {frozenset(a.simple_roots_flat) for a in enumerate_simple_levis(rs)} == brute_force_simple_levis(rs)


def test_a2_has_four_simple_levis():
    assert len(enumerate_simple_levis(build_root_system("A", 2))) == 4


def test_enumeration_is_deterministic_and_unique():
    rs = build_root_system("B", 4)
    first = [a.name for a in enumerate_simple_levis(rs)]
    assert first == [a.name for a in enumerate_simple_levis(rs)]
    assert len(first) == len(set(first))


@pytest.mark.parametrize("name", ["B2", "B3", "B4", "D4", "D5"])
def test_pattern_shapes(name):
    rs = build_root_system(name[0], int(name[1:]))
    for a in enumerate_simple_levis(rs):
        comp = a.components[0]
        if comp.family == "B":
            last = comp.simple_roots[-1].eps()
            assert sorted(abs(c) for c in last)[-1] == 1 and sum(1 for c in last if c) == 1
        if comp.family == "D":
            x, y = comp.simple_roots[-2:]
            s, d = x + y, y - x
            assert sum(1 for c in s.eps() if c) == 1 and sum(1 for c in d.eps() if c) == 1


def test_projection_examples():
    b3 = build_root_system("B", 3)
    b2 = levi_from_generators(b3, roots(b3, "e1-e2,e2"))
    d3 = levi_from_generators(b3, roots(b3, "e1-e2,e2-e3,e2+e3"))
    w1, w2, _ = b3.fundamental_weights
    assert project_weight(b2, b3.zero) == (0, 0)
    assert project_weight(b2, w2) == (0, 2)
    assert project_weight(d3, w2) == (0, 1, 1)
    psi = current_weight(b3, {"p": (1, 0, 0), "q": (0, 1, 0)})
    image = project_current_weight(b2, psi)
    assert {p: image.ambient.labels(w) for p, w in image.entries.items()} == {"p": (1, 0), "q": (0, 2)}


def test_projection_drops_zero_points():
    b3 = build_root_system("B", 3)
    a = levi_from_simple_nodes(b3, [2])
    psi = current_weight(b3, {"p": (1, 0, 0), "q": (0, 0, 1)})
    image = project_current_weight(a, psi)
    assert set(image.entries) == {"q"}
    assert image.ambient.labels(wt(image)) == project_weight(a, wt(psi))


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "B4", "C4", "A4"])
def test_projection_preserves_dominance(name):
    rs = build_root_system(name[0], int(name[1:]))
    for a in enumerate_simple_levis(rs):
        for w in rs.fundamental_weights:
            assert is_dominant(a.levi_system, a.levi_system.from_labels(project_weight(a, w)))


def test_simple_root_generated_projects_to_fundamentals(small_system):
    rs = small_system
    for a in simple_root_generated_levis(rs):
        for w in rs.fundamental_weights:
            assert sum(project_weight(a, w)) <= 1


def test_semisimple_levi_components():
    b4 = build_root_system("B", 4)
    a = levi_from_generators(b4, roots(b4, "e1-e2,e3-e4,e4"))
    assert a.type_name == "A1+B2"
    assert a.levi_system.name == "A1+B2"
    assert len(a.split(project_weight(a, b4.fundamental_weights[2]))) == 2


def test_root_closure_examples():
    a3 = build_root_system("A", 3)
    assert len(root_closure(a3, roots(a3, "e1-e2,e2-e3"))) == 6
    assert all(format_root(r) for r in root_closure(a3, roots(a3, "e1-e2")))


def test_levi_name_reparses(small_system):
    rs = small_system
    for a in enumerate_simple_levis(rs):
        assert levi_from_generators(rs, parse_roots(rs, a.name)) == a


def test_simple_root_generated_count(small_system):
    rs = small_system
    assert len(simple_root_generated_levis(rs)) == 2 ** rs.rank - 1
    assert all(a.is_simple_root_generated for a in simple_root_generated_levis(rs))
    for combo in itertools.combinations(range(rs.rank), 1):
        assert levi_from_simple_nodes(rs, combo).rank == 1
