"""Diagram construction, face tracing, components, canonical forms."""

import random

import pytest

from aalt import catalog
from aalt.diagram import (
    build_diagram,
    canonical_diagram,
    canonical_key,
    crossing_change,
    disjoint_union,
    faces,
    is_isomorphic,
    link_components,
    mirror,
    shadow_components,
)
from aalt.errors import ArcCountError, NonPlanarError, UnknownCrossingError
from aalt.generate import random_diagram


def test_trefoil_build_and_faces():
    d = catalog.trefoil()
    assert d.n_crossings == 3
    assert link_components(d) == 1
    fs = faces(d)
    assert len(fs) == 5
    assert sorted(f.degree for f in fs) == [2, 2, 2, 3, 3]


def test_zero_crossing_unknot():
    d = build_diagram([], 1)
    assert [f.degree for f in faces(d)] == [0, 0]
    assert shadow_components(d) == 1
    assert link_components(d) == 1


def test_kink_faces():
    d = catalog.kink()
    assert sorted(f.degree for f in faces(d)) == [1, 1, 2]


def test_hopf_faces():
    assert sorted(f.degree for f in faces(catalog.hopf())) == [2, 2, 2, 2]


def test_arc_count_validation():
    with pytest.raises(ArcCountError):
        build_diagram([[1, 4, 2, 3], [1, 4, 2, 5]])
    with pytest.raises(ArcCountError):
        build_diagram([[1, 1, 1, 2]])
    with pytest.raises(ArcCountError):
        build_diagram([[1, 1, 2]])
    with pytest.raises(ArcCountError):
        build_diagram([], -1)


def test_nonplanar_rotation_rejected():
    # a single crossing with interleaved loops embeds only in the torus
    with pytest.raises(NonPlanarError):
        build_diagram([[1, 2, 1, 2]])


def test_crossing_change_involution_and_shadow():
    d = catalog.trefoil()
    once = crossing_change(d, 1)
    assert once.slot_table() == d.slot_table()
    assert crossing_change(once, 1) == d
    with pytest.raises(UnknownCrossingError):
        crossing_change(d, 7)


def test_components_counts():
    assert (shadow_components(catalog.trefoil()), link_components(catalog.trefoil())) == (1, 1)
    assert (shadow_components(catalog.hopf()), link_components(catalog.hopf())) == (1, 2)
    two = build_diagram([], 2)
    assert (shadow_components(two), link_components(two)) == (2, 2)


def test_corner_partition_sums_to_4v():
    rng = random.Random(3)
    for _ in range(25):
        d = random_diagram(rng.randrange(1, 9), rng)
        fs = faces(d)
        corners = [c for f in fs for c in f.corners]
        assert len(corners) == 4 * d.n_crossings
        assert len(set(corners)) == len(corners)


def test_canonical_form_is_isomorphism_invariant():
    rng = random.Random(5)
    for _ in range(20):
        d = random_diagram(rng.randrange(1, 8), rng)
        canon = canonical_diagram(d)
        assert is_isomorphic(canon, d)
        assert canonical_key(canon) == canonical_key(d)


def test_relabeling_invariance():
    d1 = build_diagram([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]])
    d2 = build_diagram([[10, 40, 20, 50], [30, 60, 40, 10], [50, 20, 60, 30]])
    assert canonical_key(d1) == canonical_key(d2)


def test_mirror_involution_and_alternation():
    from aalt.classify import is_alternating

    d = catalog.trefoil()
    assert mirror(mirror(d)) == d
    assert is_alternating(mirror(d))
    assert canonical_key(mirror(d)) != canonical_key(d)


def test_disjoint_union_counts():
    d = disjoint_union(catalog.trefoil(), catalog.hopf())
    assert d.n_crossings == 5
    assert shadow_components(d) == 2
    assert link_components(d) == 3
