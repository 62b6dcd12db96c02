"""Reidemeister primitives: bracket behavior and structural soundness."""

import random

import pytest

from aalt import catalog, maps
from aalt.bracket import LaurentPolynomial, kauffman_bracket
from aalt.diagram import (
    crossing_change,
    faces,
    is_isomorphic,
    link_components,
    pairing,
)
from aalt.errors import NoMatchError
from aalt.generate import random_diagram
from aalt.moves import (
    bigon_faces,
    bigon_is_cancellable,
    kink_corners,
    r1_add,
    r1_remove,
    r2_add,
    r2_remove,
    r3,
    r3_slidable,
    trigon_faces,
)

RI_FACTORS = (
    LaurentPolynomial.from_dict({3: -1}),
    LaurentPolynomial.from_dict({-3: -1}),
)


def test_r1_round_trip_and_factor():
    d = catalog.trefoil()
    b0 = kauffman_bracket(d)
    for side in (0, 1):
        for axis in (0, 1):
            kinked = r1_add(d, 1, side, axis)
            assert kinked.n_crossings == 4
            b1 = kauffman_bracket(kinked)
            assert any(b1 == f * b0 for f in RI_FACTORS)
            back = r1_remove(kinked, kink_corners(kinked)[0][0])
            assert is_isomorphic(back, d)


def test_r1_remove_kink_gives_circle():
    out = r1_remove(catalog.kink(), 0)
    assert out.n_crossings == 0 and out.circles == 1
    with pytest.raises(NoMatchError):
        r1_remove(catalog.trefoil(), 0)


def test_r2_poke_everywhere_preserves_bracket():
    d = catalog.trefoil()
    b0 = kauffman_bracket(d)
    alpha = pairing(d)
    for orbit in maps.face_orbits(alpha, d.n_crossings):
        for q1 in orbit:
            for q2 in orbit:
                a1 = d.crossings[q1 >> 2].slots[q1 & 3]
                a2 = d.crossings[q2 >> 2].slots[q2 & 3]
                if a1 == a2:
                    continue
                for over in (True, False):
                    poked = r2_add(d, q1, q2, over)
                    assert poked.n_crossings == 5
                    assert kauffman_bracket(poked) == b0
                    pullable = [
                        f for f in bigon_faces(poked) if bigon_is_cancellable(poked, f)
                    ]
                    assert pullable
                    back = r2_remove(poked, pullable[0])
                    assert kauffman_bracket(back) == b0


def test_r2_remove_rejects_clasp():
    # both bigons of the alternating Hopf diagram are clasped
    d = catalog.hopf()
    for f in bigon_faces(d):
        assert not bigon_is_cancellable(d, f)
        with pytest.raises(NoMatchError):
            r2_remove(d, f)


def test_changed_hopf_pulls_apart():
    d = catalog.changed_hopf()
    f = next(f for f in bigon_faces(d) if bigon_is_cancellable(d, f))
    out = r2_remove(d, f)
    assert out.n_crossings == 0 and out.circles == 2


def test_r3_on_alternating_trigons_never_slidable():
    for ctor in (catalog.trefoil, catalog.figure_eight, catalog.borromean):
        d = ctor()
        for f in trigon_faces(d):
            for pivot in range(3):
                assert not r3_slidable(d, f, pivot)


def test_r3_full_properties():
    bases = [crossing_change(catalog.trefoil(), c) for c in range(3)]
    bases += [crossing_change(catalog.figure_eight(), c) for c in range(4)]
    bases += [crossing_change(catalog.borromean(), c) for c in range(6)]
    applied = 0
    for d in bases:
        b0 = kauffman_bracket(d)
        for f in trigon_faces(d):
            for pivot in range(3):
                if not r3_slidable(d, f, pivot):
                    continue
                out, idx = r3(d, f, pivot)
                applied += 1
                assert out.n_crossings == d.n_crossings
                assert kauffman_bracket(out) == b0
                assert link_components(out) == link_components(d)
                moved = {idx[c] for c, _ in f.corners}
                assert any(
                    {c for c, _ in g.corners} == moved for g in trigon_faces(out)
                )
    assert applied >= 30


def test_r3_reversible():
    d = crossing_change(catalog.figure_eight(), 1)
    for f in trigon_faces(d):
        for pivot in range(3):
            if not r3_slidable(d, f, pivot):
                continue
            out, idx = r3(d, f, pivot)
            tri = {idx[c] for c, _ in f.corners}
            pivot_new = idx[f.corners[pivot][0]]
            for g in trigon_faces(out):
                if {c for c, _ in g.corners} != tri:
                    continue
                for pv in range(3):
                    if g.corners[pv][0] == pivot_new and r3_slidable(out, g, pv):
                        back, _ = r3(out, g, pv)
                        assert is_isomorphic(back, d)


def test_random_move_storm_preserves_bracket():
    """Random pokes, pulls, and slides never change the bracket, and the
    diagram stays planar-valid throughout."""
    rng = random.Random(99)
    for trial in range(12):
        d = random_diagram(rng.randrange(2, 6), rng)
        b0 = kauffman_bracket(d)
        for _ in range(6):
            if d.n_crossings == 0:
                break
            choice = rng.random()
            if choice < 0.45 and d.n_crossings <= 9:
                alpha = pairing(d)
                orbit = rng.choice(maps.face_orbits(alpha, d.n_crossings))
                q1, q2 = rng.choice(orbit), rng.choice(orbit)
                a1 = d.crossings[q1 >> 2].slots[q1 & 3]
                a2 = d.crossings[q2 >> 2].slots[q2 & 3]
                if a1 == a2:
                    continue
                d = r2_add(d, q1, q2, rng.random() < 0.5)
            elif choice < 0.75:
                pullable = [f for f in bigon_faces(d) if bigon_is_cancellable(d, f)]
                if pullable:
                    d = r2_remove(d, rng.choice(pullable))
            else:
                slides = [
                    (f, p)
                    for f in trigon_faces(d)
                    for p in range(3)
                    if r3_slidable(d, f, p)
                ]
                if slides:
                    f, p = rng.choice(slides)
                    d, _ = r3(d, f, p)
            assert kauffman_bracket(d) == b0
            total = sum(f.degree for f in faces(d))
            assert total == 4 * d.n_crossings
