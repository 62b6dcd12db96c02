"""Alternation, dealternators, primeness, connected sums."""

import random
from itertools import combinations

import pytest

from aalt import catalog
from aalt.classify import (
    alternating_assignments,
    alternation_report,
    connected_sum,
    connected_sum_factors,
    hopf_degeneracy_check,
    is_alternating,
    is_prime,
    separating_arc_pairs,
)
from aalt.diagram import (
    build_diagram,
    canonical_key,
    crossing_change,
    disjoint_union,
    is_isomorphic,
    link_components,
    pairing,
)
from aalt.errors import DisconnectedError, NoCrossingsError
from aalt.generate import random_diagram


def brute_force_prime(d) -> bool:
    """Independent oracle: a separating curve exists exactly when removing
    two arcs disconnects the shadow (the cut corresponds to a dual 2-cycle,
    which a 2-edge cut of a bridgeless plane graph always is)."""
    alpha = pairing(d)
    arcs = d.arcs
    darts_of = {
        a: [q for q in alpha if d.crossings[q >> 2].slots[q & 3] == a] for a in arcs
    }
    for a, b in combinations(arcs, 2):
        parent = list(range(d.n_crossings))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for q, p in alpha.items():
            label = d.crossings[q >> 2].slots[q & 3]
            if label in (a, b):
                continue
            ra, rb = find(q >> 2), find(p >> 2)
            if ra != rb:
                parent[ra] = rb
        comps = {find(v) for v in range(d.n_crossings)}
        if len(comps) > 1:
            # must actually separate the cut arcs' endpoints
            ends_a = {find(q >> 2) for q in darts_of[a]}
            ends_b = {find(q >> 2) for q in darts_of[b]}
            if len(ends_a) == 2 and len(ends_b) == 2:
                return False
    return True


def test_alternation_catalog():
    for ctor in (catalog.trefoil, catalog.figure_eight, catalog.hopf, catalog.borromean):
        rep = alternation_report(ctor())
        assert rep.is_alternating and not rep.is_almost_alternating
    rep = alternation_report(catalog.changed_hopf())
    assert not rep.is_alternating
    assert rep.is_almost_alternating
    assert len(rep.dealternators) == 2


def test_changed_trefoil_single_dealternator():
    for cid in range(3):
        d = crossing_change(catalog.trefoil(), cid)
        rep = alternation_report(d)
        assert rep.is_almost_alternating
        assert rep.dealternators == (cid,)


def test_dealternator_round_trip():
    rng = random.Random(17)
    from aalt.generate import random_almost_alternating

    for _ in range(10):
        d = random_almost_alternating(rng.randrange(3, 8), rng)
        rep = alternation_report(d)
        for cid in rep.dealternators:
            assert is_alternating(crossing_change(d, cid))


def test_alternation_report_rejects_disconnected():
    with pytest.raises(DisconnectedError):
        alternation_report(disjoint_union(catalog.trefoil(), catalog.hopf()))


def test_alternating_assignments_are_mirror_pair():
    rng = random.Random(4)
    from aalt.generate import random_shadow

    for _ in range(10):
        shadow = random_shadow(rng.randrange(1, 8), rng)
        pair = alternating_assignments(shadow)
        assert len(pair) == 2
        for alt in pair:
            assert is_alternating(alt)
        from aalt.diagram import mirror

        assert canonical_key(pair[1]) == canonical_key(mirror(pair[0]))


def test_hopf_degeneracy():
    assert hopf_degeneracy_check(catalog.changed_hopf())
    from aalt.diagram import mirror

    assert hopf_degeneracy_check(mirror(catalog.changed_hopf()))
    assert not hopf_degeneracy_check(catalog.trefoil())
    assert not hopf_degeneracy_check(catalog.hopf())


def test_primeness_examples():
    assert is_prime(catalog.trefoil())
    assert is_prime(catalog.hopf())
    assert is_prime(catalog.kink())
    granny = connected_sum(catalog.trefoil(), catalog.trefoil(), 1, 1)
    assert not is_prime(granny)
    with pytest.raises(NoCrossingsError):
        is_prime(catalog.unknot())


def test_granny_factors_into_two_trefoils():
    granny = connected_sum(catalog.trefoil(), catalog.trefoil(), 1, 1)
    factors = connected_sum_factors(granny)
    assert len(factors) == 2
    for f in factors:
        assert is_isomorphic(f, catalog.trefoil())


def test_primeness_matches_brute_force():
    rng = random.Random(31)
    checked = 0
    for _ in range(40):
        d = random_diagram(rng.randrange(1, 9), rng)
        assert is_prime(d) == brute_force_prime(d)
        checked += 1
    assert checked == 40


def test_factor_multiset_independent_of_cut_order():
    rng = random.Random(8)
    for _ in range(8):
        pieces = [random_diagram(rng.randrange(1, 5), rng) for _ in range(3)]
        d = pieces[0]
        for nxt in pieces[1:]:
            d = connected_sum(d, nxt, rng.choice(d.arcs), rng.choice(nxt.arcs))
        factors = connected_sum_factors(d)
        keys = sorted(canonical_key(f) for f in factors)
        # refactor the re-summed factors: same multiset
        d2 = factors[0]
        for nxt in factors[1:]:
            d2 = connected_sum(d2, nxt, rng.choice(d2.arcs), rng.choice(nxt.arcs))
        keys2 = sorted(canonical_key(f) for f in connected_sum_factors(d2))
        assert keys == keys2
        assert all(is_prime(f) for f in factors)


def test_separating_pairs_of_composite():
    granny = connected_sum(catalog.trefoil(), catalog.trefoil(), 1, 1)
    assert separating_arc_pairs(granny)
    assert not separating_arc_pairs(catalog.trefoil())
