"""Diagram corpus generators: exhaustive small shadows, their alternating
and almost alternating decorations, and random diagrams for property
tests."""

from __future__ import annotations

import random

from . import maps
from .classify import alternating_assignments, alternation_report
from .diagram import Diagram, build_diagram, canonical_key, crossing_change, shadow_components


def diagram_from_pairing(pairing: dict[int, int], nverts: int) -> Diagram:
    """Shadow diagram (all crossings in the default over state) from a
    dart pairing."""
    label: dict[int, int] = {}
    nxt = 1
    table = [[0] * 4 for _ in range(nverts)]
    for dart in range(4 * nverts):
        e = min(dart, pairing[dart])
        if e not in label:
            label[e] = nxt
            nxt += 1
        table[dart >> 2][dart & 3] = label[e]
    return build_diagram(table)


def enumerate_shadows(max_crossings: int) -> dict[int, list[Diagram]]:
    """Connected shadows (4-valent planar maps) up to isomorphism and
    reflection, keyed by crossing count."""
    return {
        n: [diagram_from_pairing(p, nv) for p, nv in level]
        for n, level in maps.enumerate_planar_maps(max_crossings).items()
    }


def alternating_diagrams(max_crossings: int) -> dict[int, list[Diagram]]:
    """All connected alternating diagrams up to isomorphism, keyed by
    crossing count (each shadow contributes its mirror pair, deduplicated)."""
    out: dict[int, list[Diagram]] = {}
    for n, shadows in enumerate_shadows(max_crossings).items():
        seen = {}
        for shadow in shadows:
            for alt in alternating_assignments(shadow):
                seen.setdefault(canonical_key(alt), alt)
        out[n] = list(seen.values())
    return out


def almost_alternating_diagrams(max_crossings: int) -> dict[int, list[Diagram]]:
    """All connected almost alternating diagrams up to isomorphism with at
    most ``max_crossings`` crossings, generated from the alternating census
    by single crossing changes."""
    out: dict[int, list[Diagram]] = {}
    for n, alts in alternating_diagrams(max_crossings).items():
        seen = {}
        for alt in alts:
            for cid in range(n):
                cand = crossing_change(alt, cid)
                key = canonical_key(cand)
                if key in seen:
                    continue
                if alternation_report(cand).is_almost_alternating:
                    seen[key] = cand
        out[n] = list(seen.values())
    return out


def random_shadow(n: int, rng: random.Random) -> Diagram:
    pairing, nv = maps.random_planar_map(n, rng)
    return diagram_from_pairing(pairing, nv)


def random_diagram(n: int, rng: random.Random) -> Diagram:
    """Random connected diagram: random shadow, random over/under states."""
    shadow = random_shadow(n, rng)
    d = shadow
    for cid in range(n):
        if rng.random() < 0.5:
            d = crossing_change(d, cid)
    return d


def random_almost_alternating(n: int, rng: random.Random) -> Diagram:
    """Random connected almost alternating diagram with ``n`` crossings."""
    while True:
        shadow = random_shadow(n, rng)
        alt = alternating_assignments(shadow)[rng.randrange(2)]
        cand = crossing_change(alt, rng.randrange(n))
        if alternation_report(cand).is_almost_alternating:
            return cand
