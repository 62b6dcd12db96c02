"""Dart-level combinatorial maps for 4-valent graphs on the sphere.

A map on ``n`` vertices is a perfect matching (``pairing``) on the darts
``0 .. 4n-1``; dart ``4*v + s`` is slot ``s`` of vertex ``v``, slots listed
counterclockwise.  The rotation system is implicit: the successor of slot
``s`` is slot ``(s+1) % 4``.  Faces are the orbits of ``sigma o alpha``
where ``alpha`` is the pairing; the walk keeps each face on a fixed side,
so every face is traced exactly once.
"""

from __future__ import annotations

import random


def sigma(dart: int) -> int:
    """Next dart counterclockwise around the same vertex."""
    return (dart & ~3) | ((dart + 1) & 3)


def face_orbits(pairing: dict[int, int], nverts: int) -> list[tuple[int, ...]]:
    """Orbits of sigma o alpha; each orbit is one face, listed as the
    departure darts of its boundary walk."""
    seen = [False] * (4 * nverts)
    orbits = []
    for start in range(4 * nverts):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = sigma(pairing[d])
        orbits.append(tuple(orbit))
    return orbits


def vertex_components(pairing: dict[int, int], nverts: int) -> list[set[int]]:
    """Connected components of the underlying multigraph, as vertex sets."""
    parent = list(range(nverts))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d, e in pairing.items():
        a, b = find(d >> 2), find(e >> 2)
        if a != b:
            parent[a] = b
    groups: dict[int, set[int]] = {}
    for v in range(nverts):
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def is_planar(pairing: dict[int, int], nverts: int) -> bool:
    """Euler check V - E + F = 2 on every connected component separately."""
    if nverts == 0:
        return True
    comp_of = {}
    for i, comp in enumerate(vertex_components(pairing, nverts)):
        for v in comp:
            comp_of[v] = i
    nfaces: dict[int, int] = {}
    nv: dict[int, int] = {}
    for orbit in face_orbits(pairing, nverts):
        c = comp_of[orbit[0] >> 2]
        nfaces[c] = nfaces.get(c, 0) + 1
    for v in range(nverts):
        c = comp_of[v]
        nv[c] = nv.get(c, 0) + 1
    # E = 2V for a 4-valent component, so the check is F = V + 2.
    return all(nfaces.get(c, 0) == nv[c] + 2 for c in nv)


def canonical_key(
    pairing: dict[int, int],
    nverts: int,
    decorations=None,
    include_reflection: bool = True,
) -> tuple:
    """Canonical form of a connected map under relabeling of vertices,
    rotation of slots, and (optionally) reflection.

    ``decorations`` is an optional callable ``(vertex, slot0, direction) ->
    hashable`` contributing vertex data to the signature; ``slot0`` and
    ``direction`` describe the relabeling applied to that vertex so callers
    can encode rotation-dependent data (such as an over/under axis).
    """
    if nverts == 0:
        return ()
    best = None
    directions = (1, -1) if include_reflection else (1,)
    for direction in directions:
        for start in range(4 * nverts):
            key = _traversal_key(pairing, nverts, start, direction, decorations)
            if best is None or key < best:
                best = key
    return best


def _traversal_key(pairing, nverts, start, direction, decorations):
    # BFS by vertex discovery; each discovered vertex gets a reference slot
    # and is read off in `direction` order from there.
    ref_slot = {start >> 2: start & 3}
    order = [start >> 2]
    arc_label: dict[int, int] = {}
    next_arc = 0
    rows = []
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        row = []
        for k in range(4):
            d = (v << 2) | ((ref_slot[v] + direction * k) & 3)
            e = min(d, pairing[d])
            if e not in arc_label:
                arc_label[e] = next_arc
                next_arc += 1
                t = pairing[d]
                w = t >> 2
                if w not in ref_slot:
                    ref_slot[w] = t & 3
                    order.append(w)
            row.append(arc_label[e])
        if decorations is not None:
            row.append(decorations(v, ref_slot[v], direction))
        rows.append(tuple(row))
        if len(order) < nverts and i == len(order):
            break  # disconnected: caller must canonicalize per component
    if len(order) < nverts:
        raise ValueError("canonical_key requires a connected map")
    return tuple(rows)


def relabeling_from_start(pairing, nverts, start, direction):
    """Vertex order and reference slots of the traversal used by
    canonical_key, for rebuilding a canonically labeled object."""
    ref_slot = {start >> 2: start & 3}
    order = [start >> 2]
    arc_label: dict[int, int] = {}
    next_arc = 0
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for k in range(4):
            d = (v << 2) | ((ref_slot[v] + direction * k) & 3)
            e = min(d, pairing[d])
            if e not in arc_label:
                arc_label[e] = next_arc
                next_arc += 1
                t = pairing[d]
                w = t >> 2
                if w not in ref_slot:
                    ref_slot[w] = t & 3
                    order.append(w)
    return order, ref_slot


def insert_vertex(pairing: dict[int, int], nverts: int, d1: int, d2: int) -> dict[int, int]:
    """Insert one 4-valent vertex by cutting two boundary traversals of a
    common face and cross-splicing them through the new vertex.

    ``d1`` and ``d2`` are departure darts on the same face orbit.  With
    ``d1 != d2`` the two traversed edges are cut and rewired transversely
    through the new vertex (this can merge or split strands but always
    preserves planarity).  With ``d1 == d2`` the edge is cut twice on one
    traversal, producing a kink: a loop in adjacent slots of the new vertex.
    ``d2 == pairing[d1]`` is rejected: crossing the two sides of a single
    edge once is never planar.
    """
    if d2 == pairing[d1]:
        raise ValueError("cannot cross the two sides of one edge")
    v = 4 * nverts
    new = dict(pairing)
    if d1 == d2:
        a1 = new.pop(d1)
        new.pop(a1, None)
        # slots ccw: (loop, main-in, main-out, loop); loop occupies 3,0
        new[v + 0] = v + 3
        new[v + 3] = v + 0
        new[v + 1] = d1
        new[d1] = v + 1
        new[v + 2] = a1
        new[a1] = v + 2
        return new
    a1 = new.pop(d1)
    a2 = new.pop(d2)
    del new[a1], new[a2]
    # ccw slots receive (alpha(d1), d1, alpha(d2), d2): derived from the
    # chord-contraction picture with the face kept on the walk's fixed side.
    for slot, target in enumerate((a1, d1, a2, d2)):
        new[v + slot] = target
        new[target] = v + slot
    return new


def smooth_vertex(pairing: dict[int, int], nverts: int, v: int, mode: int) -> tuple[dict[int, int], int]:
    """Remove vertex v by joining its slots pairwise: mode 0 joins
    (0,1) and (2,3); mode 1 joins (1,2) and (3,0).  Returns the new pairing
    over vertices relabeled to 0..nverts-2."""
    pairs = ((0, 1), (2, 3)) if mode == 0 else ((1, 2), (3, 0))
    new = dict(pairing)
    for s, t in pairs:
        a, b = new[4 * v + s], new[4 * v + t]
        for d in (4 * v + s, 4 * v + t):
            del new[d]
        if a == 4 * v + t:  # the two slots were a loop; it vanishes
            continue
        new[a] = b
        new[b] = a
    remap = lambda d: d if (d >> 2) < v else d - 4
    return {remap(a): remap(b) for a, b in new.items()}, nverts - 1


def the_one_vertex_map() -> tuple[dict[int, int], int]:
    """The unique connected 4-valent planar map on one vertex (a curl
    beside a curl)."""
    return {0: 1, 1: 0, 2: 3, 3: 2}, 1


def enumerate_planar_maps(max_vertices: int) -> dict[int, list[tuple[dict[int, int], int]]]:
    """All connected 4-valent planar maps up to isomorphism (including
    reflection), keyed by vertex count, built by closing the one-vertex map
    under single-vertex insertion.

    Completeness: every vertex of a connected 4-valent planar map admits a
    smoothing that keeps the map connected (planarity forces the attachment
    slots of a cut vertex's two sides to be contiguous), and every such
    smoothing is the inverse of an insertion.
    """
    levels: dict[int, list[tuple[dict[int, int], int]]] = {}
    base = the_one_vertex_map()
    levels[1] = [base]
    frontier = {canonical_key(*base): base}
    for n in range(2, max_vertices + 1):
        nxt: dict[tuple, tuple[dict[int, int], int]] = {}
        for pairing, nv in frontier.values():
            for orbit in face_orbits(pairing, nv):
                for d1 in orbit:
                    for d2 in orbit:
                        if d2 == pairing[d1]:
                            continue
                        grown = insert_vertex(pairing, nv, d1, d2)
                        key = canonical_key(grown, nv + 1)
                        if key not in nxt:
                            nxt[key] = (grown, nv + 1)
        frontier = nxt
        levels[n] = list(frontier.values())
    return levels


def random_planar_map(nverts: int, rng: random.Random) -> tuple[dict[int, int], int]:
    """Random connected 4-valent planar map grown by random insertions."""
    pairing, nv = the_one_vertex_map()
    while nv < nverts:
        orbit = rng.choice(face_orbits(pairing, nv))
        for _ in range(64):
            d1 = rng.choice(orbit)
            d2 = rng.choice(orbit)
            if d2 != pairing[d1]:
                break
        else:
            continue
        pairing = insert_vertex(pairing, nv, d1, d2)
        nv += 1
    return pairing, nv


def brute_force_planar_maps(max_vertices: int) -> dict[int, int]:
    """Independent census of connected 4-valent planar maps by exhausting
    dart matchings; exponential, intended for cross-checking small counts."""
    counts = {}
    for n in range(1, max_vertices + 1):
        seen = set()
        darts = list(range(4 * n))

        def match(pairing: dict[int, int]):
            free = [d for d in darts if d not in pairing]
            if not free:
                if len(vertex_components(pairing, n)) == 1 and is_planar(pairing, n):
                    seen.add(canonical_key(pairing, n))
                return
            d = free[0]
            for e in free[1:]:
                pairing[d] = e
                pairing[e] = d
                match(pairing)
                del pairing[d], pairing[e]

        match({})
        counts[n] = len(seen)
    return counts
