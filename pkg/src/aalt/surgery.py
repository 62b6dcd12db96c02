"""Local resewing of diagrams.

Every rewrite (Reidemeister moves, reducing moves, connected-sum splitting)
is expressed as one `resew` call: delete some crossings, cut some arcs,
add some crossings, and say how the loose strand ends bond together.  The
resolver chases strand ends through the removed region, so degenerate
adjacencies (loops, shared arcs, arcs with both ends in the region) need no
special cases at call sites.

Ports name loose ends:

``("stump", cid, slot)``
    the strand end that used to plug into slot ``slot`` of removed
    crossing ``cid``;
``("end", arc, k)``
    end ``k`` of a severed arc (0 = the side of its smaller dart);
``("new", i, slot)``
    slot of the i-th added crossing.

Deleting a crossing with two "pass-through" bonds (opposite stumps bonded)
erases it from its strands; bond chains that close up with no crossing
left become free circles.
"""

from __future__ import annotations

from .diagram import Crossing, Diagram, build_diagram, pairing
from .errors import AaltError

Port = tuple


def resew(
    d: Diagram,
    remove: frozenset[int] | set[int] = frozenset(),
    cuts: tuple[int, ...] = (),
    new_axes: tuple[int, ...] = (),
    bonds: tuple[tuple[Port, Port], ...] = (),
) -> tuple[Diagram, dict[int, int]]:
    """Apply one surgery; returns the rebuilt diagram and the crossing id
    map (surviving old ids and, under key ``("new", i)``, the added ones).
    """
    remove = set(remove)
    cuts = list(cuts)
    alpha = pairing(d)
    survivors = [cid for cid in range(d.n_crossings) if cid not in remove]
    new_index: dict = {cid: i for i, cid in enumerate(survivors)}
    for i in range(len(new_axes)):
        new_index[("new", i)] = len(survivors) + i

    def is_removed(dart: int) -> bool:
        return (dart >> 2) in remove

    def anchor(dart: int) -> Port:
        return ("live", dart >> 2, dart & 3)

    # structural edges: how pieces of the old diagram connect the tokens
    edges: dict[Port, list[Port]] = {}

    def add_edge(a: Port, b: Port) -> None:
        edges.setdefault(a, []).append(b)
        edges.setdefault(b, []).append(a)

    arc_darts: dict[int, list[int]] = {}
    for cid, c in enumerate(d.crossings):
        for slot, label in enumerate(c.slots):
            arc_darts.setdefault(label, []).append(4 * cid + slot)
    for label in cuts:
        if label not in arc_darts:
            raise AaltError(f"cannot cut unknown arc {label}")
    if len(set(cuts)) != len(cuts):
        raise AaltError("an arc can be cut once per resew call")

    intact_pairs: list[tuple[Port, Port]] = []
    for label, (x, y) in ((lb, sorted(ds)) for lb, ds in arc_darts.items()):
        if label in cuts:
            for k, dart in enumerate((x, y)):
                side = ("stump", dart >> 2, dart & 3) if is_removed(dart) else anchor(dart)
                add_edge(("end", label, k), side)
        elif is_removed(x) and is_removed(y):
            add_edge(("stump", x >> 2, x & 3), ("stump", y >> 2, y & 3))
        elif is_removed(x):
            add_edge(("stump", x >> 2, x & 3), anchor(y))
        elif is_removed(y):
            add_edge(("stump", y >> 2, y & 3), anchor(x))
        else:
            intact_pairs.append((anchor(x), anchor(y)))

    for a, b in bonds:
        add_edge(a, b)

    is_anchor = lambda t: t[0] in ("live", "new")
    for t, nbrs in edges.items():
        limit = 1 if is_anchor(t) else 2
        if len(nbrs) > limit:
            raise AaltError(f"port {t} is over-connected")

    # chase chains from open anchors; leftover closed chains are circles
    visited: set[Port] = set()
    final_pairs: list[tuple[Port, Port]] = []
    for start in list(edges):
        if not is_anchor(start) or start in visited:
            continue
        visited.add(start)
        prev, cur = start, edges[start][0]
        while not is_anchor(cur):
            visited.add(cur)
            nbrs = [t for t in edges[cur] if t != prev]
            if not nbrs:
                if edges[cur][0] == prev and len(edges[cur]) == 2 and edges[cur][1] == prev:
                    nbrs = [prev]  # double edge back (two-token cycle)
                else:
                    raise AaltError(f"strand end {cur} left dangling")
            prev, cur = cur, nbrs[0]
        visited.add(cur)
        final_pairs.append((start, cur))
    circles_added = 0
    for start in list(edges):
        if start in visited or is_anchor(start):
            continue
        # closed chain with no crossings: a free circle (or a discarded
        # interior piece when it carries no bonds)
        cycle = [start]
        visited.add(start)
        prev, cur = start, edges[start][0]
        closed = True
        while cur != start:
            visited.add(cur)
            cycle.append(cur)
            nbrs = [t for t in edges[cur] if t != prev] or [prev]
            if len(edges[cur]) < 2:
                closed = False
                break
            prev, cur = cur, nbrs[0]
        if closed and any(len(edges[t]) > 1 for t in cycle):
            circles_added += 1

    # rebuild the slot table
    slot_of: dict[Port, tuple[int, int]] = {}
    for cid in survivors:
        for s in range(4):
            slot_of[("live", cid, s)] = (new_index[cid], s)
    for i in range(len(new_axes)):
        for s in range(4):
            slot_of[("new", i, s)] = (new_index[("new", i)], s)
    table: list[list] = [[None] * 4 for _ in range(len(survivors) + len(new_axes))]
    label = 0
    for a, b in intact_pairs + final_pairs:
        label += 1
        for t in (a, b):
            ci, s = slot_of[t]
            if table[ci][s] is not None:
                raise AaltError(f"slot {t} bonded twice")
            table[ci][s] = label
    if any(x is None for row in table for x in row):
        raise AaltError("unbonded new-crossing slot")
    axes = [d.crossings[cid].over_axis for cid in survivors] + list(new_axes)
    out = build_diagram(table, d.circles + circles_added, axes)
    return out, new_index
