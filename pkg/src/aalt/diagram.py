"""Combinatorial link diagrams on the sphere.

A diagram is a list of crossings, each holding four arc labels in
counterclockwise slot order plus an over-axis marking which diagonal of
slots carries the overstrand, together with a count of crossing-free
circles (which slot tables cannot express).  All values are immutable;
every operation returns a new diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import maps
from .errors import ArcCountError, NonPlanarError, UnknownCrossingError

OVER_02 = 0  # slots 0,2 carry the overstrand
OVER_13 = 1  # slots 1,3 carry the overstrand (the convention of parsed tables)


@dataclass(frozen=True)
class Crossing:
    """One crossing: arc labels in counterclockwise slot order and the
    diagonal that passes over."""

    slots: tuple[int, int, int, int]
    over_axis: int = OVER_13

    def is_over_slot(self, slot: int) -> bool:
        return (slot & 1) == self.over_axis


@dataclass(frozen=True)
class Face:
    """A disk region of the shadow: cyclic corner list, one corner per
    boundary visit.  Corner ``(c, k)`` sits between slots ``k`` and ``k+1``
    of crossing ``c``.  Circle regions have no corners."""

    corners: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return len(self.corners)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    circles: int = 0

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> tuple[int, ...]:
        return tuple(sorted({a for c in self.crossings for a in c.slots}))

    def slot_table(self) -> list[list[int]]:
        return [list(c.slots) for c in self.crossings]

    def over_axes(self) -> tuple[int, ...]:
        return tuple(c.over_axis for c in self.crossings)


def build_diagram(table, circles: int = 0, over_axes=None) -> Diagram:
    """Validate a crossing slot table and return a Diagram.

    Every arc label must occur exactly twice across all slots, and the
    rotation system must embed in the sphere (Euler check per connected
    shadow component).  Arc labels are canonicalized to 1..2V in order of
    first appearance.
    """
    rows = [tuple(row) for row in table]
    if any(len(row) != 4 for row in rows):
        raise ArcCountError("every crossing needs exactly 4 slots")
    if circles < 0:
        raise ArcCountError("circle count cannot be negative")
    counts: dict = {}
    for row in rows:
        for label in row:
            counts[label] = counts.get(label, 0) + 1
    bad = {label: n for label, n in counts.items() if n != 2}
    if bad:
        raise ArcCountError(f"arc labels not used exactly twice: {bad}")
    relabel: dict = {}
    for row in rows:
        for label in row:
            if label not in relabel:
                relabel[label] = len(relabel) + 1
    rows = [tuple(relabel[a] for a in row) for row in rows]
    if over_axes is None:
        over_axes = [OVER_13] * len(rows)
    crossings = tuple(Crossing(row, axis) for row, axis in zip(rows, over_axes))
    d = Diagram(crossings, circles)
    if rows and not maps.is_planar(pairing(d), len(rows)):
        raise NonPlanarError("rotation system does not embed in the sphere")
    return d


def pairing(d: Diagram) -> dict[int, int]:
    """Dart involution pairing the two slot ends of every arc."""
    ends: dict[int, list[int]] = {}
    for cid, c in enumerate(d.crossings):
        for slot, label in enumerate(c.slots):
            ends.setdefault(label, []).append(4 * cid + slot)
    out: dict[int, int] = {}
    for a, b in ends.values():
        out[a] = b
        out[b] = a
    return out


def faces(d: Diagram) -> list[Face]:
    """Every disk region of the shadow.  Each connected shadow component is
    traced on its own sphere; each free circle contributes one degree-0
    region (its other side merges with whatever region hosts it)."""
    result = []
    if d.n_crossings:
        for orbit in maps.face_orbits(pairing(d), d.n_crossings):
            corners = tuple((dart >> 2, (dart - 1) & 3) for dart in orbit)
            result.append(Face(corners))
    if d.n_crossings == 0 and d.circles == 0:
        return [Face(())]
    result.extend(Face(()) for _ in range(d.circles + (1 if d.n_crossings == 0 else 0)))
    return result


def crossing_change(d: Diagram, cid: int) -> Diagram:
    """Flip which diagonal passes over at one crossing; shadow unchanged."""
    if not 0 <= cid < d.n_crossings:
        raise UnknownCrossingError(f"no crossing {cid}")
    crossings = list(d.crossings)
    c = crossings[cid]
    crossings[cid] = Crossing(c.slots, c.over_axis ^ 1)
    return Diagram(tuple(crossings), d.circles)


def mirror(d: Diagram) -> Diagram:
    """Flip every crossing: the diagram of the mirror link."""
    return Diagram(tuple(Crossing(c.slots, c.over_axis ^ 1) for c in d.crossings), d.circles)


def shadow_components(d: Diagram) -> int:
    """Connected components of the shadow, free circles included."""
    if d.n_crossings == 0:
        return d.circles
    return len(maps.vertex_components(pairing(d), d.n_crossings)) + d.circles


def strand_orbits(d: Diagram) -> list[tuple[int, ...]]:
    """Orbits of the strand walk (leave a crossing, traverse the arc, pass
    straight through).  Each link component yields two orbits, one per
    direction; orbits list departure darts."""
    if d.n_crossings == 0:
        return []
    alpha = pairing(d)
    seen = set()
    orbits = []
    for start in range(4 * d.n_crossings):
        if start in seen:
            continue
        orbit = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            orbit.append(dart)
            arrive = alpha[dart]
            dart = (arrive & ~3) | ((arrive + 2) & 3)
        orbits.append(tuple(orbit))
    return orbits


def link_components(d: Diagram) -> int:
    """Number of circles the diagram's strands trace."""
    return len(strand_orbits(d)) // 2 + d.circles


def oriented_strands(d: Diagram) -> list[tuple[int, ...]]:
    """One strand orbit per link component: the direction containing the
    component's smallest dart.  The reverse orbit consists of the opposite
    slots of the forward one."""
    chosen: list[tuple[int, ...]] = []
    covered: set[int] = set()
    for orbit in strand_orbits(d):
        if orbit[0] in covered:
            continue
        chosen.append(orbit)
        covered.update(orbit)
        covered.update((q & ~3) | ((q + 2) & 3) for q in orbit)
    return chosen


def component_of_arcs(d: Diagram) -> dict[int, int]:
    """Map each arc label to a link-component index (0-based, in canonical
    trace order)."""
    comp: dict[int, int] = {}
    for idx, orbit in enumerate(oriented_strands(d)):
        for dart in orbit:
            comp[d.crossings[dart >> 2].slots[dart & 3]] = idx
    return comp


def orientations(d: Diagram) -> dict[int, tuple[int, int]]:
    """Exit slots per crossing under the canonical component directions:
    crossing id -> (under_exit_slot, over_exit_slot)."""
    exits: dict[int, dict[str, int]] = {}
    for orbit in oriented_strands(d):
        for dart in orbit:
            cid, slot = dart >> 2, dart & 3
            kind = "over" if d.crossings[cid].is_over_slot(slot) else "under"
            exits.setdefault(cid, {})[kind] = slot
    return {cid: (v["under"], v["over"]) for cid, v in exits.items()}


def crossing_sign(d: Diagram, cid: int, exits=None) -> int:
    """Sign of a crossing under the canonical orientations: +1 when the
    overstrand exits one slot counterclockwise of the understrand exit."""
    if exits is None:
        exits = orientations(d)
    under_exit, over_exit = exits[cid]
    return 1 if (over_exit - under_exit) & 3 == 1 else -1


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    shift = max(d1.arcs, default=0)
    crossings = list(d1.crossings)
    crossings.extend(
        Crossing(tuple(a + shift for a in c.slots), c.over_axis) for c in d2.crossings
    )
    return Diagram(tuple(crossings), d1.circles + d2.circles)


def split_shadow_pieces(d: Diagram) -> list[Diagram]:
    """The connected pieces of a diagram, each as its own diagram (free
    circles become one-circle diagrams)."""
    pieces = []
    if d.n_crossings:
        for comp in sorted(maps.vertex_components(pairing(d), d.n_crossings), key=min):
            ids = sorted(comp)
            sub = [d.crossings[i] for i in ids]
            pieces.append(
                build_diagram([c.slots for c in sub], 0, [c.over_axis for c in sub])
            )
    pieces.extend(Diagram((), 1) for _ in range(d.circles))
    return pieces


# ---------------------------------------------------------------------------
# canonical form and isomorphism


def _component_key(d: Diagram, cids: list[int]) -> tuple:
    index = {cid: i for i, cid in enumerate(cids)}
    sub = [d.crossings[cid] for cid in cids]
    alpha_local: dict[int, int] = {}
    ends: dict[int, list[int]] = {}
    for i, c in enumerate(sub):
        for slot, label in enumerate(c.slots):
            ends.setdefault(label, []).append(4 * i + slot)
    for a, b in ends.values():
        alpha_local[a] = b
        alpha_local[b] = a

    def deco(v: int, slot0: int, direction: int):
        # over-axis re-expressed relative to the vertex's reference slot;
        # reflection maps diagonals to diagonals, so parity is enough
        return (sub[v].over_axis ^ (slot0 & 1),)

    # orientation-preserving only: a reflected sphere with unchanged
    # over/under data is the mirror link, not the same diagram
    return maps.canonical_key(alpha_local, len(sub), deco, include_reflection=False)


def canonical_key(d: Diagram) -> tuple:
    """Hashable canonical form: equal keys exactly when diagrams are
    isomorphic as decorated maps on the oriented sphere."""
    keys = []
    if d.n_crossings:
        for comp in maps.vertex_components(pairing(d), d.n_crossings):
            keys.append(_component_key(d, sorted(comp)))
    keys.sort()
    return (tuple(keys), d.circles)


def is_isomorphic(d1: Diagram, d2: Diagram) -> bool:
    return canonical_key(d1) == canonical_key(d2)


def is_isomorphic_or_mirror(d1: Diagram, d2: Diagram) -> bool:
    return canonical_key(d1) == canonical_key(d2) or canonical_key(d1) == canonical_key(mirror(d2))


def canonical_diagram(d: Diagram) -> Diagram:
    """Rebuild the diagram with canonical crossing order, slot rotations and
    arc labels; emit paths use this for deterministic output."""
    if d.n_crossings == 0:
        return Diagram((), d.circles)
    comps = sorted(
        (s for s in maps.vertex_components(pairing(d), d.n_crossings)),
        key=lambda s: _component_key(d, sorted(s)),
    )
    new_rows: list[tuple[int, ...]] = []
    new_axes: list[int] = []
    arc_base = 0
    for comp in comps:
        cids = sorted(comp)
        sub = [d.crossings[cid] for cid in cids]
        alpha_local: dict[int, int] = {}
        ends: dict[int, list[int]] = {}
        for i, c in enumerate(sub):
            for slot, label in enumerate(c.slots):
                ends.setdefault(label, []).append(4 * i + slot)
        for a, b in ends.values():
            alpha_local[a] = b
            alpha_local[b] = a

        def deco(v, slot0, direction):
            return (sub[v].over_axis ^ (slot0 & 1),)

        best = None
        best_start = None
        for start in range(4 * len(sub)):
            key = maps._traversal_key(alpha_local, len(sub), start, 1, deco)
            if best is None or key < best:
                best, best_start = key, start
        order, ref_slot = maps.relabeling_from_start(alpha_local, len(sub), best_start, 1)
        pos = {v: i for i, v in enumerate(order)}
        arc_label: dict[int, int] = {}
        rows = []
        axes = []
        for v in order:
            row = []
            for k in range(4):
                dart = (v << 2) | ((ref_slot[v] + k) & 3)
                e = min(dart, alpha_local[dart])
                if e not in arc_label:
                    arc_label[e] = arc_base + len(arc_label) + 1
                row.append(arc_label[e])
            rows.append(tuple(row))
            axes.append(sub[v].over_axis ^ (ref_slot[v] & 1))
        del pos
        arc_base += len(arc_label)
        new_rows.extend(rows)
        new_axes.extend(axes)
    return Diagram(
        tuple(Crossing(r, a) for r, a in zip(new_rows, new_axes)), d.circles
    )
