"""Primitive Reidemeister moves on diagrams.

These are the verified building blocks that configured reducing moves are
replayed from: kink insertion/removal (type I), poke/pull (type II), and
the triangle slide (type III).  Types II and III preserve the Kauffman
bracket exactly; type I multiplies it by -A^(+-3).
"""

from __future__ import annotations

from . import maps
from .diagram import OVER_02, OVER_13, Diagram, Face, faces, pairing
from .errors import NoMatchError
from .surgery import resew


def _arc_at(d: Diagram, cid: int, slot: int) -> int:
    return d.crossings[cid].slots[slot & 3]


def _arc_darts(d: Diagram, arc: int) -> list[int]:
    return sorted(
        4 * cid + s
        for cid, c in enumerate(d.crossings)
        for s in range(4)
        if c.slots[s] == arc
    )


def _end_side(d: Diagram, arc: int, dart: int) -> int:
    """End index (0 or 1) of the given dart on its arc, matching the
    surgery port convention (end 0 = smaller dart)."""
    return _arc_darts(d, arc).index(dart)


def kink_corners(d: Diagram) -> list[tuple[int, int]]:
    """Removable curls as (crossing, corner) pairs: the loop arc occupies
    the two slots around that corner."""
    return [f.corners[0] for f in faces(d) if f.degree == 1]


def r1_add(d: Diagram, arc: int, side: int = 0, axis: int = OVER_13) -> Diagram:
    """Curl the given arc: the loop pokes into the face on the chosen side
    of the arc; ``axis`` picks the curl's handedness."""
    if arc not in d.arcs:
        raise NoMatchError(f"unknown arc {arc}")
    k = 0 if side == 0 else 1
    out, _ = resew(
        d,
        cuts=(arc,),
        new_axes=(axis,),
        bonds=(
            (("new", 0, 0), ("new", 0, 3)),
            (("new", 0, 1), ("end", arc, k)),
            (("new", 0, 2), ("end", arc, 1 - k)),
        ),
    )
    return out


def r1_remove(d: Diagram, cid: int) -> Diagram:
    """Remove a curl: the crossing must carry a loop arc in adjacent slots."""
    c = d.crossings[cid]
    loop_slots = [s for s in range(4) if c.slots[s] == c.slots[(s + 1) & 3]]
    if not loop_slots:
        raise NoMatchError(f"crossing {cid} carries no curl")
    s = loop_slots[0]
    out, _ = resew(
        d,
        remove={cid},
        bonds=((("stump", cid, (s + 2) & 3), ("stump", cid, (s + 3) & 3)),),
    )
    return out


def r2_add(d: Diagram, d1: int, d2: int, over_first: bool = True) -> Diagram:
    """Poke the arc traversed at departure dart ``d1`` across the one at
    ``d2``; both darts must lie on one face orbit and name distinct arcs.
    The first arc goes over when ``over_first``."""
    e1 = _arc_at(d, d1 >> 2, d1 & 3)
    e2 = _arc_at(d, d2 >> 2, d2 & 3)
    if e1 == e2:
        raise NoMatchError("poke needs two distinct arcs")
    if not any(d1 in orbit and d2 in orbit for orbit in maps.face_orbits(pairing(d), d.n_crossings)):
        raise NoMatchError("darts do not border a common face")
    k1 = _end_side(d, e1, d1)
    k2 = _end_side(d, e2, d2)
    axis = OVER_02 if over_first else OVER_13  # poked strand runs on slots 0,2
    out, _ = resew(
        d,
        cuts=(e1, e2),
        new_axes=(axis, axis),
        bonds=(
            (("new", 0, 0), ("end", e1, 1 - k1)),
            (("new", 0, 1), ("new", 1, 3)),
            (("new", 0, 2), ("new", 1, 2)),
            (("new", 0, 3), ("end", e2, k2)),
            (("new", 1, 0), ("end", e1, k1)),
            (("new", 1, 1), ("end", e2, 1 - k2)),
        ),
    )
    return out


def bigon_faces(d: Diagram) -> list[Face]:
    """Degree-2 faces whose two corners sit at distinct crossings."""
    return [f for f in faces(d) if f.degree == 2 and f.corners[0][0] != f.corners[1][0]]


def bigon_is_cancellable(d: Diagram, f: Face) -> bool:
    """True when one strand of the bigon runs over the other at both ends,
    so a pull move erases both crossings."""
    (c1, k1), (c2, k2) = f.corners
    return d.crossings[c1].is_over_slot(k1 + 1) == d.crossings[c2].is_over_slot(k2)


def r2_remove(d: Diagram, f: Face) -> Diagram:
    """Pull apart a cancellable bigon, erasing its two crossings."""
    if f.degree != 2 or f.corners[0][0] == f.corners[1][0]:
        raise NoMatchError("not a two-crossing bigon face")
    if not bigon_is_cancellable(d, f):
        raise NoMatchError("bigon strands are clasped, not cancellable")
    (c1, _), (c2, _) = f.corners
    out, _ = resew(
        d,
        remove={c1, c2},
        bonds=(
            (("stump", c1, 0), ("stump", c1, 2)),
            (("stump", c1, 1), ("stump", c1, 3)),
            (("stump", c2, 0), ("stump", c2, 2)),
            (("stump", c2, 1), ("stump", c2, 3)),
        ),
    )
    return out


def trigon_faces(d: Diagram) -> list[Face]:
    """Degree-3 faces with corners at three distinct crossings."""
    return [f for f in faces(d) if f.degree == 3 and len({c for c, _ in f.corners}) == 3]


def r3_slidable(d: Diagram, f: Face, pivot: int) -> bool:
    """Whether the strand opposite corner ``pivot`` runs uniformly over or
    uniformly under the other two strands, so it can slide across."""
    pp, kp = f.corners[(pivot + 1) % 3]
    qq, kq = f.corners[(pivot + 2) % 3]
    return d.crossings[pp].is_over_slot(kp + 1) == d.crossings[qq].is_over_slot(kq)


def r3(d: Diagram, f: Face, pivot: int) -> tuple[Diagram, dict]:
    """Slide the strand opposite corner ``pivot`` across that crossing.

    Returns the new diagram and a crossing id map in which the two carried
    crossings keep their identities: the image of each old crossing is the
    new crossing between the same pair of strands.
    """
    if f.degree != 3 or len({c for c, _ in f.corners}) != 3:
        raise NoMatchError("not a three-crossing trigon face")
    if not r3_slidable(d, f, pivot):
        raise NoMatchError("no strand of this trigon slides across that corner")
    R, kR = f.corners[pivot]
    P, kP = f.corners[(pivot + 1) % 3]
    Q, kQ = f.corners[(pivot + 2) % 3]
    slide_over = d.crossings[P].is_over_slot(kP + 1)
    axis = OVER_02 if slide_over else OVER_13  # slid strand lands on slots 0,2
    g = _arc_at(d, R, kR + 2)  # continuation past the pivot of Q's other strand
    h = _arc_at(d, R, kR + 3)  # continuation past the pivot of P's other strand
    # Past the pivot the other two strands have crossed each other, so the
    # slid strand meets them in reversed order: walking from the P side it
    # now crosses g first (new 0) and h second (new 1).
    bonds = [
        (("new", 0, 0), ("stump", P, (kP + 3) & 3)),
        (("new", 0, 2), ("new", 1, 0)),
        (("new", 1, 2), ("stump", Q, (kQ + 2) & 3)),
        (("stump", P, kP), ("stump", P, (kP + 2) & 3)),
        (("stump", Q, (kQ + 1) & 3), ("stump", Q, (kQ + 3) & 3)),
    ]
    if g == h:
        # the continuations form one loop at the pivot; the slid strand
        # crosses it twice and the piece between the cuts joins the two
        # carried crossings directly
        cuts = (g,)
        side_g = _end_side(d, g, 4 * R + ((kR + 2) & 3))
        bonds += [
            (("new", 0, 3), ("end", g, side_g)),
            (("new", 0, 1), ("new", 1, 1)),
            (("new", 1, 3), ("end", g, 1 - side_g)),
        ]
    else:
        cuts = (g, h)
        g_near = _end_side(d, g, 4 * R + ((kR + 2) & 3))
        h_near = _end_side(d, h, 4 * R + ((kR + 3) & 3))
        bonds += [
            (("new", 0, 1), ("end", g, 1 - g_near)),
            (("new", 0, 3), ("end", g, g_near)),
            (("new", 1, 1), ("end", h, 1 - h_near)),
            (("new", 1, 3), ("end", h, h_near)),
        ]
    out, idx = resew(d, remove={P, Q}, cuts=cuts, new_axes=(axis, axis), bonds=tuple(bonds))
    # new 0 inherits Q's strand pair, new 1 inherits P's
    idx = dict(idx)
    idx[P] = idx.pop(("new", 1))
    idx[Q] = idx.pop(("new", 0))
    return out, idx
