"""Discharging laboratory for 4-regular plane graphs.

Mechanizes the combinatorial skeleton of the intersection-graph argument:
the Euler-forced face-charge identity, the necessary conditions a splitting
sphere's intersection graph would have to satisfy, the block taxonomy with
its weight formulas, charge-conserving transfers, and a bounded search for
admissible graphs (expected to find none, consistent with the main
theorem).

The search encodes only the mechanically checkable necessary conditions;
the human case analysis that finishes the proof (replacing boundary curves
on the link diagram) is out of scope and documented as such.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import maps
from .errors import BoundExceededError, InvalidGraphError, UngroupableFaceError, UnknownBlockError

MAX_ENUMERATION_VERTICES = 8


@dataclass(frozen=True)
class PlaneGraph4:
    """Connected 4-regular plane multigraph with colored vertices.

    ``table`` lists each vertex's four incident edge labels in
    counterclockwise order (every label appears exactly twice overall);
    ``black`` marks the vertices of the distinguished bubble class;
    ``bubble`` optionally groups vertices into bubbles (defaults to one
    bubble per white vertex and a shared bubble for the black class).
    """

    table: tuple[tuple[int, int, int, int], ...]
    black: frozenset[int] = frozenset()
    bubble: tuple[int, ...] | None = None

    @property
    def n_vertices(self) -> int:
        return len(self.table)

    def bubbles(self) -> tuple[int, ...]:
        if self.bubble is not None:
            return self.bubble
        out = []
        nxt = 1
        for v in range(self.n_vertices):
            out.append(0 if v in self.black else nxt)
            if v not in self.black:
                nxt += 1
        return tuple(out)


def build_plane_graph(table, black=frozenset(), bubble=None) -> PlaneGraph4:
    rows = [tuple(r) for r in table]
    if any(len(r) != 4 for r in rows):
        raise InvalidGraphError("every vertex needs exactly 4 slots")
    counts: dict = {}
    for r in rows:
        for label in r:
            counts[label] = counts.get(label, 0) + 1
    if any(v != 2 for v in counts.values()):
        raise InvalidGraphError("every edge label must occur exactly twice")
    g = PlaneGraph4(tuple(rows), frozenset(black), tuple(bubble) if bubble else None)
    p = pairing(g)
    if len(maps.vertex_components(p, g.n_vertices)) != 1:
        raise InvalidGraphError("graph must be connected")
    if not maps.is_planar(p, g.n_vertices):
        raise InvalidGraphError("rotation system does not embed in the sphere")
    if not g.black <= set(range(g.n_vertices)):
        raise InvalidGraphError("black vertices out of range")
    return g


def pairing(g: PlaneGraph4) -> dict[int, int]:
    ends: dict[int, list[int]] = {}
    for v, row in enumerate(g.table):
        for s, label in enumerate(row):
            ends.setdefault(label, []).append(4 * v + s)
    out = {}
    for a, b in ends.values():
        out[a] = b
        out[b] = a
    return out


def graph_faces(g: PlaneGraph4) -> list[tuple[tuple[int, int], ...]]:
    """Faces as corner lists (vertex, corner index)."""
    return [
        tuple((dart >> 2, (dart - 1) & 3) for dart in orbit)
        for orbit in maps.face_orbits(pairing(g), g.n_vertices)
    ]


def face_census(g: PlaneGraph4) -> dict[int, int]:
    census: dict[int, int] = {}
    for f in graph_faces(g):
        census[len(f)] = census.get(len(f), 0) + 1
    return census


def verify_euler_identity(g: PlaneGraph4) -> bool:
    """Sum of (degree - 4) over all faces equals -8: forced by the Euler
    formula for every connected 4-regular plane graph."""
    census = face_census(g)
    return sum((i - 4) * k for i, k in census.items()) == -8


def validate_intersection_constraints(g: PlaneGraph4) -> list[str]:
    """Necessary conditions for the graph to arise as the intersection
    pattern of a splitting sphere with the diagram's two spheres:

    (a) every face boundary passes the black bubble class exactly once;
    (b) no two degree-2 faces share an edge (would contradict reducedness);
    (c) no two degree-2 faces share a white vertex;
    (d) every face has even degree of at least two (side-parity projection
        of the almost alternating property).
    """
    violations: list[str] = []
    fs = graph_faces(g)
    p = pairing(g)
    for i, corners in enumerate(fs):
        black_visits = sum(1 for v, _ in corners if v in g.black)
        if black_visits != 1:
            violations.append(f"face {i} passes the black class {black_visits} times")
    # map each edge side to its face
    face_of_dart = {}
    for i, orbit in enumerate(maps.face_orbits(p, g.n_vertices)):
        for dart in orbit:
            face_of_dart[dart] = i
    deg = {i: len(corners) for i, corners in enumerate(fs)}
    seen_pairs = set()
    for dart, partner in p.items():
        f1, f2 = face_of_dart[dart], face_of_dart[partner]
        if deg[f1] == 2 and deg[f2] == 2 and f1 != f2:
            key = frozenset((f1, f2))
            if key not in seen_pairs:
                seen_pairs.add(key)
                violations.append(f"degree-2 faces {f1} and {f2} share an edge")
    bigons_at_vertex: dict[int, set[int]] = {}
    for i, corners in enumerate(fs):
        if len(corners) != 2:
            continue
        for v, _ in corners:
            bigons_at_vertex.setdefault(v, set()).add(i)
    for v, bigons in bigons_at_vertex.items():
        if v not in g.black and len(bigons) > 1:
            violations.append(
                f"degree-2 faces {sorted(bigons)} meet at white vertex {v}"
            )
    for i, corners in enumerate(fs):
        if len(corners) % 2 == 1 or len(corners) < 2:
            violations.append(f"face {i} has odd or degenerate degree {len(corners)}")
    return violations


@dataclass(frozen=True)
class Block:
    kind: str  # "T'", "U'", "X", "Y", "Z", "T", "U"
    faces: tuple[int, ...]
    weight: int
    degrees: tuple[int, ...] = ()


@dataclass
class ChargeLedger:
    """Integer charge per block with a conserving transfer log."""

    weights: dict[str, int]
    log: list[tuple[str, str, int]] = field(default_factory=list)

    def total(self) -> int:
        return sum(self.weights.values())

    def all_nonnegative(self) -> bool:
        return all(w >= 0 for w in self.weights.values())


def initial_charge(g: PlaneGraph4) -> ChargeLedger:
    """Per-face charge: degree minus 4; totals -8 on every valid graph."""
    return ChargeLedger(
        {f"f{i}": len(corners) - 4 for i, corners in enumerate(graph_faces(g))}
    )


def block_decomposition(g: PlaneGraph4) -> list[Block]:
    """Group faces into charge blocks.

    Every degree-2 face becomes part of a T' (isolated) or U' (pair at a
    black vertex); each such block absorbs its two adjacent faces of degree
    at least 4 into a Y (from T') or Z (from U') block; everything left is
    an X block.  Weights: w(X_i) = i-4, w(Y_ij) = i+j-10, w(Z_ij) = i+j-12;
    the negative cases Y_44 and Z_64 are the T and U blocks.
    """
    fs = graph_faces(g)
    p = pairing(g)
    deg = [len(c) for c in fs]
    face_of_dart = {}
    for i, orbit in enumerate(maps.face_orbits(p, g.n_vertices)):
        for dart in orbit:
            face_of_dart[dart] = i
    neighbors: dict[int, list[int]] = {i: [] for i in range(len(fs))}
    for dart, partner in p.items():
        if dart < partner:
            f1, f2 = face_of_dart[dart], face_of_dart[partner]
            neighbors[f1].append(f2)
            neighbors[f2].append(f1)
    bigons = [i for i in range(len(fs)) if deg[i] == 2]
    # pair bigons sharing a black vertex
    at_vertex: dict[int, list[int]] = {}
    for i in bigons:
        for v, _ in fs[i]:
            at_vertex.setdefault(v, []).append(i)
    paired: dict[int, int] = {}
    for v, members in at_vertex.items():
        members = sorted(set(members))
        if len(members) <= 1:
            continue
        if v not in g.black or len(members) > 2:
            raise UngroupableFaceError(
                f"degree-2 faces {members} cluster at vertex {v}"
            )
        a, b = members
        if a in paired or b in paired:
            raise UngroupableFaceError(f"degree-2 face in two pairs at vertex {v}")
        paired[a] = b
        paired[b] = a
    blocks: list[Block] = []
    claimed: dict[int, str] = {}

    def claim(face: int, kind: str) -> None:
        if face in claimed:
            raise UngroupableFaceError(
                f"face {face} demanded by both {claimed[face]} and {kind}"
            )
        claimed[face] = kind

    done = set()
    for i in bigons:
        if i in done:
            continue
        if i in paired:
            j = paired[i]
            done.update((i, j))
            flank = sorted(
                {f for b in (i, j) for f in neighbors[b] if f not in (i, j)}
            )
            if len(flank) != 2 or any(deg[f] < 4 for f in flank):
                raise UngroupableFaceError(
                    f"U' pair {(i, j)} lacks two distinct flanking faces of degree >= 4"
                )
            hi, lo = sorted((deg[flank[0]], deg[flank[1]]), reverse=True)
            for f in flank:
                claim(f, "Z")
            kind = "U" if (hi, lo) == (6, 4) else "Z"
            blocks.append(Block(kind, (i, j, *flank), hi + lo - 12, (hi, lo)))
        else:
            done.add(i)
            flank = sorted(set(neighbors[i]))
            if len(flank) != 2 or any(deg[f] < 4 for f in flank):
                raise UngroupableFaceError(
                    f"T' bigon {i} lacks two distinct flanking faces of degree >= 4"
                )
            hi, lo = sorted((deg[flank[0]], deg[flank[1]]), reverse=True)
            for f in flank:
                claim(f, "Y")
            kind = "T" if (hi, lo) == (4, 4) else "Y"
            blocks.append(Block(kind, (i, *flank), hi + lo - 10, (hi, lo)))
    for i in range(len(fs)):
        if deg[i] >= 4 and i not in claimed:
            blocks.append(Block("X", (i,), deg[i] - 4, (deg[i],)))
    return blocks


def ledger_from_blocks(blocks: list[Block]) -> ChargeLedger:
    return ChargeLedger(
        {f"{b.kind}{i}": b.weight for i, b in enumerate(blocks)}
    )


def discharge(ledger: ChargeLedger, transfers) -> ChargeLedger:
    """Apply charge transfers (from_block, to_block, amount); the total is
    conserved by construction and re-checked."""
    weights = dict(ledger.weights)
    log = list(ledger.log)
    before = sum(weights.values())
    for src, dst, amount in transfers:
        if src not in weights or dst not in weights:
            raise UnknownBlockError(f"transfer references unknown block {src!r} or {dst!r}")
        weights[src] -= amount
        weights[dst] += amount
        log.append((src, dst, amount))
    out = ChargeLedger(weights, log)
    if out.total() != before:
        raise AssertionError("discharge changed the total charge")
    return out


@dataclass(frozen=True)
class CandidateReport:
    census: dict[int, int]
    violations: tuple[str, ...]
    blocks: tuple[Block, ...] | None
    weight_notes: tuple[str, ...]

    @property
    def compliant(self) -> bool:
        return not self.violations and self.blocks is not None and not self.weight_notes


def analyze_candidate(g: PlaneGraph4) -> CandidateReport:
    """Run every implemented necessary condition against one graph."""
    violations = tuple(validate_intersection_constraints(g))
    census = face_census(g)
    blocks = None
    notes: list[str] = []
    if not violations:
        try:
            blocks = tuple(block_decomposition(g))
        except UngroupableFaceError as exc:
            notes.append(f"ungroupable: {exc}")
        if blocks is not None:
            if any(b.kind == "Z" and b.degrees == (4, 4) for b in blocks):
                # a Z_{4,4} block forces a smaller diagram, contradicting
                # minimality
                notes.append("contains Z_44")
            if all(b.weight >= 0 for b in blocks):
                notes.append("all block weights nonnegative, contradicting total -8")
    return CandidateReport(census, violations, blocks, tuple(notes))


def _canonical_colored(pairing_: dict[int, int], nverts: int, black: frozenset[int]):
    deco = lambda v, slot0, direction: (v in black,)
    return maps.canonical_key(pairing_, nverts, deco)


def enumerate_candidates(
    max_vertices: int, black_class_sizes=(1,), cap: int = MAX_ENUMERATION_VERTICES
):
    """Yield (graph, report) for every connected 4-regular plane graph with
    up to ``max_vertices`` vertices and a black vertex class of the given
    sizes, up to isomorphism."""
    if max_vertices > cap:
        raise BoundExceededError(f"{max_vertices} exceeds the configured cap {cap}")
    if max_vertices < 1:
        return
    levels = maps.enumerate_planar_maps(max_vertices)
    for n in range(1, max_vertices + 1):
        for p, nv in levels[n]:
            seen = set()
            from itertools import combinations

            for k in black_class_sizes:
                if k > nv:
                    continue
                for black in combinations(range(nv), k):
                    key = _canonical_colored(p, nv, frozenset(black))
                    if key in seen:
                        continue
                    seen.add(key)
                    table = _table_from_pairing(p, nv)
                    g = PlaneGraph4(tuple(table), frozenset(black))
                    yield g, analyze_candidate(g)


def _table_from_pairing(p: dict[int, int], nv: int) -> list[tuple[int, int, int, int]]:
    label: dict[int, int] = {}
    nxt = 1
    table = [[0] * 4 for _ in range(nv)]
    for dart in range(4 * nv):
        e = min(dart, p[dart])
        if e not in label:
            label[e] = nxt
            nxt += 1
        table[dart >> 2][dart & 3] = label[e]
    return [tuple(r) for r in table]


def random_plane_graph(nverts: int, rng: random.Random, black_size: int = 1) -> PlaneGraph4:
    p, nv = maps.random_planar_map(nverts, rng)
    black = frozenset(rng.sample(range(nv), min(black_size, nv)))
    return PlaneGraph4(tuple(_table_from_pairing(p, nv)), black)
