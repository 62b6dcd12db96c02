"""Diagram encodings: PD text, signed Gauss codes, a JSON mirror, and an
SVG rendering.

PD text looks like ``X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)`` with an optional
``O k`` token for ``k`` crossing-free circles.  Slot 0 of every crossing is
the incoming understrand and slots are listed counterclockwise, so parsed
crossings always carry the overstrand on slots 1,3.

Gauss files hold one component per line as passage tokens ``O3+``/``U3-``
(crossing id and sign); a line consisting of ``0`` is a free circle.
"""

from __future__ import annotations

import json
import re

from .diagram import (
    OVER_13,
    Diagram,
    build_diagram,
    canonical_diagram,
    crossing_sign,
    faces,
    orientations,
    oriented_strands,
    pairing,
)
from .classify import alternation_report
from .errors import NonPlanarError, NotRealizableError, ParseError

_X_TOKEN = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_O_TOKEN = re.compile(r"O\s+(\d+)")
_GAUSS_TOKEN = re.compile(r"([OU])(\d+)([+-])")


def parse_pd(text: str) -> Diagram:
    """Parse PD text into a validated diagram."""
    rest = text
    rows = []
    circles = 0
    pos = 0
    rest = text.strip()
    while rest:
        m = _X_TOKEN.match(rest)
        if m:
            rows.append(tuple(int(g) for g in m.groups()))
            rest = rest[m.end():].lstrip()
            continue
        m = _O_TOKEN.match(rest)
        if m:
            circles += int(m.group(1))
            rest = rest[m.end():].lstrip()
            continue
        raise ParseError(f"unparseable PD text near {rest[:24]!r}")
    del pos
    return build_diagram(rows, circles)


def pd_normal_form(d: Diagram) -> Diagram:
    """Canonical relabeling with every crossing rotated so slot 0 is the
    incoming understrand under the canonical component orientations."""
    canon = canonical_diagram(d)
    if canon.n_crossings == 0:
        return canon
    exits = orientations(canon)
    rows = []
    for cid, c in enumerate(canon.crossings):
        under_exit, _ = exits[cid]
        r = (under_exit + 2) & 3  # incoming under slot becomes slot 0
        rows.append(tuple(c.slots[(r + k) & 3] for k in range(4)))
    out = build_diagram(rows, canon.circles)
    assert all(c.over_axis == OVER_13 for c in out.crossings)
    return out


def emit_pd(d: Diagram) -> str:
    """Deterministic canonical PD text; composing with parse_pd is the
    identity on emitted text."""
    nf = pd_normal_form(d)
    parts = [f"X({c.slots[0]},{c.slots[1]},{c.slots[2]},{c.slots[3]})" for c in nf.crossings]
    if nf.circles:
        parts.append(f"O {nf.circles}")
    return " ".join(parts) if parts else "O 0"


def to_json_obj(d: Diagram) -> dict:
    nf = pd_normal_form(d)
    return {"crossings": [list(c.slots) for c in nf.crossings], "circles": nf.circles}


def from_json_obj(obj: dict) -> Diagram:
    try:
        return build_diagram(obj.get("crossings", []), obj.get("circles", 0))
    except (TypeError, KeyError) as exc:
        raise ParseError(f"bad JSON diagram object: {exc}") from exc


def emit_json(d: Diagram) -> str:
    return json.dumps(to_json_obj(d))


def parse_json(text: str) -> Diagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from exc
    return from_json_obj(obj)


# ---------------------------------------------------------------------------
# Gauss codes


def parse_gauss(text: str) -> Diagram:
    """Parse a signed Gauss code; raises NotRealizableError when the code
    forces a rotation system of positive genus."""
    components = []
    circles = 0
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        if line == "0":
            circles += 1
            continue
        tokens = []
        rest = line
        while rest:
            m = _GAUSS_TOKEN.match(rest)
            if not m:
                raise ParseError(f"unparseable Gauss token near {rest[:16]!r}")
            tokens.append((m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1))
            rest = rest[m.end():].lstrip()
        components.append(tokens)
    # arity check: each crossing id twice, once O once U, consistent signs
    seen: dict[int, list] = {}
    for comp in components:
        for kind, cid, sign in comp:
            seen.setdefault(cid, []).append((kind, sign))
    for cid, occ in seen.items():
        if len(occ) != 2 or {k for k, _ in occ} != {"O", "U"}:
            raise ParseError(f"crossing {cid} must occur exactly once over, once under")
        if occ[0][1] != occ[1][1]:
            raise ParseError(f"crossing {cid} has inconsistent signs")
    # assign arc labels between consecutive passages and build slot tables
    slots: dict[int, list] = {cid: [None] * 4 for cid in seen}
    axes = {cid: OVER_13 for cid in seen}
    arc = 0
    for comp in components:
        n = len(comp)
        first_arc = arc + 1
        for i, (kind, cid, sign) in enumerate(comp):
            arc_in = arc if i > 0 else first_arc + n - 1
            arc_out = first_arc + i
            if kind == "U":
                slots[cid][0] = arc_in
                slots[cid][2] = arc_out
            else:
                if sign > 0:
                    slots[cid][1] = arc_in
                    slots[cid][3] = arc_out
                else:
                    slots[cid][3] = arc_in
                    slots[cid][1] = arc_out
            arc = first_arc + i
    table = [slots[cid] for cid in sorted(slots)]
    if any(x is None for row in table for x in row):
        raise ParseError("incomplete Gauss code")
    try:
        return build_diagram(table, circles, [axes[cid] for cid in sorted(slots)])
    except NonPlanarError as exc:
        raise NotRealizableError("signed Gauss code has no spherical realization") from exc


def emit_gauss(d: Diagram) -> str:
    """Signed Gauss code of the diagram under canonical orientations."""
    nf = pd_normal_form(d)
    exits = orientations(nf)
    lines = []
    for orbit in oriented_strands(nf):
        tokens = []
        for dart in orbit:
            cid, slot = dart >> 2, dart & 3
            kind = "O" if nf.crossings[cid].is_over_slot(slot) else "U"
            sign = "+" if crossing_sign(nf, cid, exits) > 0 else "-"
            tokens.append(f"{kind}{cid + 1}{sign}")
        lines.append(" ".join(tokens))
    lines.extend("0" for _ in range(nf.circles))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# SVG rendering


def emit_svg(d: Diagram, size: int = 480) -> str:
    """Planar rendering with under-strand gaps and highlighted
    dealternators.  Layout is a barycentric embedding of the subdivided
    shadow with the largest face as the outer boundary; combinatorial
    correctness, not aesthetics, is the contract."""
    import numpy as np

    nf = pd_normal_form(d)
    n = nf.n_crossings
    if n == 0:
        body = [
            f'<circle cx="{size/2 + 30*i}" cy="{size/2}" r="24" fill="none" stroke="black"/>'
            for i in range(nf.circles)
        ]
        return _svg_document(size, body)

    alpha = pairing(nf)
    # nodes: crossings 0..n-1, then two subdivision nodes per arc
    arcs = nf.arcs
    sub_base = {label: n + 2 * i for i, label in enumerate(arcs)}
    nnodes = n + 2 * len(arcs)
    adj: list[list[int]] = [[] for _ in range(nnodes)]
    arc_ends: dict[int, list[int]] = {}
    for cid, c in enumerate(nf.crossings):
        for slot, label in enumerate(c.slots):
            arc_ends.setdefault(label, []).append(4 * cid + slot)
    chains = {}
    for label, (x, y) in ((lb, sorted(ds)) for lb, ds in arc_ends.items()):
        s1, s2 = sub_base[label], sub_base[label] + 1
        chain = [x >> 2, s1, s2, y >> 2]
        chains[label] = (x, chain, y)
        for a, b in zip(chain, chain[1:]):
            adj[a].append(b)
            adj[b].append(a)
    # outer face: the one with the most corners
    outer = max(faces(nf), key=lambda f: f.degree)
    boundary: list[int] = []
    for c, k in outer.corners:
        dart = 4 * c + ((k + 1) & 3)
        label = nf.crossings[c].slots[(k + 1) & 3]
        x, chain, y = chains[label]
        path = chain if dart == x else list(reversed(chain))
        boundary.extend(path[:-1])
    m = len(boundary)
    pos = np.zeros((nnodes, 2))
    fixed = np.zeros(nnodes, dtype=bool)
    for i, node in enumerate(boundary):
        angle = 2 * np.pi * i / m
        pos[node] = [np.cos(angle), np.sin(angle)]
        fixed[node] = True
    free = [i for i in range(nnodes) if not fixed[i]]
    if free:
        index = {node: i for i, node in enumerate(free)}
        A = np.zeros((len(free), len(free)))
        b = np.zeros((len(free), 2))
        for node in free:
            nbrs = adj[node]
            A[index[node], index[node]] = len(nbrs)
            for nb in nbrs:
                if fixed[nb]:
                    b[index[node]] += pos[nb]
                else:
                    A[index[node], index[nb]] -= 1
        sol = np.linalg.lstsq(A, b, rcond=None)[0]
        for node in free:
            pos[node] = sol[index[node]]
    # map to viewport
    span = max(1e-9, float(np.abs(pos).max()))
    pts = (pos / span) * (size * 0.42) + size / 2

    def fmt(node):
        return f"{pts[node][0]:.1f},{pts[node][1]:.1f}"

    body = []
    for label in arcs:
        _, chain, _ = chains[label]
        body.append(
            f'<polyline points="{" ".join(fmt(v) for v in chain)}" fill="none" stroke="black" stroke-width="2"/>'
        )
    # overstrand casings: redraw the over diagonal with a white halo
    for cid, c in enumerate(nf.crossings):
        s = 1 if c.over_axis == OVER_13 else 0
        ends = []
        for slot in (s, s + 2):
            label = c.slots[slot & 3]
            x, chain, y = chains[label]
            nb = chain[1] if (4 * cid + (slot & 3)) == x else chain[2]
            mid = (pts[cid] + pts[nb]) / 2
            ends.append(mid)
        seg = f"{ends[0][0]:.1f},{ends[0][1]:.1f} {pts[cid][0]:.1f},{pts[cid][1]:.1f} {ends[1][0]:.1f},{ends[1][1]:.1f}"
        body.append(f'<polyline points="{seg}" fill="none" stroke="white" stroke-width="7"/>')
        body.append(f'<polyline points="{seg}" fill="none" stroke="black" stroke-width="2"/>')
    try:
        rep = alternation_report(nf)
        dealts = rep.dealternators if not rep.is_alternating else ()
    except Exception:
        dealts = ()
    for cid in dealts:
        body.append(
            f'<circle cx="{pts[cid][0]:.1f}" cy="{pts[cid][1]:.1f}" r="10" fill="none" stroke="red" stroke-width="2" class="dealternator"/>'
        )
    for i in range(nf.circles):
        body.append(
            f'<circle cx="{30 + 26*i}" cy="30" r="12" fill="none" stroke="black" stroke-width="2"/>'
        )
    return _svg_document(size, body)


def _svg_document(size: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    )
    return "\n".join([head, f'<rect width="{size}" height="{size}" fill="white"/>'] + body + ["</svg>"])
