"""Configurable non-reduced patterns and their reducing moves.

The two non-reduced configurations live in a JSON rules file so they can be
corrected without code changes.  A rule has a pattern (matched at the
dealternator), a verdict tag, and a move given as primitive slide/pull
steps that the engine replays; every replayed step checks its own
precondition, so a misconfigured move fails loudly instead of producing a
wrong diagram.

Two pattern types are supported:

``fragment``
    a little slot table with wildcard over/under: named crossings, arc
    labels (those used twice are internal, the rest are boundary markers),
    optional face constraints; matched up to rotation and reflection.

``guarded_slide``
    a trigon at the dealternator together with a pivot and a bigon such
    that sliding then pulling yields a connected almost alternating diagram
    with exactly one dealternator; the guard is verified on a scratch copy
    during matching, so a match certifies the move's postconditions.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources

from . import moves
from .classify import alternation_report
from .diagram import Diagram, faces, shadow_components
from .errors import AaltError, NoMatchError

DEFAULT_RULES_RESOURCE = "default_rules.json"
RULES_ENV_VAR = "AALT_RULES"


@dataclass(frozen=True)
class RuleMatch:
    rule: str
    verdict: str
    crossings: tuple[tuple[str, int], ...]
    data: tuple = ()

    def binding(self) -> dict[str, int]:
        return dict(self.crossings)


@dataclass(frozen=True)
class ReducednessVerdict:
    kind: str  # "reduced" | "diagram_I" | "diagram_II"
    match: RuleMatch | None = None

    @property
    def is_reduced(self) -> bool:
        return self.kind == "reduced"


class RuleSet:
    def __init__(self, spec: list[dict]):
        self.spec = spec
        for rule in spec:
            if rule.get("verdict") not in ("I", "II"):
                raise ValueError(f"rule {rule.get('name')} has no I/II verdict")

    @staticmethod
    def default() -> "RuleSet":
        override = os.environ.get(RULES_ENV_VAR)
        if override:
            return RuleSet.load(override)
        text = resources.files("aalt.data").joinpath(DEFAULT_RULES_RESOURCE).read_text()
        return RuleSet(json.loads(text))

    @staticmethod
    def load(path: str) -> "RuleSet":
        with open(path) as fh:
            return RuleSet(json.load(fh))

    def first_match(self, d: Diagram, dealternator: int) -> RuleMatch | None:
        for rule in self.spec:
            m = match_rule(d, dealternator, rule)
            if m is not None:
                return m
        return None

    def rule_named(self, name: str) -> dict:
        for rule in self.spec:
            if rule["name"] == name:
                return rule
        raise KeyError(name)


def match_rule(d: Diagram, dealternator: int, rule: dict) -> RuleMatch | None:
    pattern = rule["pattern"]
    if pattern["type"] == "fragment":
        found = _match_fragment(d, dealternator, pattern)
        if found is None:
            return None
        return RuleMatch(rule["name"], rule["verdict"], tuple(sorted(found.items())))
    if pattern["type"] == "guarded_slide":
        found = _match_guarded_slide(d, dealternator, pattern)
        if found is None:
            return None
        corners, pivot, bigon = found
        return RuleMatch(
            rule["name"],
            rule["verdict"],
            (("pivot", corners[pivot][0]),),
            (corners, pivot, bigon),
        )
    raise ValueError(f"unknown pattern type {pattern['type']}")


def _match_fragment(d: Diagram, dealternator: int, pattern: dict) -> dict[str, int] | None:
    frags = pattern["crossings"]
    anchors = [f for f in frags if f.get("dealternator")]
    if len(anchors) != 1:
        raise ValueError("fragment needs exactly one dealternator anchor")
    face_arcsets = None
    if pattern.get("faces"):
        face_arcsets = [
            (frozenset(fc["arcs"]), fc["degree"]) for fc in pattern["faces"]
        ]
    internal = {
        label
        for label in [a for f in frags for a in f["slots"]]
        if sum(a == label for f in frags for a in f["slots"]) == 2
    }
    real_faces = faces(d)

    def face_arcs(f) -> frozenset:
        return frozenset(
            d.crossings[c].slots[(k + 1) & 3] for c, k in f.corners
        )

    def check_faces(binding_arcs: dict) -> bool:
        if face_arcsets is None:
            return True
        for arcset, degree in face_arcsets:
            want = frozenset(binding_arcs[a] for a in arcset)
            if not any(
                f.degree == degree and face_arcs(f) == want for f in real_faces
            ):
                return False
        return True

    order = anchors + [f for f in frags if not f.get("dealternator")]

    def extend(i: int, cmap: dict, amap: dict, direction: int):
        if i == len(order):
            return dict(cmap) if check_faces(amap) else None
        frag = order[i]
        candidates = (
            [dealternator] if frag.get("dealternator") else range(d.n_crossings)
        )
        for cid in candidates:
            if cid in cmap.values():
                continue
            for rot in range(4):
                slots = d.crossings[cid].slots
                trial = dict(amap)
                ok = True
                for k, label in enumerate(frag["slots"]):
                    arc = slots[(rot + direction * k) & 3]
                    if label in internal:
                        if label in trial and trial[label] != arc:
                            ok = False
                            break
                        trial[label] = arc
                    else:
                        trial.setdefault(label, arc)
                if not ok:
                    continue
                # internal labels must bind distinct arcs matching both ends
                bound = [trial[a] for a in internal if a in trial]
                if len(set(bound)) != len(bound):
                    continue
                cmap[frag["name"]] = cid
                res = extend(i + 1, cmap, trial, direction)
                if res is not None:
                    return res
                del cmap[frag["name"]]
        return None

    directions = (1, -1) if pattern.get("match_mirror", True) else (1,)
    for direction in directions:
        res = extend(0, {}, {}, direction)
        if res is not None:
            return res
    return None


def _match_guarded_slide(d: Diagram, dealternator: int, pattern: dict):
    """First (trigon at the dealternator, pivot, bigon) whose slide + pull
    yields a connected almost alternating diagram with one dealternator."""
    for f in moves.trigon_faces(d):
        corner_ids = [c for c, _ in f.corners]
        if dealternator not in corner_ids:
            continue
        for pivot in range(3):
            if f.corners[pivot][0] == dealternator:
                continue  # the dealternator rides the slid strand
            if not moves.r3_slidable(d, f, pivot):
                continue
            try:
                slid, idx = moves.r3(d, f, pivot)
            except AaltError:
                continue
            for bf in moves.bigon_faces(slid):
                if not moves.bigon_is_cancellable(slid, bf):
                    continue
                try:
                    out = moves.r2_remove(slid, bf)
                except AaltError:
                    continue
                if shadow_components(out) != 1:
                    continue
                rep = alternation_report(out)
                if rep.is_almost_alternating and len(rep.dealternators) == 1:
                    return (f.corners, pivot, bf.corners)
    return None


def apply_match(d: Diagram, match: RuleMatch, rules: RuleSet) -> Diagram:
    """Replay the matched rule's move steps on the diagram."""
    rule = rules.rule_named(match.rule)
    if rules.spec and rule["pattern"]["type"] == "guarded_slide":
        corners, pivot, bigon_corners = match.data
        face = next(
            (f for f in moves.trigon_faces(d) if f.corners == corners), None
        )
        if face is None:
            raise NoMatchError("trigon of the match no longer present")
        slid, idx = moves.r3(d, face, pivot)
        bf = next(
            (f for f in moves.bigon_faces(slid) if f.corners == bigon_corners),
            None,
        )
        if bf is None:
            raise NoMatchError("bigon of the match no longer present")
        return moves.r2_remove(slid, bf)
    binding = match.binding()
    out = d
    idx_map = {cid: cid for cid in range(d.n_crossings)}
    for step in rule["move"]:
        if step["op"] == "pull":
            c1, c2 = (idx_map[binding[name]] for name in step["crossings"])
            bf = next(
                (
                    f
                    for f in moves.bigon_faces(out)
                    if {c for c, _ in f.corners} == {c1, c2}
                    and moves.bigon_is_cancellable(out, f)
                ),
                None,
            )
            if bf is None:
                raise NoMatchError(
                    f"no cancellable bigon between {step['crossings']}"
                )
            from .surgery import resew

            removed = {c1, c2}
            out, new_idx = resew(
                out,
                remove=removed,
                bonds=(
                    (("stump", c1, 0), ("stump", c1, 2)),
                    (("stump", c1, 1), ("stump", c1, 3)),
                    (("stump", c2, 0), ("stump", c2, 2)),
                    (("stump", c2, 1), ("stump", c2, 3)),
                ),
            )
            idx_map = {
                old: new_idx[mid]
                for old, mid in idx_map.items()
                if mid in new_idx
            }
        elif step["op"] == "slide":
            names = step["trigon"]
            want = {idx_map[binding[n]] for n in names}
            pivot_id = idx_map[binding[step["pivot"]]]
            face = next(
                (
                    f
                    for f in moves.trigon_faces(out)
                    if {c for c, _ in f.corners} == want
                ),
                None,
            )
            if face is None:
                raise NoMatchError("trigon named by the move is not a face")
            pivot = next(
                i for i in range(3) if face.corners[i][0] == pivot_id
            )
            out, new_idx = moves.r3(out, face, pivot)
            idx_map = {
                old: new_idx[mid]
                for old, mid in idx_map.items()
                if mid in new_idx
            }
        else:
            raise ValueError(f"unknown move op {step['op']}")
    return out
