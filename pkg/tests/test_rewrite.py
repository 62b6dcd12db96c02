"""Reducing moves, rule matching, and the decision procedure."""

import json
import random

import pytest

from aalt import catalog
from aalt.bracket import kauffman_bracket, linking_matrix
from aalt.classify import alternation_report, is_prime, is_reduced
from aalt.diagram import (
    crossing_change,
    is_isomorphic,
    link_components,
    shadow_components,
    split_shadow_pieces,
)
from aalt.errors import (
    NoMatchError,
    NotAlmostAlternatingError,
    PreconditionError,
)
from aalt.generate import random_almost_alternating
from aalt.rewrite import (
    decide_splittable,
    decide_trivial_multicomponent,
    reducing_move_I,
    reducing_move_II,
)
from aalt.rules import RuleSet


RULES = RuleSet.default()


def test_default_rules_load():
    names = [r["name"] for r in RULES.spec]
    assert names == ["dealternator-clasp", "dealternator-tongue"]


def test_changed_hopf_matches_clasp():
    d = catalog.changed_hopf()
    rep = alternation_report(d)
    m = RULES.first_match(d, rep.dealternators[0])
    assert m is not None and m.verdict == "I"
    out = reducing_move_I(d, m, RULES)
    assert out.n_crossings == 0 and out.circles == 2


def test_changed_trefoil_is_diagram_I():
    d = crossing_change(catalog.trefoil(), 0)
    verdict = is_reduced(d, RULES)
    assert verdict.kind == "diagram_I"
    out = reducing_move_I(d, verdict.match, RULES)
    assert out.n_crossings == 1
    assert alternation_report(out).is_alternating
    assert kauffman_bracket(out) == kauffman_bracket(d)


def test_reduced_fixture_matches_nothing():
    from aalt.codec import parse_pd

    with open("fixtures/reduced_prime.pd") as fh:
        d = parse_pd(fh.read())
    verdict = is_reduced(d, RULES)
    assert verdict.is_reduced


def test_is_reduced_preconditions():
    with pytest.raises(NotAlmostAlternatingError):
        is_reduced(catalog.trefoil(), RULES)
    from aalt.classify import connected_sum

    composite = connected_sum(
        crossing_change(catalog.trefoil(), 0), catalog.trefoil(), 1, 1
    )
    with pytest.raises(PreconditionError):
        is_reduced(composite, RULES)


def test_move_I_on_wrong_match_kind():
    d = crossing_change(catalog.borromean(), 0)
    verdict = is_reduced(d, RULES)
    assert verdict.kind == "diagram_II"
    with pytest.raises(NoMatchError):
        reducing_move_I(d, verdict.match, RULES)


def test_move_II_postconditions_changed_borromean():
    d = crossing_change(catalog.borromean(), 0)
    verdict = is_reduced(d, RULES)
    out = reducing_move_II(d, verdict.match, RULES)
    assert out.n_crossings == d.n_crossings - 2
    assert shadow_components(out) == 1
    rep = alternation_report(out)
    assert rep.is_almost_alternating and len(rep.dealternators) == 1
    assert kauffman_bracket(out) == kauffman_bracket(d)


def test_decide_alternating_inputs_no_moves():
    for ctor in (catalog.trefoil, catalog.hopf, catalog.figure_eight, catalog.borromean):
        verdict, trace = decide_splittable(ctor())
        assert verdict.kind == "non_splittable"
        assert verdict.certificate == "connected_alternating"
        assert trace.moves_applied() == 0


def test_decide_changed_hopf_splits():
    verdict, trace = decide_splittable(catalog.changed_hopf())
    assert verdict.kind == "splittable"
    assert verdict.exhibited is not None
    assert verdict.exhibited.n_crossings == 0
    assert verdict.exhibited.circles == 2
    assert len(verdict.sublinks) == 2


def test_decide_reduced_fixture():
    from aalt.codec import parse_pd

    for name in ("fixtures/reduced_prime.pd", "fixtures/reduced_prime_b.pd"):
        with open(name) as fh:
            d = parse_pd(fh.read())
        verdict, trace = decide_splittable(d)
        assert verdict.kind == "non_splittable"
        assert verdict.certificate == "reduced_prime_almost_alternating"
        assert trace.moves_applied() == 0


def test_decide_changed_borromean_split_structure():
    d = crossing_change(catalog.borromean(), 0)
    verdict, trace = decide_splittable(d)
    assert verdict.is_splittable
    moves = [s.move for s in trace.steps]
    assert "II" in moves
    # linking consistency: some bipartition of the original components with
    # those sizes has zero cross-linking
    lk = linking_matrix(d)
    assert lk.size == 3
    zero_partition = False
    for mask in range(1, 7):
        a = [i for i in range(3) if mask >> i & 1]
        b = [i for i in range(3) if not mask >> i & 1]
        if a and b and all(lk[i, j] == 0 for i in a for j in b):
            zero_partition = True
    assert zero_partition


def test_decide_rejects_bad_inputs():
    from aalt.diagram import disjoint_union

    with pytest.raises(PreconditionError):
        decide_splittable(disjoint_union(catalog.trefoil(), catalog.trefoil()))
    two_changes = crossing_change(crossing_change(catalog.borromean(), 0), 3)
    if not alternation_report(two_changes).is_almost_alternating:
        with pytest.raises(NotAlmostAlternatingError):
            decide_splittable(two_changes)


def test_decide_terminates_within_crossing_count():
    rng = random.Random(41)
    for _ in range(30):
        d = random_almost_alternating(rng.randrange(2, 8), rng)
        verdict, trace = decide_splittable(d)
        assert trace.moves_applied() <= d.n_crossings
        assert verdict.kind in ("non_splittable", "splittable", "partial_split")


def test_trace_jsonl_round_trip():
    d = crossing_change(catalog.borromean(), 2)
    verdict, trace = decide_splittable(d)
    lines = trace.to_jsonl().splitlines()
    assert lines
    for line in lines:
        rec = json.loads(line)
        assert set(rec) == {
            "move",
            "before_hash",
            "after_hash",
            "crossings_removed",
            "justification",
            "before_pd",
            "after_pd",
        }
        if rec["move"] in ("I", "II"):
            assert rec["crossings_removed"] == 2


def test_decide_trivial_multicomponent():
    d = crossing_change(catalog.borromean(), 0)
    assert link_components(d) == 3
    nontrivial, trace = decide_trivial_multicomponent(d)
    assert nontrivial
    # the trace never reaches the crossingless diagram of >= 3 circles
    for step in trace.steps:
        assert not (step.after_pd.startswith("O ") and step.after_pd >= "O 3")
    with pytest.raises(PreconditionError):
        decide_trivial_multicomponent(catalog.changed_hopf())


def test_splittable_verdicts_respect_linking():
    """No split ever separates components with nonzero pairwise linking:
    the exhibited split must match a zero-cross-linking bipartition."""
    rng = random.Random(77)
    checked = 0
    for _ in range(60):
        d = random_almost_alternating(rng.randrange(2, 7), rng)
        verdict, trace = decide_splittable(d)
        if not verdict.is_splittable or verdict.exhibited is None:
            continue
        if verdict.certificate == "splittable_connected_sum_factor":
            continue  # exhibition lives at factor level
        pieces = split_shadow_pieces(verdict.exhibited)
        sizes = sorted(link_components(p) for p in pieces)
        lk = linking_matrix(d)
        n = lk.size
        assert sum(sizes) == n
        found = False
        for mask in range(1, 1 << n):
            a = [i for i in range(n) if mask >> i & 1]
            b = [i for i in range(n) if not mask >> i & 1]
            if not b:
                continue
            if all(lk[i, j] == 0 for i in a for j in b):
                found = True
                break
        assert found, "split exhibited but every bipartition is linked"
        checked += 1
    assert checked >= 3
