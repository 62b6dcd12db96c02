"""Kauffman bracket oracle: frozen values, multiplicativity, invariances."""

import random

import pytest

from aalt import catalog
from aalt.bracket import (
    LaurentPolynomial,
    kauffman_bracket,
    linking_matrix,
    loop_value,
    split_factor_check,
    writhe,
)
from aalt.diagram import build_diagram, crossing_change, disjoint_union, mirror
from aalt.errors import TooLargeError
from aalt.generate import random_diagram


def P(d):
    return LaurentPolynomial.from_dict(d)


def test_frozen_small_values():
    assert kauffman_bracket(catalog.unknot()) == P({0: 1})
    assert kauffman_bracket(catalog.unlink(2)) == loop_value()
    hopf = kauffman_bracket(catalog.hopf())
    assert hopf in (P({4: -1, -4: -1}),)
    tre = kauffman_bracket(catalog.trefoil())
    assert tre in (P({7: 1, 3: -1, -5: -1}), P({-7: 1, -3: -1, 5: -1}))


def test_mirror_inverts_variable():
    for ctor in (catalog.trefoil, catalog.figure_eight, catalog.changed_hopf):
        d = ctor()
        assert kauffman_bracket(mirror(d)) == kauffman_bracket(d).substitute_a_inverse()


def test_changed_trefoil_is_unknotted():
    """One crossing change turns the trefoil into an unknot diagram: the
    bracket collapses to a unit times a power of A."""
    d = crossing_change(catalog.trefoil(), 0)
    b = kauffman_bracket(d)
    assert len(b.coeffs) == 1 and b.coeffs[0][1] in (1, -1)


def test_split_factor_multiplicativity():
    assert split_factor_check(catalog.unknot(), catalog.unknot())
    assert split_factor_check(catalog.hopf(), catalog.trefoil())
    rng = random.Random(23)
    for _ in range(10):
        d1 = random_diagram(rng.randrange(1, 6), rng)
        d2 = random_diagram(rng.randrange(1, 6), rng)
        assert split_factor_check(d1, d2)


def test_bracket_size_limit():
    with pytest.raises(TooLargeError):
        kauffman_bracket(catalog.trefoil(), limit=2)


def test_empty_diagram_rejected():
    with pytest.raises(ValueError):
        kauffman_bracket(build_diagram([], 0))


def test_writhe_and_linking():
    assert abs(writhe(catalog.trefoil())) == 3
    lk = linking_matrix(catalog.hopf())
    assert abs(lk[0, 1]) == 1 and lk[0, 0] == 0 and lk[0, 1] == lk[1, 0]
    assert linking_matrix(catalog.unlink(2)).entries == ((0, 0), (0, 0))
    assert abs(linking_matrix(catalog.solomon())[0, 1]) == 2
    assert linking_matrix(catalog.borromean()).sorted_multiset() == (0,) * 9


def test_writhe_flips_under_mirror():
    for ctor in (catalog.trefoil, catalog.solomon):
        d = ctor()
        assert writhe(mirror(d)) == -writhe(d)


def test_laurent_arithmetic():
    a = P({2: 1, 0: -3})
    b = P({-2: 2})
    assert a + (-a) == LaurentPolynomial.zero()
    assert a * b == P({0: 2, -2: -6})
    assert (a * b) * b == a * (b * b)
    assert str(P({3: -1, 0: 2})) == "-1*A^3 + 2*A^0"
    assert a ** 2 == a * a
    with pytest.raises(ValueError):
        a ** -1


def test_disjoint_union_bracket_matches_delta_product():
    d = disjoint_union(catalog.trefoil(), catalog.hopf())
    assert kauffman_bracket(d) == loop_value() * kauffman_bracket(
        catalog.trefoil()
    ) * kauffman_bracket(catalog.hopf())
