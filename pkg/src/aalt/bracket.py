"""Exact link-diagram invariants used to audit rewrites: Kauffman bracket
state sum, writhe, and the linking matrix.  All arithmetic is integer
Laurent arithmetic in one variable A."""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram, component_of_arcs, crossing_sign, disjoint_union, orientations, pairing
from .errors import TooLargeError

STATE_SUM_LIMIT = 16


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial in A, stored as exponent -> coefficient
    with no zero coefficients."""

    coeffs: tuple[tuple[int, int], ...] = field(default=())

    @staticmethod
    def from_dict(d: dict[int, int]) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple(sorted((e, c) for e, c in d.items() if c)))

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentPolynomial":
        return LaurentPolynomial.from_dict({exp: coeff})

    @staticmethod
    def zero() -> "LaurentPolynomial":
        return LaurentPolynomial(())

    @staticmethod
    def one() -> "LaurentPolynomial":
        return LaurentPolynomial.from_dict({0: 1})

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = self.as_dict()
        for e, c in other.coeffs:
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial.from_dict(out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial.from_dict(out)

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = LaurentPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute_a_inverse(self) -> "LaurentPolynomial":
        """A -> A^-1, the bracket of the mirror diagram."""
        return LaurentPolynomial(tuple(sorted((-e, c) for e, c in self.coeffs)))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = [f"{c}*A^{e}" for e, c in sorted(self.coeffs, reverse=True)]
        return " + ".join(terms)


def loop_value() -> LaurentPolynomial:
    """delta = -A^2 - A^-2, the factor for each extra state loop."""
    return LaurentPolynomial.from_dict({2: -1, -2: -1})


def kauffman_bracket(d: Diagram, limit: int = STATE_SUM_LIMIT) -> LaurentPolynomial:
    """Bracket state sum: sum over smoothings of A^(a-b) delta^(loops-1).

    The 0-crossing unknot evaluates to 1; every extra circle multiplies by
    delta.  Exact over all 2^n states, so n is capped.
    """
    n = d.n_crossings
    if n > limit:
        raise TooLargeError(f"{n} crossings exceeds the state-sum limit {limit}")
    if n == 0 and d.circles == 0:
        raise ValueError("the empty diagram has no bracket")
    alpha = pairing(d)
    # smoothing slot-pairings: choice 0 joins (0,1),(2,3); choice 1 joins
    # (1,2),(3,0).  The A-smoothing is choice 0 exactly when slots 1,3 are
    # the overstrand.
    a_choice = [0 if c.over_axis == 1 else 1 for c in d.crossings]
    ndarts = 4 * n
    totals: dict[int, int] = {}
    delta = loop_value()
    for state in range(1 << n):
        parent = list(range(ndarts))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        a_count = 0
        for cid in range(n):
            bit = (state >> cid) & 1
            choice = a_choice[cid] ^ bit
            if bit == 0:
                a_count += 1
            base = 4 * cid
            if choice == 0:
                union(base, base + 1)
                union(base + 2, base + 3)
            else:
                union(base + 1, base + 2)
                union(base + 3, base)
        for x, y in alpha.items():
            if x < y:
                union(x, y)
        loops = len({find(x) for x in range(ndarts)}) + d.circles
        exp = 2 * a_count - n  # a - b with a + b = n
        key = (exp, loops)
        totals[key] = totals.get(key, 0) + 1
    result = LaurentPolynomial.zero()
    for (exp, loops), mult in totals.items():
        term = LaurentPolynomial.monomial(exp, mult) * delta ** (loops - 1)
        result = result + term
    return result


def writhe(d: Diagram) -> int:
    exits = orientations(d)
    return sum(crossing_sign(d, cid, exits) for cid in range(d.n_crossings))


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric integer matrix of pairwise linking numbers, zero diagonal,
    indexed by link components in canonical trace order."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def sorted_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(v for row in self.entries for v in row))


def linking_matrix(d: Diagram) -> LinkingMatrix:
    ncomp = len({v for v in component_of_arcs(d).values()}) + d.circles
    comp = component_of_arcs(d)
    exits = orientations(d)
    twice: list[list[int]] = [[0] * ncomp for _ in range(ncomp)]
    for cid, c in enumerate(d.crossings):
        under_exit, _ = exits[cid]
        under_comp = comp[c.slots[under_exit]]
        over_comp = comp[c.slots[(under_exit + 1) & 3]]
        if under_comp == over_comp:
            continue
        s = crossing_sign(d, cid, exits)
        twice[under_comp][over_comp] += s
        twice[over_comp][under_comp] += s
    for i in range(ncomp):
        for j in range(ncomp):
            if twice[i][j] % 2:
                raise AssertionError("inter-component crossing count must be even")
    return LinkingMatrix(tuple(tuple(v // 2 for v in row) for row in twice))


def split_factor_check(d1: Diagram, d2: Diagram, limit: int = STATE_SUM_LIMIT) -> bool:
    """Bracket multiplicativity over disjoint union with one extra delta;
    holds identically and doubles as an engine self-test."""
    combined = kauffman_bracket(disjoint_union(d1, d2), limit)
    expected = loop_value() * kauffman_bracket(d1, limit) * kauffman_bracket(d2, limit)
    return combined == expected
