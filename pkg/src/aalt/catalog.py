"""Reference diagrams used by tests, fixtures, and degeneracy checks."""

from __future__ import annotations

from .diagram import Diagram, build_diagram, crossing_change


def unknot() -> Diagram:
    return build_diagram([], 1)


def unlink(k: int) -> Diagram:
    return build_diagram([], k)


def kink() -> Diagram:
    """One-crossing diagram of the unknot."""
    return build_diagram([[1, 1, 2, 2]])


def hopf() -> Diagram:
    """Alternating two-crossing diagram of the Hopf link."""
    return build_diagram([[1, 4, 2, 3], [3, 2, 4, 1]])


def changed_hopf() -> Diagram:
    """The Hopf diagram with one crossing changed: the unique connected
    almost alternating diagram with two dealternators; it depicts the
    two-component unlink."""
    return crossing_change(hopf(), 0)


def trefoil() -> Diagram:
    """Alternating three-crossing trefoil diagram."""
    return build_diagram([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]])


def figure_eight() -> Diagram:
    """Alternating four-crossing diagram of the figure-eight knot."""
    return build_diagram([[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]])


def solomon() -> Diagram:
    """Alternating four-crossing diagram of the (2,4) torus link."""
    from .classify import alternating_assignments

    shadow = build_diagram([[4, 8, 5, 1], [1, 5, 6, 2], [2, 6, 7, 3], [3, 7, 8, 4]])
    return alternating_assignments(shadow)[0]


def borromean() -> Diagram:
    """The standard alternating six-crossing diagram of the Borromean
    rings: three components, every face a trigon, all pairwise linking
    numbers zero."""
    return build_diagram(
        [
            [1, 2, 3, 4],
            [5, 6, 2, 7],
            [6, 8, 9, 3],
            [10, 11, 4, 9],
            [5, 12, 10, 8],
            [12, 7, 1, 11],
        ],
        over_axes=(1, 1, 1, 1, 0, 0),
    )
