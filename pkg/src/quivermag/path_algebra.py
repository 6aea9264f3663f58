"""Path basis of a bound quiver algebra: nonzero paths, Cartan data, projectives.

The nonzero paths — those avoiding every relation as a contiguous factor —
form a basis of the algebra.  They are enumerated breadth-first, each partial
path carrying its forbidden-factor automaton state so a candidate extension is
rejected the moment a relation completes, without rescanning suffixes.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .linalg import Matrix
from .modules import Representation
from .quiver import BoundQuiver, ForbiddenFactorAutomaton, Path, find_reachable_cycle


class InfiniteDimensionalError(ValueError):
    """The presented algebra has infinitely many nonzero paths."""


class PathBasis:
    """All nonzero paths, grouped by (source, target) and counted.

    Within each pair, paths are ordered by (length, lexicographic labels);
    `total_dim` is the dimension of the algebra.  Immutable and shareable.
    """

    def __init__(self, bound_quiver: BoundQuiver, by_pair: dict[tuple[str, str], tuple[Path, ...]],
                 total_dim: int):
        self.bound_quiver = bound_quiver
        self.by_pair = by_pair
        self.total_dim = total_dim

    def paths(self, source: str, target: str) -> tuple[Path, ...]:
        return self.by_pair.get((source, target), ())

    def count(self, source: str, target: str) -> int:
        return len(self.paths(source, target))

    def __repr__(self) -> str:
        return f"PathBasis(total_dim={self.total_dim})"


def enumerate_paths(bq: BoundQuiver) -> PathBasis:
    """Breadth-first enumeration of every relation-avoiding path.

    Raises InfiniteDimensionalError, naming a reachable cycle, when the
    algebra is not finite-dimensional.
    """
    cycle = find_reachable_cycle(bq)
    if cycle is not None:
        route = " -> ".join([cycle[0].source] + [a.target for a in cycle])
        labels = ", ".join(a.label for a in cycle)
        raise InfiniteDimensionalError(
            f"infinite-dimensional algebra: arrows {labels} form a relation-avoiding cycle {route}")
    quiver = bq.quiver
    automaton = ForbiddenFactorAutomaton([p.arrows for p in bq.relations])
    by_pair: dict[tuple[str, str], list[Path]] = {}
    queue: deque[tuple[Path, int]] = deque((quiver.idempotent(v), 0) for v in quiver.vertices)
    total = 0
    while queue:
        path, state = queue.popleft()
        by_pair.setdefault((path.source, path.target), []).append(path)
        total += 1
        for arrow in quiver.arrows_by_source[path.target]:
            nxt = automaton.step(state, arrow.label)
            if automaton.is_dead(nxt):
                continue
            queue.append((Path(path.source, path.arrows + (arrow.label,), arrow.target), nxt))
    frozen = {pair: tuple(paths) for pair, paths in by_pair.items()}
    return PathBasis(bq, frozen, total)


def cartan_matrix(pb: PathBasis) -> Matrix:
    """The square matrix whose (i, j) entry counts the paths from j to i.

    Entry (i, j) is also the dimension of the homomorphism space between the
    projectives at i and j, and column j is the dimension vector of the
    projective at vertex j.
    """
    vertices = pb.bound_quiver.quiver.vertices
    return Matrix([[pb.count(vj, vi) for vj in vertices] for vi in vertices], len(vertices))


def projective_module(bq: BoundQuiver, pb: PathBasis, vertex: str) -> Representation:
    """The indecomposable projective at a vertex: paths starting there.

    The space at vertex k is spanned by the basis paths from `vertex` to k;
    an arrow acts by post-composition, killing any product that completes a
    relation.
    """
    quiver = bq.quiver
    if vertex not in quiver.vertex_index:
        raise ValueError(f"unknown vertex {vertex!r}")
    index = quiver.vertex_index
    dims = tuple(pb.count(vertex, v) for v in quiver.vertices)
    position: dict[str, dict[Path, int]] = {
        v: {p: c for c, p in enumerate(pb.paths(vertex, v))} for v in quiver.vertices}
    maps: dict[str, Matrix] = {}
    for arrow in quiver.arrows:
        i, j = index[arrow.source], index[arrow.target]
        grid = [[Fraction(0)] * dims[i] for _ in range(dims[j])]
        for c, p in enumerate(pb.paths(vertex, arrow.source)):
            extended = Path(vertex, p.arrows + (arrow.label,), arrow.target)
            r = position[arrow.target].get(extended)
            if r is not None:
                grid[r][c] = Fraction(1)
        maps[arrow.label] = Matrix(grid, dims[i])
    return Representation(bq, dims, maps)
