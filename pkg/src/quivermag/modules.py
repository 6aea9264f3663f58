"""Finite-dimensional modules over a bound quiver algebra, as representations.

A module is a vector space at each vertex plus a linear map for each arrow,
with the composite along every relation equal to zero.  Homomorphisms are
per-vertex matrices commuting with all arrow maps; both conditions are
checked exactly at construction time.

All objects are immutable once built, and every function here is pure, so
computations on distinct modules can safely run concurrently.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, column_space_basis, hstack, kernel_basis, rank, solve
from .quiver import BoundQuiver


class Representation:
    """Vertex spaces (by dimension) and arrow maps over the rationals."""

    def __init__(self, bound_quiver: BoundQuiver, dims: Sequence[int],
                 arrow_maps: Mapping[str, Matrix], check: bool = True):
        self.bound_quiver = bound_quiver
        self.dims: tuple[int, ...] = tuple(int(d) for d in dims)
        self.arrow_maps: dict[str, Matrix] = dict(arrow_maps)
        if check:
            self._validate()

    def _validate(self) -> None:
        quiver = self.bound_quiver.quiver
        if len(self.dims) != len(quiver.vertices):
            raise ValueError(f"expected {len(quiver.vertices)} dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims):
            raise ValueError("negative dimension")
        if set(self.arrow_maps) != {a.label for a in quiver.arrows}:
            raise ValueError("arrow maps must cover exactly the arrows of the quiver")
        index = quiver.vertex_index
        for arrow in quiver.arrows:
            block = self.arrow_maps[arrow.label]
            want = (self.dims[index[arrow.target]], self.dims[index[arrow.source]])
            if (block.rows, block.cols) != want:
                raise ValueError(f"map for {arrow} has shape {block.rows}x{block.cols}, expected {want[0]}x{want[1]}")
        for relation in self.bound_quiver.relations:
            composite = self.arrow_maps[relation.arrows[0]]
            for label in relation.arrows[1:]:
                composite = self.arrow_maps[label] * composite
            if not composite.is_zero():
                raise ValueError(f"arrow maps violate the relation {relation}")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def dim_at(self, vertex: str) -> int:
        return self.dims[self.bound_quiver.quiver.vertex_index[vertex]]

    def apply_path(self, labels: Iterable[str], vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Act on a vector by the product of the arrow maps along a path."""
        out = tuple(Fraction(x) for x in vec)
        for label in labels:
            out = self.arrow_maps[label].apply(out)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.bound_quiver == other.bound_quiver and self.dims == other.dims
                and self.arrow_maps == other.arrow_maps)

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims!r})"


class ModuleMap:
    """A homomorphism of representations: one matrix block per vertex."""

    def __init__(self, domain: Representation, codomain: Representation,
                 blocks: Sequence[Matrix], check: bool = True):
        self.domain = domain
        self.codomain = codomain
        self.blocks: tuple[Matrix, ...] = tuple(blocks)
        if check:
            self._validate()

    def _validate(self) -> None:
        if self.domain.bound_quiver != self.codomain.bound_quiver:
            raise ValueError("domain and codomain live over different algebras")
        quiver = self.domain.bound_quiver.quiver
        if len(self.blocks) != len(quiver.vertices):
            raise ValueError(f"expected {len(quiver.vertices)} blocks, got {len(self.blocks)}")
        for i, block in enumerate(self.blocks):
            if (block.rows, block.cols) != (self.codomain.dims[i], self.domain.dims[i]):
                raise ValueError(f"block at vertex {quiver.vertices[i]} has the wrong shape")
        index = quiver.vertex_index
        for arrow in quiver.arrows:
            i, j = index[arrow.source], index[arrow.target]
            left = self.codomain.arrow_maps[arrow.label] * self.blocks[i]
            right = self.blocks[j] * self.domain.arrow_maps[arrow.label]
            if left != right:
                raise ValueError(f"naturality fails at arrow {arrow}")

    def block(self, vertex_index: int) -> Matrix:
        return self.blocks[vertex_index]

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        if other.codomain is not self.domain and other.codomain != self.domain:
            raise ValueError("composition mismatch")
        return ModuleMap(other.domain, self.codomain,
                         [a * b for a, b in zip(self.blocks, other.blocks)])

    def rank(self) -> int:
        return sum(rank(block) for block in self.blocks)

    def is_zero(self) -> bool:
        return all(block.is_zero() for block in self.blocks)

    def __repr__(self) -> str:
        return f"ModuleMap({self.domain.dims!r} -> {self.codomain.dims!r})"


def zero_module(bq: BoundQuiver) -> Representation:
    n = len(bq.quiver.vertices)
    maps = {a.label: Matrix.zeros(0, 0) for a in bq.quiver.arrows}
    return Representation(bq, (0,) * n, maps)


def simple_module(bq: BoundQuiver, vertex: str) -> Representation:
    """The one-dimensional module supported at a single vertex."""
    quiver = bq.quiver
    if vertex not in quiver.vertex_index:
        raise ValueError(f"unknown vertex {vertex!r}")
    dims = tuple(1 if v == vertex else 0 for v in quiver.vertices)
    index = quiver.vertex_index
    maps = {a.label: Matrix.zeros(dims[index[a.target]], dims[index[a.source]])
            for a in quiver.arrows}
    return Representation(bq, dims, maps)


def direct_sum(bq: BoundQuiver, summands: Sequence[Representation]) -> Representation:
    """Block-diagonal direct sum; the empty sum is the zero module."""
    if not summands:
        return zero_module(bq)
    if any(s.bound_quiver != bq for s in summands):
        raise ValueError("summands live over different algebras")
    quiver = bq.quiver
    index = quiver.vertex_index
    dims = tuple(sum(s.dims[i] for s in summands) for i in range(len(quiver.vertices)))
    maps: dict[str, Matrix] = {}
    for arrow in quiver.arrows:
        i, j = index[arrow.source], index[arrow.target]
        grid = [[Fraction(0)] * dims[i] for _ in range(dims[j])]
        row_off = col_off = 0
        for s in summands:
            block = s.arrow_maps[arrow.label]
            for r in range(block.rows):
                row = grid[row_off + r]
                for c in range(block.cols):
                    row[col_off + c] = block.entries[r][c]
            row_off += s.dims[j]
            col_off += s.dims[i]
        maps[arrow.label] = Matrix(grid, dims[i])
    return Representation(bq, dims, maps)


def radical(m: Representation) -> tuple[Representation, ModuleMap]:
    """The radical submodule: at each vertex, the sum of incoming arrow images.

    Returns the subrepresentation together with its inclusion map.
    """
    quiver = m.bound_quiver.quiver
    index = quiver.vertex_index
    n = len(quiver.vertices)
    incl_blocks: list[Matrix] = []
    for j in range(n):
        columns: list = []
        for arrow in quiver.arrows:
            if index[arrow.target] == j:
                columns.extend(m.arrow_maps[arrow.label].columns())
        stacked = Matrix.from_columns(columns, rows=m.dims[j])
        incl_blocks.append(Matrix.from_columns(column_space_basis(stacked), rows=m.dims[j]))
    rad_dims = tuple(block.cols for block in incl_blocks)
    rad_maps: dict[str, Matrix] = {}
    for arrow in quiver.arrows:
        i, j = index[arrow.source], index[arrow.target]
        image = m.arrow_maps[arrow.label] * incl_blocks[i]
        coords = solve(incl_blocks[j], image)
        assert coords is not None, "arrow image escaped the radical"
        rad_maps[arrow.label] = coords
    rad = Representation(m.bound_quiver, rad_dims, rad_maps)
    return rad, ModuleMap(rad, m, incl_blocks)


def top(m: Representation) -> tuple[int, ...]:
    """Multiplicity of each simple in m modulo its radical."""
    rad, _ = radical(m)
    return tuple(d - r for d, r in zip(m.dims, rad.dims))


def kernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    """Vertex-wise kernel of a homomorphism, with its inclusion into the domain."""
    m = f.domain
    quiver = m.bound_quiver.quiver
    index = quiver.vertex_index
    incl_blocks = [Matrix.from_columns(kernel_basis(f.blocks[i]), rows=m.dims[i])
                   for i in range(len(quiver.vertices))]
    ker_dims = tuple(block.cols for block in incl_blocks)
    ker_maps: dict[str, Matrix] = {}
    for arrow in quiver.arrows:
        i, j = index[arrow.source], index[arrow.target]
        image = m.arrow_maps[arrow.label] * incl_blocks[i]
        coords = solve(incl_blocks[j], image)
        assert coords is not None, "arrow image escaped the kernel"
        ker_maps[arrow.label] = coords
    ker = Representation(m.bound_quiver, ker_dims, ker_maps)
    return ker, ModuleMap(ker, m, incl_blocks)


def radical_contains(m: Representation, f: ModuleMap) -> bool:
    """True iff the image of f (a map into m) lies inside the radical of m."""
    _, incl = radical(m)
    for rad_block, f_block in zip(incl.blocks, f.blocks):
        if rank(hstack(rad_block, f_block)) != rad_block.cols:
            return False
    return True
