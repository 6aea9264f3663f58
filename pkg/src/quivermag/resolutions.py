"""Minimal projective resolutions and Ext dimension tables.

A resolution is built by iterating projective covers of successive syzygies:
cover the module, take the kernel, cover the kernel, and so on, stopping when
the kernel vanishes or a degree bound is hit.  Because every cover is minimal
(its kernel sits inside the radical), applying Hom(-, S_j) kills all
differentials, so dim Ext^n(S_i, S_j) can be read off as the multiplicity of
the projective at j in degree n of the resolution of S_i.

Resolutions of distinct simples are independent; each one is computed
sequentially here, and every returned object is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, hstack, rref
from .modules import (ModuleMap, Representation, direct_sum, kernel, radical,
                      radical_contains, simple_module)
from .path_algebra import PathBasis, enumerate_paths, projective_module
from .quiver import BoundQuiver


class IncompleteExtTableError(ValueError):
    """An Ext table cut off at its bound cannot support alternating sums."""


def _cover_with_multiplicities(m: Representation, pb: PathBasis
                               ) -> tuple[Representation, ModuleMap, tuple[int, ...]]:
    quiver = m.bound_quiver.quiver
    rad, incl = radical(m)
    chosen: list[tuple[str, int]] = []  # (vertex, standard basis index in m at that vertex)
    for i, vertex in enumerate(quiver.vertices):
        d = m.dims[i]
        basis_block = incl.blocks[i]
        if d == basis_block.cols:
            continue
        pivots = rref(hstack(basis_block, Matrix.identity(d)))[1]
        chosen.extend((vertex, p - basis_block.cols) for p in pivots if p >= basis_block.cols)
    multiplicities = tuple(m.dims[i] - rad.dims[i] for i in range(len(quiver.vertices)))
    summands = [projective_module(m.bound_quiver, pb, vertex) for vertex, _ in chosen]
    cover = direct_sum(m.bound_quiver, summands)
    blocks: list[Matrix] = []
    for k, vk in enumerate(quiver.vertices):
        columns = []
        for vertex, unit_index in chosen:
            unit = tuple(1 if t == unit_index else 0 for t in range(m.dim_at(vertex)))
            for path in pb.paths(vertex, vk):
                columns.append(m.apply_path(path.arrows, unit))
        blocks.append(Matrix.from_columns(columns, rows=m.dims[k]))
    return cover, ModuleMap(cover, m, blocks), multiplicities


def projective_cover(m: Representation, pb: PathBasis | None = None
                     ) -> tuple[Representation, ModuleMap]:
    """The minimal projective surjecting onto m, with the surjection.

    The cover is the direct sum of one projective per top basis vector; the
    surjection sends each generator to a chosen preimage and extends along
    paths, so its kernel lies in the radical of the cover.
    """
    if pb is None:
        pb = enumerate_paths(m.bound_quiver)
    cover, surjection, _ = _cover_with_multiplicities(m, pb)
    return cover, surjection


@dataclass(frozen=True)
class MinimalResolution:
    """A minimal resolution by projectives, possibly cut off at a bound.

    `multiplicities[n][k]` counts copies of the projective at vertex k in
    degree n; `differentials[0]` is the augmentation onto `resolved`, and
    `differentials[n]` maps degree n to degree n-1.  `complete` records
    whether the final syzygy vanished within the bound.
    """

    multiplicities: tuple[tuple[int, ...], ...]
    differentials: tuple[ModuleMap, ...]
    terms: tuple[Representation, ...]
    resolved: Representation
    complete: bool

    @property
    def length(self) -> int:
        return len(self.multiplicities) - 1

    def is_exact(self) -> bool:
        """Exactness by rank counting, plus vanishing consecutive composites."""
        if not self.differentials:
            return self.resolved.is_zero()
        if self.differentials[0].rank() != self.resolved.total_dim:
            return False
        for n, diff in enumerate(self.differentials):
            has_next = n + 1 < len(self.differentials)
            if has_next and not diff.compose(self.differentials[n + 1]).is_zero():
                return False
            if not has_next and not self.complete:
                continue  # final syzygy unknown: nothing to compare against
            next_rank = self.differentials[n + 1].rank() if has_next else 0
            if diff.rank() + next_rank != self.terms[n].total_dim:
                return False
        return True

    def is_minimal(self) -> bool:
        """Every differential of positive degree lands inside the radical."""
        return all(radical_contains(self.terms[n - 1], self.differentials[n])
                   for n in range(1, len(self.differentials)))

    def grothendieck_identity_holds(self) -> bool:
        """Alternating sum of term dimension vectors equals the resolved one."""
        if not self.complete:
            raise ValueError("the alternating-sum identity needs a complete resolution")
        acc = [0] * len(self.resolved.dims)
        for n, term in enumerate(self.terms):
            sign = -1 if n % 2 else 1
            for i, d in enumerate(term.dims):
                acc[i] += sign * d
        return tuple(acc) == self.resolved.dims


def minimal_projective_resolution(m: Representation, max_degree: int,
                                  pb: PathBasis | None = None) -> MinimalResolution:
    """Iterated projective covers of syzygies, up to the given degree.

    Stops early (complete=True) when a syzygy vanishes; otherwise reports an
    honest cutoff with complete=False.  The zero module has the empty
    resolution.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    if m.is_zero():
        return MinimalResolution((), (), (), m, True)
    if pb is None:
        pb = enumerate_paths(m.bound_quiver)
    multiplicities: list[tuple[int, ...]] = []
    differentials: list[ModuleMap] = []
    terms: list[Representation] = []
    current = m
    inclusion: ModuleMap | None = None
    complete = False
    for _ in range(max_degree + 1):
        cover, surjection, mult = _cover_with_multiplicities(current, pb)
        differentials.append(surjection if inclusion is None else inclusion.compose(surjection))
        multiplicities.append(mult)
        terms.append(cover)
        syzygy, incl = kernel(surjection)
        if syzygy.is_zero():
            complete = True
            break
        current, inclusion = syzygy, incl
    return MinimalResolution(tuple(multiplicities), tuple(differentials), tuple(terms), m, complete)


@dataclass(frozen=True)
class ExtTable:
    """dim Ext^n(S_i, S_j) for all vertex pairs, up to a degree bound.

    `tables[n][i][j]` is the dimension in degree n.  When every resolution
    terminated within the bound, `complete` is True and `global_dimension`
    is exact; otherwise `global_dimension` is None and the bound is only a
    lower bound (reported as ">= bound").
    """

    vertices: tuple[str, ...]
    tables: tuple[tuple[tuple[int, ...], ...], ...]
    bound: int
    complete: bool
    global_dimension: int | None

    def entry(self, n: int, i: int, j: int) -> int:
        if n >= len(self.tables):
            return 0
        return self.tables[n][i][j]

    @property
    def max_degree(self) -> int:
        return len(self.tables) - 1

    def describe_global_dimension(self) -> str:
        return str(self.global_dimension) if self.complete else f">= {self.bound}"


def ext_table(bq: BoundQuiver, max_degree: int, pb: PathBasis | None = None) -> ExtTable:
    """Ext dimensions of all simple pairs, from minimal resolutions.

    dim Ext^n(S_i, S_j) is the degree-n multiplicity of the projective at j
    in the minimal resolution of S_i.
    """
    if pb is None:
        pb = enumerate_paths(bq)  # raises when infinite-dimensional
    vertices = bq.quiver.vertices
    resolutions = [minimal_projective_resolution(simple_module(bq, v), max_degree, pb=pb)
                   for v in vertices]
    complete = all(res.complete for res in resolutions)
    top_degree = max(len(res.multiplicities) for res in resolutions) - 1
    tables = tuple(
        tuple(res.multiplicities[n] if n < len(res.multiplicities) else (0,) * len(vertices)
              for res in resolutions)
        for n in range(top_degree + 1))
    return ExtTable(vertices, tables, max_degree, complete,
                    top_degree if complete else None)
