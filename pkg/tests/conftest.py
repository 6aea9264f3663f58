"""Shared fixtures, quiver builders, and independent brute-force oracles.

The oracles here deliberately avoid the library's own elimination and
automaton code paths: determinants by cofactor expansion, ranks by a separate
fraction-free sweep, and relation avoidance by explicit substring scans.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from quivermag.quiver import BoundQuiver, Quiver, parse_quiver

A2_TEXT = "quiver { vertices: 1 2; arrows: a: 1 -> 2; }"
KRONECKER_TEXT = "quiver { vertices: 1 2; arrows: a: 1 -> 2; b: 1 -> 2; }"
BOUND_CHAIN_TEXT = "quiver { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; relations: b*a; }"


@pytest.fixture
def a2() -> BoundQuiver:
    return parse_quiver(A2_TEXT)


@pytest.fixture
def kronecker() -> BoundQuiver:
    return parse_quiver(KRONECKER_TEXT)


@pytest.fixture
def bound_chain() -> BoundQuiver:
    return parse_quiver(BOUND_CHAIN_TEXT)


def truncated_cycle(n: int) -> BoundQuiver:
    """Single n-cycle with every length-n path set to zero."""
    vertices = [str(i + 1) for i in range(n)]
    arrows = [(f"a{i + 1}", vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    labels = [a[0] for a in arrows]
    relations = [tuple(labels[(start + k) % n] for k in range(n)) for start in range(n)]
    return BoundQuiver(Quiver(vertices, arrows), relations)


def random_acyclic(rng: random.Random, max_vertices: int = 8, max_arrows: int = 12) -> BoundQuiver:
    """A random acyclic quiver without relations; arrows only go forward."""
    n = rng.randint(1, max_vertices)
    m = 0 if n < 2 else rng.randint(0, max_arrows)
    arrows = []
    for k in range(m):
        i = rng.randrange(n - 1)
        j = rng.randrange(i + 1, n)
        arrows.append((f"a{k}", f"v{i}", f"v{j}"))
    return BoundQuiver(Quiver([f"v{i}" for i in range(n)], arrows))


@pytest.fixture(scope="session")
def acyclic_corpus() -> list[BoundQuiver]:
    """200 seeded random acyclic quivers, <= 8 vertices and <= 12 arrows."""
    rng = random.Random(20260810)
    return [random_acyclic(rng) for _ in range(200)]


# ---------------------------------------------------------------------------
# Oracles


def cofactor_determinant(grid: list[list[Fraction]]) -> Fraction:
    """Recursive cofactor expansion along the first row."""
    n = len(grid)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(grid[0][0])
    total = Fraction(0)
    for j, head in enumerate(grid[0]):
        if head == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in grid[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(head) * cofactor_determinant(minor)
    return total


def elimination_rank(rows: list[list[Fraction]]) -> int:
    """Row-count rank by plain forward elimination (no normalization)."""
    work = [list(map(Fraction, row)) for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][c] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(rank + 1, len(work)):
            if work[r][c] != 0:
                f = work[r][c] / work[rank][c]
                work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


def contains_factor(labels: tuple[str, ...], relations: list[tuple[str, ...]]) -> bool:
    return any(labels[i:i + len(rel)] == rel
               for rel in relations
               for i in range(len(labels) - len(rel) + 1))


def brute_force_paths(bq: BoundQuiver, max_length: int) -> list[tuple[str, tuple[str, ...], str]]:
    """All relation-avoiding paths up to max_length, by naive extension.

    Relation avoidance is a full substring scan on every candidate, entirely
    independent of the automaton-based production code.
    """
    relations = [p.arrows for p in bq.relations]
    by_source: dict[str, list] = {v: [] for v in bq.quiver.vertices}
    for a in sorted(bq.quiver.arrows, key=lambda a: a.label):
        by_source[a.source].append(a)
    found = [(v, (), v) for v in bq.quiver.vertices]
    level = list(found)
    for _ in range(max_length):
        nxt = []
        for source, labels, target in level:
            for arrow in by_source[target]:
                candidate = labels + (arrow.label,)
                if not contains_factor(candidate, relations):
                    nxt.append((source, candidate, arrow.target))
        if not nxt:
            break
        found.extend(nxt)
        level = nxt
    return found
