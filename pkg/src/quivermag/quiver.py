"""Bound quiver input: parsing, validation, normalization, serialization.

A bound quiver is a finite directed multigraph together with monomial
relations: composable arrow sequences of length >= 2 whose product is set to
zero in the path algebra.  This module owns the textual and JSON formats, the
structural validation rules, and the finite-dimensionality test for the
presented algebra.

Text format (whitespace-insensitive, ``#`` starts a line comment)::

    quiver {
      vertices: 1 2 3;
      arrows: a: 1 -> 2; b: 2 -> 3;
      relations: b*a;
    }

Relations are written in composition order: ``b*a`` means "b after a", a path
that first traverses ``a`` and then ``b``.  The words ``vertices``, ``arrows``
and ``relations`` are reserved and cannot name vertices or arrows.

All types are immutable after construction; parsing and serialization are
pure functions, safe to share across threads.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_KEYWORDS = ("vertices", "arrows", "relations")


class QuiverError(ValueError):
    """Base class for malformed quiver input."""


class ParseError(QuiverError):
    """Syntax error, with 1-based line and column of the offending token."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class ValidationError(QuiverError):
    """Structurally well-formed input violating a quiver invariant."""


def _canonical_id(value: object) -> str:
    text = str(value)
    if not _ID_RE.match(text):
        raise ValidationError(f"invalid identifier {text!r} (allowed: [A-Za-z0-9_]+)")
    if text in _KEYWORDS:
        raise ValidationError(f"{text!r} is a reserved word and cannot be used as an identifier")
    return text


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str

    def __str__(self) -> str:
        return f"{self.label}: {self.source} -> {self.target}"


@dataclass(frozen=True)
class Path:
    """A composable arrow sequence, stored in traversal order.

    The empty sequence is the lazy path e_i at ``source == target == i``.
    Printed in composition order (rightmost factor traversed first), matching
    the relation syntax: the path that walks a then b prints as ``b*a``.
    """

    source: str
    arrows: tuple[str, ...]
    target: str

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        return "*".join(reversed(self.arrows))


class Quiver:
    """A finite directed multigraph with labelled arrows.

    Vertex order is declaration order and fixes the row/column order of every
    matrix computed downstream.
    """

    def __init__(self, vertices: Sequence[object], arrows: Iterable[object] = ()):
        self.vertices: tuple[str, ...] = tuple(_canonical_id(v) for v in vertices)
        if not self.vertices:
            raise ValidationError("a quiver needs at least one vertex")
        canon: list[Arrow] = []
        for a in arrows:
            if isinstance(a, Arrow):
                label, source, target = a.label, a.source, a.target
            else:
                label, source, target = a  # type: ignore[misc]
            canon.append(Arrow(_canonical_id(label), _canonical_id(source), _canonical_id(target)))
        self.arrows: tuple[Arrow, ...] = tuple(canon)

        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                raise ValidationError(f"duplicate vertex id {v!r}")
            seen.add(v)
        vertex_set = seen
        labels: set[str] = set()
        for a in self.arrows:
            if a.label in labels:
                raise ValidationError(f"duplicate arrow label {a.label!r}")
            labels.add(a.label)
            for endpoint in (a.source, a.target):
                if endpoint not in vertex_set:
                    raise ValidationError(f"unknown vertex {endpoint!r} in arrow {a}")

        self.vertex_index: dict[str, int] = {v: i for i, v in enumerate(self.vertices)}
        self.arrow_by_label: dict[str, Arrow] = {a.label: a for a in self.arrows}
        by_source: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in sorted(self.arrows, key=lambda a: a.label):
            by_source[a.source].append(a)
        self.arrows_by_source: dict[str, tuple[Arrow, ...]] = {v: tuple(lst) for v, lst in by_source.items()}

    def idempotent(self, vertex: str) -> Path:
        if vertex not in self.vertex_index:
            raise ValidationError(f"unknown vertex {vertex!r}")
        return Path(vertex, (), vertex)

    def path(self, labels: Sequence[str]) -> Path:
        """The path traversing the given arrow labels in order."""
        if not labels:
            raise ValidationError("a path of length 0 needs a vertex; use idempotent()")
        arrows = []
        for label in labels:
            arrow = self.arrow_by_label.get(str(label))
            if arrow is None:
                raise ValidationError(f"unknown arrow label {label!r}")
            arrows.append(arrow)
        for left, right in zip(arrows, arrows[1:]):
            if left.target != right.source:
                raise ValidationError(
                    f"non-composable sequence {'*'.join(reversed([a.label for a in arrows]))}: "
                    f"{left.label} ends at {left.target} but {right.label} starts at {right.source}"
                )
        return Path(arrows[0].source, tuple(a.label for a in arrows), arrows[-1].target)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def __repr__(self) -> str:
        return f"Quiver(vertices={list(self.vertices)!r}, arrows={[str(a) for a in self.arrows]!r})"


def _is_factor(needle: tuple[str, ...], hay: tuple[str, ...]) -> bool:
    n = len(needle)
    return any(hay[i:i + n] == needle for i in range(len(hay) - n + 1))


class BoundQuiver:
    """A quiver plus normalized monomial relations.

    Relations may be given as Path objects or as arrow-label sequences in
    traversal order.  Normalization deduplicates and removes any relation that
    contains another as a contiguous factor; the survivors are sorted by
    (length, labels), so equal presentations compare equal.
    """

    def __init__(self, quiver: Quiver, relations: Iterable[object] = ()):
        self.quiver = quiver
        raw: list[tuple[str, ...]] = []
        for rel in relations:
            labels = tuple(rel.arrows) if isinstance(rel, Path) else tuple(str(x) for x in rel)  # type: ignore[union-attr]
            path = quiver.path(labels) if labels else None
            if path is None or path.length < 2:
                shown = "*".join(reversed(labels)) if labels else "(empty)"
                raise ValidationError(f"relation {shown} has length < 2")
            raw.append(labels)
        kept: list[tuple[str, ...]] = []
        for seq in sorted(set(raw), key=lambda t: (len(t), t)):
            if not any(_is_factor(short, seq) for short in kept):
                kept.append(seq)
        self.relations: tuple[Path, ...] = tuple(quiver.path(seq) for seq in kept)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoundQuiver):
            return NotImplemented
        return self.quiver == other.quiver and self.relations == other.relations

    def __hash__(self) -> int:
        return hash((self.quiver, self.relations))

    def __repr__(self) -> str:
        return f"BoundQuiver({self.quiver!r}, relations={[str(r) for r in self.relations]!r})"


# ---------------------------------------------------------------------------
# Text format


@dataclass(frozen=True)
class _Token:
    kind: str  # "id", "{", "}", ":", ";", ",", "*", "->", "eof"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col, i, n = 1, 1, 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
        elif ch in " \t\r":
            col += 1
            i += 1
        elif ch == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif ch in "{}:;,*":
            tokens.append(_Token(ch, ch, line, col))
            col += 1
            i += 1
        elif ch == "-":
            if i + 1 < n and text[i + 1] == ">":
                tokens.append(_Token("->", "->", line, col))
                col += 2
                i += 2
            else:
                raise ParseError("expected '->'", line, col)
        else:
            match = re.match(r"[A-Za-z0-9_]+", text[i:])
            if not match:
                raise ParseError(f"unexpected character {ch!r}", line, col)
            word = match.group(0)
            tokens.append(_Token("id", word, line, col))
            col += len(word)
            i += len(word)
    tokens.append(_Token("eof", "", line, col))
    return tokens


@dataclass
class _RawQuiver:
    vertices: list[str]
    arrows: list[tuple[str, str, str]]
    relations: list[tuple[str, ...]]  # traversal order


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            wanted = what or f"'{kind}'"
            got = "end of input" if tok.kind == "eof" else f"{tok.text!r}"
            raise ParseError(f"expected {wanted}, got {got}", tok.line, tok.col)
        return self.advance()

    def parse(self) -> _RawQuiver:
        head = self.expect("id", "'quiver'")
        if head.text != "quiver":
            raise ParseError(f"expected 'quiver', got {head.text!r}", head.line, head.col)
        self.expect("{")
        raw = _RawQuiver([], [], [])
        saw_section = False
        while self.peek().kind != "}":
            self._parse_section(raw)
            saw_section = True
        closing = self.expect("}")
        if not saw_section:
            raise ParseError("expected at least one section", closing.line, closing.col)
        self.expect("eof", "end of input")
        return raw

    def _parse_section(self, raw: _RawQuiver) -> None:
        name = self.expect("id", "a section name")
        if name.text not in _KEYWORDS:
            raise ParseError(f"unknown section {name.text!r}", name.line, name.col)
        self.expect(":")
        if name.text == "vertices":
            if self.peek().kind != "id":
                tok = self.peek()
                raise ParseError("expected a vertex id", tok.line, tok.col)
            while self.peek().kind == "id":
                raw.vertices.append(self.advance().text)
            self.expect(";")
        elif name.text == "arrows":
            while True:
                label = self.expect("id", "an arrow label")
                self.expect(":")
                source = self.expect("id", "a source vertex")
                self.expect("->")
                target = self.expect("id", "a target vertex")
                self.expect(";")
                raw.arrows.append((label.text, source.text, target.text))
                nxt = self.peek()
                if nxt.kind != "id" or nxt.text in _KEYWORDS:
                    break
        else:
            while True:
                labels = [self.expect("id", "an arrow label").text]
                star = self.peek()
                if star.kind != "*":
                    raise ParseError("a relation needs at least two arrow labels joined by '*'",
                                     star.line, star.col)
                while self.peek().kind == "*":
                    self.advance()
                    labels.append(self.expect("id", "an arrow label").text)
                # composition order in the source text; traversal order internally
                raw.relations.append(tuple(reversed(labels)))
                if self.peek().kind == ",":
                    self.advance()
                    continue
                self.expect(";")
                break


# ---------------------------------------------------------------------------
# JSON format


def _parse_json(text: str) -> _RawQuiver:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ValidationError("top-level JSON value must be an object")
    unknown = set(doc) - {"vertices", "arrows", "relations"}
    if unknown:
        raise ValidationError(f"unknown JSON keys: {sorted(unknown)}")
    raw = _RawQuiver([], [], [])
    vertices = doc.get("vertices", [])
    if not isinstance(vertices, list):
        raise ValidationError("'vertices' must be an array")
    raw.vertices = [str(v) if isinstance(v, (str, int)) else _bad_json("vertex", v) for v in vertices]
    arrows = doc.get("arrows", [])
    if not isinstance(arrows, list):
        raise ValidationError("'arrows' must be an array")
    for entry in arrows:
        if not isinstance(entry, dict) or set(entry) != {"label", "source", "target"}:
            raise ValidationError("each arrow must be an object with keys label/source/target")
        raw.arrows.append((str(entry["label"]), str(entry["source"]), str(entry["target"])))
    relations = doc.get("relations", [])
    if not isinstance(relations, list):
        raise ValidationError("'relations' must be an array")
    for rel in relations:
        if not isinstance(rel, list):
            raise ValidationError("each relation must be an array of arrow labels in traversal order")
        raw.relations.append(tuple(str(x) for x in rel))
    return raw


def _bad_json(what: str, value: object) -> str:
    raise ValidationError(f"invalid {what}: {value!r}")


# ---------------------------------------------------------------------------
# Public parse/serialize API


def parse_quiver(text: str) -> BoundQuiver:
    """Parse the text grammar, or the JSON schema when the input starts with '{'."""
    return parse_quiver_with_warnings(text)[0]


def parse_quiver_with_warnings(text: str) -> tuple[BoundQuiver, list[str]]:
    """Like parse_quiver, also reporting relations dropped by normalization."""
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty input", 1, 1)
    raw = _parse_json(text) if stripped[0] == "{" else _Parser(text).parse()
    quiver = Quiver(raw.vertices, raw.arrows)
    bound = BoundQuiver(quiver, raw.relations)
    kept = {p.arrows for p in bound.relations}
    warnings: list[str] = []
    seen: set[tuple[str, ...]] = set()
    for seq in raw.relations:
        shown = "*".join(reversed(seq))
        if seq in seen:
            warnings.append(f"duplicate relation {shown} dropped")
            continue
        seen.add(seq)
        if seq not in kept:
            culprit = next(k for k in kept if _is_factor(k, seq))
            warnings.append(f"relation {shown} dropped: it contains {'*'.join(reversed(culprit))} as a factor")
    return bound, warnings


def quiver_json_dict(bq: BoundQuiver) -> dict:
    return {
        "vertices": list(bq.quiver.vertices),
        "arrows": [{"label": a.label, "source": a.source, "target": a.target} for a in bq.quiver.arrows],
        "relations": [list(p.arrows) for p in bq.relations],
    }


def serialize_quiver(bq: BoundQuiver, format: str = "text") -> str:
    """Canonical text or JSON form; parses back to an equal BoundQuiver."""
    if format == "json":
        return json.dumps(quiver_json_dict(bq), indent=2, sort_keys=True) + "\n"
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    lines = ["quiver {"]
    lines.append("  vertices: " + " ".join(bq.quiver.vertices) + ";")
    if bq.quiver.arrows:
        lines.append("  arrows: " + " ".join(f"{a};" for a in bq.quiver.arrows))
    if bq.relations:
        lines.append("  relations: " + ", ".join(str(p) for p in bq.relations) + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Finite-dimensionality


class ForbiddenFactorAutomaton:
    """Aho-Corasick matcher over arrow labels, with relations as patterns.

    Feed one label at a time with `step`; `is_dead` reports that the labels
    consumed so far end in some relation, i.e. the path is zero in the
    algebra.  State 0 is the start state.
    """

    def __init__(self, patterns: Iterable[Sequence[str]]):
        self._goto: list[dict[str, int]] = [{}]
        self._fail: list[int] = [0]
        self._dead: list[bool] = [False]
        for pattern in patterns:
            state = 0
            for symbol in pattern:
                nxt = self._goto[state].get(symbol)
                if nxt is None:
                    self._goto.append({})
                    self._fail.append(0)
                    self._dead.append(False)
                    nxt = len(self._goto) - 1
                    self._goto[state][symbol] = nxt
                state = nxt
            if pattern:
                self._dead[state] = True
        queue = deque(self._goto[0].values())  # root children keep fail = 0
        while queue:
            state = queue.popleft()
            for symbol, child in self._goto[state].items():
                queue.append(child)
                fallback = self._fail[state]
                while fallback and symbol not in self._goto[fallback]:
                    fallback = self._fail[fallback]
                self._fail[child] = self._goto[fallback].get(symbol, 0)
                self._dead[child] = self._dead[child] or self._dead[self._fail[child]]

    @property
    def size(self) -> int:
        return len(self._goto)

    def step(self, state: int, symbol: str) -> int:
        goto = self._goto
        while state and symbol not in goto[state]:
            state = self._fail[state]
        return goto[state].get(symbol, 0)

    def is_dead(self, state: int) -> bool:
        return self._dead[state]


def find_reachable_cycle(bq: BoundQuiver) -> tuple[Arrow, ...] | None:
    """Arrows of a relation-avoiding cycle reachable from some vertex, or None.

    The walk space is the product of the quiver's arrow transitions with the
    forbidden-factor automaton; a reachable cycle there is exactly a witness
    that the algebra has paths of unbounded length.
    """
    automaton = ForbiddenFactorAutomaton([p.arrows for p in bq.relations])
    quiver = bq.quiver
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[tuple[str, int], int] = {}
    depth: dict[tuple[str, int], int] = {}

    def successors(node: tuple[str, int]):
        vertex, state = node
        for arrow in quiver.arrows_by_source[vertex]:
            nxt = automaton.step(state, arrow.label)
            if not automaton.is_dead(nxt):
                yield arrow, (arrow.target, nxt)

    for start_vertex in quiver.vertices:
        root = (start_vertex, 0)
        if color.get(root, WHITE) != WHITE:
            continue
        color[root] = GRAY
        depth[root] = 0
        stack = [(root, successors(root))]
        edge_path: list[Arrow] = []
        while stack:
            node, it = stack[-1]
            advanced = False
            for arrow, nxt in it:
                status = color.get(nxt, WHITE)
                if status == GRAY:
                    return tuple(edge_path[depth[nxt]:] + [arrow])
                if status == WHITE:
                    color[nxt] = GRAY
                    depth[nxt] = len(stack)
                    edge_path.append(arrow)
                    stack.append((nxt, successors(nxt)))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()
                if edge_path:
                    edge_path.pop()
    return None


def is_finite_dimensional(bq: BoundQuiver) -> bool:
    """True iff only finitely many paths avoid every relation as a factor."""
    return find_reachable_cycle(bq) is None
