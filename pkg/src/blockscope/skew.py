"""Skew shapes, residue-labelled components, arrow graphs, and belts.

A p-shape is the multiset of connected components of a residue-filled skew
diagram; in the repetition-free setting it is equivalent to an arrow graph
on the content residues, where a forward arrow i -> i+1 records that the
box of residue i sits directly left of the box of residue i+1, and a
backward arrow i+1 -> i records that it sits directly below it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .partitions import (
    Node,
    Partition,
    ResidueMultiset,
    content,
)

FWD = "fwd"
BWD = "bwd"

DEFAULT_TABLEAU_CAP = 14
DEFAULT_BELT_CAP = 12


class SkewError(ValueError):
    """Invalid skew pair or out-of-scope diagram."""


@dataclass(frozen=True)
class SkewShape:
    """An ordered pair of nested partitions, outer over inner."""

    inner: Partition
    outer: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise SkewError(f"{self.inner!r} does not lie inside {self.outer!r}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def nodes(self) -> list[Node]:
        out = []
        for r in range(1, len(self.outer) + 1):
            for c in range(self.inner.part(r) + 1, self.outer.part(r) + 1):
                out.append((r, c))
        return out

    def p_content(self, p: int) -> ResidueMultiset:
        return ResidueMultiset.from_values(p, (content(n) for n in self.nodes()))

    def __str__(self) -> str:
        return f"{tuple(self.outer)}\\{tuple(self.inner)}"


def make_skew(inner: Partition, outer: Partition) -> SkewShape:
    """Build a skew shape, rejecting pairs that fail containment."""
    return SkewShape(Partition(inner), Partition(outer))


def skew_content(shape: SkewShape, p: int) -> ResidueMultiset:
    """Residue multiset of the skew diagram's nodes."""
    return shape.p_content(p)


def _has_two_by_two(nodes: set[Node]) -> bool:
    return any(
        (r, c + 1) in nodes and (r + 1, c) in nodes and (r + 1, c + 1) in nodes
        for r, c in nodes
    )


def _components(nodes: list[Node]) -> list[list[Node]]:
    """Edge-connected components of a node set."""
    todo = set(nodes)
    comps = []
    while todo:
        seed = todo.pop()
        comp = [seed]
        frontier = [seed]
        while frontier:
            r, c = frontier.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in todo:
                    todo.remove(nb)
                    comp.append(nb)
                    frontier.append(nb)
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class PShape:
    """Canonical multiset of ribbon components of a residue-filled diagram.

    Each component is a pair (start residue, step word): the start is the
    residue of the lowest-content box and the word walks the ribbon with
    'R' (next box to the right) and 'U' (next box above).
    """

    p: int
    components: tuple[tuple[int, str], ...]

    def __post_init__(self):
        if self.p < 2:
            raise SkewError(f"modulus must be at least 2, got {self.p}")
        for start, steps in self.components:
            if not 0 <= start < self.p:
                raise SkewError(f"component start {start} out of range")
            if any(s not in "RU" for s in steps):
                raise SkewError(f"bad step word {steps!r}")
        canonical = tuple(sorted(self.components))
        if canonical != self.components:
            object.__setattr__(self, "components", canonical)

    @property
    def size(self) -> int:
        return sum(len(steps) + 1 for _, steps in self.components)

    def residue_multiset(self) -> ResidueMultiset:
        values = []
        for start, steps in self.components:
            values.extend(start + j for j in range(len(steps) + 1))
        return ResidueMultiset.from_values(self.p, values)

    @property
    def in_scope(self) -> bool:
        """True when no residue repeats, so the arrow graph is defined."""
        return self.residue_multiset().is_repetition_free

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "components": [
                {"start": start, "steps": steps} for start, steps in self.components
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PShape":
        return cls(
            data["p"],
            tuple((c["start"], c["steps"]) for c in data["components"]),
        )

    def label(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def p_shape(shape: SkewShape, p: int) -> PShape:
    """Canonical p-shape of a skew diagram.

    Every connected component must be a ribbon; a 2x2 sub-block means the
    diagram is not a ribbon/belt shape and is rejected.
    """
    nodes = shape.nodes()
    node_set = set(nodes)
    if _has_two_by_two(node_set):
        raise SkewError(f"{shape} is not a ribbon/belt shape: contains a 2x2 block")
    comps = []
    for comp in _components(nodes):
        comp.sort(key=content)
        steps = []
        for (r1, c1), (r2, c2) in zip(comp, comp[1:]):
            if (r2, c2) == (r1, c1 + 1):
                steps.append("R")
            elif (r2, c2) == (r1 - 1, c1):
                steps.append("U")
            else:  # pragma: no cover - ruled out by the 2x2 check
                raise SkewError(f"{shape} has a non-ribbon component")
        comps.append((content(comp[0]) % p, "".join(steps)))
    return PShape(p, tuple(sorted(comps)))


@dataclass(frozen=True)
class ArrowGraph:
    """Directed graph on content residues with arrows between i and i+1.

    ``arrows`` maps edge index i (the pair {i, i+1} mod p) to 'fwd' for
    i -> i+1 or 'bwd' for i+1 -> i.  A circular graph (vertices all of
    Z/pZ) is never a directed cycle.
    """

    p: int
    vertices: frozenset[int]
    arrows: tuple[tuple[int, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        seen = set()
        for i, orient in self.arrows:
            if orient not in (FWD, BWD):
                raise SkewError(f"bad orientation {orient!r}")
            if i in seen:
                raise SkewError(f"duplicate edge {i}")
            seen.add(i)
            if i not in self.vertices or (i + 1) % self.p not in self.vertices:
                raise SkewError(f"edge {i} joins missing vertices")
        if not all(0 <= v < self.p for v in self.vertices):
            raise SkewError("vertices out of range")
        if self.circular and len(self.arrows) == self.p:
            if len({o for _, o in self.arrows}) == 1:
                raise SkewError("a circular arrow graph cannot be a directed cycle")

    @property
    def circular(self) -> bool:
        return len(self.vertices) == self.p

    @property
    def arrow_map(self) -> dict[int, str]:
        return dict(self.arrows)

    def edge(self, i: int) -> str | None:
        return self.arrow_map.get(i % self.p)

    @property
    def edge_indices(self) -> list[int]:
        """Indices i with both i and i+1 among the vertices."""
        return [i for i in sorted(self.vertices) if (i + 1) % self.p in self.vertices]

    @property
    def is_belt(self) -> bool:
        return self.circular and len(self.arrows) == self.p

    def to_json(self) -> dict:
        edges = {
            str(i): self.arrow_map.get(i, "none") for i in self.edge_indices
        }
        return {"p": self.p, "vertices": sorted(self.vertices), "edges": edges}

    @classmethod
    def from_json(cls, data: dict) -> "ArrowGraph":
        arrows = tuple(
            (int(i), o) for i, o in data["edges"].items() if o != "none"
        )
        return cls(data["p"], frozenset(data["vertices"]), arrows)

    def label(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class Belt(ArrowGraph):
    """A circular arrow graph with every edge present (never a cycle)."""

    def __post_init__(self):
        super().__post_init__()
        if not self.circular or len(self.arrows) != self.p:
            raise SkewError("a belt must carry an arrow on every edge")


def arrow_graph(shape: PShape) -> ArrowGraph:
    """Arrow graph of a repetition-free p-shape."""
    counts = shape.residue_multiset()
    if not counts.is_repetition_free:
        raise SkewError("shape has repeated residues; no arrow graph exists")
    arrows = []
    for start, steps in shape.components:
        for j, step in enumerate(steps):
            i = (start + j) % shape.p
            arrows.append((i, FWD if step == "R" else BWD))
    return ArrowGraph(shape.p, frozenset(counts.support), tuple(arrows))


def shape_from_arrow_graph(graph: ArrowGraph) -> PShape:
    """Inverse of ``arrow_graph``; rejects belts, which label no shape."""
    if graph.is_belt:
        raise SkewError("no shape corresponds to a belt")
    p = graph.p
    arrow_map = graph.arrow_map
    starts = [
        v
        for v in sorted(graph.vertices)
        if (v - 1) % p not in graph.vertices or (v - 1) % p not in arrow_map
    ]
    comps = []
    seen = 0
    for v in starts:
        steps = []
        cur = v
        while cur in arrow_map and (cur + 1) % p in graph.vertices:
            steps.append("R" if arrow_map[cur] == FWD else "U")
            cur = (cur + 1) % p
            if cur == v:  # pragma: no cover - cycle guard
                raise SkewError("arrow graph wraps onto itself")
        seen += len(steps) + 1
        comps.append((v, "".join(steps)))
    if seen != len(graph.vertices):  # pragma: no cover - consistency guard
        raise SkewError("arrow graph does not decompose into paths")
    return PShape(p, tuple(sorted(comps)))


def standard_tableaux_sequences(
    shape: SkewShape, p: int, cap: int = DEFAULT_TABLEAU_CAP
) -> list[tuple[int, ...]]:
    """Residue sequences of all standard fillings of the skew diagram.

    Entry j of a sequence is the residue of the box numbered j; one
    sequence per standard tableau, duplicates kept, lexicographic order.
    """
    n = shape.size
    if n > cap:
        raise SkewError(f"tableau enumeration cap exceeded: {n} > {cap}")
    nodes = shape.nodes()
    node_set = set(nodes)
    out: list[tuple[int, ...]] = []
    used: set[Node] = set()
    seq: list[int] = []

    def ready(node: Node) -> bool:
        r, c = node
        west, north = (r, c - 1), (r - 1, c)
        return (west not in node_set or west in used) and (
            north not in node_set or north in used
        )

    def walk():
        if len(seq) == n:
            out.append(tuple(seq))
            return
        candidates = [
            nd for nd in nodes if nd not in used and ready(nd)
        ]
        candidates.sort(key=lambda nd: (content(nd) % p, nd))
        for nd in candidates:
            used.add(nd)
            seq.append(content(nd) % p)
            walk()
            seq.pop()
            used.remove(nd)

    walk()
    out.sort()
    return out


def enumerate_belts(p: int, cap: int = DEFAULT_BELT_CAP) -> list[Belt]:
    """All belts for the given modulus, canonically ordered (2^p - 2 total)."""
    if p < 2:
        raise SkewError("modulus must be at least 2")
    if p > cap:
        raise SkewError(f"belt enumeration cap exceeded: {p} > {cap}")
    belts = []
    for orients in product((FWD, BWD), repeat=p):
        if len(set(orients)) == 1:
            continue
        belts.append(Belt(p, frozenset(range(p)), tuple(enumerate(orients))))
    belts.sort(key=lambda b: b.arrows)
    return belts
