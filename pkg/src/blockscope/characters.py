"""Formal characters, distance between shapes, refinements, linkage tests.

The formal character of a shape (or arrow graph) is the multiset of linear
extensions of its arrows: permutations of the vertex residues in which i
precedes j for every arrow i -> j.  Two shapes sharing a character term is
the combinatorial stand-in for sharing a composition factor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .skew import (
    BWD,
    FWD,
    ArrowGraph,
    Belt,
    PShape,
    SkewError,
    arrow_graph,
    enumerate_belts,
    shape_from_arrow_graph,
)

DEFAULT_VERTEX_CAP = 10


class CharacterError(ValueError):
    """Mismatched content or an enumeration cap exceeded."""


@dataclass(frozen=True)
class FormalCharacter:
    """Sorted (sequence, multiplicity) pairs over residue tuples."""

    p: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def from_counter(cls, p: int, counts: Counter) -> "FormalCharacter":
        return cls(p, tuple(sorted(counts.items())))

    @property
    def support(self) -> frozenset[tuple[int, ...]]:
        return frozenset(seq for seq, _ in self.terms)

    @property
    def dimension(self) -> int:
        return sum(mult for _, mult in self.terms)

    def as_counter(self) -> Counter:
        return Counter(dict(self.terms))

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        if other.p != self.p:
            raise CharacterError("mismatched moduli")
        return FormalCharacter.from_counter(self.p, self.as_counter() + other.as_counter())

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "terms": [{"seq": list(seq), "mult": mult} for seq, mult in self.terms],
        }

    def __str__(self) -> str:
        bits = []
        for seq, mult in self.terms:
            body = "(" + ",".join(map(str, seq)) + ")"
            bits.append(body if mult == 1 else f"{mult}*{body}")
        return " + ".join(bits) if bits else "0"


def _as_graph(x: PShape | ArrowGraph) -> ArrowGraph:
    if isinstance(x, ArrowGraph):
        return x
    if isinstance(x, PShape):
        return arrow_graph(x)
    raise TypeError(f"expected a shape or arrow graph, got {type(x).__name__}")


@lru_cache(maxsize=None)
def _linear_extensions(graph: ArrowGraph) -> tuple[tuple[int, ...], ...]:
    """All topological orders of the arrow DAG, lexicographically sorted."""
    preds: dict[int, set[int]] = {v: set() for v in graph.vertices}
    for i, orient in graph.arrows:
        j = (i + 1) % graph.p
        if orient == FWD:
            preds[j].add(i)
        else:
            preds[i].add(j)
    out: list[tuple[int, ...]] = []
    placed: list[int] = []
    remaining = set(graph.vertices)

    def walk():
        if not remaining:
            out.append(tuple(placed))
            return
        for v in sorted(remaining):
            if preds[v] <= set(placed):
                remaining.remove(v)
                placed.append(v)
                walk()
                placed.pop()
                remaining.add(v)

    walk()
    return tuple(out)


def character_of(
    x: PShape | ArrowGraph, cap: int = DEFAULT_VERTEX_CAP
) -> FormalCharacter:
    """Formal character: every linear extension once."""
    graph = _as_graph(x)
    if len(graph.vertices) > cap:
        raise CharacterError(
            f"vertex cap exceeded: {len(graph.vertices)} > {cap}"
        )
    return FormalCharacter.from_counter(
        graph.p, Counter(_linear_extensions(graph))
    )


@dataclass(frozen=True)
class DistanceSet:
    """Residues where two shapes orient the same adjacency oppositely."""

    residues: frozenset[int]

    @property
    def d(self) -> int:
        return len(self.residues)


def _check_comparable(gx: ArrowGraph, gy: ArrowGraph) -> None:
    if gx.p != gy.p:
        raise CharacterError("mismatched moduli")
    if gx.vertices != gy.vertices:
        raise CharacterError("mismatched content: different residue sets")


def distance(x: PShape | ArrowGraph, y: PShape | ArrowGraph) -> DistanceSet:
    """The set D(X, Y) of edges carrying opposite arrows, and its size d."""
    gx, gy = _as_graph(x), _as_graph(y)
    _check_comparable(gx, gy)
    ax, ay = gx.arrow_map, gy.arrow_map
    clash = frozenset(i for i, o in ax.items() if i in ay and ay[i] != o)
    return DistanceSet(clash)


def union_arrows(
    x: PShape | ArrowGraph, y: PShape | ArrowGraph
) -> dict[int, str] | None:
    """Merged arrow map of two graphs, or None when an edge conflicts."""
    gx, gy = _as_graph(x), _as_graph(y)
    _check_comparable(gx, gy)
    merged = gx.arrow_map
    for i, o in gy.arrows:
        if merged.setdefault(i, o) != o:
            return None
    return merged


def _is_directed_cycle(p: int, arrows: dict[int, str]) -> bool:
    return len(arrows) == p and len(set(arrows.values())) == 1


def refinements(x: PShape | ArrowGraph) -> list[PShape] | list[Belt]:
    """Maximal shapes (or belts, in the circular case) extending x's arrows.

    Vacant edges are filled in every way; in the circular case the two
    uniformly oriented fillings are excluded as directed cycles.
    """
    return list(_refinements(_as_graph(x)))


@lru_cache(maxsize=None)
def _refinements(graph: ArrowGraph) -> tuple:
    base = graph.arrow_map
    vacant = [i for i in graph.edge_indices if i not in base]
    out: list = []
    for fill in product((FWD, BWD), repeat=len(vacant)):
        arrows = dict(base)
        arrows.update(zip(vacant, fill))
        if graph.circular:
            if _is_directed_cycle(graph.p, arrows):
                continue
            out.append(Belt(graph.p, graph.vertices, tuple(arrows.items())))
        else:
            full = ArrowGraph(graph.p, graph.vertices, tuple(arrows.items()))
            out.append(shape_from_arrow_graph(full))
    out.sort(key=lambda r: r.arrows if isinstance(r, ArrowGraph) else r.components)
    return tuple(out)


def character_sum_check(x: PShape | ArrowGraph) -> bool:
    """True iff ch(x) equals the multiset sum of its refinements' characters."""
    total = Counter()
    for ref in refinements(x):
        total += character_of(ref).as_counter()
    return total == character_of(x).as_counter()


def shares_term(x: PShape | ArrowGraph, y: PShape | ArrowGraph) -> bool:
    """True iff the two formal characters intersect."""
    gx, gy = _as_graph(x), _as_graph(y)
    _check_comparable(gx, gy)
    sx, sy = character_of(gx).support, character_of(gy).support
    if len(sy) < len(sx):
        sx, sy = sy, sx
    return any(t in sy for t in sx)


def linkage_test(x: PShape | ArrowGraph, y: PShape | ArrowGraph) -> bool:
    """Combinatorial criterion for sharing a character term.

    Proper residue subsets: distance zero.  Full circular content:
    distance zero and the union of the arrow graphs not a directed cycle.
    """
    gx, gy = _as_graph(x), _as_graph(y)
    _check_comparable(gx, gy)
    merged = union_arrows(gx, gy)
    if merged is None:
        return False
    if gx.circular and _is_directed_cycle(gx.p, merged):
        return False
    return True


def maximal_shapes(p: int, residues: frozenset[int]) -> list[PShape]:
    """All shapes on a proper residue subset with every adjacency oriented."""
    if len(residues) >= p:
        raise CharacterError("use belts for the full residue set")
    edges = [i for i in sorted(residues) if (i + 1) % p in residues]
    out = []
    for orients in product((FWD, BWD), repeat=len(edges)):
        graph = ArrowGraph(p, frozenset(residues), tuple(zip(edges, orients)))
        out.append(shape_from_arrow_graph(graph))
    out.sort(key=lambda s: s.components)
    return out


def unique_cover_check(
    p: int, residues: frozenset[int] | None = None, cap: int = DEFAULT_VERTEX_CAP
) -> bool:
    """Every permutation of the content lies in exactly one cover character.

    Covers are the maximal shapes on a proper residue subset, or all belts
    when ``residues`` is None (the full circular content).
    """
    if residues is None:
        covers = enumerate_belts(p)
        ground = tuple(range(p))
    else:
        covers = maximal_shapes(p, frozenset(residues))
        ground = tuple(sorted(residues))
    if len(ground) > cap:
        raise CharacterError(f"vertex cap exceeded: {len(ground)} > {cap}")
    counts = Counter()
    for cover in covers:
        counts.update(character_of(cover).support)
    return all(counts[perm] == 1 for perm in permutations(ground))
