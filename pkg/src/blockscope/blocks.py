"""Combinatorial blocks: enumeration, classification, matrices, linkage.

A block is the set of skew pairs (lambda, mu) with prescribed p-cores of
lambda and mu.  Blocks whose content has no repeated residue are 'ribbon'
(n < p) or 'belt' (n = p) class and support the refinement matrix and
linkage machinery; all other blocks are enumerable but carry no matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .abacus import enumerate_block_partitions, is_core
from .characters import (
    _is_directed_cycle,
    distance,
    linkage_test,
    refinements,
    union_arrows,
)
from .partitions import Partition, ResidueMultiset
from .skew import PShape, SkewShape, enumerate_belts, make_skew, p_shape

DEFAULT_SIZE_CAP = 45

RIBBON = "ribbon"
BELT = "belt"
OTHER = "other"


class BlockError(ValueError):
    """Bad block parameters, empty block, or unsupported class."""


class TheoremViolation(RuntimeError):
    """A search guaranteed to succeed came up empty.

    Carries a structured witness; an instance of this in the wild would be
    a publishable counterexample, so it is never swallowed.
    """

    def __init__(self, message: str, report: dict):
        super().__init__(f"{message}\n{json.dumps(report, indent=2, default=str)}")
        self.report = report


@dataclass(frozen=True, eq=False)
class CombinatorialBlock:
    p: int
    l: int
    m: int
    inner_core: Partition
    outer_core: Partition
    members: tuple[SkewShape, ...]
    central_character: ResidueMultiset
    classification: str
    shapes: tuple[PShape, ...]
    shape_members: tuple[tuple[PShape, tuple[SkewShape, ...]], ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.m - self.l

    def members_with_shape(self, shape: PShape) -> tuple[SkewShape, ...]:
        for s, mem in self.shape_members:
            if s == shape:
                return mem
        raise BlockError(f"shape not in this block: {shape}")

    def __str__(self) -> str:
        return (
            f"block(p={self.p}, l={self.l}, m={self.m}, "
            f"inner={tuple(self.inner_core)}, outer={tuple(self.outer_core)}, "
            f"{self.classification}, {len(self.members)} members)"
        )


def classify(p: int, n: int, central: ResidueMultiset) -> str:
    if not central.is_repetition_free:
        return OTHER
    if n < p:
        return RIBBON
    if n == p:
        return BELT
    return OTHER


def enumerate_block(
    p: int,
    l: int,
    m: int,
    inner_core: Partition,
    outer_core: Partition,
    cap: int = DEFAULT_SIZE_CAP,
) -> CombinatorialBlock:
    """All skew pairs with the given cores, grouped by shape."""
    inner_core, outer_core = Partition(inner_core), Partition(outer_core)
    if not 0 <= l <= m:
        raise BlockError(f"need 0 <= l <= m, got l={l}, m={m}")
    if m > cap:
        raise BlockError(f"size cap exceeded: {m} > {cap}")
    for core, size, name in ((inner_core, l, "inner"), (outer_core, m, "outer")):
        if not is_core(core, p):
            raise BlockError(f"{name} core {tuple(core)} is not a {p}-core")

    def layer(core: Partition, size: int) -> list[Partition]:
        excess = size - core.size
        if excess < 0 or excess % p:
            return []
        return enumerate_block_partitions(core, p, excess // p)

    lambdas = layer(inner_core, l)
    mus = layer(outer_core, m)
    members = tuple(
        make_skew(la, mu) for mu in mus for la in lambdas if mu.contains(la)
    )
    if not members:
        raise BlockError(
            f"empty combinatorial block: p={p}, l={l}, m={m}, "
            f"cores {tuple(inner_core)} / {tuple(outer_core)}"
        )
    members = tuple(sorted(members, key=lambda s: (s.inner, s.outer)))
    central = members[0].p_content(p)
    assert all(s.p_content(p) == central for s in members)
    kind = classify(p, m - l, central)

    grouped: dict[PShape, list[SkewShape]] = {}
    if kind in (RIBBON, BELT):
        for s in members:
            grouped.setdefault(p_shape(s, p), []).append(s)
    shapes = tuple(sorted(grouped, key=lambda x: x.components))
    shape_members = tuple((x, tuple(grouped[x])) for x in shapes)
    return CombinatorialBlock(
        p, l, m, inner_core, outer_core, members, central, kind, shapes, shape_members
    )


@dataclass(frozen=True)
class DecompositionMatrix:
    """0/1 refinement incidence: rows are shapes, columns their covers."""

    rows: tuple[PShape, ...]
    cols: tuple
    entries: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def to_json(self) -> dict:
        return {
            "rows": [r.to_json() for r in self.rows],
            "cols": [c.to_json() for c in self.cols],
            "entries": [list(row) for row in self.entries],
        }

    def to_csv(self) -> str:
        def tag(x) -> str:
            return x.label()

        lines = ["," + ",".join(f'"{tag(c)}"' for c in self.cols)]
        for r, row in zip(self.rows, self.entries):
            lines.append(f'"{tag(r)}",' + ",".join(map(str, row)))
        return "\n".join(lines) + "\n"


def decomposition_matrix(
    block: CombinatorialBlock, keep_empty_columns: bool = False
) -> DecompositionMatrix:
    """Refinement matrix of a ribbon or belt block.

    Belt-block columns run over all belts; columns refining no row are
    pruned unless ``keep_empty_columns`` is set.  Ribbon columns are the
    maximal shapes refining at least one row.
    """
    if block.classification not in (RIBBON, BELT):
        raise BlockError(f"no matrix for class {block.classification!r} blocks")
    refmap = {x: set() for x in block.shapes}
    for x in block.shapes:
        for ref in refinements(x):
            refmap[x].add(ref)
    if block.classification == BELT:
        cols = list(enumerate_belts(block.p))
        if not keep_empty_columns:
            used = set().union(*refmap.values()) if refmap else set()
            cols = [c for c in cols if c in used]
        cols.sort(key=lambda c: c.arrows)
    else:
        used = set().union(*refmap.values()) if refmap else set()
        cols = sorted(used, key=lambda c: c.components)
    entries = tuple(
        tuple(1 if c in refmap[r] else 0 for c in cols) for r in block.shapes
    )
    return DecompositionMatrix(block.shapes, tuple(cols), entries)


def is_connected(matrix: DecompositionMatrix) -> bool:
    """Whether the bipartite row/column incidence graph is connected."""
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        raise BlockError("empty matrix has no connectivity verdict")
    seen_rows, seen_cols = {0}, set()
    frontier = [("r", 0)]
    while frontier:
        kind, idx = frontier.pop()
        if kind == "r":
            for j in range(ncols):
                if matrix.entries[idx][j] and j not in seen_cols:
                    seen_cols.add(j)
                    frontier.append(("c", j))
        else:
            for i in range(nrows):
                if matrix.entries[i][idx] and i not in seen_rows:
                    seen_rows.add(i)
                    frontier.append(("r", i))
    return len(seen_rows) == nrows and len(seen_cols) == ncols


def find_closer_shape(x: PShape, y: PShape, block: CombinatorialBlock) -> PShape:
    """Some shape of the block strictly closer to both x and y.

    Guaranteed to exist for ribbon and belt blocks whenever d(x, y) > 0;
    failure raises a TheoremViolation with a counterexample report.
    """
    _require_shapes(block, x, y)
    d = distance(x, y).d
    if d == 0:
        raise BlockError("shapes are already at distance zero")
    for z in block.shapes:
        if distance(x, z).d < d and distance(y, z).d < d:
            return z
    raise TheoremViolation(
        "no strictly closer shape found",
        {
            "p": block.p,
            "l": block.l,
            "m": block.m,
            "inner_core": list(block.inner_core),
            "outer_core": list(block.outer_core),
            "x": x.to_json(),
            "y": y.to_json(),
            "distance": d,
            "shapes_searched": len(block.shapes),
        },
    )


@dataclass(frozen=True)
class LinkagePath:
    """Shapes with consecutive pairs passing the linkage test."""

    shapes: tuple[PShape, ...]

    def __post_init__(self):
        for a, b in zip(self.shapes, self.shapes[1:]):
            if not linkage_test(a, b):
                raise BlockError("consecutive path entries are not linked")

    @property
    def length(self) -> int:
        return len(self.shapes)


def _require_shapes(block: CombinatorialBlock, *shapes: PShape) -> None:
    if block.classification not in (RIBBON, BELT):
        raise BlockError(f"class {block.classification!r} blocks have no shape calculus")
    pool = set(block.shapes)
    for s in shapes:
        if s not in pool:
            raise BlockError(f"shape not in this block: {s}")


def linkage_path(x: PShape, y: PShape, block: CombinatorialBlock) -> LinkagePath:
    """Breadth-first path through the block's linkage graph."""
    _require_shapes(block, x, y)
    if x == y:
        return LinkagePath((x,))
    parent: dict[PShape, PShape] = {x: x}
    frontier = [x]
    while frontier:
        nxt = []
        for cur in frontier:
            for cand in block.shapes:
                if cand not in parent and linkage_test(cur, cand):
                    parent[cand] = cur
                    if cand == y:
                        path = [cand]
                        while path[-1] != x:
                            path.append(parent[path[-1]])
                        return LinkagePath(tuple(reversed(path)))
                    nxt.append(cand)
        frontier = nxt
    raise TheoremViolation(
        "no linkage path found",
        {
            "p": block.p,
            "l": block.l,
            "m": block.m,
            "inner_core": list(block.inner_core),
            "outer_core": list(block.outer_core),
            "x": x.to_json(),
            "y": y.to_json(),
            "shapes_searched": len(block.shapes),
        },
    )


def linkage_diameter(block: CombinatorialBlock) -> int:
    """Largest number of linkage steps needed between shapes of the block."""
    best = 0
    for source in block.shapes:
        level = {source: 0}
        frontier = [source]
        while frontier:
            nxt = []
            for cur in frontier:
                for cand in block.shapes:
                    if cand not in level and linkage_test(cur, cand):
                        level[cand] = level[cur] + 1
                        nxt.append(cand)
            frontier = nxt
        if len(level) != len(block.shapes):
            raise TheoremViolation(
                "linkage graph is disconnected",
                {
                    "p": block.p,
                    "l": block.l,
                    "m": block.m,
                    "inner_core": list(block.inner_core),
                    "outer_core": list(block.outer_core),
                    "unreached": len(block.shapes) - len(level),
                },
            )
        best = max(best, max(level.values()))
    return best


def belt_row_shape(i: int, p: int) -> PShape:
    """The single-row p-box ribbon whose rightmost residue is i."""
    return PShape(p, (((i + 1) % p, "R" * (p - 1)),))


def mu_lambda(la: Partition, p: int) -> Partition:
    """Grow the first part by p; the added row of boxes is a belt_row_shape."""
    la = Partition(la)
    if not la:
        return Partition([p])
    return Partition([la[0] + p, *la[1:]])


def clockwise_linkage_check(block: CombinatorialBlock) -> bool:
    """Belt blocks: every directed-cycle collision still admits a path.

    Looks at every pair of shapes whose arrow-graph union is a directed
    cycle (the one case the plain distance criterion cannot link) and
    verifies a linkage path through the block exists.
    """
    if block.classification != BELT:
        raise BlockError("clockwise linkage check applies to belt blocks")
    for i, x in enumerate(block.shapes):
        for y in block.shapes[i + 1 :]:
            merged = union_arrows(x, y)
            if merged is None or not _is_directed_cycle(block.p, merged):
                continue
            try:
                linkage_path(x, y, block)
            except TheoremViolation:
                return False
    return True


def block_report(block: CombinatorialBlock, keep_empty_columns: bool = False) -> dict:
    """JSON-friendly summary used by the CLI and sweep reports."""
    report = {
        "p": block.p,
        "l": block.l,
        "m": block.m,
        "inner_core": list(block.inner_core),
        "outer_core": list(block.outer_core),
        "members": len(block.members),
        "classification": block.classification,
        "central_character": block.central_character.to_json(),
        "shapes": [s.to_json() for s in block.shapes],
    }
    if block.classification in (RIBBON, BELT):
        matrix = decomposition_matrix(block, keep_empty_columns)
        report["matrix_shape"] = list(matrix.shape)
        report["connected"] = is_connected(matrix)
        report["linkage_diameter"] = linkage_diameter(block)
    return report
