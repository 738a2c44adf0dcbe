"""Integer partitions, Young diagrams, residue multisets, and rim hooks.

Conventions: nodes are 1-based (row, col) pairs in English orientation
(rows grow downward), the content of a node (r, c) is c - r, and residues
are canonical representatives in {0, ..., e-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Node = tuple[int, int]

DEFAULT_ENUMERATION_CAP = 40


class PartitionError(ValueError):
    """Malformed partition input."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros in the input are stripped silently; any other
    malformed input (increasing pairs, negative entries) is rejected.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        items = [int(x) for x in parts]
        while items and items[-1] == 0:
            items.pop()
        for a, b in zip(items, items[1:]):
            if a < b:
                raise PartitionError(f"parts are not weakly decreasing: {items}")
        if items and items[-1] <= 0:
            raise PartitionError(f"parts must be positive: {items}")
        return super().__new__(cls, items)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, row: int) -> int:
        """The row-th part (1-based), zero beyond the length."""
        return self[row - 1] if 1 <= row <= len(self) else 0

    def contains(self, other: "Partition") -> bool:
        """True if the Young diagram of ``other`` sits inside this one."""
        return all(other.part(r) <= self.part(r) for r in range(1, len(other) + 1))

    def nodes(self) -> Iterator[Node]:
        """All nodes of the Young diagram, row by row."""
        for r, width in enumerate(self, start=1):
            for c in range(1, width + 1):
                yield (r, c)

    def has_node(self, node: Node) -> bool:
        r, c = node
        return r >= 1 and 1 <= c <= self.part(r)


EMPTY = Partition()


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and build a partition from an integer sequence."""
    return Partition(parts)


def content(node: Node) -> int:
    r, c = node
    return c - r


def residue(node: Node, e: int) -> int:
    return content(node) % e


@dataclass(frozen=True)
class ResidueMultiset:
    """Multiset of elements of Z/eZ, stored as sorted (residue, count) pairs."""

    modulus: int
    items: tuple[tuple[int, int], ...]

    @classmethod
    def from_values(cls, e: int, values: Iterable[int]) -> "ResidueMultiset":
        if e < 2:
            raise ValueError(f"modulus must be at least 2, got {e}")
        counts: dict[int, int] = {}
        for v in values:
            counts[v % e] = counts.get(v % e, 0) + 1
        return cls(e, tuple(sorted(counts.items())))

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.items)

    def count(self, r: int) -> int:
        return self.counts.get(r % self.modulus, 0)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(r for r, _ in self.items)

    @property
    def is_repetition_free(self) -> bool:
        return all(c == 1 for _, c in self.items)

    def minus(self, other: "ResidueMultiset") -> "ResidueMultiset":
        """Multiset difference; raises if any count would go negative."""
        if other.modulus != self.modulus:
            raise ValueError("mismatched moduli")
        counts = self.counts
        for r, c in other.items:
            counts[r] = counts.get(r, 0) - c
            if counts[r] < 0:
                raise ValueError(f"residue {r} removed more often than present")
        return ResidueMultiset(
            self.modulus, tuple(sorted((r, c) for r, c in counts.items() if c))
        )

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "counts": {str(r): c for r, c in self.items},
        }

    def __str__(self) -> str:
        inner = ", ".join(f"{r}: {c}" for r, c in self.items)
        return "{" + inner + "}"


def e_content(nu: Partition, e: int) -> ResidueMultiset:
    """Multiset of e-residues of the nodes of the Young diagram of nu."""
    return ResidueMultiset.from_values(e, (content(n) for n in nu.nodes()))


@dataclass(frozen=True)
class Hook:
    """A removable or addable rim hook.

    ``nodes`` runs from the hand node (largest content) down to the foot
    node (smallest content).
    """

    kind: str  # "removable" | "addable"
    nodes: tuple[Node, ...]

    @property
    def hand(self) -> Node:
        return self.nodes[0]

    @property
    def foot(self) -> Node:
        return self.nodes[-1]

    @property
    def length(self) -> int:
        return len(self.nodes)

    def contents(self) -> tuple[int, ...]:
        return tuple(content(n) for n in self.nodes)

    def residues(self, e: int) -> ResidueMultiset:
        return ResidueMultiset.from_values(e, self.contents())


def _rim(nu: Partition) -> list[Node]:
    """Rim nodes ordered by ascending content (SW to NE)."""
    out = []
    for r in range(1, len(nu) + 1):
        lo = max(nu.part(r + 1), 1)
        for c in range(lo, nu.part(r) + 1):
            out.append((r, c))
    out.sort(key=content)
    return out


def removable_hooks(nu: Partition, h: int) -> list[Hook]:
    """All removable h-hooks of nu, ordered by foot-node content."""
    if h < 1:
        raise ValueError("hook length must be positive")
    rim = _rim(nu)
    hooks = []
    for i in range(len(rim) - h + 1):
        window = rim[i : i + h]
        hr, hc = window[-1]
        fr, fc = window[0]
        if not nu.has_node((hr, hc + 1)) and not nu.has_node((fr + 1, fc)):
            hooks.append(Hook("removable", tuple(reversed(window))))
    return hooks


def _neighbour(nu: Partition, k: int) -> Node:
    """The unique neighbour node of [nu] on the diagonal of content k."""
    s = max(1, 1 - k)
    while nu.has_node((s, k + s)):
        s += 1
    return (s, k + s)


def addable_hooks(nu: Partition, h: int) -> list[Hook]:
    """All addable h-hooks of nu, ordered by foot-node content."""
    if h < 1:
        raise ValueError("hook length must be positive")
    top = nu.part(1)
    hooks = []
    for k in range(-(len(nu) + h), top + 1):
        window = [_neighbour(nu, k + j) for j in range(h)]
        hr, hc = window[-1]
        fr, fc = window[0]
        hand_ok = hr == 1 or nu.has_node((hr - 1, hc))
        foot_ok = fc == 1 or nu.has_node((fr, fc - 1))
        if hand_ok and foot_ok:
            hooks.append(Hook("addable", tuple(reversed(window))))
    return hooks


def remove_hook(nu: Partition, hook: Hook) -> Partition:
    """Partition left after deleting a removable hook's nodes."""
    if hook.kind != "removable":
        raise ValueError("expected a removable hook")
    rows = list(nu)
    for r, c in hook.nodes:
        if not nu.has_node((r, c)):
            raise ValueError(f"hook node {(r, c)} is not in the diagram")
        rows[r - 1] -= 1
    return Partition(rows)


def add_hook(nu: Partition, hook: Hook) -> Partition:
    """Partition obtained by adding an addable hook's nodes."""
    if hook.kind != "addable":
        raise ValueError("expected an addable hook")
    depth = max(len(nu), max(r for r, _ in hook.nodes))
    rows = [nu.part(r) for r in range(1, depth + 1)]
    for r, c in hook.nodes:
        if nu.has_node((r, c)):
            raise ValueError(f"hook node {(r, c)} is already in the diagram")
        rows[r - 1] += 1
    return Partition(rows)


def enumerate_partitions(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise PartitionError("cannot partition a negative integer")
    if n > cap:
        raise PartitionError(f"enumeration cap exceeded: {n} > {cap}")
    if n == 0:
        return [EMPTY]
    out = []
    parts = [n]
    while True:
        out.append(Partition(parts))
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return out
        rest = len(parts) - i
        parts[i] -= 1
        head = parts[i]
        del parts[i + 1 :]
        while rest > 0:
            nxt = min(head, rest)
            parts.append(nxt)
            rest -= nxt


def partition_count(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    return len(enumerate_partitions(n, cap))
