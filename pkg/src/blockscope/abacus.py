"""James-Kerber abacus displays: cores, weights, quotients, bead moves.

A display with e runners and charge C encodes a partition nu through beads
at positions nu_j - j + C for j = 1..C.  The charge is always a multiple
of e, so a position's runner equals the residue of the corresponding node.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, enumerate_partitions


class AbacusError(ValueError):
    """Invalid display parameters (bad charge, non-core input, ...)."""


def default_charge(nu: Partition, e: int) -> int:
    """Smallest positive multiple of e that accommodates nu's length."""
    rows = max(1, -(-len(nu) // e))
    return e * rows


@dataclass(frozen=True)
class AbacusDisplay:
    runners: int
    charge: int
    beads: tuple[int, ...]  # sorted positions

    def is_bead(self, position: int) -> bool:
        return position in self._bead_set

    @property
    def _bead_set(self) -> frozenset[int]:
        return frozenset(self.beads)

    def runner_counts(self) -> tuple[int, ...]:
        counts = [0] * self.runners
        for x in self.beads:
            counts[x % self.runners] += 1
        return tuple(counts)

    def render(self) -> str:
        """Monospace picture, one row per bead row, 'b' for bead, '-' for space."""
        last = max(self.beads) if self.beads else -1
        rows = last // self.runners + 2
        beads = self._bead_set
        lines = []
        for row in range(rows):
            line = "".join(
                "b" if row * self.runners + i in beads else "-"
                for i in range(self.runners)
            )
            lines.append(line)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"e": self.runners, "charge": self.charge, "beads": list(self.beads)}


def from_partition(nu: Partition, e: int, charge: int | None = None) -> AbacusDisplay:
    """Abacus display of nu with e runners at the given charge."""
    if e < 2:
        raise AbacusError(f"need at least 2 runners, got {e}")
    if charge is None:
        charge = default_charge(nu, e)
    if charge % e != 0:
        raise AbacusError(f"charge {charge} is not a multiple of {e}")
    if charge < len(nu):
        raise AbacusError(f"charge {charge} is smaller than the length {len(nu)}")
    beads = tuple(sorted(nu.part(j) - j + charge for j in range(1, charge + 1)))
    return AbacusDisplay(e, charge, beads)


def to_partition(display: AbacusDisplay) -> Partition:
    """Decode the partition from a bead configuration."""
    desc = sorted(display.beads, reverse=True)
    return Partition(x - display.charge + j for j, x in enumerate(desc, start=1))


def _core_display(display: AbacusDisplay) -> AbacusDisplay:
    """Slide every bead as far up its runner as it goes."""
    e = display.runners
    counts = display.runner_counts()
    beads = sorted(i + e * r for i, b in enumerate(counts) for r in range(b))
    return AbacusDisplay(e, display.charge, tuple(beads))


def p_core(nu: Partition, e: int) -> Partition:
    """The e-core: the fixed point of removable e-hook stripping."""
    return to_partition(_core_display(from_partition(nu, e)))


def is_core(nu: Partition, e: int) -> bool:
    return p_core(nu, e) == nu


def p_weight(nu: Partition, e: int) -> int:
    """Number of e-hooks stripped when passing to the e-core."""
    return (nu.size - p_core(nu, e).size) // e


def _runner_partition(rows: list[int]) -> Partition:
    """Partition encoded by bead row indices on a single runner."""
    desc = sorted(rows, reverse=True)
    return Partition(x + j - len(desc) for j, x in enumerate(desc, start=1))


def p_quotient(nu: Partition, e: int, charge: int | None = None) -> tuple[Partition, ...]:
    """The e-quotient: runner i of the display read as a one-runner abacus."""
    display = from_partition(nu, e, charge)
    per_runner: list[list[int]] = [[] for _ in range(e)]
    for x in display.beads:
        per_runner[x % e].append(x // e)
    return tuple(_runner_partition(rows) for rows in per_runner)


def hook_move_available(
    nu: Partition, e: int, charge: int | None, h: int, runner: int
) -> tuple[bool, bool]:
    """Whether nu has a removable / an addable h-hook at the given runner.

    A removable h-hook at runner i is a bead at some position x = i (mod e)
    with a space at x - h; an addable one is a bead at x = i (mod e) with a
    space at x + h (the moving bead's position class names the runner).
    """
    if h < 1:
        raise ValueError("hook length must be positive")
    display = from_partition(nu, e, charge)
    beads = display._bead_set
    runner %= e
    removable = any(
        x % e == runner and x - h >= 0 and x - h not in beads for x in beads
    )
    addable = any(x % e == runner and x + h not in beads for x in beads)
    return removable, addable


def enumerate_block_partitions(
    core: Partition, e: int, weight: int, charge: int | None = None
) -> list[Partition]:
    """All partitions with the given e-core and e-weight, reverse-lex ordered.

    Generated by sliding beads down the core's display in all ways, i.e. by
    running over all e-tuples of partitions with total size ``weight``.
    """
    return list(_block_partitions(Partition(core), e, weight, charge))


@lru_cache(maxsize=4096)
def _block_partitions(
    core: Partition, e: int, weight: int, charge: int | None
) -> tuple[Partition, ...]:
    if weight < 0:
        raise ValueError("weight must be non-negative")
    if not is_core(core, e):
        raise AbacusError(f"{core!r} is not an {e}-core")
    base = from_partition(core, e, charge)
    counts = list(base.runner_counts())
    c = base.charge
    # Every quotient component needs at most `weight` parts; grow the charge
    # until each runner carries that many beads.
    while min(counts) < weight:
        c += e
        counts = [b + 1 for b in counts]
    if charge is not None and c != charge:
        raise AbacusError(
            f"charge {charge} is too small for weight {weight} over {core!r}"
        )

    out = []
    for quotient in _multipartitions(weight, e):
        beads = []
        for i in range(e):
            b = counts[i]
            rows = [quotient[i].part(j) + b - j for j in range(1, b + 1)]
            beads.extend(i + e * r for r in rows)
        out.append(to_partition(AbacusDisplay(e, c, tuple(sorted(beads)))))
    out.sort(reverse=True)
    return tuple(Partition(x) for x in out)


def _multipartitions(total: int, slots: int):
    """All ``slots``-tuples of partitions whose sizes sum to ``total``."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for head in enumerate_partitions(first):
            for tail in _multipartitions(total - first, slots - 1):
                yield (head, *tail)


def check_hook_dichotomy(
    alpha: Partition, beta: Partition, e: int, h: int, runner: int
) -> bool:
    """Hook-transfer dichotomy inside a block of the symmetric group.

    Requires alpha and beta to share their e-core and alpha to have a
    removable h-hook at ``runner``.  Returns True when alpha has an addable
    h-hook at runner - h or beta has a removable h-hook at ``runner``.
    """
    if p_core(alpha, e) != p_core(beta, e):
        raise AbacusError("partitions lie in different blocks")
    charge = e * max(1, -(-max(len(alpha), len(beta), 1) // e))
    removable_alpha, _ = hook_move_available(alpha, e, charge, h, runner)
    if not removable_alpha:
        raise AbacusError(
            f"{alpha!r} has no removable {h}-hook at runner {runner % e}"
        )
    _, addable_alpha = hook_move_available(alpha, e, charge, h, (runner - h) % e)
    removable_beta, _ = hook_move_available(beta, e, charge, h, runner)
    return addable_alpha or removable_beta


def partitions_with_core(n: int, core: Partition, e: int) -> list[Partition]:
    """Filter oracle: partitions of n with the given e-core (small n only)."""
    return [nu for nu in enumerate_partitions(n) if p_core(nu, e) == core]
