"""Explicit modules over Z/pZ for each belt, with relation verification.

For a belt G with character terms b = (b_1, ..., b_p) (positions 1-based,
entries distinct residues mod p, p prime) and a fixed reference term a,
the generators act on basis vectors e_b by

    z_k e_b = b_k e_b,
    s_k e_b = (1/d) e_b + c e_{swap_k(b)},   d = b_{k+1} - b_k in Z/pZ,

with c = 1 when the value b_k occurs after b_{k+1} inside a, and
c = 1 - 1/d^2 when it occurs before.  When swap_k(b) is not a character
term the transition coefficient is forced to vanish (d = +-1 there), so
the action closes on the basis.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .characters import FormalCharacter, character_of
from .skew import Belt


class HeckeError(ValueError):
    """Non-prime modulus, bad reference term, or a closure failure."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _inv(a: int, p: int) -> int:
    return pow(a % p, -1, p)


class BeltModule:
    """Basis indexed by the belt's character terms; dense matrices mod p."""

    def __init__(
        self,
        p: int,
        belt: Belt,
        reference: tuple[int, ...],
        basis: tuple[tuple[int, ...], ...],
        z_matrices: list[np.ndarray],
        s_matrices: list[np.ndarray],
        closure_coefficients: list[tuple[tuple[int, ...], int, int]],
    ):
        self.p = p
        self.belt = belt
        self.reference = reference
        self.basis = basis
        self.z_matrices = z_matrices
        self.s_matrices = s_matrices
        # (term, position k, coefficient) for every swap leaving the basis;
        # all coefficients are zero for a well-defined module.
        self.closure_coefficients = closure_coefficients

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "belt": self.belt.to_json(),
            "reference": list(self.reference),
            "dim": self.dimension,
            "basis": [list(b) for b in self.basis],
            "matrices": {
                "z": [m.tolist() for m in self.z_matrices],
                "s": [m.tolist() for m in self.s_matrices],
            },
        }


def belt_module(belt: Belt, p: int, reference: tuple[int, ...]) -> BeltModule:
    """Construct the module of a belt for a chosen reference term."""
    if not is_prime(p):
        raise HeckeError(f"{p} is not prime; differences must be invertible")
    if belt.p != p:
        raise HeckeError("belt modulus does not match p")
    character = character_of(belt)
    basis = tuple(seq for seq, _ in character.terms)
    if reference not in character.support:
        raise HeckeError(f"reference {reference} is not a character term")
    index = {seq: i for i, seq in enumerate(basis)}
    dim = len(basis)
    position_in_reference = {value: pos for pos, value in enumerate(reference)}

    z_matrices = []
    for k in range(p):
        z = np.zeros((dim, dim), dtype=np.int64)
        for seq, i in index.items():
            z[i, i] = seq[k] % p
        z_matrices.append(z)

    closure = []
    s_matrices = []
    for k in range(p - 1):
        s = np.zeros((dim, dim), dtype=np.int64)
        for seq, i in index.items():
            bk, bk1 = seq[k], seq[k + 1]
            d = (bk1 - bk) % p
            s[i, i] = _inv(d, p)
            if position_in_reference[bk] > position_in_reference[bk1]:
                coeff = 1
            else:
                coeff = (1 - _inv(d, p) * _inv(d, p)) % p
            swapped = seq[:k] + (bk1, bk) + seq[k + 2 :]
            j = index.get(swapped)
            if j is None:
                closure.append((seq, k + 1, coeff))
                if coeff % p != 0:
                    raise HeckeError(
                        f"action does not close: coefficient {coeff} towards "
                        f"non-term {swapped} from {seq} at position {k + 1}"
                    )
            else:
                s[j, i] = coeff % p
        s_matrices.append(s)

    return BeltModule(p, belt, reference, basis, z_matrices, s_matrices, closure)


@dataclass(frozen=True)
class RelationCheck:
    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class RelationReport:
    checks: tuple[RelationCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[RelationCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def summary(self) -> str:
        lines = [
            f"{'ok ' if c.passed else 'FAIL'} {c.name}"
            + (f"  [{c.witness}]" if c.witness else "")
            for c in self.checks
        ]
        return "\n".join(lines)


def _first_bad_column(lhs: np.ndarray, rhs: np.ndarray, basis, p: int) -> str:
    diff = (lhs - rhs) % p
    cols = np.nonzero(diff.any(axis=0))[0]
    if cols.size == 0:
        return ""
    j = int(cols[0])
    return f"first failing basis vector e_{basis[j]}"


def verify_relations(module: BeltModule) -> RelationReport:
    """Check every defining relation as an exact matrix identity mod p."""
    p = module.p
    zs = module.z_matrices
    ss = module.s_matrices
    basis = module.basis
    dim = module.dimension
    eye = np.eye(dim, dtype=np.int64)

    def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a @ b) % p

    checks = []

    def record(name: str, lhs: np.ndarray, rhs: np.ndarray) -> None:
        ok = bool(((lhs - rhs) % p == 0).all())
        witness = "" if ok else _first_bad_column(lhs, rhs, basis, p)
        checks.append(RelationCheck(name, ok, witness))

    for i in range(p):
        for j in range(i + 1, p):
            record(f"z{i + 1} z{j + 1} = z{j + 1} z{i + 1}", mul(zs[i], zs[j]), mul(zs[j], zs[i]))
    for k in range(p - 1):
        record(f"s{k + 1}^2 = 1", mul(ss[k], ss[k]), eye)
    for k in range(p - 1):
        for j in range(k + 2, p - 1):
            record(
                f"s{k + 1} s{j + 1} = s{j + 1} s{k + 1}",
                mul(ss[k], ss[j]),
                mul(ss[j], ss[k]),
            )
    for k in range(p - 2):
        record(
            f"s{k + 1} s{k + 2} s{k + 1} = s{k + 2} s{k + 1} s{k + 2}",
            mul(ss[k], mul(ss[k + 1], ss[k])),
            mul(ss[k + 1], mul(ss[k], ss[k + 1])),
        )
    for k in range(p - 1):
        for j in range(p):
            if j in (k, k + 1):
                continue
            record(
                f"s{k + 1} z{j + 1} = z{j + 1} s{k + 1}",
                mul(ss[k], zs[j]),
                mul(zs[j], ss[k]),
            )
    for k in range(p - 1):
        record(
            f"s{k + 1} z{k + 1} = z{k + 2} s{k + 1} - 1",
            mul(ss[k], zs[k]),
            (mul(zs[k + 1], ss[k]) - eye) % p,
        )
    return RelationReport(tuple(checks))


def module_character(module: BeltModule) -> FormalCharacter:
    """Multiset of basis labels; the z-generators act diagonally by them."""
    return FormalCharacter.from_counter(module.p, Counter(module.basis))


@dataclass(frozen=True)
class SimplicityReport:
    commutant_dimension: int
    consistent_with_simplicity: bool

    def summary(self) -> str:
        verdict = (
            "consistent with simplicity"
            if self.consistent_with_simplicity
            else "NOT consistent with simplicity"
        )
        return f"commutant dimension {self.commutant_dimension}: {verdict}"


def simplicity_probe(module: BeltModule) -> SimplicityReport:
    """Exact commutant dimension over Z/pZ.

    Matrices commuting with all (distinct) diagonal z-actions are diagonal,
    so the commutant is cut out by equalities between diagonal entries at
    the nonzero positions of the s-matrices; its dimension is the number
    of classes of basis indices merged by those positions.  This reports
    evidence only and never asserts simplicity.
    """
    dim = module.dimension
    parent = list(range(dim))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for s in module.s_matrices:
        rows, cols = np.nonzero(s % module.p)
        for i, j in zip(rows.tolist(), cols.tolist()):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    classes = len({find(i) for i in range(dim)})
    return SimplicityReport(classes, classes == 1)
