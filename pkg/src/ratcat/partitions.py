"""Partitions, hooks, and the flush characterization of n-cores.

A partition is identified with its Ferrers-Young diagram (rows top-down,
cells 1-based).  The strictly decreasing set of first-column hook lengths
determines the partition, and a partition is an n-core (no hook divisible
by n) exactly when that hook set is n-flush: no member divisible by n, and
h - n either negative or again a member.  The per-residue maxima vector
s_i encodes a flush set compactly and is the bridge to rank sets of Dyck
paths used elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CellOutOfShapeError, NotFlushError


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; the empty tuple is the empty partition."""

    parts: tuple[int, ...]

    def __post_init__(self):
        prev = None
        for part in self.parts:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, got {self.parts}")
            if prev is not None and part > prev:
                raise ValueError(f"parts must be weakly decreasing, got {self.parts}")
            prev = part

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the comma-separated form; "-" denotes the empty partition."""
        text = text.strip()
        if text in ("-", ""):
            return cls(())
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}") from exc
        return cls(parts)

    def text(self) -> str:
        if not self.parts:
            return "-"
        return ",".join(str(part) for part in self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return self.text()


EMPTY = Partition(())


def conjugate(lam: Partition) -> Partition:
    """Flip the diagram along its main diagonal (column lengths as parts)."""
    if not lam.parts:
        return EMPTY
    cols = [0] * lam.parts[0]
    for part in lam.parts:
        for j in range(part):
            cols[j] += 1
    return Partition(tuple(cols))


def hook(lam: Partition, i: int, j: int) -> int:
    """Hook length of the 1-based cell (i, j): itself plus arm plus leg."""
    if not (1 <= i <= lam.length and 1 <= j <= lam.parts[i - 1]):
        raise CellOutOfShapeError(f"cell ({i}, {j}) not in partition {lam.text()}")
    col = conjugate(lam).parts[j - 1]
    return (lam.parts[i - 1] - j) + (col - i) + 1


def all_hooks(lam: Partition):
    """Yield the hook length of every cell, row by row."""
    cols = conjugate(lam).parts
    for i, part in enumerate(lam.parts, start=1):
        for j in range(1, part + 1):
            yield (part - j) + (cols[j - 1] - i) + 1


def row_hooks(lam: Partition, i: int) -> tuple[int, ...]:
    """Hook lengths of row i, left to right (strictly decreasing)."""
    if not 1 <= i <= lam.length:
        raise CellOutOfShapeError(f"row {i} not in partition {lam.text()}")
    cols = conjugate(lam).parts
    part = lam.parts[i - 1]
    return tuple((part - j) + (cols[j - 1] - i) + 1 for j in range(1, part + 1))


def first_column_hooks(lam: Partition) -> tuple[int, ...]:
    """First-column hook lengths, strictly decreasing."""
    a = lam.length
    return tuple(part + a - i for i, part in enumerate(lam.parts, start=1))


def partition_from_hooks(values) -> Partition:
    """Inverse of first_column_hooks on strictly decreasing positive sets."""
    hooks = tuple(values)
    for h, nxt in zip(hooks, hooks[1:]):
        if h <= nxt:
            raise ValueError(f"hook values must be strictly decreasing, got {hooks}")
    if hooks and hooks[-1] < 1:
        raise ValueError(f"hook values must be positive, got {hooks}")
    a = len(hooks)
    return Partition(tuple(h - (a - i) for i, h in enumerate(hooks, start=1)))


@dataclass(frozen=True)
class SVector:
    """Per-residue maxima of a hook set shifted by the modulus.

    entries[i] is i when no member is congruent to i, otherwise modulus plus
    the largest such member; entries[i] = i (mod modulus) always holds.
    """

    modulus: int
    entries: tuple[int, ...]

    def as_set(self) -> frozenset[int]:
        return frozenset(self.entries)


def s_vector(n: int, hooks) -> SVector:
    if n < 1:
        raise ValueError("modulus must be positive")
    entries = list(range(n))
    for h in hooks:
        r = h % n
        if h + n > entries[r]:
            entries[r] = h + n
    return SVector(n, tuple(entries))


def flush_violation(n: int, hooks) -> int | None:
    """Return a member witnessing that the set is not n-flush, else None.

    A violation is a member divisible by n, or one whose predecessor h - n
    is positive yet missing.
    """
    pool = set(hooks)
    for h in hooks:
        if h % n == 0:
            return h
        if h > n and h - n not in pool:
            return h
    return None


def is_n_flush(n: int, hooks) -> bool:
    if n < 1:
        raise ValueError("modulus must be positive")
    return flush_violation(n, hooks) is None


def is_n_core_by_hook_scan(lam: Partition, n: int) -> bool:
    """Oracle route: scan every cell's hook length for divisibility by n."""
    if n < 1:
        raise ValueError("modulus must be positive")
    return all(h % n for h in all_hooks(lam))


def is_n_core(lam: Partition, n: int, cross_check: bool = False) -> bool:
    """True iff no hook length of lam is divisible by n.

    Decided through the flush test on the first-column hook set, which needs
    only length-many values.  With cross_check=True the full hook scan runs
    too and any disagreement raises (the two routes are provably equal).
    """
    verdict = is_n_flush(n, first_column_hooks(lam))
    if cross_check:
        scanned = is_n_core_by_hook_scan(lam, n)
        if scanned != verdict:
            raise AssertionError(
                f"flush test and hook scan disagree on {lam.text()} mod {n}"
            )
    return verdict


def is_mn_core(lam: Partition, m: int, n: int) -> bool:
    return is_n_core(lam, m) and is_n_core(lam, n)


def sh_complement_check(lam: Partition, n: int) -> bool:
    """Check that the conjugate's s-vector is the reflection of lam's.

    For a nonempty partition with n-flush first-column hooks, the two
    s-vectors satisfy S(H) = h1 + n - S(H of the conjugate) as sets.
    """
    if not lam.parts:
        raise ValueError("defined for nonempty partitions only")
    hooks = first_column_hooks(lam)
    bad = flush_violation(n, hooks)
    if bad is not None:
        raise NotFlushError(f"hook set of {lam.text()} is not {n}-flush at {bad}")
    top = hooks[0] + n
    left = set(s_vector(n, hooks).entries)
    right = {top - s for s in s_vector(n, first_column_hooks(conjugate(lam))).entries}
    return left == right
