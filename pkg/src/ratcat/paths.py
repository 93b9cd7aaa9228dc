"""Lattice paths in an m-by-n rectangle and their rank systems.

A path is a word over {N, E} with n north and m east steps, drawn from (0, 0)
to (m, n).  The rank of a lattice point (a, b) is m*b - n*a; ranks along a
path start and end at 0, stepping +m on N and -n on E.  When gcd(m, n) = 1
the m+n ranks of the points before the endpoint are pairwise distinct, and
the resulting rank set is a faithful encoding of the path.

Besides the rank machinery this module provides the three elementary
transformations (reverse, transpose, rank complement) and the half-step
folding bijection between self-rank-complement Dyck paths and free paths in
the floor(m/2) x floor(n/2) rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .errors import (
    InvalidRankSetError,
    NonCoprimeError,
    NotDyckError,
    NotSelfComplementError,
)

NORTH = "N"
EAST = "E"
_SWAP_NE = str.maketrans("NE", "EN")


@dataclass(frozen=True)
class Dims:
    """Rectangle dimensions: m east steps wide, n north steps tall."""

    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise ValueError("dimensions must be integers")
        if self.m < 1 or self.n < 1:
            raise ValueError(f"dimensions must be positive, got ({self.m}, {self.n})")

    @property
    def total(self) -> int:
        return self.m + self.n

    @property
    def is_coprime(self) -> bool:
        return gcd(self.m, self.n) == 1

    def require_coprime(self) -> None:
        if not self.is_coprime:
            raise NonCoprimeError(
                f"gcd({self.m}, {self.n}) = {gcd(self.m, self.n)} > 1"
            )

    def transposed(self) -> "Dims":
        return Dims(self.n, self.m)


@dataclass(frozen=True)
class Path:
    """An (N, E)-word with exactly dims.n norths and dims.m easts.

    A Path need not stay above the diagonal; use is_dyck() to test that.
    """

    dims: Dims
    steps: str

    def __post_init__(self):
        m, n = self.dims.m, self.dims.n
        norths = self.steps.count(NORTH)
        easts = self.steps.count(EAST)
        if norths != n or easts != m or norths + easts != len(self.steps):
            raise ValueError(
                f"step word {self.steps!r} is not an (N,E)-word with "
                f"{n} N steps and {m} E steps"
            )

    @classmethod
    def parse(cls, m: int, n: int, steps: str) -> "Path":
        return cls(Dims(m, n), steps)

    def __str__(self) -> str:
        return self.steps

    @cached_property
    def point_ranks(self) -> tuple[int, ...]:
        return ranks(self)


def ranks(p: Path) -> tuple[int, ...]:
    """Ranks of the m+n+1 lattice points visited by p, endpoints both 0."""
    m, n = p.dims.m, p.dims.n
    out = [0]
    r = 0
    for c in p.steps:
        r = r + m if c == NORTH else r - n
        out.append(r)
    return tuple(out)


def rank_set(p: Path) -> tuple[int, ...]:
    """The m+n distinct point ranks of p (final point dropped), sorted."""
    p.dims.require_coprime()
    values = sorted(p.point_ranks[:-1])
    return tuple(values)


def is_dyck(p: Path) -> bool:
    """True iff p never goes below the diagonal, i.e. all ranks >= 0."""
    return min(p.point_ranks) >= 0


@dataclass(frozen=True)
class EndSets:
    """Ranks of the south/east/north/west step ends, each sorted ascending.

    South/west ends are starting points of N/E steps; north/east ends are
    their endpoints.  E = W - n and S = N - m elementwise, and S and W
    together (like E and N) partition the rank set.
    """

    south: tuple[int, ...]
    east: tuple[int, ...]
    north: tuple[int, ...]
    west: tuple[int, ...]


def end_sets(p: Path) -> EndSets:
    p.dims.require_coprime()
    rs = p.point_ranks
    south, east, north, west = [], [], [], []
    for k, c in enumerate(p.steps):
        if c == NORTH:
            south.append(rs[k])
            north.append(rs[k + 1])
        else:
            west.append(rs[k])
            east.append(rs[k + 1])
    return EndSets(
        south=tuple(sorted(south)),
        east=tuple(sorted(east)),
        north=tuple(sorted(north)),
        west=tuple(sorted(west)),
    )


def south_end_ranks(p: Path) -> tuple[int, ...]:
    """Ranks of the starting points of the N steps, in path order."""
    rs = p.point_ranks
    return tuple(rs[k] for k, c in enumerate(p.steps) if c == NORTH)


def reverse(p: Path) -> Path:
    """Reverse the step word (a 180-degree rotation of the drawing)."""
    return Path(p.dims, p.steps[::-1])


def transpose(p: Path) -> Path:
    """Flip across the antidiagonal: reverse the word and swap N with E."""
    return Path(p.dims.transposed(), p.steps[::-1].translate(_SWAP_NE))


def _require_dyck(p: Path) -> None:
    if not is_dyck(p):
        raise NotDyckError(f"{p.steps} is not a Dyck path for ({p.dims.m}, {p.dims.n})")


def _split_at_highest_rank(p: Path) -> int:
    """Index of the unique maximal-rank point along p (coprime dims only)."""
    rs = p.point_ranks
    top = max(rs)
    if rs.count(top) != 1:
        raise NonCoprimeError(
            f"highest rank {top} is not unique; ({p.dims.m}, {p.dims.n}) not coprime?"
        )
    return rs.index(top)


def rank_complement(p: Path) -> Path:
    """The involution whose rank set is M - r(p), M the maximal rank.

    Split p = Q1 Q2 at the unique highest-rank point and return the
    concatenation of the two reversed pieces.
    """
    p.dims.require_coprime()
    _require_dyck(p)
    k = _split_at_highest_rank(p)
    return Path(p.dims, p.steps[:k][::-1] + p.steps[k:][::-1])


def is_self_complement(p: Path) -> bool:
    """True iff rank_complement(p) == p, tested without rebuilding the path."""
    k = _split_at_highest_rank(p)
    head, tail = p.steps[:k], p.steps[k:]
    return head == head[::-1] and tail == tail[::-1]


def path_from_rank_set(dims: Dims, values) -> Path:
    """Reconstruct the unique Dyck path whose rank set is the given values.

    Walk from rank 0; a rank r is a south end exactly when r + m is again in
    the set, so each step is forced.  Raises InvalidRankSetError when the
    walk escapes the set or fails to cover it.
    """
    dims.require_coprime()
    m, n = dims.m, dims.n
    wanted = set(values)
    if len(wanted) != m + n:
        raise InvalidRankSetError(
            f"need {m + n} distinct ranks, got {len(wanted)}"
        )
    if 0 not in wanted or min(wanted) != 0:
        raise InvalidRankSetError("a Dyck rank set has minimum 0")
    steps = []
    r = 0
    seen = {0}
    total = m + n
    for i in range(total):
        if r + m in wanted:
            steps.append(NORTH)
            r += m
        else:
            steps.append(EAST)
            r -= n
        last = i == total - 1
        if last:
            if r != 0:
                raise InvalidRankSetError(f"walk ended at rank {r}, expected 0")
        else:
            if r not in wanted or r in seen:
                raise InvalidRankSetError(f"walk left the rank set at rank {r}")
            seen.add(r)
    if seen != wanted:
        raise InvalidRankSetError("walk did not visit every rank in the set")
    return Path(dims, "".join(steps))


def east_step_heights(p: Path) -> tuple[int, ...]:
    """Height of each E step, left to right (non-decreasing)."""
    heights = []
    y = 0
    for c in p.steps:
        if c == NORTH:
            y += 1
        else:
            heights.append(y)
    return tuple(heights)


def area(p: Path) -> int:
    """Number of whole lattice boxes between p and the diagonal y = nx/m.

    A box in column i (x from i to i+1) at row j counts when it lies under
    the path (j < height of the E step crossing the column) and its interior
    stays above the diagonal, i.e. m*j >= n*(i+1).  Works for any dims; for
    coprime dims the diagonal never passes through a box corner strictly
    inside the rectangle.
    """
    _require_dyck(p)
    m, n = p.dims.m, p.dims.n
    total = 0
    for i, y in enumerate(east_step_heights(p)):
        lowest = -(-n * (i + 1) // m)  # ceil(n*(i+1)/m)
        if y > lowest:
            total += y - lowest
    return total


# --- the half-step folding bijection -------------------------------------
#
# Self-rank-complement Dyck paths split at their highest rank into two
# palindromic pieces.  Doubling every step into two half-units keeps all
# arithmetic integral: the second half of each palindrome, glued to the
# reversed second half of the other, is a path to the rectangle's centre
# whose unpaired half-units sit only at its two ends.  Dropping them leaves
# a free path with floor(m/2) east and floor(n/2) north steps.


def _doubled(word: str) -> str:
    return "".join(c + c for c in word)


def _collapse_pairs(units: str) -> str:
    if len(units) % 2 or units[0::2] != units[1::2]:
        raise AssertionError(f"half-units do not pair into whole steps: {units}")
    return units[0::2]


def psi(p: Path) -> str:
    """Fold a self-rank-complement Dyck path to a word with floor(m/2) E
    and floor(n/2) N steps.  Returned as a bare step word because the image
    rectangle may be degenerate (zero width or height)."""
    p.dims.require_coprime()
    _require_dyck(p)
    if not is_self_complement(p):
        raise NotSelfComplementError(f"{p.steps} is not fixed by rank complement")
    k = _split_at_highest_rank(p)
    head, tail = p.steps[:k], p.steps[k:]
    q1 = _doubled(head)[len(head):]
    q2 = _doubled(tail)[len(tail):]
    q = q1 + q2[::-1]
    lead_half = len(head) % 2 == 1
    tail_half = len(tail) % 2 == 1
    starts_half_east = lead_half and q[0] == EAST
    ends_half_north = tail_half and q[-1] == NORTH
    if starts_half_east or ends_half_north:
        out, out_lead, out_tail = q, lead_half, tail_half
    else:
        out, out_lead, out_tail = q[::-1], tail_half, lead_half
    if out_lead:
        out = out[1:]
    if out_tail:
        out = out[:-1]
    word = _collapse_pairs(out)
    if word.count(EAST) != p.dims.m // 2 or word.count(NORTH) != p.dims.n // 2:
        raise AssertionError(f"folded word {word!r} has wrong step counts")
    return word


def psi_inverse(word: str, dims: Dims) -> Path:
    """Unfold a word with floor(m/2) E and floor(n/2) N steps into the
    self-rank-complement Dyck path of the m-by-n rectangle that folds to it.
    """
    dims.require_coprime()
    m, n = dims.m, dims.n
    if set(word) - {NORTH, EAST}:
        raise ValueError(f"invalid step word {word!r}")
    if word.count(EAST) != m // 2 or word.count(NORTH) != n // 2:
        raise ValueError(
            f"word {word!r} needs exactly {m // 2} E and {n // 2} N steps "
            f"for target dims ({m}, {n})"
        )
    units = _doubled(word)
    if m % 2:
        units = EAST + units
    if n % 2:
        units = units + NORTH

    def half_ranks(u: str) -> list[int]:
        out = [0]
        r = 0
        for c in u:
            r = r + m if c == NORTH else r - n
            out.append(r)
        return out

    rs = half_ranks(units)
    if max(rs) + min(rs) < 0:
        units = units[::-1]
        rs = half_ranks(units)
    if max(rs) + min(rs) <= 0:
        raise AssertionError("folded word has no orientation with positive span")
    top = max(rs)
    if rs.count(top) != 1:
        raise AssertionError("highest half-rank is not unique")
    k = rs.index(top)
    u1, u2rev = units[:k], units[k:]
    full = u1[::-1] + u1 + u2rev + u2rev[::-1]
    return Path(dims, _collapse_pairs(full))
