"""Deterministic exhaustive generators for every object family.

Path families stream step words in ascending lexicographic order with
E < N; core families stream partitions ordered by their part sequences.
Dyck enumeration prunes any prefix whose rank would go negative instead of
filtering all free words.  The RCK_MAX_OBJECTS environment variable (default
ten million) caps any single enumeration as a desk-scale guard.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Iterator, Union

from .errors import CountMismatchError, LimitExceededError
from .partitions import Partition, conjugate
from .paths import Dims, EAST, NORTH, Path, is_self_complement

FAMILIES = (
    "free",
    "dyck",
    "cores",
    "self_complement_paths",
    "self_conjugate_cores",
    "self_reversing_free",
)

_COPRIME_FAMILIES = {
    "dyck",
    "cores",
    "self_complement_paths",
    "self_conjugate_cores",
}

DEFAULT_MAX_OBJECTS = 10**7
MAX_OBJECTS_ENV = "RCK_MAX_OBJECTS"


def _max_objects() -> int:
    raw = os.environ.get(MAX_OBJECTS_ENV)
    if raw is None:
        return DEFAULT_MAX_OBJECTS
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_OBJECTS


@dataclass(frozen=True)
class EnumerationSpec:
    dims: Dims
    family: str
    limit: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(
                f"unknown family {self.family!r}; choose one of {', '.join(FAMILIES)}"
            )
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be nonnegative")
        if self.family in _COPRIME_FAMILIES:
            self.dims.require_coprime()


def _capped(stream, cap: int):
    for k, item in enumerate(stream):
        if k >= cap:
            raise LimitExceededError(
                f"enumeration exceeded {cap} objects; raise {MAX_OBJECTS_ENV} to go on"
            )
        yield item


def iter_free_steps(dims: Dims, prefix: str = "") -> Iterator[str]:
    """All step words of the rectangle in ascending lex order (E < N)."""
    m, n, total = dims.m, dims.n, dims.total
    if prefix:
        me = prefix.count(EAST)
        mn = prefix.count(NORTH)
        if me + mn != len(prefix) or me > m or mn > n:
            return
        for suffix in iter_free_steps(Dims._make_free(m - me, n - mn)):
            yield prefix + suffix
        return
    base = [NORTH] * total
    for east_positions in combinations(range(total), m):
        word = base[:]
        for k in east_positions:
            word[k] = EAST
        yield "".join(word)


def _iter_free_suffixes(m: int, n: int) -> Iterator[str]:
    total = m + n
    base = [NORTH] * total
    for east_positions in combinations(range(total), m):
        word = base[:]
        for k in east_positions:
            word[k] = EAST
        yield "".join(word)


def iter_dyck_steps(dims: Dims, prefix: str = "") -> Iterator[str]:
    """Dyck step words in ascending lex order, by pruned depth-first search."""
    m, n = dims.m, dims.n
    x = y = r = 0
    for c in prefix:
        if c == NORTH:
            y += 1
            r += m
        elif c == EAST:
            x += 1
            r -= n
        else:
            return
    if x > m or y > n or r < 0:
        return

    chars = list(prefix)

    def walk(x: int, y: int, r: int) -> Iterator[str]:
        if x == m and y == n:
            yield "".join(chars)
            return
        if x < m and r >= n:
            chars.append(EAST)
            yield from walk(x + 1, y, r - n)
            chars.pop()
        if y < n:
            chars.append(NORTH)
            yield from walk(x, y + 1, r + m)
            chars.pop()

    yield from walk(x, y, r)


def _iter_self_reversing_steps(dims: Dims) -> Iterator[str]:
    """Palindromic free words, filtered from the full lex stream.

    The palindrome test runs on east-position sets before any word is built,
    which keeps the full scan cheap."""
    m, n, total = dims.m, dims.n, dims.total
    base = [NORTH] * total
    last = total - 1
    for east_positions in combinations(range(total), m):
        mirror = set(east_positions)
        if all(last - k in mirror for k in east_positions):
            word = base[:]
            for k in east_positions:
                word[k] = EAST
            yield "".join(word)


def _iter_cores(dims: Dims) -> Iterator[Partition]:
    from .anderson import anderson

    cores = [anderson(Path(dims, w)) for w in iter_dyck_steps(dims)]
    cores.sort(key=lambda lam: lam.parts)
    return iter(cores)


ObjectStream = Iterator[Union[Path, Partition]]


def generate(spec: EnumerationSpec, prefix: str = "") -> ObjectStream:
    """Stream the requested family as Path or Partition objects.

    A step-word prefix restricts path families to its completions;
    concatenating the streams of all prefixes of a fixed length in lex order
    reproduces the unrestricted stream.
    """
    dims = spec.dims
    if prefix and spec.family in ("cores", "self_conjugate_cores"):
        raise ValueError("prefix partitioning applies to path families only")
    if spec.family == "free":
        stream: ObjectStream = (
            Path(dims, w) for w in iter_free_steps(dims, prefix)
        )
    elif spec.family == "dyck":
        stream = (Path(dims, w) for w in iter_dyck_steps(dims, prefix))
    elif spec.family == "self_complement_paths":
        stream = (
            p
            for p in (Path(dims, w) for w in iter_dyck_steps(dims, prefix))
            if is_self_complement(p)
        )
    elif spec.family == "self_reversing_free":
        if prefix:
            stream = (
                Path(dims, w)
                for w in iter_free_steps(dims, prefix)
                if w == w[::-1]
            )
        else:
            stream = (Path(dims, w) for w in _iter_self_reversing_steps(dims))
    elif spec.family == "cores":
        stream = _iter_cores(dims)
    else:  # self_conjugate_cores
        stream = (lam for lam in _iter_cores(dims) if conjugate(lam) == lam)

    capped = _capped(stream, _max_objects())
    if spec.limit is None:
        return capped
    from itertools import islice

    return islice(capped, spec.limit)


def closed_form(spec: EnumerationSpec) -> int | None:
    """Known closed-form count for the family, None when there is none
    (or when a limit makes the enumerated count a truncation)."""
    if spec.limit is not None:
        return None
    m, n = spec.dims.m, spec.dims.n
    if spec.family == "free":
        return comb(m + n, n)
    if spec.family in ("dyck", "cores"):
        return factorial(m + n - 1) // (factorial(m) * factorial(n))
    if spec.family in ("self_complement_paths", "self_conjugate_cores"):
        return comb(m // 2 + n // 2, m // 2)
    if spec.family == "self_reversing_free":
        if m % 2 == 1 and n % 2 == 1:
            return 0
        return comb(m // 2 + n // 2, m // 2)
    return None


def count(spec: EnumerationSpec) -> int:
    """Cardinality of the stream, cross-checked against the closed form."""
    total = sum(1 for _ in generate(spec))
    expected = closed_form(spec)
    if expected is not None and total != expected:
        raise CountMismatchError(
            f"{spec.family} for ({spec.dims.m}, {spec.dims.n}): "
            f"enumerated {total}, closed form {expected}"
        )
    return total


def oracle_partitions_up_to(size: int) -> Iterator[Partition]:
    """Every partition with |parts| sum at most the given size, size-major.

    Hard-capped at 30 to keep the stream desk-scale."""
    if size > 30:
        raise LimitExceededError("partition oracle is capped at size 30")
    if size < 0:
        raise ValueError("size must be nonnegative")

    def shapes(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in shapes(remaining - first, first):
                yield (first,) + rest

    for total in range(size + 1):
        for parts in shapes(total, total):
            yield Partition(parts)
