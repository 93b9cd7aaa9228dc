"""Path statistics: dinv in two forms, the sweep map, and skew-length.

dinv counts cells of the partition-shaped region above a Dyck path whose
arm/leg ratios straddle the rectangle slope m/n; an equivalent count pairs
west ends with later south ends whose rank gap is at most m+n.  The sweep
map re-sorts the steps of a path by the ranks of their starting points and
carries dinv to area.  Skew-length of an (m,n)-core counts cells lying both
in a row whose first-column hook is maximal in its residue class mod n and
in the region of hooks smaller than m; it coincides with codinv of the
corresponding Dyck path.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .anderson import _require_core_hooks
from .errors import NonCoprimeError
from .partitions import (
    Partition,
    conjugate,
    first_column_hooks,
    row_hooks,
    s_vector,
)
from .paths import (
    Dims,
    EAST,
    Path,
    area,
    east_step_heights,
    end_sets,
)
from .paths import _require_dyck


def max_statistic(dims: Dims) -> int:
    """Largest possible area and dinv over the rectangle's Dyck paths."""
    dims.require_coprime()
    return (dims.m - 1) * (dims.n - 1) // 2


def region_above(p: Path) -> Partition:
    """Cells of the rectangle above the path, read as a partition whose top
    row is the rectangle's top row."""
    _require_dyck(p)
    heights = east_step_heights(p)
    parts = []
    for j in range(p.dims.n - 1, -1, -1):
        width = sum(1 for y in heights if y <= j)
        if width:
            parts.append(width)
    return Partition(tuple(parts))


def dinv_geometric(p: Path) -> int:
    """Count region cells c with n*arm(c) <= m*(leg(c)+1) and
    n*(arm(c)+1) > m*leg(c); both sides integral, so leg = 0 never divides."""
    _require_dyck(p)
    m, n = p.dims.m, p.dims.n
    lam = region_above(p)
    cols = conjugate(lam).parts
    total = 0
    for i, part in enumerate(lam.parts, start=1):
        for j in range(1, part + 1):
            arm = part - j
            leg = cols[j - 1] - i
            if n * arm <= m * (leg + 1) and n * (arm + 1) > m * leg:
                total += 1
    return total


def dinv_rank(p: Path) -> int:
    """Rank form of dinv: pairs (i, j) with i < j where point i starts an E
    step, point j starts an N step, and 0 < rank_i - rank_j <= m + n."""
    p.dims.require_coprime()
    _require_dyck(p)
    m, n = p.dims.m, p.dims.n
    window = m + n
    rs = p.point_ranks
    total = 0
    west_ranks: list[int] = []
    for k, c in enumerate(p.steps):
        if c == EAST:
            west_ranks.append(rs[k])
        else:
            rj = rs[k]
            total += sum(1 for ri in west_ranks if 0 < ri - rj <= window)
    return total


def codinv(p: Path) -> int:
    """Complement of dinv within the rectangle maximum."""
    return max_statistic(p.dims) - dinv_geometric(p)


def coarea(p: Path) -> int:
    """Complement of area within the rectangle maximum."""
    return max_statistic(p.dims) - area(p)


def codinv_pair_count(p: Path) -> int:
    """Independent route to codinv: pairs of a south-end rank exceeding a
    west-end rank."""
    ends = end_sets(p)
    _require_dyck(p)
    west = sorted(ends.west)
    total = 0
    for rs_ in ends.south:
        total += bisect_left(west, rs_)
    return total


@dataclass(frozen=True)
class StatRecord:
    area: int
    dinv: int
    codinv: int
    coarea: int

    def to_dict(self) -> dict:
        return {
            "area": self.area,
            "dinv": self.dinv,
            "codinv": self.codinv,
            "coarea": self.coarea,
        }


def stat_record(p: Path) -> StatRecord:
    top = max_statistic(p.dims)
    a = area(p)
    d = dinv_geometric(p)
    return StatRecord(area=a, dinv=d, codinv=top - d, coarea=top - a)


def sweep(p: Path) -> Path:
    """Sort the steps of p by the ranks of their starting points."""
    p.dims.require_coprime()
    _require_dyck(p)
    rs = p.point_ranks
    keyed = sorted(zip(rs[:-1], p.steps))
    if len({r for r, _ in keyed}) != len(keyed):
        raise NonCoprimeError("starting ranks collide; sweep order undefined")
    return Path(p.dims, "".join(c for _, c in keyed))


@dataclass(frozen=True)
class SweepReport:
    m: int
    n: int
    count: int
    injective: bool
    collisions: tuple[dict, ...]
    cycles: int | None

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "count": self.count,
            "injective": self.injective,
            "collisions": list(self.collisions),
            "cycles": self.cycles,
        }


def sweep_injectivity_report(dims: Dims) -> SweepReport:
    """Apply the sweep map to every Dyck path of the rectangle and report
    collisions; when it is a permutation, also count its cycles."""
    dims.require_coprime()
    from .enumeration import iter_dyck_steps

    words = list(iter_dyck_steps(dims))
    images: dict[str, list[str]] = {}
    for w in words:
        img = sweep(Path(dims, w)).steps
        images.setdefault(img, []).append(w)
    collisions = tuple(
        {"image": img, "preimages": sorted(pre)}
        for img, pre in sorted(images.items())
        if len(pre) > 1
    )
    injective = not collisions
    cycles = None
    if injective and set(images) == set(words):
        index = {w: k for k, w in enumerate(words)}
        perm = [index[sweep(Path(dims, w)).steps] for w in words]
        seen = [False] * len(perm)
        cycles = 0
        for start in range(len(perm)):
            if seen[start]:
                continue
            cycles += 1
            k = start
            while not seen[k]:
                seen[k] = True
                k = perm[k]
    return SweepReport(
        m=dims.m,
        n=dims.n,
        count=len(words),
        injective=injective,
        collisions=collisions,
        cycles=cycles,
    )


def n_row_indices(lam: Partition, n: int) -> tuple[int, ...]:
    """1-based rows whose first-column hook is maximal in its class mod n."""
    hooks = first_column_hooks(lam)
    svec = s_vector(n, hooks).entries
    return tuple(
        i for i, h in enumerate(hooks, start=1) if svec[h % n] == h + n
    )


def skew_length(lam: Partition, m: int, n: int) -> int:
    """Cells lying in an n-row and having hook length below m."""
    Dims(m, n).require_coprime()
    hooks = first_column_hooks(lam)
    _require_core_hooks(hooks, m, n, lam)
    total = 0
    for i in n_row_indices(lam, n):
        total += sum(1 for h in row_hooks(lam, i) if h < m)
    return total


def skew_length_symmetry_check(lam: Partition, m: int, n: int) -> bool:
    """Skew-length is unchanged by conjugating or swapping the moduli."""
    values = {
        skew_length(lam, m, n),
        skew_length(lam, n, m),
        skew_length(conjugate(lam), m, n),
        skew_length(conjugate(lam), n, m),
    }
    return len(values) == 1
