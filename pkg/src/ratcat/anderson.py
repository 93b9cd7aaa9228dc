"""Anderson's bijection between (m,n)-Dyck paths and (m,n)-cores.

For coprime (m, n) the positive ranks of the lattice points strictly to the
right of a Dyck path form the first-column hook set of an (m, n)-core, and
every (m, n)-core arises this way exactly once.  The s-vector of that hook
set modulo n recovers the ranks of the path's south ends, which makes the
inverse a forced rank walk.
"""

from __future__ import annotations

from .errors import NotCoreError
from .partitions import (
    Partition,
    conjugate,
    first_column_hooks,
    flush_violation,
    partition_from_hooks,
    s_vector,
)
from .paths import (
    Dims,
    EAST,
    NORTH,
    Path,
    area,
    rank_complement,
    south_end_ranks,
)
from .paths import _require_dyck


def hook_ranks(p: Path) -> frozenset[int]:
    """Positive ranks below each south end: from every south-end rank keep
    s - n, s - 2n, ... while positive.  These are exactly the ranks of the
    lattice points strictly right of the path."""
    p.dims.require_coprime()
    _require_dyck(p)
    n = p.dims.n
    out = set()
    for s in south_end_ranks(p):
        t = s - n
        while t > 0:
            out.add(t)
            t -= n
    return frozenset(out)


def hook_ranks_geometric(p: Path) -> frozenset[int]:
    """Independent route: scan all lattice points strictly right of the path
    and keep the positive ranks."""
    p.dims.require_coprime()
    _require_dyck(p)
    m, n = p.dims.m, p.dims.n
    # x-extent of the path at height b ends where the N step leaving b starts
    leave_x = {}
    x = 0
    for c in p.steps:
        if c == NORTH:
            leave_x[len(leave_x)] = x
        else:
            x += 1
    out = set()
    for b in range(n):
        for a in range(leave_x[b] + 1, m + 1):
            r = m * b - n * a
            if r > 0:
                out.add(r)
    return frozenset(out)


def anderson(p: Path) -> Partition:
    """The (m,n)-core whose first-column hooks are the ranks right of p."""
    return partition_from_hooks(sorted(hook_ranks(p), reverse=True))


def _require_core_hooks(hooks, m: int, n: int, lam: Partition) -> None:
    for modulus in (m, n):
        bad = flush_violation(modulus, hooks)
        if bad is None:
            continue
        if bad % modulus == 0:
            raise NotCoreError(
                f"{lam.text()} is not an ({m},{n})-core: "
                f"hook {bad} is divisible by {modulus}"
            )
        raise NotCoreError(
            f"{lam.text()} is not an ({m},{n})-core: hook {bad} present "
            f"but {bad - modulus} missing from the first-column hooks"
        )


def anderson_inverse(lam: Partition, dims: Dims) -> Path:
    """The unique Dyck path mapping to lam under Anderson's bijection.

    The s-vector of the hook set mod n gives the south-end ranks; the walk
    from rank 0 steps north exactly on those ranks.
    """
    dims.require_coprime()
    m, n = dims.m, dims.n
    hooks = first_column_hooks(lam)
    _require_core_hooks(hooks, m, n, lam)
    souths = set(s_vector(n, hooks).entries)
    steps = []
    r = 0
    for _ in range(m + n):
        if r in souths:
            steps.append(NORTH)
            r += m
        else:
            steps.append(EAST)
            r -= n
        if r < 0:
            raise AssertionError(
                f"rank walk for {lam.text()} left the Dyck region at {r}"
            )
    if r != 0:
        raise AssertionError(f"rank walk for {lam.text()} ended at {r}, expected 0")
    return Path(dims, "".join(steps))


def conjugation_correspondence_check(p: Path) -> bool:
    """True iff rank complement on paths matches conjugation on cores."""
    return anderson(rank_complement(p)) == conjugate(anderson(p))


def core_length_equals_area(p: Path) -> bool:
    """True iff the image core has one part per area box of the path."""
    return area(p) == anderson(p).length
