"""Relative height of good partitions of a limit-rank space.

For limit alpha, two good partitions are compared by the ranks present
in their partwise symmetric differences: a nonempty clopen set contains
points of every rank up to its own, so the set of qualifying ranks per
part is a full initial segment.  Two readings of "qualifying" ship:

* ``EXISTS``: some part's difference carries the rank (height is the
  max of the partwise maximal ranks).  This is the default; it makes
  the height an ultrametric, which is what the stabilizer-chain
  argument against bounded generation rests on.
* ``FORALL``: every part's difference carries the rank (height is the
  min, and 0 as soon as any difference is empty).  This literal reading
  fails the ultrametric inequality on a concrete triple that the test
  suite pins, which is why it is not the default.

Heights are always below alpha: differences avoid the maximal points,
so their ranks are bounded away from the rank of the space.  Sublevel
sets of the height are not materialized (they are infinite); membership
is the predicate ``rel_height(basepoint, Q) <= beta``, and the level of
a synthesized homeomorphism g is the height of g applied to the
basepoint, which witnesses the strictly increasing stabilizer chain.
"""

from __future__ import annotations

import enum

from .clopen import Space, char_pair, find_copy
from .errors import AmbientMismatch, NotLimitRank, RankTooHigh
from .homeo import Homeomorphism, map_partition, partition_map
from .ordinals import ZERO, Ordinal, compare, is_limit, show
from .partitions import GoodPartition, basepoint


class HeightMode(enum.Enum):
    EXISTS = "exists"
    FORALL = "forall"


def _check_limit(space) -> None:
    if not is_limit(space.alpha):
        raise NotLimitRank(f"rank {space.alpha} is not a limit ordinal")


def part_difference_ranks(p: GoodPartition, q: GoodPartition) -> list[Ordinal | None]:
    """Max rank of each partwise symmetric difference; None when empty."""
    if p.space != q.space:
        raise AmbientMismatch("partitions live in different spaces")
    ranks = []
    for a, b in zip(p.parts, q.parts):
        pair = char_pair(a.symdiff(b))
        ranks.append(None if pair.is_empty else pair.rank)
    return ranks


def rel_height(
    p: GoodPartition, q: GoodPartition, mode: HeightMode = HeightMode.EXISTS
) -> Ordinal:
    _check_limit(p.space)
    ranks = part_difference_ranks(p, q)
    present = [r for r in ranks if r is not None]
    if mode is HeightMode.EXISTS:
        if not present:
            return ZERO
        return max(present)
    if len(present) < len(ranks):
        return ZERO  # an empty difference disqualifies every rank
    return min(present)


def height_report(
    p: GoodPartition, q: GoodPartition, mode: HeightMode = HeightMode.EXISTS
) -> dict:
    ranks = part_difference_ranks(p, q)
    return {
        "h": show(rel_height(p, q, mode)),
        "per_part_max_rank": [None if r is None else show(r) for r in ranks],
        "mode": mode.value,
    }


def stab_level(
    g: Homeomorphism, p0: GoodPartition, mode: HeightMode = HeightMode.EXISTS
) -> Ordinal:
    """Smallest sublevel index whose stabilizer contains g: the height of
    the image partition relative to the basepoint."""
    _check_limit(p0.space)
    return rel_height(p0, map_partition(g, p0), mode)


def stab_witness(space: Space, beta_prime: Ordinal, i: int, j: int) -> Homeomorphism:
    """Homeomorphism swapping canonical rank-beta' copies of parts i and j
    of the basepoint; its stabilizer level is exactly beta' (EXISTS mode)."""
    _check_limit(space)
    if compare(beta_prime, space.alpha) >= 0:
        raise RankTooHigh(f"{beta_prime} is not below the space rank {space.alpha}")
    if i == j:
        raise ValueError("witness needs two distinct parts")
    base = basepoint(space)
    s = find_copy(base.part(i), beta_prime)
    t = find_copy(base.part(j), beta_prime)
    rest = s.union(t).complement()
    return partition_map([s, t, rest], [t, s, rest])
