"""The diameter-3 partition graph of a one-maximal-point space.

Fix a template of characteristic pairs realizable as a clopen partition
of Space(alpha, 1), with the unique rank-alpha entry in slot 0.  Vertices
are partitions matching the template slotwise; two vertices are adjacent
when the nonzero slots of one sit inside slot 0 of the other (the
relation is symmetric).  Any two vertices are joined by a path of length
at most three: slot 0 of every vertex contains the unique maximal point,
so the intersection of two zero slots has full rank and fresh copies of
the nonzero template slots can be carved from it, giving a common
neighbor.  The fallback that carves middle vertices from the two
differences instead is implemented for completeness, and short_path
reports which branch ran; for these ordinal spaces the common-neighbor
branch always suffices.

Adjacent vertices are exchanged by an involution that swaps matching
nonzero slots and fixes the rest pointwise.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .clopen import (
    CharPair,
    ClopenSet,
    Space,
    char_pair,
    copy_at,
    find_copy,
)
from .clopen import _quotient_range
from .errors import ConfigMismatch, NoPointOfRank, NotAdjacent
from .homeo import Homeomorphism, build_homeo, _Piecewise
from .ordinals import Ordinal, add, as_int, compare, is_finite, nat, sub

BRANCH_COUNTS: Counter = Counter()


@dataclass(frozen=True)
class SelfSimConfig:
    """Space with one maximal point plus the slot template of char pairs."""

    space: Space
    template: tuple[CharPair, ...]

    def __post_init__(self):
        if self.space.n != 1:
            raise ConfigMismatch("self-similar graph needs a single maximal point")
        if len(self.template) < 2:
            raise ConfigMismatch("template needs slot 0 plus at least one more slot")
        if self.template[0] != CharPair(self.space.alpha, 1):
            raise ConfigMismatch("slot 0 must carry the full rank with one point")
        for pair in self.template[1:]:
            if pair.is_empty or compare(pair.rank, self.space.alpha) >= 0:
                raise ConfigMismatch("nonzero slots must have rank below the space")


@dataclass(frozen=True)
class SelfSimVertex:
    """Clopen partition of the space matching the template slotwise."""

    config: SelfSimConfig
    pieces: tuple[ClopenSet, ...]

    def __post_init__(self):
        if len(self.pieces) != len(self.config.template):
            raise ConfigMismatch("piece count differs from template")
        union = ClopenSet.empty(self.config.space)
        for piece, pair in zip(self.pieces, self.config.template):
            if char_pair(piece) != pair:
                raise ConfigMismatch(f"piece pair {char_pair(piece)} differs from {pair}")
            if not piece.intersect(union).is_empty:
                raise ConfigMismatch("pieces overlap")
            union = union.union(piece)
        if union != ClopenSet.full(self.config.space):
            raise ConfigMismatch("pieces do not cover the space")

    def nonzero_union(self) -> ClopenSet:
        out = ClopenSet.empty(self.config.space)
        for piece in self.pieces[1:]:
            out = out.union(piece)
        return out


def _carve_template(
    config: SelfSimConfig, region: ClopenSet
) -> list[ClopenSet] | None:
    """Disjoint copies of slots 1..k inside the region, or None if it
    runs out of points of some required rank."""
    rest = region
    out = []
    try:
        for pair in config.template[1:]:
            piece = ClopenSet.empty(config.space)
            for _ in range(pair.count):
                c = find_copy(rest, pair.rank)
                piece = piece.union(c)
                rest = rest.difference(c)
            out.append(piece)
    except NoPointOfRank:
        return None
    return out


def _vertex_around(config: SelfSimConfig, carved: list[ClopenSet]) -> SelfSimVertex:
    union = ClopenSet.empty(config.space)
    for piece in carved:
        union = union.union(piece)
    return SelfSimVertex(config, (union.complement(), *carved))


def base_vertex(config: SelfSimConfig) -> SelfSimVertex:
    """Canonical vertex: slots carved leftmost from the full space."""
    carved = _carve_template(config, ClopenSet.full(config.space))
    if carved is None:  # pragma: no cover - template realizability guard
        raise ConfigMismatch("template is not realizable in this space")
    return _vertex_around(config, carved)


def ss_adjacent(q: SelfSimVertex, q2: SelfSimVertex) -> bool:
    """Adjacency: nonzero slots of each vertex avoid those of the other."""
    if q.config != q2.config:
        raise ConfigMismatch("vertices belong to different configurations")
    return q.nonzero_union().intersect(q2.nonzero_union()).is_empty


@dataclass(frozen=True)
class SsPath:
    vertices: tuple[SelfSimVertex, ...]
    branch: str  # trivial | adjacent | common_neighbor | two_middle

    def __len__(self) -> int:
        return len(self.vertices) - 1


def short_path(q: SelfSimVertex, q2: SelfSimVertex) -> SsPath:
    """Connecting path of length at most three."""
    if q.config != q2.config:
        raise ConfigMismatch("vertices belong to different configurations")
    if q == q2:
        BRANCH_COUNTS["trivial"] += 1
        return SsPath((q,), "trivial")
    if ss_adjacent(q, q2):
        BRANCH_COUNTS["adjacent"] += 1
        return SsPath((q, q2), "adjacent")
    config = q.config
    both_zero = q.pieces[0].intersect(q2.pieces[0])
    carved = _carve_template(config, both_zero)
    if carved is not None:
        middle = _vertex_around(config, carved)
        BRANCH_COUNTS["common_neighbor"] += 1
        return SsPath((q, middle, q2), "common_neighbor")
    left = _carve_template(config, q.pieces[0].difference(q2.pieces[0]))
    right = _carve_template(config, q2.pieces[0].difference(q.pieces[0]))
    if left is None or right is None:  # pragma: no cover - unreachable here
        raise ConfigMismatch("no middle vertices available")
    BRANCH_COUNTS["two_middle"] += 1
    return SsPath((q, _vertex_around(config, left), _vertex_around(config, right), q2), "two_middle")


def edge_involution(q: SelfSimVertex, q2: SelfSimVertex) -> Homeomorphism:
    """Involution exchanging matching nonzero slots, fixing the rest."""
    if not ss_adjacent(q, q2):
        raise NotAdjacent("edge involution needs adjacent vertices")
    swapped = ClopenSet.empty(q.config.space)
    entries = []
    for a, b in zip(q.pieces[1:], q2.pieces[1:]):
        h = build_homeo(a, b)
        entries.append((a, b, h))
        entries.append((b, a, h.inverse()))
        swapped = swapped.union(a).union(b)
    fixed = swapped.complement()
    entries.insert(0, (fixed, fixed, Homeomorphism.identity(fixed)))
    full = ClopenSet.full(q.config.space)
    return Homeomorphism(full, full, _Piecewise(entries))


def _candidate_points(region: ClopenSet, gamma: Ordinal, per_interval: int = 6):
    """A finite pool of rank-gamma point positions y, a few per interval."""
    out = []
    for iv in region.intervals:
        qlo, qhi = _quotient_range(iv, gamma)
        if compare(qlo, qhi) >= 0:
            continue
        gap = sub(qlo, qhi)
        limit = per_interval
        if is_finite(gap):
            limit = min(limit, as_int(gap))
        for t in range(1, limit + 1):
            out.append(add(qlo, nat(t)))
    return out


def random_vertex(config: SelfSimConfig, seed: int) -> SelfSimVertex:
    """Seeded vertex: slot copies carved around randomly chosen points."""
    rng = random.Random(seed)
    rest = ClopenSet.full(config.space)
    carved = []
    for pair in config.template[1:]:
        piece = ClopenSet.empty(config.space)
        for _ in range(pair.count):
            ys = _candidate_points(rest, pair.rank)
            if not ys:  # pragma: no cover - realizability guard
                raise ConfigMismatch("ran out of candidate points")
            y = ys[rng.randrange(len(ys))]
            c = copy_at(rest, pair.rank, y)
            piece = piece.union(c)
            rest = rest.difference(c)
        carved.append(piece)
    return _vertex_around(config, carved)
