"""Good partitions of Space(alpha, n) and the maximal-shift move.

A good partition splits the space into n clopen parts, part i owning the
i-th maximal point w^alpha * i and nothing else of maximal rank; each part
is then a copy of the one-maximal-point space of the same rank.  For
successor rank alpha = beta + 1, a maximal shift moves a clopen (beta, 1)
copy from one part to another; these moves are the edges of the shift
graph built in the shiftgraph module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .clopen import CharPair, ClopenSet, Space, char_pair, split_units
from .errors import (
    AmbientMismatch,
    NotSuccessorRank,
    PayloadContainsMaximalPoint,
    PayloadNotInPart,
    PayloadWrongCharPair,
    RankZeroSpace,
    WindowTouchesMaximalPoint,
)
from .ordinals import (
    ZERO,
    Ordinal,
    is_successor,
    nat,
    omega_pow_mul,
    predecessor,
    show,
)


@dataclass(frozen=True)
class GoodPartition:
    """n clopen parts; parts[i-1] contains the maximal point w^alpha * i."""

    space: Space
    parts: tuple[ClopenSet, ...]

    def __post_init__(self):
        if len(self.parts) != self.space.n:
            raise ValueError(f"expected {self.space.n} parts, got {len(self.parts)}")
        for p in self.parts:
            if p.ambient != self.space:
                raise AmbientMismatch("part ambient differs from partition space")

    def part(self, i: int) -> ClopenSet:
        """1-based part access, matching the maximal-point indexing."""
        return self.parts[i - 1]


@dataclass(frozen=True)
class ShiftMove:
    """Move the payload from part src to part dst (1-based indices)."""

    src: int
    dst: int
    payload: ClopenSet


@dataclass(frozen=True)
class Violation:
    kind: str  # Overlap | GapUncovered | MaximalPointCount
    detail: str


def basepoint(space: Space) -> GoodPartition:
    """The reference partition: part i is (w^alpha*(i-1), w^alpha*i]."""
    if space.alpha == ZERO:
        raise RankZeroSpace("rank-0 spaces have no good-partition geometry")
    parts = []
    for i in range(1, space.n + 1):
        lo = omega_pow_mul(space.alpha, nat(i - 1))
        hi = omega_pow_mul(space.alpha, nat(i))
        parts.append(ClopenSet.from_intervals(space, [(lo, hi)]))
    return GoodPartition(space, tuple(parts))


def validate(p: GoodPartition) -> Violation | None:
    """First violated invariant, or None when the partition is good."""
    n = p.space.n
    for i in range(n):
        for j in range(i + 1, n):
            inter = p.parts[i].intersect(p.parts[j])
            if not inter.is_empty:
                return Violation("Overlap", f"parts {i + 1} and {j + 1} share {inter}")
    union = ClopenSet.empty(p.space)
    for part in p.parts:
        union = union.union(part)
    if union != ClopenSet.full(p.space):
        missing = ClopenSet.full(p.space).difference(union)
        return Violation("GapUncovered", f"uncovered: {missing}")
    for i in range(1, n + 1):
        part = p.part(i)
        for j in range(1, n + 1):
            x = p.space.maximal_point(j)
            if part.contains(x) != (i == j):
                return Violation(
                    "MaximalPointCount",
                    f"part {i} {'misses' if i == j else 'holds'} maximal point {show(x)}",
                )
    return None


def _successor_beta(space: Space) -> Ordinal:
    if not is_successor(space.alpha):
        raise NotSuccessorRank(f"rank {space.alpha} is not a successor")
    return predecessor(space.alpha)


def shift(p: GoodPartition, m: ShiftMove) -> GoodPartition:
    """Apply a maximal shift; validates every payload rule."""
    beta = _successor_beta(p.space)
    if m.src == m.dst:
        raise ValueError("shift needs distinct parts")
    src, dst = p.part(m.src), p.part(m.dst)
    if not m.payload.subset_of(src):
        raise PayloadNotInPart(f"payload escapes part {m.src}")
    if m.payload.contains(p.space.maximal_point(m.src)):
        raise PayloadContainsMaximalPoint(f"payload holds maximal point {m.src}")
    pair = char_pair(m.payload)
    if pair != CharPair(beta, 1):
        raise PayloadWrongCharPair(f"payload has pair {pair}, needs ({show(beta)},1)")
    parts = list(p.parts)
    parts[m.src - 1] = src.difference(m.payload)
    parts[m.dst - 1] = dst.union(m.payload)
    return GoodPartition(p.space, tuple(parts))


def is_adjacent(p: GoodPartition, q: GoodPartition) -> ShiftMove | None:
    """Witness move when the partitions differ by one maximal shift."""
    if p.space != q.space:
        raise AmbientMismatch("partitions live in different spaces")
    beta = _successor_beta(p.space)
    diffs = [i for i in range(1, p.space.n + 1) if p.part(i) != q.part(i)]
    if len(diffs) != 2:
        return None
    a, b = diffs
    for src, dst in ((a, b), (b, a)):
        lost = p.part(src).difference(q.part(src))
        gained = q.part(dst).difference(p.part(dst))
        if (
            not lost.is_empty
            and q.part(src) == p.part(src).difference(lost)
            and lost == gained
            and p.part(dst).subset_of(q.part(dst))
            and char_pair(lost) == CharPair(beta, 1)
        ):
            return ShiftMove(src, dst, lost)
    return None


def random_partition(space: Space, window: ClopenSet, seed: int) -> GoodPartition:
    """Seeded reassignment of the window's unit chunks, from the basepoint.

    The window must avoid every maximal point; its canonical unit pieces are
    dealt to parts by a seeded generator, so equal seeds give equal output.
    """
    if window.ambient != space:
        raise AmbientMismatch("window ambient differs from space")
    for i in range(1, space.n + 1):
        if window.contains(space.maximal_point(i)):
            raise WindowTouchesMaximalPoint(f"window holds maximal point {i}")
    base = basepoint(space)
    if window.is_empty:
        return base
    rng = random.Random(seed)
    parts = [part.difference(window) for part in base.parts]
    for chunk in split_units(window):
        k = rng.randrange(space.n)
        parts[k] = parts[k].union(chunk)
    result = GoodPartition(space, tuple(parts))
    violation = validate(result)
    if violation is not None:  # pragma: no cover - contract guard
        raise AssertionError(f"random partition invalid: {violation}")
    return result


# JSON / text forms -----------------------------------------------------------


def to_json(p: GoodPartition) -> dict:
    from .clopen import space_to_json, to_json as clopen_json

    return {
        "space": space_to_json(p.space),
        "parts": [clopen_json(part) for part in p.parts],
    }


def from_json(data: dict) -> GoodPartition:
    from .clopen import from_json as clopen_from, space_from_json

    space = space_from_json(data["space"])
    parts = tuple(clopen_from(part, space) for part in data["parts"])
    return GoodPartition(space, parts)


def to_text(p: GoodPartition) -> str:
    from .clopen import to_text as clopen_text

    return "; ".join(
        f"P{i + 1}={clopen_text(part)}" for i, part in enumerate(p.parts)
    )


def parse_partition(text: str, space: Space) -> GoodPartition:
    """Parts in index order, separated by semicolons, in clopen text syntax."""
    from .clopen import parse_clopen

    chunks = text.split(";")
    parts = tuple(parse_clopen(chunk, space) for chunk in chunks)
    return GoodPartition(space, parts)
