"""Clopen subsets of the ordinal interval [0, w^alpha * n] and rank counting.

The ambient space ``Space(alpha, n)`` is the ordinal ``w^alpha * n`` with
the order topology, whose clopen subsets are exactly the finite unions of
half-open intervals ``(lo, hi]`` (with ``lo = 0`` standing for the bottom
interval ``[0, hi]``).  Normalization - sorted, disjoint, non-adjacent
intervals - makes the representation canonical, so structural equality is
set equality.

Points are the nonzero ordinals: every point factors uniquely as
``w^beta * y`` with ``y`` a successor, where ``beta`` is its rank.  The
ordinal 0 carries no rank and is never counted; this keeps the full space
of ``Space(alpha, n)`` at characteristic pair ``(alpha, n)`` for every
``alpha``, including the finite discrete case ``alpha = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .errors import (
    AmbientMismatch,
    ClopenSyntaxError,
    EmptyInput,
    NoPointOfRank,
    PointOutsideAmbient,
)
from .ordinals import (
    ZERO,
    Ordinal,
    add,
    as_int,
    compare,
    divmod_omega_pow,
    is_finite,
    nat,
    omega_pow_mul,
    parse,
    predecessor,
    show,
    sub,
    successor,
)


@total_ordering
class Count:
    """Cardinality of a point class: a nonnegative integer or infinity."""

    __slots__ = ("value",)

    def __init__(self, value: int | None):
        self.value = value  # None means infinite

    @classmethod
    def finite(cls, k: int) -> "Count":
        return cls(k)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __add__(self, other: "Count") -> "Count":
        if self.value is None or other.value is None:
            return INFINITE
        return Count(self.value + other.value)

    def __lt__(self, other) -> bool:
        o = other.value if isinstance(other, Count) else other
        if self.value is None:
            return False
        if o is None:
            return True
        return self.value < o

    def __eq__(self, other) -> bool:
        o = other.value if isinstance(other, Count) else other
        return self.value == o

    def __hash__(self):
        return hash(self.value)

    def __int__(self) -> int:
        if self.value is None:
            raise ValueError("infinite count")
        return self.value

    def __repr__(self) -> str:
        return "Count(inf)" if self.value is None else f"Count({self.value})"


INFINITE = Count(None)


@dataclass(frozen=True)
class Space:
    """Ambient space [0, w^alpha * n]: rank alpha with n maximal points."""

    alpha: Ordinal
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @property
    def max_point(self) -> Ordinal:
        return omega_pow_mul(self.alpha, nat(self.n))

    def maximal_point(self, i: int) -> Ordinal:
        """The i-th maximal point w^alpha * i, 1-based."""
        if not 1 <= i <= self.n:
            raise ValueError(f"part index {i} out of range 1..{self.n}")
        return omega_pow_mul(self.alpha, nat(i))

    @property
    def maximal_points(self) -> tuple[Ordinal, ...]:
        return tuple(self.maximal_point(i) for i in range(1, self.n + 1))


@dataclass(frozen=True)
class Interval:
    """The set {x : lo < x <= hi}; lo == 0 is the bottom interval [0, hi]."""

    lo: Ordinal
    hi: Ordinal

    @property
    def is_bottom(self) -> bool:
        return self.lo == ZERO


@dataclass(frozen=True)
class CharPair:
    """Characteristic pair (rank, number of maximal-rank points)."""

    rank: Ordinal | None
    count: int

    @property
    def is_empty(self) -> bool:
        return self.rank is None

    def __str__(self) -> str:
        if self.is_empty:
            return "empty"
        return f"({show(self.rank)},{self.count})"


EMPTY_PAIR = CharPair(None, 0)


def _normalize(pairs: list[tuple[Ordinal, Ordinal]]) -> tuple[Interval, ...]:
    pairs = sorted(pairs, key=lambda p: p[0])
    out: list[tuple[Ordinal, Ordinal]] = []
    for lo, hi in pairs:
        if compare(lo, hi) >= 0:
            raise ValueError(f"interval needs lo < hi, got ({lo}, {hi}]")
        if out and compare(lo, out[-1][1]) <= 0:
            prev_lo, prev_hi = out[-1]
            out[-1] = (prev_lo, hi if compare(prev_hi, hi) < 0 else prev_hi)
        else:
            out.append((lo, hi))
    return tuple(Interval(lo, hi) for lo, hi in out)


@dataclass(frozen=True)
class ClopenSet:
    ambient: Space
    intervals: tuple[Interval, ...]

    @classmethod
    def from_intervals(
        cls, ambient: Space, pairs: list[tuple[Ordinal, Ordinal]]
    ) -> "ClopenSet":
        intervals = _normalize(list(pairs))
        m = ambient.max_point
        for iv in intervals:
            if compare(iv.hi, m) > 0:
                raise PointOutsideAmbient(f"{iv.hi} exceeds max point {m}")
        return cls(ambient, intervals)

    @classmethod
    def empty(cls, ambient: Space) -> "ClopenSet":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: Space) -> "ClopenSet":
        return cls(ambient, (Interval(ZERO, ambient.max_point),))

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def contains(self, x: Ordinal) -> bool:
        m = self.ambient.max_point
        if compare(x, m) > 0:
            raise PointOutsideAmbient(f"{x} exceeds max point {m}")
        for iv in self.intervals:
            if compare(x, iv.hi) > 0:
                continue
            if compare(iv.lo, x) < 0 or (x == ZERO and iv.is_bottom):
                return True
            return False
        return False

    # set algebra -----------------------------------------------------------

    def _check_same_ambient(self, other: "ClopenSet"):
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"{self.ambient} vs {other.ambient}")

    def _combine(self, other: "ClopenSet", keep) -> "ClopenSet":
        self._check_same_ambient(other)
        cuts = {ZERO}
        for s in (self, other):
            for iv in s.intervals:
                cuts.add(iv.lo)
                cuts.add(iv.hi)
        ordered = sorted(cuts)
        pairs = []
        run_start = None
        for prev, cur in zip(ordered, ordered[1:]):
            inside = keep(self.contains(cur), other.contains(cur))
            if inside and run_start is None:
                run_start = prev
            elif not inside and run_start is not None:
                pairs.append((run_start, prev))
                run_start = None
        if run_start is not None:
            pairs.append((run_start, ordered[-1]))
        return ClopenSet(self.ambient, _normalize(pairs))

    def union(self, other: "ClopenSet") -> "ClopenSet":
        return self._combine(other, lambda a, b: a or b)

    def intersect(self, other: "ClopenSet") -> "ClopenSet":
        return self._combine(other, lambda a, b: a and b)

    def difference(self, other: "ClopenSet") -> "ClopenSet":
        return self._combine(other, lambda a, b: a and not b)

    def symdiff(self, other: "ClopenSet") -> "ClopenSet":
        return self._combine(other, lambda a, b: a != b)

    def complement(self) -> "ClopenSet":
        pairs = []
        cursor = ZERO
        for iv in self.intervals:
            if compare(cursor, iv.lo) < 0:
                pairs.append((cursor, iv.lo))
            cursor = iv.hi
        m = self.ambient.max_point
        if compare(cursor, m) < 0:
            pairs.append((cursor, m))
        return ClopenSet(self.ambient, _normalize(pairs))

    def subset_of(self, other: "ClopenSet") -> bool:
        return self.difference(other).is_empty

    def __str__(self) -> str:
        return to_text(self)


def combine(kind: str, a: ClopenSet, b: ClopenSet) -> ClopenSet:
    ops = {"union": a.union, "intersect": a.intersect, "symdiff": a.symdiff}
    if kind not in ops:
        raise ValueError(f"unknown combine kind {kind!r}")
    return ops[kind](b)


# rank counting ---------------------------------------------------------------


def _quotient_range(iv: Interval, beta: Ordinal) -> tuple[Ordinal, Ordinal]:
    """y-range (qlo, qhi] of points w^beta * y inside the interval."""
    qlo, _ = divmod_omega_pow(iv.lo, beta)
    qhi, _ = divmod_omega_pow(iv.hi, beta)
    return qlo, qhi


def _interval_rank_count(iv: Interval, beta: Ordinal) -> Count:
    qlo, qhi = _quotient_range(iv, beta)
    if compare(qlo, qhi) >= 0:
        return Count(0)
    gap = sub(qlo, qhi)
    return Count(as_int(gap)) if is_finite(gap) else INFINITE


def count_rank(a: ClopenSet, beta: Ordinal) -> Count:
    """How many points of rank beta lie in the set."""
    total = Count(0)
    for iv in a.intervals:
        total = total + _interval_rank_count(iv, beta)
        if not total.is_finite:
            return total
    return total


def _interval_max_rank(iv: Interval) -> Ordinal:
    """Largest point rank present in (lo, hi]."""
    lo, hi = iv.lo, iv.hi
    i = 0
    while i < len(lo.terms) and i < len(hi.terms) and lo.terms[i] == hi.terms[i]:
        i += 1
    # lo < hi leaves two cases after stripping the common prefix: lo runs
    # out, or the differing term of hi dominates; either way the rank of
    # the interval is the exponent of hi's next term
    return hi.terms[i][0]


def char_pair(a: ClopenSet) -> CharPair:
    """(max rank, number of points achieving it); Empty for the empty set."""
    if a.is_empty:
        return EMPTY_PAIR
    rank = None
    for iv in a.intervals:
        r = _interval_max_rank(iv)
        if rank is None or compare(rank, r) < 0:
            rank = r
    total = count_rank(a, rank)
    return CharPair(rank, int(total))


def rank_points(a: ClopenSet, beta: Ordinal) -> list[Ordinal]:
    """All rank-beta points of the set, ascending; requires a finite count."""
    pts = []
    for iv in a.intervals:
        qlo, qhi = _quotient_range(iv, beta)
        if compare(qlo, qhi) >= 0:
            continue
        gap = sub(qlo, qhi)
        if not is_finite(gap):
            raise ValueError(f"infinitely many rank-{beta} points")
        for t in range(1, as_int(gap) + 1):
            pts.append(omega_pow_mul(beta, add(qlo, nat(t))))
    return pts


def singleton(ambient: Space, p: Ordinal) -> ClopenSet:
    """The one-point clopen set {p}; p must be a successor ordinal."""
    return ClopenSet.from_intervals(ambient, [(predecessor(p), p)])


def find_copy(a: ClopenSet, gamma: Ordinal) -> ClopenSet:
    """Leftmost canonical clopen subset of a with characteristic pair (gamma, 1)."""
    for iv in a.intervals:
        qlo, qhi = _quotient_range(iv, gamma)
        if compare(qlo, qhi) < 0:
            x0 = omega_pow_mul(gamma, successor(qlo))
            return ClopenSet(a.ambient, (Interval(iv.lo, x0),))
    raise NoPointOfRank(f"no point of rank {gamma} in {a}")


def copy_at(a: ClopenSet, gamma: Ordinal, y: Ordinal) -> ClopenSet:
    """Canonical (gamma, 1) copy around the rank-gamma point w^gamma * y of a."""
    x0 = omega_pow_mul(gamma, y)
    floor = omega_pow_mul(gamma, predecessor(y))
    for iv in a.intervals:
        qlo, qhi = _quotient_range(iv, gamma)
        if compare(qlo, y) < 0 and compare(y, qhi) <= 0:
            lo = iv.lo if compare(iv.lo, floor) > 0 else floor
            return ClopenSet(a.ambient, (Interval(lo, x0),))
    raise NoPointOfRank(f"{x0} is not a rank-{gamma} point of {a}")


def split_units(a: ClopenSet) -> list[ClopenSet]:
    """Partition a into char-pair (rank, 1) pieces, cut after each top point."""
    pair = char_pair(a)
    if pair.is_empty:
        raise EmptyInput("cannot split the empty set")
    tops = rank_points(a, pair.rank)
    units = []
    prev = ZERO
    for k, cut in enumerate(tops):
        hi = cut if k < len(tops) - 1 else a.ambient.max_point
        window = ClopenSet(a.ambient, (Interval(prev, hi),))
        units.append(a.intersect(window))
        prev = cut
    return units


# text and JSON forms ---------------------------------------------------------


def to_text(a: ClopenSet) -> str:
    if a.is_empty:
        return "{}"
    parts = []
    for iv in a.intervals:
        if iv.is_bottom:
            parts.append(f"[0,{show(iv.hi)}]")
        else:
            parts.append(f"({show(iv.lo)},{show(iv.hi)}]")
    return ",".join(parts)


def parse_clopen(text: str, ambient: Space) -> ClopenSet:
    """Parse comma-separated intervals "(a,b]" and "[0,b]"; "{}" is empty."""
    s = text.strip()
    if s in ("", "{}"):
        return ClopenSet.empty(ambient)
    pairs = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch in " \t,":
            i += 1
            continue
        if ch == "[":
            close = s.find("]", i)
            if close < 0:
                raise ClopenSyntaxError("unterminated interval", i)
            body = s[i + 1 : close].split(",")
            if len(body) != 2 or body[0].strip() != "0":
                raise ClopenSyntaxError("bottom interval must look like [0,b]", i)
            pairs.append((ZERO, parse(body[1])))
            i = close + 1
        elif ch == "(":
            close = s.find("]", i)
            if close < 0:
                raise ClopenSyntaxError("unterminated interval", i)
            body = s[i + 1 : close]
            depth = 0
            split_at = -1
            for j, c in enumerate(body):
                if c == "(":
                    depth += 1
                elif c == ")":
                    depth -= 1
                elif c == "," and depth == 0:
                    split_at = j
                    break
            if split_at < 0:
                raise ClopenSyntaxError("interval needs two endpoints", i)
            pairs.append((parse(body[:split_at]), parse(body[split_at + 1 :])))
            i = close + 1
        else:
            raise ClopenSyntaxError(f"unexpected character {ch!r}", i)
    return ClopenSet.from_intervals(ambient, pairs)


def space_to_json(space: Space) -> dict:
    return {"alpha": show(space.alpha), "n": space.n}


def space_from_json(data: dict) -> Space:
    return Space(parse(data["alpha"]), int(data["n"]))


def to_json(a: ClopenSet) -> dict:
    return {
        "ambient": space_to_json(a.ambient),
        "intervals": [
            {"lo": None if iv.is_bottom else show(iv.lo), "hi": show(iv.hi)}
            for iv in a.intervals
        ],
    }


def from_json(data: dict, ambient: Space | None = None) -> ClopenSet:
    space = ambient if ambient is not None else space_from_json(data["ambient"])
    pairs = [
        (ZERO if iv["lo"] is None else parse(iv["lo"]), parse(iv["hi"]))
        for iv in data["intervals"]
    ]
    return ClopenSet.from_intervals(space, pairs)
