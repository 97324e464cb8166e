"""Homeomorphism decision and synthesis between clopen ordinal sets.

Two clopen sets are homeomorphic exactly when their characteristic pairs
agree, and a witness map can be assembled recursively: sets with several
maximal-rank points split into unit pieces, rank-0 sets match their
finitely many isolated points in order, and a unit of positive rank is
matched to its partner by interleaving shrinking clopen collars around
the two maximal points.  The collar machinery is lazy: pieces of the
matching are materialized only as far as point evaluation or set imaging
requires, and resolved pieces are memoized, so repeated queries are
cheap and deterministic.

Also houses the coarse-geometry classifier for the homeomorphism groups
of these spaces: rank-0 or single-maximal-point spaces give coarsely
bounded groups, successor rank with several maximal points gives a
boundedly generated group of infinite diameter, and limit rank with
several maximal points is not boundedly generated at all.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .clopen import (
    CharPair,
    ClopenSet,
    Interval,
    char_pair,
    count_rank,
    find_copy,
    rank_points,
    singleton,
    split_units,
)
from .errors import (
    EmptySets,
    ImageNotGoodPartition,
    NotAPartition,
    NotHomeomorphic,
    PieceMismatch,
    PointNotInDomain,
)
from .ordinals import ZERO, Ordinal, fundamental_seq, is_successor
from .partitions import GoodPartition, validate


def are_homeomorphic(a: ClopenSet, b: ClopenSet) -> bool:
    return char_pair(a) == char_pair(b)


class _Identity:
    def fwd(self, x):
        return x

    def bwd(self, y):
        return y

    def image(self, s):
        return s

    def preimage(self, s):
        return s


_IDENTITY = _Identity()


class _FiniteMatch:
    """Order-preserving matching of two equal-size finite point sets."""

    def __init__(self, pts_a, pts_b):
        self._fwd = dict(zip(pts_a, pts_b))
        self._bwd = dict(zip(pts_b, pts_a))

    def fwd(self, x):
        return self._fwd[x]

    def bwd(self, y):
        return self._bwd[y]

    def _map_set(self, s, mapping):
        out = ClopenSet.empty(s.ambient)
        for p, q in mapping.items():
            if s.contains(p):
                out = out.union(singleton(s.ambient, q))
        return out

    def image(self, s):
        return self._map_set(s, self._fwd)

    def preimage(self, s):
        return self._map_set(s, self._bwd)


class _Piecewise:
    """Disjoint sub-homeomorphisms covering the whole domain."""

    def __init__(self, pieces):
        self.pieces = tuple(pieces)  # (dom, cod, Homeomorphism)

    def fwd(self, x):
        for dom, _, h in self.pieces:
            if dom.contains(x):
                return h.eval(x)
        raise PointNotInDomain(f"{x} missed every piece")

    def bwd(self, y):
        for _, cod, h in self.pieces:
            if cod.contains(y):
                return h.eval_inverse(y)
        raise PointNotInDomain(f"{y} missed every piece")

    def image(self, s):
        out = ClopenSet.empty(s.ambient)
        for dom, _, h in self.pieces:
            part = s.intersect(dom)
            if not part.is_empty:
                out = out.union(h.image_of(part))
        return out

    def preimage(self, s):
        out = ClopenSet.empty(s.ambient)
        for _, cod, h in self.pieces:
            part = s.intersect(cod)
            if not part.is_empty:
                out = out.union(h.preimage_of(part))
        return out


def _carve(s: ClopenSet, pair: CharPair) -> tuple[ClopenSet, ClopenSet]:
    """Canonical subset of s with the given pair, plus the leftover."""
    copies = ClopenSet.empty(s.ambient)
    rest = s
    for _ in range(pair.count):
        c = find_copy(rest, pair.rank)
        copies = copies.union(c)
        rest = rest.difference(c)
    return copies, rest


def _collar_chunks(s: ClopenSet, star: Ordinal):
    """Yield (chunk, tail) slices of s converging to its maximal point.

    Cuts follow the canonical fundamental sequence of the maximal point;
    the first chunk also carries whatever part of s lies above the point.
    Tails always retain the maximal point, and successive tails intersect
    to exactly that point.
    """
    tail = s
    k = 1
    while True:
        cut = fundamental_seq(star, k)
        window = ClopenSet(s.ambient, (Interval(cut, star),))
        new_tail = tail.intersect(window)
        chunk = tail.difference(new_tail)
        tail = new_tail
        k += 1
        if not chunk.is_empty:
            yield chunk, new_tail


class _BackAndForth:
    """Lazy matching of two one-maximal-point sets of equal positive rank.

    Alternates between the two sides: the pending block of one side is
    matched onto a canonical copy carved from the other side's pending
    material, absorbing further collar chunks whenever the carve needs
    more points of the required rank.  Absorption terminates because
    chunk ranks grow cofinally toward the block rank near the maximal
    point.  The leftover of a carve becomes the next block of its own
    side, so both sides are exhausted and the star points correspond.
    """

    def __init__(self, a: ClopenSet, b: ClopenSet, pair: CharPair):
        self.a_star = rank_points(a, pair.rank)[0]
        self.b_star = rank_points(b, pair.rank)[0]
        self._a_gen = _collar_chunks(a, self.a_star)
        self._b_gen = _collar_chunks(b, self.b_star)
        self._dom_tail = a
        self._cod_tail = b
        self._l_a = ClopenSet.empty(a.ambient)
        self._l_b = ClopenSet.empty(b.ambient)
        self._pieces: list[tuple[ClopenSet, ClopenSet, "Homeomorphism"]] = []
        self._lock = threading.RLock()

    def _absorb_b(self, pair: CharPair):
        while count_rank(self._l_b, pair.rank) < pair.count:
            chunk, tail = next(self._b_gen)
            self._l_b = self._l_b.union(chunk)
            self._cod_tail = tail

    def _absorb_a(self, pair: CharPair):
        while count_rank(self._l_a, pair.rank) < pair.count:
            chunk, tail = next(self._a_gen)
            self._l_a = self._l_a.union(chunk)
            self._dom_tail = tail

    def _step(self):
        if self._l_a.is_empty:
            chunk, tail = next(self._a_gen)
            self._l_a = chunk
            self._dom_tail = tail
        pair_a = char_pair(self._l_a)
        self._absorb_b(pair_a)
        carved, rest = _carve(self._l_b, pair_a)
        self._pieces.append((self._l_a, carved, build_homeo(self._l_a, carved)))
        self._l_b = rest
        self._l_a = ClopenSet.empty(self._l_a.ambient)
        if not self._l_b.is_empty:
            pair_b = char_pair(self._l_b)
            self._absorb_a(pair_b)
            carved, rest = _carve(self._l_a, pair_b)
            self._pieces.append((carved, self._l_b, build_homeo(carved, self._l_b)))
            self._l_a = rest
            self._l_b = ClopenSet.empty(self._l_b.ambient)

    def fwd(self, x):
        with self._lock:
            if x == self.a_star:
                return self.b_star
            idx = 0
            while True:
                while idx < len(self._pieces):
                    dom, _, h = self._pieces[idx]
                    if dom.contains(x):
                        return h.eval(x)
                    idx += 1
                self._step()

    def bwd(self, y):
        with self._lock:
            if y == self.b_star:
                return self.a_star
            idx = 0
            while True:
                while idx < len(self._pieces):
                    _, cod, h = self._pieces[idx]
                    if cod.contains(y):
                        return h.eval_inverse(y)
                    idx += 1
                self._step()

    def _map_set(self, s, forward: bool):
        with self._lock:
            out = ClopenSet.empty(s.ambient)
            remaining = s
            idx = 0
            while True:
                while idx < len(self._pieces):
                    dom, cod, h = self._pieces[idx]
                    src = dom if forward else cod
                    part = remaining.intersect(src)
                    if not part.is_empty:
                        out = out.union(
                            h.image_of(part) if forward else h.preimage_of(part)
                        )
                        remaining = remaining.difference(part)
                    idx += 1
                if remaining.is_empty:
                    return out
                pending_src = (
                    self._l_a.union(self._dom_tail)
                    if forward
                    else self._l_b.union(self._cod_tail)
                )
                if remaining == pending_src:
                    # everything not yet resolved maps onto the other
                    # side's unresolved material, star point included
                    pending_dst = (
                        self._l_b.union(self._cod_tail)
                        if forward
                        else self._l_a.union(self._dom_tail)
                    )
                    return out.union(pending_dst)
                self._step()

    def image(self, s):
        return self._map_set(s, True)

    def preimage(self, s):
        return self._map_set(s, False)


class Homeomorphism:
    """Bijective rank-preserving map between two clopen sets.

    Maps are never materialized in full; evaluation expands just enough
    of the underlying matching strategy.  ``inverse`` is a constant-time
    view sharing the same strategy and memo state.
    """

    def __init__(self, domain, codomain, strategy, flipped=False):
        self.domain = domain
        self.codomain = codomain
        self._strategy = strategy
        self._flipped = flipped

    @classmethod
    def identity(cls, a: ClopenSet) -> "Homeomorphism":
        return cls(a, a, _IDENTITY)

    def _check_point(self, s: ClopenSet, x: Ordinal, where: str):
        if x == ZERO or not s.contains(x):
            raise PointNotInDomain(f"{x} is not a point of the {where}")

    def eval(self, x: Ordinal) -> Ordinal:
        self._check_point(self.domain, x, "domain")
        return self._strategy.bwd(x) if self._flipped else self._strategy.fwd(x)

    def eval_inverse(self, y: Ordinal) -> Ordinal:
        self._check_point(self.codomain, y, "codomain")
        return self._strategy.fwd(y) if self._flipped else self._strategy.bwd(y)

    def inverse(self) -> "Homeomorphism":
        return Homeomorphism(
            self.codomain, self.domain, self._strategy, not self._flipped
        )

    def image_of(self, s: ClopenSet) -> ClopenSet:
        if not s.subset_of(self.domain):
            raise PointNotInDomain("set escapes the domain")
        return self._strategy.preimage(s) if self._flipped else self._strategy.image(s)

    def preimage_of(self, s: ClopenSet) -> ClopenSet:
        if not s.subset_of(self.codomain):
            raise PointNotInDomain("set escapes the codomain")
        return self._strategy.image(s) if self._flipped else self._strategy.preimage(s)


def build_homeo(a: ClopenSet, b: ClopenSet) -> Homeomorphism:
    """Synthesize a homeomorphism; the char pairs must agree and be nonempty."""
    pa, pb = char_pair(a), char_pair(b)
    if pa != pb:
        raise NotHomeomorphic(f"char pairs differ: {pa} vs {pb}")
    if pa.is_empty:
        raise EmptySets("cannot map empty sets")
    if pa.rank == ZERO:
        strategy = _FiniteMatch(rank_points(a, ZERO), rank_points(b, ZERO))
    elif pa.count > 1:
        pieces = [
            (ua, ub, build_homeo(ua, ub))
            for ua, ub in zip(split_units(a), split_units(b))
        ]
        strategy = _Piecewise(pieces)
    else:
        strategy = _BackAndForth(a, b, pa)
    return Homeomorphism(a, b, strategy)


def _check_partition(pieces, ambient) -> None:
    union = ClopenSet.empty(ambient)
    for p in pieces:
        if p.ambient != ambient:
            raise NotAPartition("piece ambient mismatch")
        if not p.intersect(union).is_empty:
            raise NotAPartition("pieces overlap")
        union = union.union(p)
    if union != ClopenSet.full(ambient):
        raise NotAPartition("pieces do not cover the space")


def partition_map(pieces_a, pieces_b) -> Homeomorphism:
    """Global homeomorphism sending the i-th piece of one partition onto
    the i-th piece of the other; equal pieces are fixed pointwise."""
    pieces_a, pieces_b = list(pieces_a), list(pieces_b)
    if len(pieces_a) != len(pieces_b):
        raise PieceMismatch("piece counts differ")
    if not pieces_a:
        raise PieceMismatch("need at least one piece")
    ambient = pieces_a[0].ambient
    _check_partition(pieces_a, ambient)
    _check_partition(pieces_b, ambient)
    entries = []
    for pa, pb in zip(pieces_a, pieces_b):
        if pa.is_empty and pb.is_empty:
            continue
        if pa == pb:
            entries.append((pa, pb, Homeomorphism.identity(pa)))
        elif char_pair(pa) == char_pair(pb):
            entries.append((pa, pb, build_homeo(pa, pb)))
        else:
            raise PieceMismatch(
                f"piece pairs differ: {char_pair(pa)} vs {char_pair(pb)}"
            )
    full = ClopenSet.full(ambient)
    return Homeomorphism(full, full, _Piecewise(entries))


def map_partition(g: Homeomorphism, p: GoodPartition) -> GoodPartition:
    """Image partition g(P), parts re-indexed by their maximal points."""
    images = [g.image_of(part) for part in p.parts]
    new_parts = []
    for i in range(1, p.space.n + 1):
        x = p.space.maximal_point(i)
        owners = [img for img in images if img.contains(x)]
        if len(owners) != 1:
            raise ImageNotGoodPartition(f"maximal point {x} owned by {len(owners)}")
        new_parts.append(owners[0])
    q = GoodPartition(p.space, tuple(new_parts))
    violation = validate(q)
    if violation is not None:
        raise ImageNotGoodPartition(str(violation))
    return q


@dataclass(frozen=True)
class GroupClass:
    """Coarse type of the homeomorphism group of Space(alpha, n)."""

    coarsely_bounded: bool
    boundedly_generated: bool
    locally_bounded: bool = True


def classify_group(alpha: Ordinal, n: int) -> GroupClass:
    """Coarse classification: rank 0 or a single maximal point is bounded,
    successor rank stays boundedly generated, limit rank is not."""
    if n == 1 or alpha == ZERO:
        return GroupClass(coarsely_bounded=True, boundedly_generated=True)
    if is_successor(alpha):
        return GroupClass(coarsely_bounded=False, boundedly_generated=True)
    return GroupClass(coarsely_bounded=False, boundedly_generated=False)
