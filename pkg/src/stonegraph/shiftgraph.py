"""The partition shift graph of Space(alpha, n) for successor alpha.

Vertices are good partitions; two are adjacent when they differ by one
maximal shift.  The defect of a pair, the number of rank-beta points the
partitions assign differently (alpha = beta + 1), is a lower bound for
their graph distance: one shift relocates exactly one rank-beta point.
An explicit path of length at most defect + 2n(n-1) is produced by a
sweep over ordered part pairs, so the graph is connected with unbounded
diameter.  At rank 1 the shift payloads are single isolated points and a
windowed breadth-first search gives the exact distance: a move touching
a point outside the window never decreases the disagreement and can be
dropped from a geodesic, so the window-restricted search is exact.

The two-ended integer line compactifies to Space(1, 2): each integer is
an isolated point and the two ends are the rank-1 points, so the "add
one" map realizes the prototypical single-point shift.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .clopen import (
    ClopenSet,
    char_pair,
    count_rank,
    find_copy,
    rank_points,
    singleton,
    split_units,
    to_json as clopen_to_json,
)
from .errors import AmbientMismatch, RankNotOne, WindowTooSmall
from .ordinals import ONE, ZERO, Ordinal, show
from .partitions import (
    GoodPartition,
    ShiftMove,
    _successor_beta,
    basepoint,
    shift,
)


@dataclass(frozen=True)
class Path:
    """A walk in the shift graph: a start vertex plus the moves taken."""

    start: GoodPartition
    moves: tuple[ShiftMove, ...]

    def __len__(self) -> int:
        return len(self.moves)

    def vertices(self) -> list[GoodPartition]:
        out = [self.start]
        for m in self.moves:
            out.append(shift(out[-1], m))
        return out

    @property
    def end(self) -> GoodPartition:
        return self.vertices()[-1]


@dataclass(frozen=True)
class DistanceCertificate:
    lower: int  # the defect
    upper: int  # produced path length
    exact: int | None  # breadth-first search result when available
    path: Path


def defect(p: GoodPartition, q: GoodPartition) -> int:
    """Rank-beta points assigned to different parts by p and q."""
    if p.space != q.space:
        raise AmbientMismatch("partitions live in different spaces")
    beta = _successor_beta(p.space)
    total = 0
    n = p.space.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            c = count_rank(p.part(i).intersect(q.part(j)), beta)
            total += int(c)
    return total


def connect_path(p: GoodPartition, q: GoodPartition) -> Path:
    """Path from p ending exactly at q, length <= defect + 2n(n-1).

    Sweeps ordered part pairs (i, j) lexicographically and empties the
    misplaced region of part i destined for part j.  When that region
    holds d > 0 rank-beta points it splits into d unit payloads moved one
    by one; when it holds none, a unit collar around a fresh rank-beta
    point of part i is moved out together with the region and the collar
    alone is moved back, a net transfer costing two moves.
    """
    if p.space != q.space:
        raise AmbientMismatch("partitions live in different spaces")
    beta = _successor_beta(p.space)
    moves: list[ShiftMove] = []
    cur = p
    n = p.space.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            misplaced = cur.part(i).intersect(q.part(j))
            if misplaced.is_empty:
                continue
            d_ij = count_rank(misplaced, beta)
            if d_ij > 0:
                for unit in split_units(misplaced):
                    m = ShiftMove(i, j, unit)
                    cur = shift(cur, m)
                    moves.append(m)
            else:
                fresh = find_copy(cur.part(i).difference(q.part(j)), beta)
                out = fresh.union(misplaced)
                m1 = ShiftMove(i, j, out)
                cur = shift(cur, m1)
                m2 = ShiftMove(j, i, fresh)
                cur = shift(cur, m2)
                moves.extend((m1, m2))
    if cur != q:  # pragma: no cover - contract guard
        raise AssertionError("sweep did not terminate at the target partition")
    return Path(p, tuple(moves))


def _window_points(window: ClopenSet) -> list[Ordinal]:
    pair = char_pair(window)
    if pair.is_empty:
        return []
    if pair.rank != ZERO:
        raise WindowTooSmall("window must contain only isolated points")
    return rank_points(window, pair.rank)


def _check_window_covers(p: GoodPartition, window: ClopenSet, label: str):
    base = basepoint(p.space)
    for i in range(p.space.n):
        if p.parts[i].difference(window) != base.parts[i].difference(window):
            raise WindowTooSmall(f"{label} differs from basepoint outside window")


def _part_of(p: GoodPartition, x: Ordinal) -> int:
    for i in range(1, p.space.n + 1):
        if p.part(i).contains(x):
            return i
    raise AssertionError(f"{x} not covered")  # pragma: no cover


def bfs_distance(p: GoodPartition, q: GoodPartition, window: ClopenSet) -> int:
    """Exact shift-graph distance at rank 1, searched inside the window."""
    if p.space.alpha != ONE:
        raise RankNotOne("breadth-first oracle needs rank 1")
    if p.space != q.space or window.ambient != p.space:
        raise AmbientMismatch("mismatched spaces")
    pts = _window_points(window)
    _check_window_covers(p, window, "start")
    _check_window_covers(q, window, "target")
    start = tuple(_part_of(p, x) for x in pts)
    goal = tuple(_part_of(q, x) for x in pts)
    if start == goal:
        return 0
    n = p.space.n
    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        state, dist = frontier.popleft()
        for k in range(len(pts)):
            for target in range(1, n + 1):
                if target == state[k]:
                    continue
                nxt = state[:k] + (target,) + state[k + 1 :]
                if nxt == goal:
                    return dist + 1
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append((nxt, dist + 1))
    raise AssertionError("state space exhausted")  # pragma: no cover


def neighbors(p: GoodPartition, window: ClopenSet) -> list[GoodPartition]:
    """All partitions reached by moving one window point to another part."""
    if p.space.alpha != ONE:
        raise RankNotOne("neighbor enumeration needs rank 1")
    out = []
    for x in _window_points(window):
        src = _part_of(p, x)
        for dst in range(1, p.space.n + 1):
            if dst != src:
                out.append(shift(p, ShiftMove(src, dst, singleton(p.space, x))))
    return out


def certificate(
    p: GoodPartition, q: GoodPartition, window: ClopenSet | None = None
) -> DistanceCertificate:
    lower = defect(p, q)
    path = connect_path(p, q)
    exact = None
    if window is not None and p.space.alpha == ONE:
        exact = bfs_distance(p, q, window)
    n = p.space.n
    if not lower <= len(path) <= lower + 2 * n * (n - 1):  # pragma: no cover
        raise AssertionError("path length escaped the certified bounds")
    return DistanceCertificate(lower, len(path), exact, path)


def certificate_to_json(cert: DistanceCertificate) -> dict:
    return {
        "lower": cert.lower,
        "upper": cert.upper,
        "exact": cert.exact,
        "path": [
            {"from": m.src, "to": m.dst, "payload": clopen_to_json(m.payload)}
            for m in cert.path.moves
        ],
    }


def _assignment_label(p: GoodPartition, pts: list[Ordinal]) -> str:
    base = basepoint(p.space)
    exceptions = []
    for x in pts:
        k = _part_of(p, x)
        if k != _part_of(base, x):
            exceptions.append(f"{show(x)}>{k}")
    return ",".join(exceptions) if exceptions else "base"


def ball_dot(p: GoodPartition, window: ClopenSet, radius: int) -> str:
    """DOT text for the ball around p in the window-restricted graph.

    Vertices carry the list of window points placed off their basepoint
    part; edges carry the moved point.
    """
    if p.space.alpha != ONE:
        raise RankNotOne("ball export needs rank 1")
    pts = _window_points(window)
    ids: dict[GoodPartition, int] = {p: 0}
    labels = {0: _assignment_label(p, pts)}
    edges: list[tuple[int, int, str]] = []
    frontier = deque([(p, 0)])
    while frontier:
        vertex, dist = frontier.popleft()
        vid = ids[vertex]
        for x in pts:
            src = _part_of(vertex, x)
            for dst in range(1, p.space.n + 1):
                if dst == src:
                    continue
                nxt = shift(vertex, ShiftMove(src, dst, singleton(p.space, x)))
                if nxt not in ids:
                    if dist == radius:
                        continue
                    ids[nxt] = len(ids)
                    labels[ids[nxt]] = _assignment_label(nxt, pts)
                    frontier.append((nxt, dist + 1))
                if ids[nxt] > vid:
                    edges.append((vid, ids[nxt], show(x)))
    lines = ["graph ball {"]
    for vid in range(len(ids)):
        lines.append(f'  v{vid} [label="{labels[vid]}"];')
    for a, b, label in edges:
        lines.append(f'  v{a} -- v{b} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines)
