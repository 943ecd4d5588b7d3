"""Orientations of the A_n line quiver and the suspended weighted poset.

An orientation is stored as its edge word over {f, b}: letter k (1-indexed)
describes the edge between vertices k and k+1, with ``f`` meaning k <= k+1
in the poset (quiver arrow k -> k+1) and ``b`` meaning k >= k+1 (arrow
k+1 -> k).  Sinks are poset-maximal vertices, sources poset-minimal ones.

The suspension adds a single top element above every vertex.  Directed
distances on the suspended poset weight ordinary poset edges by ``a`` and
the added edges into the top by ``b``.  The top element is exposed through
the public API as ``math.inf``.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache

INFINITY = math.inf


class InvalidCharacter(ValueError):
    """Edge word contains a character outside {f, b}."""


class NotPureZigzag(ValueError):
    """Operation requires a strictly alternating orientation."""


class RNotAtLeastTwo(ValueError):
    """Zigzag refinement requires r >= 2."""


@dataclass(frozen=True)
class Orientation:
    """An orientation of A_n, canonically encoded by its edge word."""

    n: int
    edges: str

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        if len(self.edges) != self.n - 1:
            raise ValueError(
                f"edge word length {len(self.edges)} does not match n={self.n}"
            )
        bad = set(self.edges) - {"f", "b"}
        if bad:
            raise InvalidCharacter(f"invalid edge letters: {sorted(bad)!r}")

    def ascends(self, k: int) -> bool:
        """True iff edge (k, k+1) points upward, i.e. k <= k+1 in the poset."""
        return self.edges[k - 1] == "f"

    @property
    def sources(self) -> tuple[int, ...]:
        return _sources(self)

    @property
    def sinks(self) -> tuple[int, ...]:
        return _sinks(self)

    @property
    def is_pure_zigzag(self) -> bool:
        return all(self.edges[k] != self.edges[k + 1] for k in range(self.n - 2))

    @property
    def is_equioriented(self) -> bool:
        return len(set(self.edges)) <= 1

    @property
    def endpoint_type(self) -> str | None:
        """One of uu/ud/du/dd ('u' = sink at that end); pure zigzag only."""
        if not self.is_pure_zigzag:
            return None
        left = "u" if 1 in self.sinks else "d"
        right = "u" if self.n in self.sinks else "d"
        return left + right

    def __str__(self) -> str:
        return self.edges if self.edges else f"A1"


@lru_cache(maxsize=None)
def _sources(o: Orientation) -> tuple[int, ...]:
    out = []
    for v in range(1, o.n + 1):
        left_below = v > 1 and o.ascends(v - 1)
        right_below = v < o.n and not o.ascends(v)
        if not left_below and not right_below:
            out.append(v)
    return tuple(out)


@lru_cache(maxsize=None)
def _sinks(o: Orientation) -> tuple[int, ...]:
    out = []
    for v in range(1, o.n + 1):
        left_above = v > 1 and not o.ascends(v - 1)
        right_above = v < o.n and o.ascends(v)
        if not left_above and not right_above:
            out.append(v)
    return tuple(out)


def parse_orientation(spec: str) -> Orientation:
    """Parse an edge word ('f'/'b', case-insensitive) into an Orientation."""
    word = spec.strip().lower()
    bad = set(word) - {"f", "b"}
    if bad:
        raise InvalidCharacter(f"invalid edge letters: {sorted(bad)!r}")
    return Orientation(n=len(word) + 1, edges=word)


def mirror(o: Orientation) -> Orientation:
    """Left-right reflection: vertex v maps to n+1-v."""
    return Orientation(o.n, "".join("f" if c == "b" else "b" for c in reversed(o.edges)))


@dataclass(frozen=True)
class WeightConfig:
    """Edge weights of the suspended poset: a per poset edge, b per added edge."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise ValueError(f"weights must be positive integers, got {(self.a, self.b)}")


@dataclass(frozen=True)
class Valley:
    """A maximal sub-poset comparable to one source, plus end segments.

    End segments of the wedge decomposition are equioriented and miss the
    sink on one side; they carry t_short = 0.
    """

    left_sink: int | None
    source: int
    right_sink: int | None

    @property
    def lo(self) -> int:
        return self.left_sink if self.left_sink is not None else self.source

    @property
    def hi(self) -> int:
        return self.right_sink if self.right_sink is not None else self.source

    @property
    def left_len(self) -> int:
        return self.source - self.left_sink if self.left_sink is not None else 0

    @property
    def right_len(self) -> int:
        return self.right_sink - self.source if self.right_sink is not None else 0

    @property
    def is_equioriented(self) -> bool:
        return self.left_sink is None or self.right_sink is None

    @property
    def t_short(self) -> int:
        if self.is_equioriented:
            return 0
        return min(self.left_len, self.right_len)

    @property
    def s_long(self) -> int:
        return max(self.left_len, self.right_len)


@lru_cache(maxsize=None)
def wedge_decompose(o: Orientation) -> tuple[Valley, ...]:
    """Split an orientation into valleys glued at shared sinks."""
    if o.n < 2:
        raise ValueError("wedge decomposition requires n >= 2")
    valleys = []
    for m in o.sources:
        left = None
        v = m
        while v > 1 and not o.ascends(v - 1):
            v -= 1
        if v != m:
            left = v
        right = None
        v = m
        while v < o.n and o.ascends(v):
            v += 1
        if v != m:
            right = v
        valleys.append(Valley(left_sink=left, source=m, right_sink=right))
    return tuple(valleys)


@dataclass(frozen=True)
class OrientationStats:
    t_short: int
    s_long: int
    pure_zigzag: bool
    equioriented: bool
    endpoint_type: str | None
    shallow: bool
    central: bool


def stats(o: Orientation) -> OrientationStats:
    """Valley depth summary plus the shallow/central flags."""
    if o.n < 2:
        raise ValueError("stats require n >= 2")
    valleys = wedge_decompose(o)
    t = max(v.t_short for v in valleys)
    s = max(v.s_long for v in valleys)
    shallow = s >= 3 and t >= 2 and 2 * s <= o.n
    central = any(
        v.t_short == t and v.lo >= t and v.hi <= o.n - t + 1 for v in valleys
    )
    return OrientationStats(
        t_short=t,
        s_long=s,
        pure_zigzag=o.is_pure_zigzag,
        equioriented=o.is_equioriented,
        endpoint_type=o.endpoint_type,
        shallow=shallow,
        central=central,
    )


def refine(o: Orientation, r: int) -> tuple[Orientation, dict[int, int]]:
    """r-zigzag refinement: each edge becomes a totally ordered run of r edges.

    Returns the refined orientation together with the map sending a base
    vertex v to its image 1 + (v-1)*r.
    """
    if not o.is_pure_zigzag:
        raise NotPureZigzag(f"refinement needs pure zigzag, got {o.edges!r}")
    if r < 2:
        raise RNotAtLeastTwo(f"r must be >= 2, got {r}")
    refined = Orientation((o.n - 1) * r + 1, "".join(c * r for c in o.edges))
    endpoint_map = {v: 1 + (v - 1) * r for v in range(1, o.n + 1)}
    return refined, endpoint_map


@lru_cache(maxsize=None)
def up_set(o: Orientation, v: int) -> tuple[int, ...]:
    """All poset elements >= v (within P, excluding the suspension point)."""
    left = []
    k = v
    while k > 1 and not o.ascends(k - 1):
        k -= 1
        left.append(k)
    right = []
    k = v
    while k < o.n and o.ascends(k):
        k += 1
        right.append(k)
    return tuple(sorted([v, *left, *right]))


def _suspended_adjacency(o: Orientation, w: WeightConfig):
    adj: dict[float, list[tuple[float, int]]] = {v: [] for v in range(1, o.n + 1)}
    adj[INFINITY] = []
    for k in range(1, o.n):
        if o.ascends(k):
            adj[k].append((k + 1, w.a))
        else:
            adj[k + 1].append((k, w.a))
    for s in o.sinks:
        adj[s].append((INFINITY, w.b))
    return adj


def weighted_dist(o: Orientation, w: WeightConfig, x: float, y: float) -> float:
    """Directed shortest-path distance from x to y in the suspended poset.

    x and y are vertices 1..n or math.inf (the suspension point).  Returns
    math.inf when no directed path exists.
    """
    if x == y:
        return 0
    if x == INFINITY:
        return INFINITY
    adj = _suspended_adjacency(o, w)
    dist: dict[float, float] = {x: 0}
    heap: list[tuple[float, float]] = [(0, x)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist.get(u, INFINITY):
            continue
        if u == y:
            return d
        for nxt, cost in adj[u]:
            nd = d + cost
            if nd < dist.get(nxt, INFINITY):
                dist[nxt] = nd
                heapq.heappush(heap, (nd, nxt))
    return dist.get(y, INFINITY)


def all_orientations(n: int):
    """All 2^(n-1) orientations of A_n, in lexicographic edge-word order."""
    if n == 1:
        yield Orientation(1, "")
        return
    for bits in range(2 ** (n - 1)):
        word = "".join("fb"[(bits >> k) & 1] for k in range(n - 1))
        yield Orientation(n, word)


def zigzag_orientations(n: int) -> tuple[Orientation, ...]:
    """The (two) pure zigzag orientations of A_n."""
    words = []
    for first in "fb":
        word = "".join(first if k % 2 == 0 else ("b" if first == "f" else "f")
                       for k in range(n - 1))
        words.append(word)
    return tuple(Orientation(n, w) for w in dict.fromkeys(words))
