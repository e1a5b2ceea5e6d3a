"""Distance computations: BFS, distance distribution, Wiener index, diameter,
diametral paths, and the on-path/off-path pair partition.

Everything is exact integer arithmetic.  The distance distribution never
materializes an n-by-n table: the default engine runs one BFS per source with
O(n) memory, and the blocked engine used for large graphs keeps at most a
fixed-width block of frontiers alive.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .errors import DisconnectedGraphError
from .graph import Graph

# Above this order the distribution switches to the scipy blocked engine.
_BLOCKED_ENGINE_MIN_N = 1024
_BLOCK_WIDTH = 512


@dataclass(frozen=True)
class DistanceDistribution:
    """Counts of unordered vertex pairs at each distance k >= 1."""

    n: int
    counts: Mapping[int, int]

    @property
    def wiener(self) -> int:
        """Sum of pair distances, exact."""
        return sum(k * c for k, c in self.counts.items())

    @property
    def diameter(self) -> int:
        """Largest distance with a nonzero count; 0 for a single vertex."""
        return max(self.counts, default=0)

    @property
    def total_pairs(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class DiametralPartition:
    """A chosen diametral path and the pair counts it induces.

    Unordered pairs split by how many endpoints lie on the path:
    both (``on_path_pairs``), none (``off_path_pairs``), exactly one
    (``mixed_pairs``).
    """

    path: tuple[int, ...]
    on_path_pairs: int
    off_path_pairs: int
    mixed_pairs: int

    @property
    def diameter(self) -> int:
        return len(self.path) - 1

    @property
    def total_pairs(self) -> int:
        return self.on_path_pairs + self.off_path_pairs + self.mixed_pairs


def _bfs(g: Graph, source: int) -> list[int]:
    """Distances from source; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Exact shortest-path distances from ``source`` to every vertex.

    Raises DisconnectedGraphError if any vertex is unreachable.
    """
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist = _bfs(g, source)
    if min(dist) < 0:
        raise DisconnectedGraphError("graph is not connected")
    return dist


def _distribution_python(g: Graph) -> dict[int, int]:
    # One BFS per source; pair (s, v) counted only when v > s.  A missing
    # vertex always shows up in the s = 0 pass, so that one scan suffices.
    counts: dict[int, int] = {}
    for s in range(g.n):
        dist = _bfs(g, s)
        for v in range(s + 1, g.n):
            d = dist[v]
            if d < 0:
                raise DisconnectedGraphError("graph is not connected")
            counts[d] = counts.get(d, 0) + 1
    return counts


def _distribution_blocked(g: Graph, block: int = _BLOCK_WIDTH) -> dict[int, int]:
    # Frontier-layer BFS vectorized over a block of sources at once.
    # Counts ordered pairs, halved at the end (always even by symmetry).
    import numpy as np
    from scipy import sparse

    n = g.n
    rows = []
    cols = []
    for u, v in g.edges:
        rows.append(u)
        cols.append(v)
        rows.append(v)
        cols.append(u)
    a = sparse.csr_matrix(
        (np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(n, n)
    )
    ordered: dict[int, int] = {}
    for start in range(0, n, block):
        sources = np.arange(start, min(start + block, n))
        width = len(sources)
        visited = np.zeros((n, width), dtype=bool)
        visited[sources, np.arange(width)] = True
        frontier = visited.astype(np.int32)
        k = 0
        reached = np.ones(width, dtype=np.int64)
        while True:
            hits = a.dot(frontier)
            newly = (hits != 0) & ~visited
            count = int(np.count_nonzero(newly))
            if count == 0:
                break
            k += 1
            ordered[k] = ordered.get(k, 0) + count
            visited |= newly
            reached += np.count_nonzero(newly, axis=0)
            frontier = newly.astype(np.int32)
        if int(reached.min()) != n:
            raise DisconnectedGraphError("graph is not connected")
    counts = {}
    for k, c in ordered.items():
        if c % 2:
            raise AssertionError("ordered pair count must be even")
        counts[k] = c // 2
    return counts


def distance_distribution(g: Graph, engine: str = "auto") -> DistanceDistribution:
    """Exact pair counts per distance over all unordered pairs.

    ``engine`` is "auto", "python", or "blocked"; auto picks the blocked
    (scipy) engine for large graphs.  Both engines give identical counts.
    """
    if g.n < 1:
        raise ValueError("distance distribution requires n >= 1")
    if engine == "auto":
        engine = "blocked" if g.n >= _BLOCKED_ENGINE_MIN_N else "python"
    if engine == "python":
        counts = _distribution_python(g)
    elif engine == "blocked":
        counts = _distribution_blocked(g)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return DistanceDistribution(n=g.n, counts=counts)


def wiener_index(g: Graph, engine: str = "auto") -> int:
    """Sum of shortest-path distances over all unordered vertex pairs."""
    return distance_distribution(g, engine=engine).wiener


def eccentricities(g: Graph) -> list[int]:
    """Per-vertex maximum distance.  Raises on disconnected input."""
    if g.n < 1:
        raise ValueError("eccentricities require n >= 1")
    out = []
    for s in range(g.n):
        dist = _bfs(g, s)
        if min(dist) < 0:
            raise DisconnectedGraphError("graph is not connected")
        out.append(max(dist))
    return out


def diameter(g: Graph, engine: str = "auto") -> int:
    """Maximum pairwise distance; 0 for a single vertex."""
    return distance_distribution(g, engine=engine).diameter


def diametral_path(g: Graph) -> list[int]:
    """A shortest path between a pair of vertices at maximum distance.

    Deterministic tie-breaking: among all pairs realizing the diameter the
    lexicographically smallest (u, v) with u < v is chosen, and the path is
    reconstructed backwards from v picking the smallest-index predecessor at
    every step.
    """
    if g.n < 2:
        raise ValueError("diametral path requires n >= 2")
    d = diameter(g)
    for u in range(g.n):
        dist = _bfs(g, u)
        target = -1
        for v in range(u + 1, g.n):
            if dist[v] == d:
                target = v
                break
        if target < 0:
            continue
        path = [target]
        cur = target
        while cur != u:
            cur = min(w for w in g.adj[cur] if dist[w] == dist[cur] - 1)
            path.append(cur)
        path.reverse()
        return path
    raise AssertionError("no diametral pair found")  # unreachable on connected input


def diametral_partition(g: Graph) -> DiametralPartition:
    """Partition pair counts induced by the chosen diametral path."""
    path = diametral_path(g)
    on_path = set(path)
    if len(on_path) != len(path):
        raise AssertionError("diametral path revisits a vertex")
    p = len(on_path)
    q = g.n - p
    return DiametralPartition(
        path=tuple(path),
        on_path_pairs=p * (p - 1) // 2,
        off_path_pairs=q * (q - 1) // 2,
        mixed_pairs=p * q,
    )
