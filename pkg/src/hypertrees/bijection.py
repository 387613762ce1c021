"""BFS-order bijection between hypertrees and r-parking functions.

Spanning trees of uniformity r+1 on n = r*k + 1 vertices that arise from
the consecutive matching {1..r | r+1..2r | ...} correspond bijectively to
r-parking functions of length k.  The forward map reads, for each block,
the BFS rank of its connection vertex among all candidate connection
vertices; the inverse attaches blocks to the growing tree in weakly
increasing order of their values.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import (
    HyperTree,
    Matching,
    MatchingMismatchError,
    ValidationError,
    extract_matching,
    is_spanning_tree,
)
from .parking import is_r_parking


@dataclass(frozen=True)
class BfsOrder:
    """Vertices ordered by hyperedge distance from the root, ties by label."""

    order: tuple[int, ...]
    position: dict[int, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "position", {v: i for i, v in enumerate(self.order)}
        )


def _bfs_vertices(root: int, edges: Iterable[tuple[int, ...]]) -> list[int]:
    """Vertices reachable from root, sorted by hyperedge distance then label."""
    adj = defaultdict(set)
    for e in edges:
        for v in e:
            adj[v].update(e)
    dist = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return sorted(dist, key=lambda v: (dist[v], v))


def bfs_order(t: HyperTree) -> BfsOrder:
    """BFS order of a spanning tree rooted at its top vertex n."""
    if not is_spanning_tree(t):
        raise ValidationError("input is not a spanning tree")
    return BfsOrder(tuple(_bfs_vertices(t.n, t.edges)))


def consecutive_matching(k: int, block_size: int) -> Matching:
    """The matching {1..b | b+1..2b | ...} with k blocks of size b."""
    blocks = tuple(
        tuple(range(i * block_size + 1, (i + 1) * block_size + 1)) for i in range(k)
    )
    return Matching(block_size, blocks)


def tree_to_parking(t: HyperTree) -> tuple[int, ...]:
    """Parking function of a tree arising from the consecutive matching.

    For block i the candidate hyperedges are block + {x} over all x outside
    the block, ordered by BFS rank of x; the value a_i is the 0-based rank
    of the unique tree hyperedge among them.
    """
    r = t.r - 1
    m = extract_matching(t)
    k = len(m.blocks)
    if m != consecutive_matching(k, r):
        raise MatchingMismatchError("tree does not arise from the consecutive matching")
    rank = bfs_order(t).position
    out = []
    for i in range(k):
        block = set(range(r * i + 1, r * (i + 1) + 1))
        candidates = [e for e in t.edges if block <= set(e)]
        # for r >= 2 the containing hyperedge is unique; for r = 1 (ordinary
        # trees) the block's own hyperedge is the one toward the root, whose
        # outside vertex is the unique neighbour at smaller BFS rank
        edge = min(candidates, key=lambda e: rank[(set(e) - block).pop()])
        (x,) = set(edge) - block
        outside = sorted(
            (v for v in range(1, t.n + 1) if v not in block), key=rank.__getitem__
        )
        out.append(outside.index(x))
    return tuple(out)


def parking_to_tree(a: Sequence[int], r: int) -> HyperTree:
    """Tree of uniformity r+1 mapping to the r-parking function ``a``.

    Blocks are attached in weakly increasing order of their values (ties by
    block index); block i with value b joins the vertex at BFS rank b of the
    partial tree built so far, where the root n has rank 0.  The parking
    bound guarantees that rank already exists.
    """
    if not is_r_parking(a, r):
        raise ValidationError(f"{tuple(a)} is not an r-parking function for r = {r}")
    k = len(a)
    n = r * k + 1
    edges: list[tuple[int, ...]] = []
    for i in sorted(range(k), key=lambda i: (a[i], i)):
        ranks = _bfs_vertices(n, edges)
        assert a[i] < len(ranks), "parking bound exceeded the placed vertices"
        block = tuple(range(r * i + 1, r * (i + 1) + 1))
        edges.append(block + (ranks[a[i]],))
    return HyperTree(n, r + 1, tuple(edges))
