"""Spanning trees of complete uniform hypergraphs and block perfect matchings.

A set of k r-element hyperedges on the vertex set {1,..,n} is a spanning
hypertree when the bipartite vertex/hyperedge incidence graph is a tree in
the ordinary graph sense.  Counting incidence arcs two ways forces
n = (r-1)k + 1, so trees exist only when n == 1 (mod r-1).

Deleting the top vertex n and repeatedly stripping matched vertices turns
every spanning tree into a partition of {1,..,n-1} into blocks of size r-1
(a "block matching").  The number of such partitions times n^(k-1) gives the
total tree count; this module provides both closed forms together with
brute-force enumerators that serve as independent oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

DEFAULT_CAP = 10**8


class ValidationError(ValueError):
    """Malformed domain object or out-of-contract argument."""


class ResourceCapError(RuntimeError):
    """An exhaustive enumeration would exceed its configured search cap."""


class MatchingMismatchError(ValidationError):
    """The given tree does not arise from the given matching."""


def _check_edge(edge: Sequence[int], n: int, r: int) -> None:
    if len(edge) != r:
        raise ValidationError(f"hyperedge {edge} has size {len(edge)}, expected {r}")
    if len(set(edge)) != len(edge):
        raise ValidationError(f"hyperedge {edge} repeats a vertex")
    for v in edge:
        if not 1 <= v <= n:
            raise ValidationError(f"vertex {v} outside [1, {n}]")


@dataclass(frozen=True)
class HyperTree:
    """A candidate spanning tree: r-element hyperedges on {1,..,n}.

    Stored canonically: each hyperedge sorted ascending, hyperedges sorted
    lexicographically.  Construction validates well-formedness only; the
    tree property itself is checked by :func:`is_spanning_tree`.
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError("vertex count must be positive")
        if self.r < 2:
            raise ValidationError("uniformity must be at least 2")
        canon = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        for e in canon:
            _check_edge(e, self.n, self.r)
        if len(set(canon)) != len(canon):
            raise ValidationError("duplicate hyperedge")
        object.__setattr__(self, "edges", canon)


@dataclass(frozen=True)
class Matching:
    """A partition of {1,..,m} into blocks of equal size.

    Blocks are stored sorted by their minimum element; this ordering doubles
    as the fixed total order used by the code/decode machinery.
    """

    block_size: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.block_size < 1:
            raise ValidationError("block size must be positive")
        canon = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        seen: set[int] = set()
        for b in canon:
            if len(b) != self.block_size:
                raise ValidationError(f"block {b} has size {len(b)}, expected {self.block_size}")
            if len(set(b)) != len(b) or seen & set(b):
                raise ValidationError(f"block {b} overlaps another block")
            seen |= set(b)
        m = self.block_size * len(canon)
        if seen != set(range(1, m + 1)):
            raise ValidationError(f"blocks do not cover [1, {m}]")
        object.__setattr__(self, "blocks", canon)

    @property
    def m(self) -> int:
        return self.block_size * len(self.blocks)

    def block_of(self, v: int) -> tuple[int, ...]:
        for b in self.blocks:
            if v in b:
                return b
        raise ValidationError(f"vertex {v} not covered by matching")


# ---------------------------------------------------------------------------
# text formats: "1,2,3;3,4,7;3,5,6" for trees, "1,2|3,4" for matchings


def parse_tree(text: str, n: int, r: int) -> HyperTree:
    try:
        edges = tuple(
            tuple(int(x) for x in part.split(",")) for part in text.split(";") if part
        )
    except ValueError as exc:
        raise ValidationError(f"cannot parse tree {text!r}: {exc}") from None
    return HyperTree(n, r, edges)


def format_tree(t: HyperTree) -> str:
    return ";".join(",".join(map(str, e)) for e in t.edges)


def parse_matching(text: str) -> Matching:
    try:
        blocks = tuple(
            tuple(int(x) for x in part.split(",")) for part in text.split("|") if part
        )
    except ValueError as exc:
        raise ValidationError(f"cannot parse matching {text!r}: {exc}") from None
    if not blocks:
        raise ValidationError("empty matching text")
    return Matching(len(blocks[0]), blocks)


def format_matching(m: Matching) -> str:
    return "|".join(",".join(map(str, b)) for b in m.blocks)


# ---------------------------------------------------------------------------
# the spanning-tree predicate and brute-force enumeration


def is_spanning_tree(t: HyperTree) -> bool:
    """True iff the vertex/hyperedge incidence graph of t is a spanning tree.

    The incidence graph has n + k nodes and r*k arcs, so it is a tree
    exactly when r*k = n + k - 1 and it is acyclic; acyclicity is detected
    by union-find on vertices (a cycle appears exactly when some hyperedge
    touches two vertices already connected).  The single vertex with no
    edges counts as a tree.
    """
    k = len(t.edges)
    if t.r * k != t.n + k - 1:
        return False
    parent = list(range(t.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for edge in t.edges:
        it = iter(edge)
        a = find(next(it))
        for v in it:
            b = find(v)
            if a == b:
                return False
            parent[b] = a
    return True


def tree_size(n: int, r: int) -> int | None:
    """Number of hyperedges k of any spanning tree on n vertices, or None."""
    if (n - 1) % (r - 1) != 0:
        return None
    return (n - 1) // (r - 1)


def enumerate_spanning_trees(
    n: int, r: int, cap: int = DEFAULT_CAP
) -> Iterator[HyperTree]:
    """Yield every spanning tree on {1,..,n}, lexicographic by edge set.

    Backtracks over lexicographically increasing edge sequences, pruning any
    prefix whose incidence graph already contains a cycle; a full selection
    of k acyclic hyperedges is connected automatically by the arc count.
    Refuses up front when the unpruned search space C(C(n,r), k) exceeds
    ``cap``.
    """
    if n < 1 or r < 3:
        raise ValidationError("need n >= 1 and r >= 3")
    k = tree_size(n, r)
    if k is None:
        return
    n_edges = math.comb(n, r)
    if math.comb(n_edges, k) > cap:
        raise ResourceCapError(
            f"search space C({n_edges},{k}) exceeds cap {cap}"
        )
    all_edges = list(combinations(range(1, n + 1), r))
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[tuple[int, ...]] = []

    def extend(start: int) -> Iterator[HyperTree]:
        if len(chosen) == k:
            yield HyperTree(n, r, tuple(chosen))
            return
        for idx in range(start, len(all_edges)):
            edge = all_edges[idx]
            roots = []
            for v in edge:
                rv = find(v)
                if rv in roots:
                    break
                roots.append(rv)
            else:
                base = roots[0]
                for rv in roots[1:]:
                    parent[rv] = base
                chosen.append(edge)
                yield from extend(idx + 1)
                chosen.pop()
                for rv in roots[1:]:
                    parent[rv] = rv

    yield from extend(0)


# ---------------------------------------------------------------------------
# closed-form counts


def count_matchings_formula(m: int, b: int) -> int:
    """Number of partitions of {1,..,m} into blocks of size b.

    Repeatedly fix the smallest unplaced element and choose its b-1
    partners: the product of C(j*b - 1, b - 1) over j = 1 .. m/b.
    Zero when b does not divide m; one when m = 0.
    """
    if b < 2:
        raise ValidationError("block size must be at least 2")
    if m < 0:
        raise ValidationError("negative ground-set size")
    if m % b != 0:
        return 0
    out = 1
    for j in range(1, m // b + 1):
        out *= math.comb(j * b - 1, b - 1)
    return out


def count_spanning_trees_formula(n: int, r: int) -> int:
    """Closed-form count of spanning trees on n vertices: rPM * n^(k-1).

    rPM is the block-matching count on n-1 vertices with blocks of size
    r-1.  Returns 0 when n != 1 (mod r-1) and 1 for the single-vertex tree.
    """
    if n < 1 or r < 3:
        raise ValidationError("need n >= 1 and r >= 3")
    k = tree_size(n, r)
    if k is None:
        return 0
    if k == 0:
        return 1
    return count_matchings_formula(n - 1, r - 1) * n ** (k - 1)


def enumerate_matchings(m: int, b: int, cap: int = DEFAULT_CAP) -> Iterator[Matching]:
    """Yield all partitions of {1,..,m} into size-b blocks, canonical order.

    Empty stream when b does not divide m.
    """
    if b < 2:
        raise ValidationError("block size must be at least 2")
    if m < 0:
        raise ValidationError("negative ground-set size")
    if m % b != 0:
        return
    total = count_matchings_formula(m, b)
    if total > cap:
        raise ResourceCapError(f"{total} matchings exceed cap {cap}")
    blocks: list[tuple[int, ...]] = []

    def rec(remaining: list[int]) -> Iterator[Matching]:
        if not remaining:
            yield Matching(b, tuple(blocks))
            return
        first, rest = remaining[0], remaining[1:]
        for partners in combinations(rest, b - 1):
            blocks.append((first,) + partners)
            yield from rec([v for v in rest if v not in partners])
            blocks.pop()

    yield from rec(list(range(1, m + 1)))


# ---------------------------------------------------------------------------
# matching extraction


def extract_matching(t: HyperTree) -> Matching:
    """The unique block matching on {1,..,n-1} a spanning tree arises from.

    Iterative deletion: remove vertex n from every hyperedge; any hyperedge
    reduced to size r-1 becomes a matched block and its vertices are deleted
    from the remaining hyperedges; repeat until every hyperedge has been
    consumed.  On a valid tree every hyperedge contains exactly one block of
    the result.
    """
    if not is_spanning_tree(t):
        raise ValidationError("input is not a spanning tree")
    if t.n < t.r:
        raise ValidationError("need at least one hyperedge to extract a matching")
    deleted = {t.n}
    remaining = [set(e) for e in t.edges]
    blocks: list[tuple[int, ...]] = []
    while remaining:
        produced = []
        keep = []
        for e in remaining:
            reduced = e - deleted
            if len(reduced) == t.r - 1:
                produced.append(reduced)
            elif len(reduced) == t.r:
                keep.append(e)
            else:
                raise AssertionError("hyperedge lost two vertices in one round")
        if not produced:
            raise AssertionError("no hyperedge reduced; impossible on a valid tree")
        for block in produced:
            blocks.append(tuple(sorted(block)))
            deleted |= block
        remaining = keep
    return Matching(t.r - 1, tuple(blocks))


def cross_count(m: Matching) -> int:
    """Number of crossing pairs {i,k},{j,l} with i<j<k<l in a pair matching."""
    if m.block_size != 2:
        raise ValidationError("crossings are defined only for block size 2")
    count = 0
    for (a1, a2), (b1, b2) in combinations(m.blocks, 2):
        # blocks are ordered by minimum, so a1 < b1
        if a1 < b1 < a2 < b2:
            count += 1
    return count
