"""Exact spanning-tree packing via matroid union, with optimality certificates.

The packer grows k edge-disjoint forests one level at a time.  Inside a level
every unused edge gets one augmentation attempt: a breadth-first search over
exchange moves (replace a forest edge by another edge whose endpoints that
forest connects) that either finds a forest with room or proves none exists.
Rejection is final within a level because the union of graphic matroids is a
matroid.  The level that fails yields the dual witness: endpoints of all edges
touched by the failed searches clump into blocks whose contraction certifies
the bound.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import (ConstructionError, Edge, EdgeSet, Graph, InputError,
                   SizeError, TreePacking)

Label = tuple[Edge, int]


@dataclass(frozen=True)
class TutteCertificate:
    """A vertex partition certifying an upper bound on the packing number.

    Any packing must spend at least |partition|-1 crossing edges per tree,
    so no packing can exceed floor(crossing_count / (|partition|-1)).
    """

    partition: tuple[tuple[int, ...], ...]
    crossing_count: int
    bound: int


@dataclass(frozen=True)
class OracleResult:
    sigma: int
    packing: TreePacking
    certificate: TutteCertificate


def edge_bound(g: Graph) -> int:
    """floor(m / (n-1)): no packing can use more edges than the graph has."""
    if g.n < 2:
        raise InputError(f"edge bound needs n >= 2, got n={g.n}")
    return g.m // (g.n - 1)


class _ForestFamily:
    """Mutable family of edge-disjoint forests with exchange-path search."""

    def __init__(self, n: int):
        self.n = n
        self.adj: list[dict[int, set[int]]] = []
        self.sizes: list[int] = []
        self.owner: dict[Edge, int] = {}

    def add_forest(self) -> None:
        self.adj.append({v: set() for v in range(self.n)})
        self.sizes.append(0)

    def path_in(self, i: int, a: int, b: int) -> list[Edge] | None:
        """Edges of the a-b path in forest i, or None if a,b are separated."""
        nbr = self.adj[i]
        parent: dict[int, int] = {a: a}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            if v == b:
                break
            for w in sorted(nbr[v]):
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        if b not in parent:
            return None
        path = []
        v = b
        while v != a:
            u = parent[v]
            path.append((u, v) if u < v else (v, u))
            v = u
        path.reverse()
        return path

    def insert(self, e: Edge, i: int) -> None:
        a, b = e
        if self.path_in(i, a, b) is not None:
            raise ConstructionError(f"internal: inserting {e} closes a cycle")
        self.adj[i][a].add(b)
        self.adj[i][b].add(a)
        self.owner[e] = i
        self.sizes[i] += 1

    def remove(self, e: Edge, i: int) -> None:
        if self.owner.get(e) != i:
            raise ConstructionError(f"internal: {e} is not in forest {i}")
        a, b = e
        self.adj[i][a].discard(b)
        self.adj[i][b].discard(a)
        del self.owner[e]
        self.sizes[i] -= 1

    def search(self, e0: Edge) -> tuple[Edge | None, int, dict[Edge, Label | None]]:
        """Breadth-first exchange search from an unused edge.

        Returns (terminal edge, receiving forest, labels); terminal None means
        no forest can absorb the edge even after exchanges.
        """
        label: dict[Edge, Label | None] = {e0: None}
        queue = deque([e0])
        while queue:
            f = queue.popleft()
            a, b = f
            for i in range(len(self.adj)):
                if self.owner.get(f) == i:
                    continue
                path = self.path_in(i, a, b)
                if path is None:
                    return f, i, label
                for g in path:
                    if g not in label:
                        label[g] = (f, i)
                        queue.append(g)
        return None, -1, label

    def augment(self, e0: Edge) -> bool:
        """Try to add an unused edge, rearranging forests along a found chain."""
        f, i, label = self.search(e0)
        if f is None:
            return False
        while True:
            lab = label[f]
            if lab is None:
                self.insert(f, i)
                return True
            pred, j = lab
            self.remove(f, j)
            self.insert(f, i)
            f, i = pred, j

    def complete(self) -> bool:
        return all(s == self.n - 1 for s in self.sizes)

    def snapshot(self, g: Graph) -> TreePacking:
        per: list[list[Edge]] = [[] for _ in self.adj]
        for e, i in self.owner.items():
            per[i].append(e)
        trees = tuple(EdgeSet.of(g, sorted(bucket)) for bucket in per)
        return TreePacking(g, trees, method="oracle")


def max_packing(g: Graph) -> OracleResult:
    """Exact maximum packing with a tree-list witness and a partition certificate."""
    if g.n < 2:
        raise InputError(f"packing number needs n >= 2, got n={g.n}")
    if not g.is_connected():
        raise InputError("packing number of a disconnected graph is undefined here")
    family = _ForestFamily(g.n)
    sigma = 0
    witness: TreePacking | None = None
    while True:
        family.add_forest()
        for e in g.edges:
            if e not in family.owner:
                family.augment(e)
        if not family.complete():
            break
        sigma = len(family.adj)
        witness = family.snapshot(g)
    certificate = _terminal_certificate(g, family, sigma)
    if witness is None:
        raise ConstructionError("internal: no packing found for a connected graph")
    return OracleResult(sigma, witness, certificate)


def _terminal_certificate(g: Graph, family: _ForestFamily,
                          sigma: int) -> TutteCertificate:
    """Certificate from the failed level's search labels.

    Endpoints of every edge a failed search touches are clumped together;
    inside a clump each forest of the failed level restricts to a spanning
    tree, so crossing edges are too few for one more tree.
    """
    unused = [e for e in g.edges if e not in family.owner]
    parent = list(range(g.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in unused:
        terminal, _, label = family.search(e)
        if terminal is not None:
            raise ConstructionError("internal: augmentation pass missed an edge")
        for a, b in label:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    blocks: dict[int, list[int]] = {}
    for v in range(g.n):
        blocks.setdefault(find(v), []).append(v)
    partition = tuple(sorted(tuple(sorted(b)) for b in blocks.values()))
    p = len(partition)
    if p < 2:
        raise ConstructionError("internal: degenerate certificate partition")
    block_of = {v: i for i, blk in enumerate(partition) for v in blk}
    crossing = sum(1 for a, b in g.edges if block_of[a] != block_of[b])
    bound = crossing // (p - 1)
    if bound != sigma:
        raise ConstructionError(
            f"internal: certificate bound {bound} disagrees with sigma {sigma}")
    return TutteCertificate(partition, crossing, bound)


def tutte_bruteforce(g: Graph) -> TutteCertificate:
    """Minimize floor(crossing / (blocks-1)) over every vertex partition.

    Exhaustive (Bell-number many partitions), so n is capped at 12.  Ties go
    to the first partition met in restricted-growth-string order.
    """
    n = g.n
    if n > 12:
        raise SizeError(f"exhaustive partition search capped at n=12, got n={n}")
    if n < 2:
        raise InputError(f"partition bound needs n >= 2, got n={n}")
    edges = g.edges
    best_bound = None
    best_key = None
    a = [0] * n
    b = [0] * n
    while True:
        parts = max(a) + 1
        if parts >= 2:
            crossing = 0
            for u, v in edges:
                if a[u] != a[v]:
                    crossing += 1
            bound = crossing // (parts - 1)
            if best_bound is None or bound < best_bound:
                best_bound = bound
                best_key = (tuple(a), crossing, parts)
        j = n - 1
        while j >= 1 and a[j] > b[j]:
            j -= 1
        if j < 1:
            break
        a[j] += 1
        prev = max(b[j], a[j])
        for i in range(j + 1, n):
            a[i] = 0
            b[i] = prev
    if best_key is None:
        raise ConstructionError("internal: no partition with two blocks")
    labels, crossing, parts = best_key
    grouped: list[list[int]] = [[] for _ in range(parts)]
    for v, lab in enumerate(labels):
        grouped[lab].append(v)
    partition = tuple(tuple(sorted(blk)) for blk in grouped)
    return TutteCertificate(partition, crossing, best_bound)
