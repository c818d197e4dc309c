"""Simple undirected graphs: carrier types, standard families, edge-list I/O.

Vertices are dense integers 0..n-1.  Edges are stored as (min, max) pairs in
sorted order, so every downstream "pick the first" tie-break is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class ParameterError(ValueError):
    """A family parameter violates its documented bound."""


class ParseError(ValueError):
    """Malformed edge-list text; the message carries the line number."""


class InputError(ValueError):
    """Structurally valid input that an operation cannot accept."""


class ContractError(ValueError):
    """A caller-supplied object violates an operation's precondition."""


class ConstructionError(RuntimeError):
    """A packing construction produced or detected an invalid state."""


class ExtractionError(ValueError):
    """Spanning-tree extraction failed: subgraph disconnected or non-spanning."""


class UnsupportedOperationError(TypeError):
    """The operation is not defined for this kind of object."""


class SizeError(ValueError):
    """Instance too large for an exhaustive method."""


def normalize_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def sort_edges(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted(normalize_edge(a, b) for a, b in edges))


def components(n: int, edges: Iterable[Edge]) -> tuple[tuple[int, ...], ...]:
    """Connected components of (0..n-1, edges), singletons included.

    Blocks are sorted internally and ordered by smallest member.
    """
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        block = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    queue.append(w)
        blocks.append(tuple(sorted(block)))
    return tuple(blocks)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` is a sorted tuple of (min, max) pairs with no loops and no
    duplicates.  ``labels`` are display-only and never affect algorithms.
    """

    n: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge],
                   labels: Sequence[str] | None = None) -> "Graph":
        if n < 0:
            raise ParameterError(f"vertex count must be >= 0, got {n}")
        norm = []
        for a, b in edges:
            if a == b:
                raise ParameterError(f"self-loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ParameterError(f"edge ({a},{b}) out of range for n={n}")
            norm.append(normalize_edge(a, b))
        ordered = tuple(sorted(norm))
        for e, f in zip(ordered, ordered[1:]):
            if e == f:
                raise ParameterError(f"duplicate edge {e}")
        if labels is not None and len(labels) != n:
            raise ParameterError("label count must equal vertex count")
        return cls(n, ordered, tuple(labels) if labels is not None else None)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(nb)) for nb in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return normalize_edge(a, b) in self.edge_set

    def components(self) -> tuple[tuple[int, ...], ...]:
        return components(self.n, self.edges)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


@dataclass(frozen=True)
class EdgeSet:
    """A subset of a host graph's edges."""

    host: Graph
    edges: tuple[Edge, ...]

    @classmethod
    def of(cls, host: Graph, edges: Iterable[Edge]) -> "EdgeSet":
        ordered = sort_edges(edges)
        for e, f in zip(ordered, ordered[1:]):
            if e == f:
                raise ContractError(f"duplicate member edge {e}")
        for e in ordered:
            if e not in host.edge_set:
                raise ContractError(f"edge {e} is not an edge of the host graph")
        return cls(host, ordered)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, edge: Edge) -> bool:
        return normalize_edge(*edge) in self.member_set

    @cached_property
    def member_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def is_spanning_tree(self) -> bool:
        n = self.host.n
        if len(self.edges) != n - 1:
            return False
        return len(components(n, self.edges)) == 1


@dataclass(frozen=True)
class TreePacking:
    """Pairwise edge-disjoint spanning trees of a common host graph.

    ``method`` records provenance: constructed-cartesian, constructed-lex,
    oracle, or user.
    """

    host: Graph
    trees: tuple[EdgeSet, ...]
    method: str = "user"

    def __len__(self) -> int:
        return len(self.trees)


def check_packing(packing: TreePacking, host: Graph, role: str) -> None:
    """Raise ContractError unless the packing is valid for the given host."""
    if packing.host.n != host.n or packing.host.edges != host.edges:
        raise ContractError(f"{role}: packing host does not match the graph")
    if len(packing.trees) < 1:
        raise ContractError(f"{role}: packing must contain at least one tree")
    used: dict[Edge, int] = {}
    for idx, t in enumerate(packing.trees):
        if not t.is_spanning_tree():
            raise ContractError(f"{role}: tree {idx} is not a spanning tree")
        for e in t:
            if e not in host.edge_set:
                raise ContractError(f"{role}: tree {idx} uses foreign edge {e}")
            if e in used:
                raise ContractError(
                    f"{role}: trees {used[e]} and {idx} share edge {e}")
            used[e] = idx


# ---------------------------------------------------------------------------
# standard families

FAMILY_KINDS = ("path", "cycle", "complete", "complete_multipartite",
                "hypercube", "complete_minus_edge")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"path requires n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle requires n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete requires n >= 1, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite(parts: int, size: int) -> Graph:
    """Complete multipartite graph with ``parts`` parts of ``size`` vertices.

    Vertices are grouped by part: part p holds p*size .. (p+1)*size - 1.
    """
    if parts < 2:
        raise ParameterError(f"complete_multipartite requires parts >= 2, got {parts}")
    if size < 1:
        raise ParameterError(f"complete_multipartite requires size >= 1, got {size}")
    n = parts * size
    edges = [(a, b) for a in range(n) for b in range(a + 1, n)
             if a // size != b // size]
    return Graph.from_edges(n, edges)


def hypercube(dim: int) -> Graph:
    """The dim-dimensional hypercube; vertex v carries the binary code of v."""
    if dim < 1:
        raise ParameterError(f"hypercube requires dimension >= 1, got {dim}")
    n = 1 << dim
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(dim) if v < v ^ (1 << b)]
    labels = [format(v, f"0{dim}b") for v in range(n)]
    return Graph.from_edges(n, edges, labels)


def complete_minus_edge(n: int) -> Graph:
    """K_n with the single edge {n-2, n-1} removed."""
    if n < 3:
        raise ParameterError(f"complete_minus_edge requires n >= 3, got {n}")
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) != (n - 2, n - 1)]
    return Graph.from_edges(n, edges)


def generate(spec: FamilySpec) -> Graph:
    """Instantiate a named family with canonical vertex numbering."""
    kind, params = spec.kind, spec.params
    if kind == "path":
        _expect_params(spec, 1)
        return path(params[0])
    if kind == "cycle":
        _expect_params(spec, 1)
        return cycle(params[0])
    if kind == "complete":
        _expect_params(spec, 1)
        return complete(params[0])
    if kind == "complete_multipartite":
        _expect_params(spec, 2)
        return complete_multipartite(params[0], params[1])
    if kind == "hypercube":
        _expect_params(spec, 1)
        return hypercube(params[0])
    if kind == "complete_minus_edge":
        _expect_params(spec, 1)
        return complete_minus_edge(params[0])
    raise ParameterError(f"unknown family kind {kind!r}; expected one of {FAMILY_KINDS}")


def _expect_params(spec: FamilySpec, count: int) -> None:
    if len(spec.params) != count:
        raise ParameterError(
            f"{spec.kind} takes {count} parameter(s), got {len(spec.params)}")


# ---------------------------------------------------------------------------
# edge-list text format:
#   optional '#' comment lines and blanks, then
#   p <n> <m>
#   m lines: e <a> <b> with 0 <= a < b < n

def write_graph(g: Graph, header_comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in header_comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    n = None
    m = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: second 'p' line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer in 'p' line") from None
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: negative count in 'p' line")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: 'e' line before 'p' line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e <a> <b>'")
            try:
                a, b = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer endpoint") from None
            if a == b:
                raise ParseError(f"line {lineno}: self-loop 'e {a} {b}' not allowed")
            if not a < b:
                raise ParseError(f"line {lineno}: endpoints must satisfy a < b")
            if b >= n:
                raise ParseError(f"line {lineno}: endpoint {b} out of range for n={n}")
            if (a, b) in seen:
                raise ParseError(f"line {lineno}: duplicate edge ({a},{b})")
            seen.add((a, b))
            edges.append((a, b))
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ParseError("missing 'p <n> <m>' line")
    if len(edges) != m:
        raise ParseError(f"'p' line promises {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)
