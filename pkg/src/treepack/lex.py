"""Packing spanning trees in a lexicographic product from factor packings.

With k trees of G and l trees of H, every tree of G spawns n2 edge-disjoint
parallel subgraphs (one per matching index), and every tree of H spawns n1
fiber copies.  Three regimes, split on the sign of l*n1 - k*n2, pair these
resources into spanning trees; the identity realization of the last G-tree is
held back because its components are the cross-section copies the two
unbalanced regimes consume.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (ConstructionError, Edge, EdgeSet, Graph, InputError,
                   TreePacking, check_packing)
from .decomp import (RootedTree, extract_spanning_tree, matching_decomposition,
                     parallel_subgraph_lex, root_tree)
from .products import lexicographic
from .verify import verify_packing

BALANCED = "balanced"
H_RICH = "h_rich"
G_RICH = "g_rich"


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class LexPlan:
    """Case selection and resource budget for one product packing."""

    case: str
    k: int
    ell: int
    n1: int
    n2: int
    x: int
    tree_count: int


def lex_bound(k: int, ell: int, n1: int, n2: int) -> tuple[str, int]:
    """Guaranteed tree count for the lexicographic product, with its regime.

    balanced (l*n1 = k*n2): k*n2 trees; fiber-tree surplus (l*n1 > k*n2):
    k*n2 - ceil((k*n2-1)/n1) + l - 1; subgraph surplus (l*n1 < k*n2):
    k*n2 - 2*ceil((k*n2-1)/(n1+1)) + l - 1.
    """
    if min(k, ell, n1, n2) < 1:
        raise InputError("k, ell, n1, n2 must all be >= 1")
    if ell * n1 == k * n2:
        return BALANCED, k * n2
    if ell * n1 > k * n2:
        return H_RICH, k * n2 - _ceil_div(k * n2 - 1, n1) + ell - 1
    return G_RICH, k * n2 - 2 * _ceil_div(k * n2 - 1, n1 + 1) + ell - 1


def lex_plan(k: int, ell: int, n1: int, n2: int) -> LexPlan:
    case, count = lex_bound(k, ell, n1, n2)
    if case == BALANCED:
        x = 0
    elif case == H_RICH:
        x = _ceil_div(k * n2 - 1, n1)
    else:
        x = _ceil_div(k * n2 - 1, n1 + 1)
    return LexPlan(case, k, ell, n1, n2, x, count)


def _fiber_copy(n2: int, tree: EdgeSet, u: int) -> list[Edge]:
    base = u * n2
    return [(base + a, base + b) for a, b in tree]


def _cross_section_copy(n2: int, tree: EdgeSet, v: int) -> list[Edge]:
    return [(a * n2 + v, b * n2 + v) for a, b in tree]


def pack_lex(g: Graph, h: Graph, pack_g: TreePacking,
             pack_h: TreePacking) -> TreePacking:
    """Build the guaranteed number of edge-disjoint spanning trees of G o H."""
    check_packing(pack_g, g, "first factor packing")
    check_packing(pack_h, h, "second factor packing")
    if g.n < 2 or h.n < 2:
        raise InputError("both factors need at least 2 vertices")
    k = len(pack_g.trees)
    ell = len(pack_h.trees)
    n1, n2 = g.n, h.n
    plan = lex_plan(k, ell, n1, n2)
    product = lexicographic(g, h)
    md = matching_decomposition(n2)

    rooted: dict[int, RootedTree] = {
        i: root_tree(pack_g.trees[i], 0) for i in range(k)}

    def subgraph_edges(i: int, j: int) -> list[Edge]:
        return list(parallel_subgraph_lex(product, pack_g.trees[i], j).edges)

    def make_tree(edges: list[Edge]) -> EdgeSet:
        return EdgeSet.of(product.graph, edges)

    reserved = (k - 1, md.identity_index)
    trees: list[EdgeSet] = []

    if plan.case == BALANCED:
        subs = [(i, j) for i in range(k) for j in range(1, n2 + 1)]
        fibers = [(t, s) for t in range(ell) for s in range(n1)]
        if len(subs) != len(fibers):
            raise ConstructionError(
                f"internal: {len(subs)} subgraphs vs {len(fibers)} fiber trees")
        for (i, j), (t, s) in zip(subs, fibers):
            trees.append(make_tree(
                subgraph_edges(i, j) + _fiber_copy(n2, pack_h.trees[t], s)))

    elif plan.case == H_RICH:
        if plan.x > ell:
            raise ConstructionError(
                f"fiber-tree budget exceeded: need {plan.x} second-factor "
                f"trees, have {ell}")
        subs = [(i, j) for i in range(k) for j in range(1, n2 + 1)
                if (i, j) != reserved]
        fibers = [(t, s) for t in range(plan.x) for s in range(n1)]
        for (i, j), (t, s) in zip(subs, fibers):
            trees.append(make_tree(
                subgraph_edges(i, j) + _fiber_copy(n2, pack_h.trees[t], s)))
        if ell - plan.x > n2:
            raise ConstructionError(
                f"cross-section budget exceeded: need {ell - plan.x} "
                f"sections, have {n2}")
        for t in range(plan.x, ell):
            edges: list[Edge] = []
            for u in range(n1):
                edges.extend(_fiber_copy(n2, pack_h.trees[t], u))
            edges.extend(_cross_section_copy(n2, pack_g.trees[k - 1],
                                             t - plan.x))
            trees.append(make_tree(edges))

    else:  # G_RICH
        if ell > n2:
            raise ConstructionError(
                f"cross-section budget exceeded: need {ell} sections, have {n2}")
        for t in range(ell):
            edges = []
            for u in range(n1):
                edges.extend(_fiber_copy(n2, pack_h.trees[t], u))
            edges.extend(_cross_section_copy(n2, pack_g.trees[k - 1], t))
            trees.append(make_tree(edges))
        # cycle pair (i, r) burns matchings 2r-1, 2r of tree i; the pair that
        # would touch the reserved identity matching is off limits
        candidates = [(i, r) for i in range(k) for r in range(1, n2 // 2 + 1)
                      if not (i == k - 1 and 2 * r == n2)]
        if len(candidates) < plan.x:
            raise ConstructionError(
                f"cycle budget exceeded: need {plan.x} matching pairs, "
                f"have {len(candidates)}")
        taken = candidates[:plan.x]
        cycles: list[tuple[Edge, ...]] = []
        for i, r in taken:
            for parent, child in rooted[i].edges_bfs():
                cycles.append(md.cycle_edges(product, parent, child, r))
        consumed = {(i, 2 * r - 1) for i, r in taken}
        consumed.update((i, 2 * r) for i, r in taken)
        singles = [(i, j) for i in range(k) for j in range(1, n2 + 1)
                   if (i, j) != reserved and (i, j) not in consumed]
        if len(singles) > len(cycles):
            raise ConstructionError(
                f"cycle budget exceeded: {len(singles)} subgraphs for "
                f"{len(cycles)} cycles")
        for (i, j), cyc in zip(singles, cycles):
            spanning = make_tree(subgraph_edges(i, j) + list(cyc))
            trees.append(extract_spanning_tree(product.graph, spanning))

    if len(trees) != plan.tree_count:
        raise ConstructionError(
            f"internal: built {len(trees)} trees, expected {plan.tree_count}")
    packing = TreePacking(product.graph, tuple(trees), "constructed-lex")
    report = verify_packing(product.graph, packing)
    if not report.overall:
        raise ConstructionError(
            "internal: constructed packing invalid\n" + report.render())
    return packing
