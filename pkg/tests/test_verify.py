import pytest

from treepack.core import (EdgeSet, SizeError, TreePacking, complete, cycle,
                           path)
from treepack.oracle import max_packing
from treepack.products import cartesian
from treepack.verify import (proposition_graph, proposition_value,
                             verify_packing, verify_proposition_row,
                             verify_tree)


def test_verify_tree_passes_on_spanning_tree():
    c4 = cycle(4)
    t = EdgeSet.of(c4, [(0, 1), (1, 2), (2, 3)])
    report = verify_tree(c4, t)
    assert report.overall
    assert all(c.passed for c in report.checks)


def test_verify_tree_fails_on_cycle_with_witness():
    c4 = cycle(4)
    report = verify_tree(c4, EdgeSet.of(c4, c4.edges))
    assert not report.overall
    names = {c.name: c for c in report.checks}
    count = names["tree: edge count is n-1"]
    assert not count.passed and "4 != 3" in str(count.witness)
    acyc = names["tree: acyclic"]
    assert not acyc.passed and "closes a cycle" in str(acyc.witness)


def test_verify_tree_fails_on_disconnected_with_witness():
    p4 = path(4)
    host = complete(4)
    two = EdgeSet.of(host, [(0, 1), (2, 3)])
    report = verify_tree(host, two)
    assert not report.overall
    spanning = [c for c in report.checks if "connects" in c.name][0]
    assert not spanning.passed
    assert "separated" in str(spanning.witness)
    assert p4.n == 4  # keep the fixture honest


def test_verify_tree_flags_foreign_edges():
    p3 = path(3)
    stray = EdgeSet(p3, ((0, 2), (0, 1)))   # (0,2) is not a path edge
    report = verify_tree(p3, stray)
    member = [c for c in report.checks if "belong" in c.name][0]
    assert not member.passed and member.witness == (0, 2)


def test_verify_packing_accepts_oracle_output():
    g = complete(4)
    result = max_packing(g)
    report = verify_packing(g, result.packing)
    assert report.overall
    assert len(result.packing.trees) == 2


def test_verify_packing_mutations_fail():
    g = cartesian(complete(4), complete(4)).graph
    packing = max_packing(g).packing
    trees = [list(t.edges) for t in packing.trees]

    # drop an edge from one tree
    broken = [list(t) for t in trees]
    broken[0] = broken[0][:-1]
    rep = verify_packing(g, _mk(g, broken))
    assert not rep.overall

    # duplicate a tree
    rep = verify_packing(g, _mk(g, [trees[0], trees[0]]))
    assert not rep.overall
    shared = [c for c in rep.checks if "disjoint" in c.name][0]
    assert not shared.passed and "in trees 0 and 1" in str(shared.witness)

    # tree 1 claims an edge tree 0 already owns
    stolen = [list(t) for t in trees]
    stolen[1][0] = stolen[0][0]
    rep = verify_packing(g, _mk(g, stolen))
    assert not rep.overall
    shared = [c for c in rep.checks if "disjoint" in c.name][0]
    assert not shared.passed

    # duplicate an edge inside one tree
    doubled = [list(t) for t in trees]
    doubled[0][-1] = doubled[0][0]
    rep = verify_packing(g, _mk(g, doubled))
    assert not rep.overall


def _mk(g, edge_lists):
    return TreePacking(g, tuple(EdgeSet(g, tuple(sorted(e))) for e in edge_lists))


def test_proposition_values():
    assert proposition_value(1, (4, 3)) == 2
    assert proposition_value(1, (5, 4)) == 3
    assert proposition_value(2, (4, 6)) == 4
    assert proposition_value(3, (4,)) == 2
    assert proposition_value(4, (2, 2, 3)) == 2
    assert proposition_value(5, (2, 2, 4)) == 2
    assert proposition_value(6, (2, 2, 2, 2)) == 2
    assert proposition_value(7, (3, 2)) == 2
    with pytest.raises(ValueError):
        proposition_value(2, (5, 4))
    with pytest.raises(ValueError):
        proposition_value(8, (1,))


def test_proposition_graphs_have_expected_sizes():
    assert proposition_graph(1, (4, 3)).n == 12
    assert proposition_graph(3, (4,)).n == 16
    assert proposition_graph(7, (3, 2)).n == 6
    assert proposition_graph(6, (2, 2, 2, 2)).n == 16


def test_verify_proposition_row_passes():
    for row, params in [(1, (4, 3)), (1, (5, 4)), (2, (4, 4)), (3, (4,)),
                        (4, (2, 2, 3)), (7, (3, 2))]:
        report = verify_proposition_row(row, params)
        assert report.overall, report.render()


def test_verify_proposition_row_size_guard():
    with pytest.raises(SizeError):
        verify_proposition_row(2, (9, 9))   # 81 vertices


def test_report_rendering():
    g = complete(4)
    report = verify_packing(g, max_packing(g).packing)
    text = report.render()
    assert text.startswith("PASS")
    record = report.to_record()
    assert record["overall"] is True
    assert all(c["passed"] for c in record["checks"])
