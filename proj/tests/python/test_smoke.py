from fractions import Fraction

import pytest

import rainbow_turan as rt


def k4():
    return rt.ColoredGraph(4, [(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 3, 2), (1, 2, 2)])


def test_graph_basics():
    g = k4()
    assert g.vertex_count == 4 and g.edge_count == 6
    assert g.colour_between(3, 2) == 0
    assert rt.common_neighbour_count(g, 0, 1) == 2
    assert not g.is_bipartite()


def test_improper_colouring_raises_with_kind():
    with pytest.raises(rt.RtlError) as info:
        rt.ColoredGraph(3, [(0, 1, 5), (1, 2, 5)])
    assert info.value.args[0] == "ImproperColouring"


def test_counts_on_k4():
    g = k4()
    assert rt.count_cycles(g, 4) == 3
    assert rt.count_paths(g, 3) == 12
    assert rt.count_rainbow_cycles(g, 4) == 0
    assert rt.find_rainbow_cycle(g, 4) is None
    assert rt.naive_count(g, "C3") == rt.count_cycles(g, 3) == 4
    assert sum(rt.count_paths_from(g, a, 2) for a in range(4)) == 2 * rt.count_paths(g, 2)


def test_sidon_construction():
    g, report = rt.construct("sidon-c4", q=3)
    assert report["vertices"] == 32
    assert report["predicted_count"] == {"target": "C4", "value": 16, "exact": True}
    assert rt.count_cycles(g, 4, jobs=2) == 16
    assert rt.find_rainbow_cycle(g, 4) is None


def test_save_load_round_trip(tmp_path):
    g, _ = rt.construct("triangle-bk", k=2, q=3)
    path = tmp_path / "g.edges"
    rt.save_graph(g, path)
    assert rt.load_graph(path) == g


def test_rainbow_cycle_and_pattern():
    g = rt.ColoredGraph(5, [(i, (i + 1) % 5, i) for i in range(5)])
    vertices, colours = rt.find_rainbow_cycle(g, 5)
    assert vertices == [0, 1, 2, 3, 4] and len(set(colours)) == 5
    p = rt.pattern(g, [2, 3, 4, 0, 1], threshold=1)
    assert p["cycle"] == [0, 1, 2, 3, 4] and p["rainbow"]


def test_bose_chowla():
    elements, modulus = rt.bose_chowla(5, 2)
    assert modulus == 24 and len(elements) == 5
    assert rt.verify_bk(elements, modulus, 2)
    assert not rt.verify_bk([0, 1, 2], 8, 2)


def test_theorem_exponent():
    assert rt.theorem_exponent("C5", 4) == Fraction(5, 2)
    assert rt.theorem_exponent("P3", 5) == 4
    with pytest.raises(rt.RtlError):
        rt.theorem_exponent("C3", 5)


def test_run_scaling_exact_family():
    fit = rt.run_scaling("even-cycle-lower", "C6", k=3, n=range(2, 7))
    assert abs(fit["slope"] - 2) < 1e-9 and fit["within_tolerance"]
    with pytest.raises(rt.RtlError) as info:
        rt.run_scaling("even-cycle-lower", "C6", k=3, n=[2, 3, 4])
    assert info.value.args[0] == "InsufficientPoints"


def test_p2_and_extremal():
    report = rt.check_p2_linearity("c4free-regular-path", 4, q=[3, 5, 7, 11])
    assert not report["flagged"]
    rec = rt.exhaustive_extremal(4, "C4", 4)
    assert rec["max_count"] == 3 and len(rec["witness"]["edges"]) == 6


def test_budget_is_enforced():
    g, _ = rt.construct("cycle-blowup", s=4, n=6)
    with pytest.raises(rt.RtlError) as info:
        rt.count_cycles(g, 12, budget=1000)
    assert info.value.args[0] == "BudgetExceeded"
