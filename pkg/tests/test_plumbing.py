import json
import random
from fractions import Fraction

import pytest

from colorsig.errors import DomainError
from colorsig.plumbing import (Edge, PlumbingGraph, Surface, boundary_kernel_generators, double,
                               intersection_graph, is_balanced, kernel_basis, sublink_linking,
                               total_weight, weight_matrix)


def two(edges, boundary=(1, 1)):
    verts = (Surface("F1", 0, boundary[0]), Surface("F2", 0, boundary[1]))
    return PlumbingGraph(verts, tuple(Edge(0, 1, s) for s in edges))


def random_graph(rng, max_vertices=6, closed_ok=True):
    n = rng.randint(1, max_vertices)
    verts = tuple(Surface(f"F{i + 1}", rng.randint(0, 2),
                          rng.randint(0 if closed_ok else 1, 3)) for i in range(n))
    edges = []
    if n > 1:
        for _ in range(rng.randint(0, 8)):
            u, v = rng.sample(range(n), 2)
            edges.append(Edge(u, v, rng.choice([1, -1])))
    return PlumbingGraph(verts, tuple(edges))


def realize(rng, lk, boundaries):
    """Surfaces and signed intersection points realizing a linking matrix."""
    mu = len(lk)
    surfaces = [{"label": f"F{i + 1}", "genus": rng.randint(0, 1), "boundary": boundaries[i]}
                for i in range(mu)]
    points = []
    pid = 0
    for i in range(mu):
        for j in range(i + 1, mu):
            target = lk[i][j]
            extra = rng.randint(0, 2)
            signs = [1 if target > 0 else -1] * abs(target) + [1, -1] * extra
            rng.shuffle(signs)
            for s in signs:
                a, b = (i, j) if rng.random() < 0.5 else (j, i)
                points.append((f"x{pid}", a, b, s))
                pid += 1
    return surfaces, points


def random_linking(rng, mu, zero_prob=0.3):
    lk = [[0] * mu for _ in range(mu)]
    for i in range(mu):
        for j in range(i + 1, mu):
            lk[i][j] = lk[j][i] = 0 if rng.random() < zero_prob else rng.randint(-3, 3)
    return lk


def test_total_weight_examples():
    assert total_weight(two([1]), 0, 1) == 1
    assert total_weight(two([1, -1]), "F1", "F2") == 0
    assert total_weight(two([]), 1, 0) == 0
    with pytest.raises(DomainError):
        total_weight(two([1]), 0, 0)


def test_balanced_examples():
    assert is_balanced(two([1, -1]))
    assert not is_balanced(two([1]))
    assert is_balanced(two([]))


def test_graph_invariants():
    with pytest.raises(DomainError):
        Edge(1, 1, 1)
    with pytest.raises(DomainError):
        Edge(0, 1, 2)
    assert Edge(3, 1, -1) == Edge(1, 3, -1)
    with pytest.raises(DomainError):
        PlumbingGraph((Surface("A"),), (Edge(0, 1, 1),))
    with pytest.raises(DomainError):
        PlumbingGraph((Surface("A"), Surface("A")))
    with pytest.raises(DomainError):
        Surface("A", -1, 0)


def test_kernel_basis_examples():
    annulus = PlumbingGraph((Surface("F", 0, 2),))
    kb = kernel_basis(annulus)
    assert kb.format() == ["[dF]", "mu2^F - mu1^F"]
    kb = kernel_basis(two([1]))
    assert kb.format() == ["[dF1] - mu1^F2", "[dF2] - mu1^F1"]
    closed = PlumbingGraph((Surface("T", 1, 0), Surface("S", 0, 0)), (Edge(0, 1, 1),))
    assert len(kernel_basis(closed)) == 0


def test_kernel_basis_signs_and_multi_edges():
    kb = kernel_basis(two([-1, -1, 1]))
    assert kb.generators[0] == {"[dF1]": Fraction(1), "mu1^F2": Fraction(1)}
    kb = kernel_basis(two([1, -1]))
    assert kb.format() == ["[dF1]", "[dF2]"]


def test_kernel_basis_closed_neighbour():
    G = PlumbingGraph((Surface("F", 0, 1), Surface("T", 1, 0)), (Edge(0, 1, 1),))
    kb = kernel_basis(G)
    assert kb.symbols == ["[dF]", "mu1^F", "mu1^T"]
    assert kb.format() == ["[dF] - mu1^T"]


def test_kernel_basis_cardinality_and_independence():
    rng = random.Random(9)
    for _ in range(500):
        G = random_graph(rng)
        kb = kernel_basis(G)
        expected = sum(v.boundary for v in G.vertices)
        assert len(kb) == expected
        assert kb.rank() == expected


def test_kernel_json(tmp_path):
    data = kernel_basis(two([1, 1], boundary=(2, 1))).to_json()
    assert data["generators"][0] == {"[dF1]": 1, "mu1^F2": -2}
    assert data["formatted"][1] == "mu2^F1 - mu1^F1"
    json.dumps(data)


def test_intersection_graph_examples():
    disks = [{"label": "D1", "genus": 0, "boundary": 1}, {"label": "D2", "genus": 0, "boundary": 1}]
    G = intersection_graph(disks, [("x", 0, 1, 1)])
    assert weight_matrix(G) == [[0, 1], [1, 0]]
    assert intersection_graph(disks, []).edges == ()
    G = intersection_graph(disks, [("x", "D1", "D2", 1), ("y", "D2", "D1", -1)])
    assert is_balanced(G)
    with pytest.raises(DomainError):
        intersection_graph(disks, [("x", 1, 1, 1)])


def test_balanced_iff_zero_linking():
    rng = random.Random(10)
    for _ in range(300):
        mu = rng.randint(2, 4)
        lk = random_linking(rng, mu)
        surfaces, points = realize(rng, lk, [rng.randint(1, 3) for _ in range(mu)])
        G = intersection_graph(surfaces, points)
        assert weight_matrix(G) == lk
        assert is_balanced(G) == all(x == 0 for r in lk for x in r)


def test_doubled_graph_is_balanced():
    rng = random.Random(11)
    for _ in range(300):
        mu = rng.randint(1, 4)
        lk = random_linking(rng, mu)
        boundaries = [rng.randint(1, 3) for _ in range(mu)]
        G = intersection_graph(*realize(rng, lk, boundaries))
        H = intersection_graph(*realize(rng, lk, boundaries))
        D = double(G, H)
        assert is_balanced(D)
        assert all(v.boundary == 0 for v in D.vertices)
        assert is_balanced(double(G))


def test_double_unmatched_linking_is_unbalanced():
    G = two([1])
    H = two([])
    assert not is_balanced(double(G, H))
    with pytest.raises(DomainError):
        double(G, two([], boundary=(2, 1)))


def test_double_genus():
    G = PlumbingGraph((Surface("F", 1, 3),))
    H = PlumbingGraph((Surface("F", 2, 3),))
    assert double(G, H).vertices[0].genus == 1 + 2 + 2


def test_sublink_linking_examples():
    assert sublink_linking([[0, 1], [1, 0]], [0, 1]) == [[0, 1], [1, 0]]
    assert sublink_linking([[0, 5], [5, 0]], [0, 0]) == [[0]]
    comp = [[0, 2, 1], [2, 0, -1], [1, -1, 0]]
    assert sublink_linking(comp, [0, 0, 1]) == [[0, 0], [0, 0]]
    with pytest.raises(DomainError):
        sublink_linking([[0, 1], [2, 0]], [0, 1])


def test_boundary_kernel_generators_examples():
    kb = boundary_kernel_generators([[0, 1], [1, 0]], [1, 1])
    assert kb.format() == ["[L1] - mu1^L2", "[L2] - mu1^L1"]
    kb = boundary_kernel_generators([[0, 0], [0, 0]], [2, 1])
    assert kb.format() == ["[L1]", "mu2^L1 - mu1^L1", "[L2]"]
    rng = random.Random(12)
    for _ in range(50):
        mu = rng.randint(1, 4)
        counts = [rng.randint(1, 4) for _ in range(mu)]
        kb = boundary_kernel_generators(random_linking(rng, mu), counts)
        assert len(kb) == sum(counts) == kb.rank()
    with pytest.raises(DomainError):
        boundary_kernel_generators([[1]], [1])


def test_graph_json_round_trip():
    rng = random.Random(13)
    for _ in range(20):
        G = random_graph(rng)
        assert PlumbingGraph.from_json(json.loads(json.dumps(G.to_json()))) == G
    data = {"vertices": [{"label": "A", "genus": 0, "boundary": 1},
                         {"label": "B", "genus": 0, "boundary": 1}],
            "edges": [{"u": "A", "v": "B", "sign": -1}]}
    assert total_weight(PlumbingGraph.from_json(data), "A", "B") == -1
