import math

import numpy as np
import pytest
from hypothesis import given, settings

from graph_translation import Graph, GraphError, generate, hop_distances, load_graph, matrices, rho_G
from graph_translation.graph import degree_data
from graph_translation.spectral import eig_sym

from .conftest import connected_graphs


def floyd_warshall_hops(g):
    """Brute-force all-pairs hop counts (unweighted)."""
    n = g.n
    D = np.full((n, n), np.inf)
    np.fill_diagonal(D, 0)
    for u, v, _ in g.edges:
        D[u, v] = D[v, u] = 1
    for k in range(n):
        D = np.minimum(D, D[:, [k]] + D[[k], :])
    return D


class TestLoadGraph:
    def test_minimal(self):
        g = load_graph("0 1 1.0")
        assert g.n == 2
        assert g.edges == ((0, 1, 1.0),)

    def test_default_weight_and_comments(self):
        g = load_graph("# a comment\n0 1\n1 2 2.5  # trailing\n")
        assert g.edges == ((0, 1, 1.0), (1, 2, 2.5))

    def test_n_header(self):
        g = load_graph("n 5\n0 1\n1 2\n")
        assert g.n == 5

    @pytest.mark.parametrize(
        "text",
        [
            "0 1 1\n0 1 2",
            "0 1 1\n1 0 1",
            "0 0 1",
            "0 1 0",
            "0 1 -1",
            "0 1 nan",
            "0 1 inf",
            "",
            "n 1",
            "0 1 1 7",
            "0 x",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(GraphError):
            load_graph(text)

    def test_order_independent(self):
        a = load_graph("0 1\n1 2 3\n")
        b = load_graph("2 1 3\n1 0\n")
        assert a == b and hash(a) == hash(b)


class TestGenerate:
    def test_path(self):
        g = generate("path", 4)
        assert {(u, v) for u, v, _ in g.edges} == {(0, 1), (1, 2), (2, 3)}

    def test_complete(self):
        g = generate("complete", 4)
        assert g.num_edges == 6 and all(w == 1.0 for *_, w in g.edges)

    def test_grid_edges(self):
        assert generate("grid", rows=3, cols=3).num_edges == 12

    def test_erdos_deterministic(self):
        a = generate("erdos_renyi", 30, p=0.2, seed=7)
        b = generate("erdos_renyi", 30, p=0.2, seed=7)
        assert a.edges == b.edges and a.is_connected()

    def test_geometric_connected(self):
        assert generate("geometric", 40, radius=0.3, seed=0).is_connected()

    def test_weight_range(self):
        g = generate("cycle", 6, weight_range=(0.5, 2.0), seed=3)
        w = np.array([e[2] for e in g.edges])
        assert np.all((w >= 0.5) & (w <= 2.0)) and len(set(w)) > 1

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(kind="erdos_renyi", n=10, p=0.0),
            dict(kind="erdos_renyi", n=40, p=0.01, max_retries=3),
            dict(kind="geometric", n=10, radius=0.0),
            dict(kind="cycle", n=2),
            dict(kind="path", n=1),
            dict(kind="hexagon", n=5),
        ],
    )
    def test_errors(self, kwargs):
        kind = kwargs.pop("kind")
        n = kwargs.pop("n")
        with pytest.raises(GraphError):
            generate(kind, n, **kwargs)


class TestRho:
    def test_two_path(self):
        assert rho_G(generate("path", 2)) == pytest.approx(2.0, rel=1e-15)

    def test_triangle(self):
        assert rho_G(generate("complete", 3)) == pytest.approx(4.0, rel=1e-15)

    def test_star(self):
        assert rho_G(generate("star", 4)) == pytest.approx(math.sqrt(24), rel=1e-15)

    def test_mean_neighbor_degree(self):
        dd = degree_data(generate("star", 4))
        np.testing.assert_allclose(dd.degrees, [3, 1, 1, 1])
        np.testing.assert_allclose(dd.mean_neighbor_degrees, [1, 3, 3, 3])

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs())
    def test_upper_bounds_laplacian_spectrum(self, g):
        lam_max = np.linalg.eigvalsh(matrices(g)["laplacian"])[-1]
        rho = rho_G(g)
        assert lam_max <= rho * (1 + 1e-9)


class TestMatrices:
    def test_two_path(self):
        m = matrices(generate("path", 2))
        np.testing.assert_array_equal(m["laplacian"], [[1, -1], [-1, 1]])
        np.testing.assert_allclose(m["normalized_laplacian"], [[1, -1], [-1, 1]], atol=1e-15)

    def test_triangle(self):
        L = matrices(generate("complete", 3))["laplacian"]
        np.testing.assert_array_equal(L, 3 * np.eye(3) - np.ones((3, 3)))

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs())
    def test_laplacians_psd(self, g):
        m = matrices(g)
        L, N = m["laplacian"], m["normalized_laplacian"]
        np.testing.assert_allclose(L.sum(axis=1), 0, atol=1e-12)
        np.testing.assert_array_equal(np.diag(N), 1.0)
        for X in (L, N):
            assert np.array_equal(X, X.T)
            lam = eig_sym(X).eigenvalues
            assert abs(lam[0]) <= 1e-10 * lam[-1]
            assert lam[0] >= -1e-12 * lam[-1]


class TestHops:
    def test_path(self):
        np.testing.assert_array_equal(hop_distances(generate("path", 4), 0), [0, 1, 2, 3])

    def test_complete(self):
        np.testing.assert_array_equal(hop_distances(generate("complete", 4), 2), [1, 1, 0, 1])

    def test_grid_corner(self):
        g = generate("grid", rows=3, cols=3)
        d = hop_distances(g, 0)
        assert d.max() == 4
        np.testing.assert_array_equal(d, floyd_warshall_hops(g)[0])

    def test_disconnected_marks_unreachable(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        np.testing.assert_array_equal(hop_distances(g, 0), [0, 1, -1, -1])
        assert not g.is_connected()

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(weighted=True))
    def test_matches_floyd_warshall(self, g):
        D = np.vstack([hop_distances(g, i) for i in range(g.n)])
        np.testing.assert_array_equal(D, floyd_warshall_hops(g))
        for k in range(g.n):
            assert np.all(D <= D[:, [k]] + D[[k], :])
