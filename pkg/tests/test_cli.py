import csv
import io
import shutil
import subprocess
import sys

import numpy as np
import pytest

from graph_translation import cli, generate, load_graph, load_signal
from graph_translation.io import dump_graph, dump_signal
from graph_translation.spectral import SpectralError


def run(argv, capsys):
    try:
        code = cli.main([str(a) for a in argv])
    except SystemExit as e:
        code = e.code
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.fixture
def k2(tmp_path):
    p = tmp_path / "k2.edges"
    p.write_text("0 1 1.0\n")
    return p


@pytest.fixture
def k4(tmp_path):
    p = tmp_path / "k4.edges"
    p.write_text(dump_graph(generate("complete", 4)))
    return p


class TestGen:
    def test_path(self, tmp_path, capsys):
        out = tmp_path / "p4.edges"
        code, _, _ = run(["gen", "--type", "path", "--n", 4, "-o", out], capsys)
        assert code == 0
        body = [ln for ln in out.read_text().splitlines() if not ln.startswith("#")]
        assert len(body) == 3
        assert load_graph(out.read_text()) == generate("path", 4)

    def test_erdos(self, tmp_path, capsys):
        out = tmp_path / "g.edges"
        code, _, _ = run(["gen", "--type", "erdos", "--n", 50, "--p", 0.1, "--seed", 3, "-o", out], capsys)
        text = out.read_text()
        assert code == 0 and load_graph(text).is_connected()
        assert "p=0.1" in text.splitlines()[0] and "seed=3" in text.splitlines()[0]

    def test_grid(self, capsys):
        code, out, _ = run(["gen", "--type", "grid", "--rows", 3, "--cols", 3], capsys)
        assert code == 0 and load_graph(out).num_edges == 12

    def test_validation_error(self, capsys):
        code, _, err = run(["gen", "--type", "erdos", "--n", 10, "--p", 0.0], capsys)
        assert code == 2 and "error" in err


class TestTranslate:
    def test_k2_swap(self, k2, capsys):
        code, out, _ = run(["translate", k2, "--kind", "laplacian", "--alpha", 1, "--exact", "--impulse", 0], capsys)
        assert code == 0
        np.testing.assert_allclose(load_signal(out), [0, 1], atol=1e-15)

    def test_adjacency_convergence(self, k2, tmp_path, capsys):
        out = tmp_path / "y.csv"
        code, stdout, _ = run(
            ["translate", k2, "--kind", "adjacency", "--exact", "--order", 40, "--impulse", 0, "-o", out], capsys
        )
        report = dict(line.split() for line in stdout.splitlines())
        assert code == 0 and float(report["error"]) <= 1e-10
        np.testing.assert_allclose(load_signal(out.read_text()), [1, 0], atol=1e-10)

    def test_orders_error_below_oracle(self, k4, tmp_path, capsys):
        x = np.array([1.0, -1.0, 0.5j, -0.5j])
        sig = tmp_path / "x.csv"
        sig.write_text(dump_signal(x))
        code, _, err = run(
            ["translate", k4, "--kind", "laplacian", "--exact", "--orders", "5,1", "--signal", sig], capsys
        )
        report = dict(line.split() for line in err.splitlines())
        assert code == 0
        # DC-free on K4 means a single eigenvalue, so the oracle is attained
        assert float(report["error"]) <= float(report["oracle_bound"]) + 1e-10
        assert float(report["error"]) == pytest.approx(float(report["oracle_bound"]), rel=1e-12)
        assert float(report["paper_bound"]) > 0

    @pytest.mark.parametrize(
        "extra",
        [
            ["--kind", "adjacency", "--orders", "1,1", "--impulse", 0],
            ["--kind", "laplacian", "--order", 3, "--impulse", 0],
            ["--kind", "laplacian", "--impulse", 0],
            ["--kind", "laplacian", "--exact", "--impulse", 7],
            ["--kind", "laplacian", "--exact", "--alpha", "-1", "--impulse", 0],
            ["--kind", "laplacian", "--exact", "--orders", "1", "--impulse", 0],
            ["--kind", "laplacian", "--exact"],
        ],
    )
    def test_validation(self, k2, extra, capsys):
        assert run(["translate", k2, *extra], capsys)[0] == 2

    def test_bad_signal_length(self, k2, tmp_path, capsys):
        sig = tmp_path / "x.csv"
        sig.write_text(dump_signal(np.ones(3)))
        assert run(["translate", k2, "--exact", "--signal", sig], capsys)[0] == 2

    def test_disconnected(self, tmp_path, capsys):
        p = tmp_path / "d.edges"
        p.write_text("0 1\n2 3\n")
        assert run(["translate", p, "--exact", "--impulse", 0], capsys)[0] == 2

    def test_missing_file(self, tmp_path, capsys):
        assert run(["translate", tmp_path / "nope.edges", "--exact", "--impulse", 0], capsys)[0] == 2


class TestBounds:
    def test_adjacency(self, capsys):
        code, out, _ = run(["bounds", "--kind", "adjacency", "--alpha", 1, "--k-range", "0:12"], capsys)
        r = rows(out)
        assert code == 0 and [int(x["K"]) for x in r] == list(range(13))
        assert float(r[8]["bound"]) == pytest.approx(4.842e-2, rel=1e-3)

    def test_laplacian_table(self, capsys):
        code, out, _ = run(
            ["bounds", "--kind", "laplacian", "--alpha", 1, "--rho", 0.1, "--p-range", "0:10", "--q-range", "0:4"],
            capsys,
        )
        r = rows(out)
        assert code == 0 and len(r) == 55
        assert list(r[0]) == [
            "P", "Q", "alpha", "rho", "kappa_C", "kappa_S", "kappa_R", "total_paper", "corrected_total", "dc_term",
        ]
        (row,) = [x for x in r if x["P"] == "5" and x["Q"] == "1"]
        assert float(row["total_paper"]) == pytest.approx(7.21e-3, rel=1e-3)

    def test_plateau(self, capsys):
        _, out, _ = run(["bounds", "--rho", 0.1, "--p-range", "0:20", "--q-range", "0:2"], capsys)
        r = rows(out)
        for Q in "012":
            t = [float(x["total_paper"]) for x in r if x["Q"] == Q]
            assert all(b <= a for a, b in zip(t, t[1:]))
            assert t[-1] == pytest.approx(t[12], rel=1e-6)

    def test_graph_adds_oracle(self, k4, capsys):
        code, out, _ = run(["bounds", "--graph", k4, "--p-range", "5:5", "--q-range", "1:1"], capsys)
        (row,) = rows(out)
        assert code == 0 and float(row["oracle"]) <= float(row["corrected_total"])

    @pytest.mark.parametrize(
        "argv",
        [
            ["bounds", "--rho", 0.1, "--p-range", "5:2"],
            ["bounds", "--rho", 0.1, "--p-range", "a:b"],
            ["bounds", "--rho", 1.5],
            ["bounds"],
        ],
    )
    def test_bad_input(self, argv, capsys):
        assert run(argv, capsys)[0] == 2


class TestMinOrder:
    def test_anchors(self, capsys):
        code, out, _ = run(["minorder", "--xi", "0.5,0.1,0.01", "--alpha", "1", "--rho", 0.1], capsys)
        r = rows(out)
        assert code == 0
        assert [(x["min_order"], x["P"], x["Q"]) for x in r] == [("3", "3", "0"), ("5", "4", "1"), ("6", "5", "1")]

    def test_monotone(self, capsys):
        xis = "0.5,0.2,0.1,0.05,0.01,0.001,0.0001"
        _, out, _ = run(["minorder", "--xi", xis, "--alpha", "0.5,1,2"], capsys)
        r = rows(out)
        by_alpha = {}
        for x in r:
            by_alpha.setdefault(x["alpha"], []).append(int(x["min_order"]))
        for seq in by_alpha.values():
            assert seq == sorted(seq)
        a05, a1, a2 = by_alpha.values()
        assert all(p <= q <= s for p, q, s in zip(a05, a1, a2)) and a2[-1] > a05[-1]

    def test_unsolved(self, capsys):
        code, out, _ = run(["minorder", "--xi", "0.0001", "--cap", 2], capsys)
        assert code == 0 and rows(out)[0]["min_order"] == "unsolved"

    def test_bad_xi(self, capsys):
        assert run(["minorder", "--xi", "1.5"], capsys)[0] == 2


class TestLocalize:
    def test_k2(self, k2, capsys):
        code, out, _ = run(["localize", k2, "--kind", "laplacian", "--alpha", 1, "--vertex", 0], capsys)
        r = rows(out)
        assert code == 0 and float(r[1]["energy"]) == pytest.approx(1, abs=1e-14)
        assert list(r[0]) == ["hop", "energy", "cum_fraction", "one_minus_cum", "envelope_oracle", "envelope_paper"]

    @pytest.mark.parametrize("kind", ["laplacian", "normalized_laplacian", "adjacency"])
    def test_k4(self, k4, kind, capsys):
        _, out, _ = run(["localize", k4, "--kind", kind, "--radius", 8], capsys)
        r = rows(out)
        assert len(r) == 9
        assert sum(float(x["energy"]) for x in r) == pytest.approx(1, rel=1e-10)
        assert all(float(x["one_minus_cum"]) <= float(x["envelope_oracle"]) + 1e-10 for x in r)

    def test_bad_vertex(self, k2, capsys):
        assert run(["localize", k2, "--vertex", 2], capsys)[0] == 2


class TestSpectrum:
    def test_k2(self, k2, capsys):
        code, out, _ = run(["spectrum", k2], capsys)
        r = rows(out)
        assert code == 0 and [float(x["nu"]) for x in r] == pytest.approx([0, 0.5], abs=1e-15)


class TestContract:
    @pytest.mark.parametrize("sub", ["gen", "translate", "bounds", "minorder", "localize", "spectrum"])
    def test_help(self, sub, capsys):
        with pytest.raises(SystemExit) as e:
            cli.main([sub, "--help"])
        out = capsys.readouterr().out
        assert e.value.code == 0 and "--output" in out and "exit" in out.lower()

    def test_unknown_flag(self, capsys):
        assert run(["bounds", "--rho", 0.1, "--bogus"], capsys)[0] == 2

    def test_numeric_failure_exit_code(self, k2, capsys, monkeypatch):
        def boom(*a, **k):
            raise SpectralError("eigensolver did not converge")

        monkeypatch.setattr(cli, "graph_basis", boom)
        code, _, err = run(["translate", k2, "--exact", "--impulse", 0], capsys)
        assert code == 3 and "numerical" in err

    def test_deterministic(self, tmp_path, capsys):
        g = tmp_path / "g.edges"
        run(["gen", "--type", "geometric", "--n", 30, "--radius", 0.35, "--seed", 9, "-o", g], capsys)
        cmds = [
            ["gen", "--type", "geometric", "--n", 30, "--radius", 0.35, "--seed", 9],
            ["translate", g, "--exact", "--orders", "4,2", "--impulse", 3],
            ["bounds", "--graph", g],
            ["bounds", "--kind", "adjacency"],
            ["minorder", "--xi", "0.5,0.01"],
            ["localize", g, "--vertex", 5],
            ["spectrum", g, "--kind", "adjacency"],
        ]
        for i, argv in enumerate(cmds):
            outs = []
            for rep in range(2):
                p = tmp_path / f"out{i}_{rep}.csv"
                assert run([*argv, "-o", p], capsys)[0] == 0
                outs.append(p.read_bytes())
            assert outs[0] == outs[1]

    def test_console_script(self, k2):
        exe = shutil.which("graph-translation")
        argv = [exe] if exe else [sys.executable, "-m", "graph_translation"]
        res = subprocess.run([*argv, "translate", str(k2), "--exact", "--impulse", "0"], capture_output=True, text=True)
        assert res.returncode == 0
        np.testing.assert_allclose(load_signal(res.stdout), [0, 1], atol=1e-15)
