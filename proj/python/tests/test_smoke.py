import math

import pytest

import swcontract as swc


W1 = {"type": "lp", "p": 1, "weights": [1.0, 3.4042, 1.0369]}
E3 = {"type": "lp", "p": 2, "weights": [1.0, 1.0, 1.0]}


def test_matrix_measure():
    a = [[-2.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, -3.0]]
    result = swc.matrix_measure(E3, a)
    assert result["value"] == pytest.approx(-1.0, abs=1e-9)
    assert result["method"] == "closed_form"


def test_norm_eval_and_induced():
    assert swc.norm_eval(W1, [1.0, 1.0, 1.0]) == pytest.approx(5.4411)
    identity = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
    assert swc.induced_norm(E3, identity) == pytest.approx(1.0)


def test_beta_directions():
    fwd = swc.beta(W1, E3)
    back = swc.beta(E3, W1)
    assert fwd["kind"] == "exact"
    assert fwd["value"] == pytest.approx(1.0)
    assert back["value"] == pytest.approx(
        math.sqrt(1.0 + 3.4042**2 + 1.0369**2)
    )
    sampled = swc.beta(E3, W1, method="sampled", samples=500, seed=3)
    assert sampled["value"] <= back["value"] * (1 + 1e-9)


def test_certify_staircase():
    cert = swc.certify_staircase(
        alpha={1: -1.0, 2: -0.6807},
        beta=[(1, 2, 1.796), (2, 1, 1.05)],
        signal={"segments": [[1, 1.0], [2, 1.0]], "periodic": True},
    )
    assert cert["satisfied"] is True
    assert cert["c"] == pytest.approx(0.5232, abs=1e-3)


def test_certify_rejects_bad_input():
    with pytest.raises(ValueError):
        swc.certify_staircase(
            alpha={1: -1.0},
            beta=[],
            signal={"segments": [[1, 1.0], [2, 1.0]], "periodic": True},
        )


def test_simulate_linear_decay():
    out = swc.simulate_linear(
        modes={1: ([[-1.0, 0.0], [0.0, -2.0]], [0.0, 0.0])},
        signal={"segments": [[1, 1.0]], "periodic": True},
        x0=[1.0, 1.0],
        t0=0.0,
        tf=5.0,
        dt=1e-3,
    )
    assert not out["diverged"]
    assert out["times"][-1] == pytest.approx(5.0)
    assert abs(out["states"][-1][0]) == pytest.approx(math.exp(-5.0), rel=1e-6)


def test_graph_and_sync_pipeline():
    graph = swc.sample_graph10()
    lam2 = swc.lambda2_graph(graph)
    assert lam2 == pytest.approx(4.381966, abs=1e-6)
    t_star = swc.solve_min_period(3.2829, -7.4714, 4.3163, 1.0, 0.25, 0.0)
    assert t_star == pytest.approx(0.3058, abs=1e-3)
    with pytest.raises(ValueError):
        swc.solve_min_period(1.0, -3.0, 2.0, 2.0, 1.0, 0.0)


def test_repro_report_rows():
    rows = swc.repro_report()
    ids = {row["id"] for row in rows}
    assert {"ex1-mu1", "ex2-c", "chua-mu0", "net-T"} <= ids
    by_id = {row["id"]: row for row in rows}
    assert by_id["chua-mu0"]["status"] == "match"
    assert by_id["ex2-c"]["status"] == "mismatch"
