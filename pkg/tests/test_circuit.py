import json
import random

import pytest
from scipy.stats import chisquare

from sharecircuit.circuit import (
    LinearCircuit,
    evaluate,
    failure_bound,
    read_circuit,
    read_shares,
    reconstruct,
    share,
    synthesize,
    transfer_matrix,
    validate_scheme,
    write_circuit,
    write_shares,
)
from sharecircuit.errors import (
    InvalidArguments,
    SingularSubmatrix,
    TooFewInputs,
)
from sharecircuit.field import FieldModulus
from sharecircuit.network import Network, complete_bipartite

GF7 = FieldModulus(7)
GF101 = FieldModulus(101)


def shamir_like_circuit(xs, p=7, t=2):
    """Depth-1 circuit whose transfer matrix has rows (1, x_i)."""
    n = len(xs)
    net = Network(
        2 + n,
        sorted([(0, 2 + i) for i in range(n)] + [(1, 2 + i) for i in range(n)]),
        (0, 1),
        tuple(range(2, 2 + n)),
    )
    coeffs = tuple(1 if u == 0 else xs[v - 2] for u, v in net.edges)
    return LinearCircuit(net, FieldModulus(p), coeffs, t)


def path_enumeration_transfer(circ):
    """Independent oracle: M[i][j] is the sum over all input-j to output-i
    paths of the product of edge coefficients."""
    net = circ.net
    p = circ.modulus.p
    succ = [[] for _ in range(net.vertex_count)]
    for idx, (u, v) in enumerate(net.edges):
        succ[u].append((v, circ.coefficients[idx]))
    out_pos = {v: i for i, v in enumerate(net.outputs)}
    rows = [[0] * len(net.inputs) for _ in net.outputs]

    def dfs(v, prod, j):
        if v in out_pos:
            rows[out_pos[v]][j] = (rows[out_pos[v]][j] + prod) % p
        for w, c in succ[v]:
            dfs(w, prod * c % p, j)

    for j, v in enumerate(net.inputs):
        dfs(v, 1, j)
    return rows


def test_synthesize_basic():
    net = complete_bipartite(2, 3)
    circ = synthesize(net, 2, GF7, rng_seed=0)
    assert len(circ.coefficients) == 6
    assert all(0 <= c < 7 for c in circ.coefficients)
    assert circ.threshold == 2
    again = synthesize(net, 2, GF7, rng_seed=0)
    assert again.coefficients == circ.coefficients
    other = synthesize(net, 2, GF7, rng_seed=1)
    assert other.coefficients != circ.coefficients


def test_synthesize_too_few_inputs():
    with pytest.raises(TooFewInputs):
        synthesize(complete_bipartite(2, 3), 3, GF7)


def test_coefficient_uniformity_chi_squared():
    net = complete_bipartite(4, 8)
    counts = [0] * 101
    for seed in range(200):
        for c in synthesize(net, 2, GF101, rng_seed=seed).coefficients:
            counts[c] += 1
    result = chisquare(counts)
    assert result.pvalue > 1e-6


def test_evaluate_identity_matching():
    net = Network(4, [(0, 2), (1, 3)], (0, 1), (2, 3))
    circ = LinearCircuit(net, GF7, (1, 1), 2)
    assert evaluate(circ, [3, 5]) == [3, 5]
    M = transfer_matrix(circ)
    assert M.entries == (1, 0, 0, 1)


def test_transfer_matrix_sums_parallel_edges():
    net = Network(2, [(0, 1), (0, 1)], (0,), (1,))
    circ = LinearCircuit(net, GF7, (3, 5), 1)
    assert transfer_matrix(circ).entries == ((3 + 5) % 7,)


def test_transfer_matrix_matches_path_enumeration():
    for seed in range(60):
        rng = random.Random(seed)
        # random 3-layer DAG: 2 inputs, hidden layer, outputs
        h = rng.randrange(1, 4)
        n_out = rng.randrange(1, 4)
        V = 2 + h + n_out
        edges = []
        for u in range(2):
            for v in range(2, 2 + h):
                if rng.random() < 0.7:
                    edges.append((u, v))
        for v in range(2, 2 + h):
            for w in range(2 + h, V):
                if rng.random() < 0.7:
                    edges.append((v, w))
        # occasional skip edge input -> output
        for u in range(2):
            for w in range(2 + h, V):
                if rng.random() < 0.2:
                    edges.append((u, w))
        net = Network(V, sorted(edges), (0, 1), tuple(range(2 + h, V)))
        coeffs = tuple(rng.randrange(7) for _ in edges)
        circ = LinearCircuit(net, GF7, coeffs, 1)
        M = transfer_matrix(circ)
        oracle = path_enumeration_transfer(circ)
        assert [list(M.row(i)) for i in range(M.rows)] == oracle


def test_evaluate_is_linear():
    net = complete_bipartite(3, 4)
    circ = synthesize(net, 2, GF101, rng_seed=9)
    rng = random.Random(0)
    for _ in range(20):
        x = [rng.randrange(101) for _ in range(3)]
        y = [rng.randrange(101) for _ in range(3)]
        lhs = evaluate(circ, [(a + b) % 101 for a, b in zip(x, y)])
        rhs = [(a + b) % 101 for a, b in zip(evaluate(circ, x), evaluate(circ, y))]
        assert lhs == rhs


def test_validate_scheme_shamir_proved():
    circ = shamir_like_circuit([1, 2, 3])
    report = validate_scheme(circ)
    assert report.verdict == "proved"
    assert report.mode == "exhaustive"
    assert report.recover_checks == 3 and report.privacy_checks == 3


def test_validate_scheme_refuted_with_witness():
    # share 0 is the constant 0: any coalition containing it fails recovery
    circ = shamir_like_circuit([1, 2, 3])
    coeffs = list(circ.coefficients)
    for idx, (u, v) in enumerate(circ.net.edges):
        if v == 2:
            coeffs[idx] = 0
    bad = LinearCircuit(circ.net, circ.modulus, tuple(coeffs), 2)
    report = validate_scheme(bad)
    assert report.verdict == "refuted"
    assert report.witness is not None and 0 in report.witness


def test_share_reconstruct_worked_example():
    circ = shamir_like_circuit([1, 2, 3])
    # x = (s, r) = (4, 5): shares are (s + r, s + 2r, s + 3r) mod 7
    assert evaluate(circ, [4, 5]) == [2, 0, 5]
    assert reconstruct(circ, [0, 1], [2, 0]) == 4
    assert reconstruct(circ, [1, 2], [0, 5]) == 4
    assert reconstruct(circ, [0, 2], [2, 5]) == 4


def test_share_reconstruct_round_trip_random():
    circ = shamir_like_circuit([1, 2, 3, 4], p=10007, t=2)
    assert validate_scheme(circ).verdict == "proved"
    rng = random.Random(1)
    for trial in range(100):
        s = rng.randrange(10007)
        shares = share(circ, s, rng_seed=trial)
        T = sorted(rng.sample(range(4), 2))
        assert reconstruct(circ, T, [shares.values[i] for i in T]) == s


def test_reconstruct_errors():
    circ = shamir_like_circuit([1, 2, 3])
    with pytest.raises(InvalidArguments):
        reconstruct(circ, [0], [2])
    # two identical share rows give a singular coalition matrix
    dup = shamir_like_circuit([1, 1, 3])
    with pytest.raises(SingularSubmatrix):
        reconstruct(dup, [0, 1], [2, 2])


def test_failure_bound_examples():
    assert failure_bound(1, 3, 2, GF101) == pytest.approx(6 / 101)
    assert failure_bound(2, 3, 2, GF101) == pytest.approx(12 / 101)
    assert failure_bound(5, 10, 5, FieldModulus(3)) == 1.0
    big = FieldModulus(2**61 - 1)
    assert failure_bound(3, 20, 10, big) < 1e-12


def test_circuit_json_round_trip(tmp_path):
    net = complete_bipartite(3, 5)
    circ = synthesize(net, 2, GF101, rng_seed=4)
    path = tmp_path / "circ.json"
    write_circuit(circ, path)
    loaded = read_circuit(path)
    assert loaded.coefficients == circ.coefficients
    assert loaded.threshold == 2 and loaded.modulus.p == 101
    path2 = tmp_path / "circ2.json"
    write_circuit(loaded, path2)
    assert path.read_bytes() == path2.read_bytes()


def test_shares_json_round_trip(tmp_path):
    circ = shamir_like_circuit([1, 2, 3])
    sh = share(circ, 4, rng_seed=0)
    path = tmp_path / "shares.json"
    write_shares(sh, path)
    doc = json.loads(path.read_text())
    assert doc["modulus"] == 7
    mod, entries = read_shares(path)
    assert mod.p == 7
    assert entries == [(i, v) for i, v in enumerate(sh.values)]
