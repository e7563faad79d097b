"""Linear share-distribution circuits: random coefficient assignment on a
network, transfer-matrix extraction, threshold-scheme rank validation, and
the share / reconstruct protocol."""

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import (
    InvalidArguments,
    SingularMatrix,
    SingularSubmatrix,
    TooFewInputs,
)
from .field import FieldModulus, Matrix, mat_inverse, mat_rank, mat_vec, submatrix
from .network import (
    DEFAULT_BUDGET,
    Network,
    network_from_dict,
    network_to_dict,
    topological_order,
    validate,
)


@dataclass
class LinearCircuit:
    """A network with a field modulus and one coefficient per edge.

    Input 0 carries the secret; the remaining inputs carry randomness.
    Coefficients are parallel to net.edges.
    """

    net: Network
    modulus: FieldModulus
    coefficients: tuple
    threshold: int
    secret_input: int = 0

    def __post_init__(self):
        if len(self.coefficients) != len(self.net.edges):
            raise InvalidArguments("one coefficient per edge required")
        ell = len(self.net.inputs)
        n = len(self.net.outputs)
        if not 1 <= self.threshold <= min(ell, n):
            raise InvalidArguments(
                f"need 1 <= t <= min(inputs, outputs), got t={self.threshold}"
            )


@dataclass
class ShareVector:
    values: tuple
    modulus: FieldModulus


@dataclass
class SchemeReport:
    """Outcome of the rank sweep over coalitions."""

    recover_checks: int
    privacy_checks: int
    mode: str  # "exhaustive" | "sampled"
    verdict: str  # "proved" | "sampled_pass" | "refuted"
    witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.verdict in ("proved", "sampled_pass")


def _sorted_net(net: Network) -> Network:
    return Network(net.vertex_count, sorted(net.edges), net.inputs, net.outputs)


def synthesize(
    net: Network, t: int, modulus: FieldModulus, rng_seed: int = 0
) -> LinearCircuit:
    """Draw an independent uniform coefficient in [0, p) for every edge.

    Edges are canonicalized to sorted order first so that circuits
    serialize bit-exactly. Deterministic given the seed.
    """
    validate(net)
    if len(net.inputs) < t:
        raise TooFewInputs(f"network has {len(net.inputs)} inputs, need >= {t}")
    net = _sorted_net(net)
    rng = random.Random(rng_seed)
    coeffs = tuple(rng.randrange(modulus.p) for _ in net.edges)
    return LinearCircuit(net, modulus, coeffs, t)


def evaluate(circ: LinearCircuit, x) -> list:
    """Run the circuit on input vector x by one topological forward pass.

    Every non-input vertex is an addition gate: its value is the
    coefficient-weighted sum over incoming edges.
    """
    net = circ.net
    p = circ.modulus.p
    if len(x) != len(net.inputs):
        raise InvalidArguments("input vector length mismatch")
    incoming = [[] for _ in range(net.vertex_count)]
    for idx, (u, v) in enumerate(net.edges):
        incoming[v].append((u, circ.coefficients[idx]))
    values = [0] * net.vertex_count
    for j, v in enumerate(net.inputs):
        values[v] = x[j] % p
    input_set = set(net.inputs)
    for v in topological_order(net):
        if v in input_set:
            continue
        values[v] = sum(c * values[u] for u, c in incoming[v]) % p
    return [values[v] for v in net.outputs]


def transfer_matrix(circ: LinearCircuit) -> Matrix:
    """The n x ell matrix of the circuit's linear map, one forward pass per
    input with indicator loading (equal to the sum over all paths of the
    edge-coefficient products)."""
    ell = len(circ.net.inputs)
    n = len(circ.net.outputs)
    cols = []
    for j in range(ell):
        indicator = [1 if i == j else 0 for i in range(ell)]
        cols.append(evaluate(circ, indicator))
    flat = tuple(cols[j][i] for i in range(n) for j in range(ell))
    return Matrix(n, ell, flat)


def _rank_conditions_hold(M: Matrix, T, t: int, modulus: FieldModulus) -> bool:
    ell = M.cols
    r_cols = list(range(1, ell))
    if len(T) == t:
        M_T = submatrix(M, list(T), list(range(ell)))
        if mat_rank(M_T, modulus) != t:
            return False
        M_TR = submatrix(M, list(T), r_cols)
        return mat_rank(M_TR, modulus) == t - 1
    # |T| = t-1: privacy needs full-rank randomness submatrix
    M_TR = submatrix(M, list(T), r_cols)
    return mat_rank(M_TR, modulus) == t - 1


def validate_scheme(
    circ: LinearCircuit, budget: int = DEFAULT_BUDGET, rng_seed: int = 0
) -> SchemeReport:
    """Sweep coalitions: every size-t subset T needs rank(M_T) = t and
    rank(M_{T,R}) = t-1; every size-(t-1) subset needs rank(M_{T,R}) = t-1."""
    M = transfer_matrix(circ)
    t = circ.threshold
    n = M.rows
    total = comb(n, t) + comb(n, t - 1)
    exhaustive = total <= budget
    rng = random.Random(rng_seed)
    recover_checks = privacy_checks = 0
    outputs = list(range(n))
    for size in (t, t - 1):
        if exhaustive:
            subsets = combinations(outputs, size)
        else:
            per_class = max(1, budget // 2)
            subsets = (
                tuple(sorted(rng.sample(outputs, size))) for _ in range(per_class)
            )
        for T in subsets:
            if size == t:
                recover_checks += 1
            else:
                privacy_checks += 1
            if not _rank_conditions_hold(M, T, t, circ.modulus):
                return SchemeReport(
                    recover_checks,
                    privacy_checks,
                    "exhaustive" if exhaustive else "sampled",
                    "refuted",
                    witness=tuple(T),
                )
    return SchemeReport(
        recover_checks,
        privacy_checks,
        "exhaustive" if exhaustive else "sampled",
        "proved" if exhaustive else "sampled_pass",
    )


def share(circ: LinearCircuit, s: int, rng_seed: int = 0) -> ShareVector:
    """y = M (s, r_1, ..., r_{ell-1})^T with fresh uniform randomness."""
    p = circ.modulus.p
    rng = random.Random(rng_seed)
    ell = len(circ.net.inputs)
    x = [s % p] + [rng.randrange(p) for _ in range(ell - 1)]
    M = transfer_matrix(circ)
    return ShareVector(tuple(mat_vec(M, x, circ.modulus)), circ.modulus)


def reconstruct(circ: LinearCircuit, T, y_T) -> int:
    """Recover the secret from the t shares held by coalition T: the first
    coordinate of M_T^{-1} y_T."""
    t = circ.threshold
    T = sorted(T)
    if len(T) != t or len(y_T) != t:
        raise InvalidArguments(f"need exactly t = {t} shares")
    M = transfer_matrix(circ)
    M_T = submatrix(M, T, list(range(M.cols)))
    if M_T.rows != M_T.cols:
        raise InvalidArguments("reconstruction requires ell = t inputs")
    try:
        inv = mat_inverse(M_T, circ.modulus)
    except SingularMatrix as exc:
        raise SingularSubmatrix(
            f"M_T singular for coalition {T}; circuit not validated?"
        ) from exc
    return mat_vec(inv, list(y_T), circ.modulus)[0]


def failure_bound(depth: int, n: int, t: int, modulus: FieldModulus) -> float:
    """Union bound on the probability that a random coefficient draw fails
    either rank condition: d * (C(n,t) + C(n,t-1)) / p, capped at 1."""
    bound = Fraction(depth * (comb(n, t) + comb(n, t - 1)), modulus.p)
    return float(min(bound, Fraction(1)))


def circuit_to_dict(circ: LinearCircuit) -> dict:
    doc = network_to_dict(circ.net)
    order = sorted(range(len(circ.net.edges)), key=lambda i: circ.net.edges[i])
    doc["modulus"] = circ.modulus.p
    doc["threshold"] = circ.threshold
    doc["secret_input"] = circ.secret_input
    doc["coefficients"] = [circ.coefficients[i] for i in order]
    return doc


def circuit_from_dict(doc: dict) -> LinearCircuit:
    net = network_from_dict(doc)
    net = _sorted_net(net)
    return LinearCircuit(
        net,
        FieldModulus(doc["modulus"]),
        tuple(doc["coefficients"]),
        doc["threshold"],
        doc.get("secret_input", 0),
    )


def write_circuit(circ: LinearCircuit, path) -> None:
    with open(path, "w") as fh:
        json.dump(circuit_to_dict(circ), fh)
        fh.write("\n")


def read_circuit(path) -> LinearCircuit:
    with open(path) as fh:
        return circuit_from_dict(json.load(fh))


def write_shares(shares: ShareVector, path, indices=None) -> None:
    idx = list(indices) if indices is not None else list(range(len(shares.values)))
    doc = {
        "modulus": shares.modulus.p,
        "shares": [[i, shares.values[j]] for j, i in enumerate(idx)],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def read_shares(path) -> tuple:
    """Returns (modulus, list of (index, value))."""
    with open(path) as fh:
        doc = json.load(fh)
    return FieldModulus(doc["modulus"]), [(int(i), int(v)) for i, v in doc["shares"]]
