"""Directed-acyclic (m,n)-network model: validation, vertex-disjoint path
computation via unit-capacity max-flow, connectivity verification sweeps,
and the composition operators used by the graph builders."""

import json
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from ._kernels import maxflow_unit
from .errors import (
    ArityMismatch,
    CyclicGraph,
    DanglingInputOutput,
    DuplicateTerminal,
    TerminalNotInNetwork,
)

DEFAULT_BUDGET = 200_000


@dataclass
class Network:
    """DAG with designated ordered input and output vertices.

    Multi-edges are allowed (parallel composition can create them);
    vertex-disjointness is unaffected since vertex capacities bind.
    """

    vertex_count: int
    edges: tuple
    inputs: tuple
    outputs: tuple
    _depth: int | None = field(default=None, repr=False, compare=False)

    def __init__(self, vertex_count, edges, inputs, outputs):
        self.vertex_count = int(vertex_count)
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        self.inputs = tuple(int(v) for v in inputs)
        self.outputs = tuple(int(v) for v in outputs)
        self._depth = None

    @property
    def depth(self) -> int:
        """Longest input-to-output path length in edges (cached)."""
        if self._depth is None:
            order = topological_order(self)
            dist = [-1] * self.vertex_count
            for v in self.inputs:
                dist[v] = 0
            succ = [[] for _ in range(self.vertex_count)]
            for u, v in self.edges:
                succ[u].append(v)
            for u in order:
                if dist[u] < 0:
                    continue
                for v in succ[u]:
                    if dist[v] < dist[u] + 1:
                        dist[v] = dist[u] + 1
            self._depth = max((dist[v] for v in self.outputs if dist[v] >= 0), default=0)
        return self._depth


@dataclass
class VerificationReport:
    """Outcome of a connectivity sweep.

    verdict is "proved" only when the sweep was exhaustive over the
    property's quantifier; sampled sweeps report "sampled_pass".
    """

    property: str
    verdict: str
    subsets_checked: int
    witness: tuple | None = None
    sample_seed: int | None = None

    @property
    def ok(self) -> bool:
        return self.verdict in ("proved", "sampled_pass")


def topological_order(net: Network) -> list:
    indeg = [0] * net.vertex_count
    succ = [[] for _ in range(net.vertex_count)]
    for u, v in net.edges:
        succ[u].append(v)
        indeg[v] += 1
    queue = deque(v for v in range(net.vertex_count) if indeg[v] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    if len(order) != net.vertex_count:
        raise CyclicGraph("graph contains a directed cycle")
    return order


def validate(net: Network) -> None:
    """Check all Network invariants; raises on the first violation."""
    for u, v in net.edges:
        if not (0 <= u < net.vertex_count and 0 <= v < net.vertex_count):
            raise TerminalNotInNetwork(f"edge ({u}, {v}) out of range")
    for name, seq in (("input", net.inputs), ("output", net.outputs)):
        seen = set()
        for v in seq:
            if not 0 <= v < net.vertex_count:
                raise TerminalNotInNetwork(f"{name} vertex {v} out of range")
            if v in seen:
                raise DuplicateTerminal(f"{name} vertex {v} listed twice")
            seen.add(v)
    if set(net.inputs) & set(net.outputs):
        raise DuplicateTerminal("inputs and outputs must be disjoint")
    indeg = [0] * net.vertex_count
    for _, v in net.edges:
        indeg[v] += 1
    for v in net.inputs:
        if indeg[v] != 0:
            raise DanglingInputOutput(f"input vertex {v} has incoming edges")
    topological_order(net)  # raises CyclicGraph


def max_vertex_disjoint_paths(net: Network, S, T) -> int:
    """Maximum number of vertex-disjoint paths from S (inputs) to T (outputs).

    Every vertex is split into an (in, out) pair joined by a capacity-1
    arc, so the flow value equals the minimum vertex cut by Menger.
    """
    S = tuple(S)
    T = tuple(T)
    in_set = set(net.inputs)
    out_set = set(net.outputs)
    for v in S:
        if v not in in_set:
            raise TerminalNotInNetwork(f"{v} is not an input vertex")
    for v in T:
        if v not in out_set:
            raise TerminalNotInNetwork(f"{v} is not an output vertex")
    if not S or not T:
        return 0
    V = net.vertex_count
    source, sink = 2 * V, 2 * V + 1
    tails = []
    heads = []
    for v in range(V):
        tails.append(v)
        heads.append(v + V)
    for u, v in net.edges:
        tails.append(u + V)
        heads.append(v)
    for v in S:
        tails.append(source)
        heads.append(v)
    for v in T:
        tails.append(v + V)
        heads.append(sink)
    return maxflow_unit(2 * V + 2, tails, heads, source, sink)


def _sample_subsets(rng, universe, size, count):
    """Distinct uniformly-sampled `size`-subsets, at most `count` of them."""
    total = comb(len(universe), size)
    if total <= count:
        return [tuple(c) for c in combinations(sorted(universe), size)]
    seen = set()
    attempts = 0
    while len(seen) < count and attempts < 20 * count:
        seen.add(tuple(sorted(rng.sample(universe, size))))
        attempts += 1
    return sorted(seen)


def verify_concentrator(
    net: Network, c: int, budget: int = DEFAULT_BUDGET, rng_seed: int = 0
) -> VerificationReport:
    """Check that every c-subset of inputs has c vertex-disjoint paths to
    the outputs; exhaustive when the subset count fits the budget."""
    validate(net)
    m = len(net.inputs)
    total = comb(m, c)
    exhaustive = total <= budget
    inputs_sorted = sorted(net.inputs)
    if exhaustive:
        subsets = combinations(inputs_sorted, c)
        seed = None
    else:
        rng = random.Random(rng_seed)
        subsets = _sample_subsets(rng, inputs_sorted, c, budget)
        seed = rng_seed
    checked = 0
    for S in subsets:
        checked += 1
        if max_vertex_disjoint_paths(net, S, net.outputs) != c:
            return VerificationReport(
                f"concentrator({c})", "refuted", checked, witness=(tuple(S),), sample_seed=seed
            )
    verdict = "proved" if exhaustive else "sampled_pass"
    return VerificationReport(f"concentrator({c})", verdict, checked, sample_seed=seed)


def verify_superconcentrator(
    net: Network, budget: int = DEFAULT_BUDGET, rng_seed: int = 0
) -> VerificationReport:
    """Check that every equal-size input/output subset pair is joined by
    that many vertex-disjoint paths."""
    validate(net)
    m, n = len(net.inputs), len(net.outputs)
    kmax = min(m, n)
    total = sum(comb(m, k) * comb(n, k) for k in range(1, kmax + 1))
    exhaustive = total <= budget
    inputs_sorted = sorted(net.inputs)
    outputs_sorted = sorted(net.outputs)
    checked = 0
    seed = None if exhaustive else rng_seed
    rng = random.Random(rng_seed)
    for k in range(1, kmax + 1):
        if exhaustive:
            pairs = (
                (X, Y)
                for X in combinations(inputs_sorted, k)
                for Y in combinations(outputs_sorted, k)
            )
        else:
            per_size = max(1, budget // kmax)
            pairs = (
                (tuple(sorted(rng.sample(inputs_sorted, k))),
                 tuple(sorted(rng.sample(outputs_sorted, k))))
                for _ in range(per_size)
            )
        for X, Y in pairs:
            checked += 1
            if max_vertex_disjoint_paths(net, X, Y) != k:
                return VerificationReport(
                    "superconcentrator", "refuted", checked,
                    witness=(tuple(X), tuple(Y)), sample_seed=seed,
                )
    verdict = "proved" if exhaustive else "sampled_pass"
    return VerificationReport("superconcentrator", verdict, checked, sample_seed=seed)


def verify_partial_sc(
    net: Network, p: int, q: int, budget: int = DEFAULT_BUDGET, rng_seed: int = 0
) -> VerificationReport:
    """Check the (p, q)-partial superconcentrator property: equal-size
    subset pairs with size k in [q, p] need at least k - q disjoint paths."""
    validate(net)
    m, n = len(net.inputs), len(net.outputs)
    if not q <= p <= min(m, n):
        raise ArityMismatch(f"need q <= p <= min(inputs, outputs), got p={p}, q={q}")
    sizes = list(range(max(q, 1), p + 1))
    total = sum(comb(m, k) * comb(n, k) for k in sizes)
    exhaustive = total <= budget
    inputs_sorted = sorted(net.inputs)
    outputs_sorted = sorted(net.outputs)
    checked = 0
    seed = None if exhaustive else rng_seed
    rng = random.Random(rng_seed)
    for k in sizes:
        if exhaustive:
            pairs = (
                (X, Y)
                for X in combinations(inputs_sorted, k)
                for Y in combinations(outputs_sorted, k)
            )
        else:
            per_size = max(1, budget // len(sizes))
            pairs = (
                (tuple(sorted(rng.sample(inputs_sorted, k))),
                 tuple(sorted(rng.sample(outputs_sorted, k))))
                for _ in range(per_size)
            )
        for X, Y in pairs:
            checked += 1
            if max_vertex_disjoint_paths(net, X, Y) < k - q:
                return VerificationReport(
                    f"partial_sc({p},{q})", "refuted", checked,
                    witness=(tuple(X), tuple(Y)), sample_seed=seed,
                )
    verdict = "proved" if exhaustive else "sampled_pass"
    return VerificationReport(f"partial_sc({p},{q})", verdict, checked, sample_seed=seed)


def serial_compose(top: Network, bottom: Network) -> Network:
    """Stack two networks, identifying top.outputs[i] with bottom.inputs[i]."""
    if len(top.outputs) != len(bottom.inputs):
        raise ArityMismatch(
            f"{len(top.outputs)} top outputs vs {len(bottom.inputs)} bottom inputs"
        )
    remap = {}
    for i, v in enumerate(bottom.inputs):
        remap[v] = top.outputs[i]
    next_id = top.vertex_count
    for v in range(bottom.vertex_count):
        if v not in remap:
            remap[v] = next_id
            next_id += 1
    edges = list(top.edges) + [(remap[u], remap[v]) for u, v in bottom.edges]
    return Network(
        next_id, edges, top.inputs, tuple(remap[v] for v in bottom.outputs)
    )


def parallel_union(nets, shared_inputs: int, shared_outputs: int) -> Network:
    """Merge networks onto one shared set of input and output vertices.

    Member k's input j is identified with shared input j (vertices
    0..shared_inputs-1), likewise outputs; internal vertices stay disjoint
    and the edge multiset is the union.
    """
    for net in nets:
        if len(net.inputs) > shared_inputs or len(net.outputs) > shared_outputs:
            raise ArityMismatch("member exceeds the shared terminal counts")
    inputs = tuple(range(shared_inputs))
    outputs = tuple(range(shared_inputs, shared_inputs + shared_outputs))
    next_id = shared_inputs + shared_outputs
    edges = []
    for net in nets:
        remap = {}
        for j, v in enumerate(net.inputs):
            remap[v] = inputs[j]
        for j, v in enumerate(net.outputs):
            remap[v] = outputs[j]
        for v in range(net.vertex_count):
            if v not in remap:
                remap[v] = next_id
                next_id += 1
        edges.extend((remap[u], remap[v]) for u, v in net.edges)
    return Network(next_id, edges, inputs, outputs)


def reverse(net: Network) -> Network:
    """Flip every edge and swap the terminal roles (an involution)."""
    return Network(
        net.vertex_count,
        [(v, u) for u, v in net.edges],
        net.outputs,
        net.inputs,
    )


def complete_bipartite(m: int, n: int) -> Network:
    """Depth-1 network with m inputs each connected to all n outputs."""
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    return Network(m + n, edges, tuple(range(m)), tuple(range(m, m + n)))


def network_to_dict(net: Network) -> dict:
    return {
        "vertex_count": net.vertex_count,
        "inputs": list(net.inputs),
        "outputs": list(net.outputs),
        "edges": sorted([list(e) for e in net.edges]),
    }


def network_from_dict(doc: dict) -> Network:
    net = Network(doc["vertex_count"], doc["edges"], doc["inputs"], doc["outputs"])
    validate(net)
    return net


def write_network(net: Network, path) -> None:
    with open(path, "w") as fh:
        json.dump(network_to_dict(net), fh)
        fh.write("\n")


def read_network(path) -> Network:
    with open(path) as fh:
        return network_from_dict(json.load(fh))
