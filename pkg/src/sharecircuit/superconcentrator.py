"""Unbalanced superconcentrator builders: depth-2 partial, depth-2 full,
linear-size depth-2/3 for wide aspect ratios, the general depth-(d+1)
recursion, and the depth recommendation from the inverse Ackermann value.

Naming convention: the first size argument of a builder is always the
input (threshold) side of the produced network.
"""

import math

from .ackermann import alpha, lam
from .concentrator import ConcentratorParams, build_depth1
from .errors import InvalidArguments, PreconditionViolation
from .network import (
    DEFAULT_BUDGET,
    Network,
    complete_bipartite,
    parallel_union,
    reverse,
    serial_compose,
)


def _child_seed(seed: int, index: int) -> int:
    # Deterministic per-child stream so parallel construction reproduces.
    return (seed * 1_000_003 + index + 1) & 0xFFFFFFFF


def _bipartite_block(n_in: int, n_out: int, mid: int) -> Network:
    """n_in inputs -> complete -> mid middle vertices -> complete -> n_out
    outputs; routes any k <= mid equal-size subset pair disjointly."""
    return serial_compose(complete_bipartite(n_in, mid), complete_bipartite(mid, n_out))


def build_partial_sc_depth2(
    n: int, m: int, r: float, rng_seed: int = 0, budget: int = DEFAULT_BUDGET
) -> Network:
    """Depth-2 (floor(n/r), ceil((2/3)(n/r)))-partial superconcentrator with
    n inputs and m outputs: a concentrator into a 4n/(3r)-vertex middle
    layer, then a reversed concentrator out of it."""
    if n / r < 3:
        raise InvalidArguments(f"need n/r >= 3, got n={n}, r={r}")
    k = math.floor(n / r)
    mid = math.ceil(4 * n / (3 * r))
    top, _ = build_depth1(
        ConcentratorParams(m=n, n=mid, k=k, rng_seed=_child_seed(rng_seed, 0), budget=budget)
    )
    bottom, _ = build_depth1(
        ConcentratorParams(m=m, n=mid, k=k, rng_seed=_child_seed(rng_seed, 1), budget=budget)
    )
    return serial_compose(top, reverse(bottom))


def partial_sc_guarantee(n: int, r: float) -> tuple:
    """(p, q) sizes guaranteed by build_partial_sc_depth2(n, m, r)."""
    return math.floor(n / r), math.ceil((2 / 3) * (n / r))


def build_sc_depth2(
    n: int, m: int, rng_seed: int = 0, budget: int = DEFAULT_BUDGET
) -> Network:
    """Depth-2 (n, m)-superconcentrator as a union of partial
    superconcentrators for r = 1, 1.5, 1.5^2, ... plus a complete bipartite
    tail block covering the smallest subset sizes."""
    if not 1 <= n <= m:
        raise InvalidArguments(f"need 1 <= n <= m, got n={n}, m={m}")
    if n <= 4:
        return complete_bipartite(n, m)
    parts = []
    q_last = n
    j = 0
    while math.floor(n / 1.5**j) >= 3:
        r = 1.5**j
        parts.append(build_partial_sc_depth2(n, m, r, _child_seed(rng_seed, j), budget))
        _, q_last = partial_sc_guarantee(n, r)
        j += 1
    # Each chaining step between consecutive partials can lose one unit to
    # rounding, so the tail absorbs q_last plus one per partial.
    tail_mid = min(n, q_last + len(parts))
    parts.append(_bipartite_block(n, m, tail_mid))
    return parallel_union(parts, n, m)


def build_sc_depth2_linear(
    m: int, n: int, epsilon: float, rng_seed: int = 0, budget: int = DEFAULT_BUDGET
) -> Network:
    """Linear-size depth-2 (n, m)-superconcentrator for m >= n^(2+epsilon):
    complete bipartite top into m/r middle vertices, reversed
    (m, m/r, n)-concentrator bottom, r = (m/n)^(1/(1+epsilon))."""
    if epsilon <= 0:
        raise InvalidArguments("epsilon must be positive")
    if m < n ** (2 + epsilon):
        raise PreconditionViolation(f"need m >= n^(2+eps): m={m}, n={n}, eps={epsilon}")
    r = (m / n) ** (1 / (1 + epsilon))
    mid = math.ceil(m / r)
    top = complete_bipartite(n, mid)
    bottom, _ = build_depth1(
        ConcentratorParams(m=m, n=mid, k=n, rng_seed=_child_seed(rng_seed, 0), budget=budget)
    )
    return serial_compose(top, reverse(bottom))


def build_sc_depth3_linear(
    m: int, n: int, epsilon: float, rng_seed: int = 0, budget: int = DEFAULT_BUDGET
) -> Network:
    """Linear-size depth-<=3 (n, m)-superconcentrator for
    m >= n * (log2 n)^(2+epsilon)."""
    if epsilon <= 0:
        raise InvalidArguments("epsilon must be positive")
    if n < 2 or m < n * math.log2(n) ** (2 + epsilon):
        raise PreconditionViolation(
            f"need n >= 2 and m >= n*(log2 n)^(2+eps): m={m}, n={n}, eps={epsilon}"
        )
    if m >= n**3:
        return build_sc_depth2_linear(m, n, 1.0, rng_seed, budget)
    r = (m / n) ** (1 / (1 + epsilon / 2))
    mid = math.ceil(m / r)
    top = build_sc_depth2(n, mid, _child_seed(rng_seed, 0), budget)
    bottom, _ = build_depth1(
        ConcentratorParams(m=m, n=mid, k=n, rng_seed=_child_seed(rng_seed, 1), budget=budget)
    )
    return serial_compose(top, reverse(bottom))


def _inner_sc(n: int, mid: int, depth_budget: int, rng_seed: int, budget: int) -> Network:
    """Best applicable (n, mid)-superconcentrator of depth <= depth_budget."""
    if n <= 4:
        return complete_bipartite(n, mid)
    if mid >= n**2.5:
        return build_sc_depth2_linear(mid, n, 0.5, rng_seed, budget)
    if depth_budget >= 3 and mid >= n * math.log2(n) ** 2.5:
        return build_sc_depth3_linear(mid, n, 0.5, rng_seed, budget)
    if depth_budget >= 4 and mid >= n * lam(depth_budget - 1, n) ** 1.5:
        return build_sc_general(mid, n, depth_budget - 1, 0.5, rng_seed, budget)
    return build_sc_depth2(n, mid, rng_seed, budget)


def build_sc_general(
    m: int,
    n: int,
    d: int,
    epsilon: float,
    rng_seed: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> Network:
    """Depth-(d+1) (n, m)-superconcentrator for m >= n * lambda_d(n)^(1+eps):
    an inner depth-<=d superconcentrator into m/r middle vertices, then a
    reversed (m, m/r, n)-concentrator."""
    if d < 3:
        raise InvalidArguments("recursion requires d >= 3")
    if epsilon <= 0:
        raise InvalidArguments("epsilon must be positive")
    if m < n * lam(d, n) ** (1 + epsilon):
        raise PreconditionViolation(
            f"need m >= n*lambda_d(n)^(1+eps): m={m}, n={n}, d={d}, eps={epsilon}"
        )
    r = (m / n) ** (1 / (1 + epsilon))
    mid = math.ceil(m / r)
    top = _inner_sc(n, mid, d, _child_seed(rng_seed, 0), budget)
    bottom, _ = build_depth1(
        ConcentratorParams(m=m, n=mid, k=n, rng_seed=_child_seed(rng_seed, 1), budget=budget)
    )
    return serial_compose(top, reverse(bottom))


def recommended_depth(m: int, n: int) -> int:
    """Depth at which the linear-size construction applies: alpha(m, n) + 3."""
    if m < n or n < 1:
        raise InvalidArguments(f"need m >= n >= 1, got m={m}, n={n}")
    return alpha(m, n) + 3
