"""Exact information-theoretic oracle: enumerate the joint distribution of
(secret, shares) for a small circuit over a small field, compute entropies
in base q, and verify the threshold-scheme entropy conditions."""

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import log

from .circuit import LinearCircuit, evaluate
from .errors import InvalidArguments, StateSpaceTooLarge
from .network import VerificationReport

MAX_STATES = 10**7


@dataclass
class JointDistribution:
    """Exact probability table over tuples (S, Y_1, ..., Y_n); S is
    variable 0. Probabilities are exact rationals; entropies go to float
    only at the final logarithm."""

    variable_count: int
    alphabet: int
    table: dict  # tuple -> Fraction

    def __post_init__(self):
        if sum(self.table.values()) != 1:
            raise InvalidArguments("probabilities must sum to exactly 1")


def enumerate_distribution(circ: LinearCircuit) -> JointDistribution:
    """Exhaust all uniform input assignments (s, r) in GF(q)^ell and
    accumulate the induced joint distribution of (s, y_1, ..., y_n)."""
    q = circ.modulus.p
    ell = len(circ.net.inputs)
    states = q**ell
    if states > MAX_STATES:
        raise StateSpaceTooLarge(f"q^ell = {states} exceeds {MAX_STATES}")
    weight = Fraction(1, states)
    table = defaultdict(Fraction)
    for x in itertools.product(range(q), repeat=ell):
        y = evaluate(circ, list(x))
        table[(x[0], *y)] += weight
    n = len(circ.net.outputs)
    return JointDistribution(n + 1, q, dict(table))


def _marginal(dist: JointDistribution, idx: tuple) -> dict:
    marg = defaultdict(Fraction)
    for tup, prob in dist.table.items():
        marg[tuple(tup[i] for i in idx)] += prob
    return marg


def entropy(dist: JointDistribution, A) -> float:
    """Marginal Shannon entropy of the variables in A, in base-q digits
    (a uniform field element has entropy exactly 1)."""
    idx = tuple(sorted(set(A)))
    if not idx:
        raise InvalidArguments("variable set must be nonempty")
    if any(not 0 <= i < dist.variable_count for i in idx):
        raise InvalidArguments("variable index out of range")
    lq = log(dist.alphabet)
    h = 0.0
    for prob in _marginal(dist, idx).values():
        if prob > 0:
            pf = float(prob)
            h -= pf * log(pf) / lq
    return h


def cond_entropy(dist: JointDistribution, A, B) -> float:
    """H(A | B) = H(A u B) - H(B); empty B gives the plain entropy."""
    A = set(A)
    B = set(B)
    if not A:
        raise InvalidArguments("A must be nonempty")
    if not B:
        return entropy(dist, A)
    return entropy(dist, A | B) - entropy(dist, B)


def verify_threshold_definition(
    dist: JointDistribution, t: int, tol: float = 1e-9
) -> VerificationReport:
    """Exhaustively check H(S | Y_T) = 0 for all |T| = t (correctness) and
    H(S | Y_T) = H(S) for all |T| = t-1 (privacy)."""
    n = dist.variable_count - 1
    if not 1 <= t <= n:
        raise InvalidArguments(f"need 1 <= t <= {n}, got t={t}")
    h_s = entropy(dist, [0])
    checked = 0
    for T in itertools.combinations(range(1, n + 1), t):
        checked += 1
        if abs(cond_entropy(dist, [0], T)) > tol:
            return VerificationReport(
                f"threshold_definition(t={t})", "refuted", checked, witness=(T,)
            )
    for T in itertools.combinations(range(1, n + 1), t - 1):
        checked += 1
        if abs(cond_entropy(dist, [0], T) - h_s) > tol:
            return VerificationReport(
                f"threshold_definition(t={t})", "refuted", checked, witness=(T,)
            )
    return VerificationReport(f"threshold_definition(t={t})", "proved", checked)


def verify_entropy_bounds(
    dist: JointDistribution, t: int, tol: float = 1e-9
) -> VerificationReport:
    """Check the share-entropy lower bounds implied by the threshold
    definition: H(Y_T) >= t H(S) for |T| = t and H(Y_T | S) >= (t-1) H(S)
    for |T| = t-1."""
    n = dist.variable_count - 1
    if not 1 <= t <= n:
        raise InvalidArguments(f"need 1 <= t <= {n}, got t={t}")
    h_s = entropy(dist, [0])
    checked = 0
    for T in itertools.combinations(range(1, n + 1), t):
        checked += 1
        if entropy(dist, T) < t * h_s - tol:
            return VerificationReport(
                f"entropy_bounds(t={t})", "refuted", checked, witness=(T,)
            )
    for T in itertools.combinations(range(1, n + 1), t - 1):
        if not T:
            continue
        checked += 1
        if cond_entropy(dist, T, [0]) < (t - 1) * h_s - tol:
            return VerificationReport(
                f"entropy_bounds(t={t})", "refuted", checked, witness=(T,)
            )
    return VerificationReport(f"entropy_bounds(t={t})", "proved", checked)


def han_check(dist: JointDistribution, variables, tol: float = 1e-9) -> float:
    """Residual of the subadditivity inequality
    sum_j H(Y_{vars minus j}) - (|vars|-1) H(Y_vars); nonnegative for every
    distribution (callers assert >= -tol)."""
    variables = tuple(sorted(set(variables)))
    if len(variables) < 2:
        raise InvalidArguments("need at least two variables")
    full = entropy(dist, variables)
    n = len(variables)
    lhs = sum(
        entropy(dist, [v for v in variables if v != j]) for j in variables
    )
    return lhs - (n - 1) * full
