"""Command-line front door: graph builders, circuit synthesizer, and the
connectivity / rank / entropy verifiers, with reproducible seeds.

Exit codes: 0 on success (proved or sampled_pass), 2 on refuted (witness
printed), 1 on usage or I/O errors.
"""

import argparse
import csv
import itertools
import math
import sys

from . import ackermann, circuit, infocheck, network, superconcentrator
from .concentrator import ConcentratorParams, build_depth1
from .errors import ShareCircuitError
from .field import DEFAULT_PRIME, FieldModulus
from .network import DEFAULT_BUDGET

DEFAULT_SEED = 1


def _print_result(verdict, checked, witness=None):
    wit = "none" if witness is None else repr(witness).replace(" ", "")
    print(f"RESULT verdict={verdict} checked={checked} witness={wit}")
    return 0 if verdict in ("proved", "sampled_pass", "ok") else 2


def _cmd_gen_concentrator(args):
    params = ConcentratorParams(
        m=args.m, n=args.n, k=args.k, degree=args.degree,
        rng_seed=args.seed, budget=args.budget,
    )
    net, report = build_depth1(params)
    if args.out:
        network.write_network(net, args.out)
    print(f"edges={len(net.edges)} depth={net.depth}")
    return _print_result(report.verdict, report.subsets_checked, report.witness)


def _pick_sc_builder(n, m, depth, epsilon, seed, budget):
    if n <= 4 or depth <= 2 and m < n ** (2 + epsilon):
        return superconcentrator.build_sc_depth2(n, m, seed, budget)
    if depth <= 2:
        return superconcentrator.build_sc_depth2_linear(m, n, epsilon, seed, budget)
    if depth == 3:
        if m >= n * math.log2(n) ** (2 + epsilon):
            return superconcentrator.build_sc_depth3_linear(m, n, epsilon, seed, budget)
        return superconcentrator.build_sc_depth2(n, m, seed, budget)
    d = depth - 1
    if m >= n * ackermann.lam(d, n) ** (1 + epsilon):
        return superconcentrator.build_sc_general(m, n, d, epsilon, seed, budget)
    return superconcentrator.build_sc_depth2(n, m, seed, budget)


def _cmd_gen_sc(args):
    n, m = args.inputs, args.outputs
    if args.depth == "auto":
        depth = superconcentrator.recommended_depth(m, n)
    else:
        depth = int(args.depth)
    net = _pick_sc_builder(n, m, depth, args.epsilon, args.seed, args.budget)
    network.write_network(net, args.out)
    print(f"target_depth={depth} built_depth={net.depth} edges={len(net.edges)}")
    return _print_result("ok", len(net.edges))


def _cmd_verify_graph(args):
    net = network.read_network(args.file)
    prop = args.property
    if prop == "sc":
        report = network.verify_superconcentrator(net, args.budget, args.seed)
    elif prop.startswith("concentrator:"):
        c = int(prop.split(":", 1)[1])
        report = network.verify_concentrator(net, c, args.budget, args.seed)
    elif prop.startswith("partial:"):
        p, q = (int(x) for x in prop.split(":", 1)[1].split(","))
        report = network.verify_partial_sc(net, p, q, args.budget, args.seed)
    else:
        raise ShareCircuitError(f"unknown property {prop!r}")
    print(f"property={report.property}")
    return _print_result(report.verdict, report.subsets_checked, report.witness)


def _cmd_synth_ss(args):
    net = network.read_network(args.graph)
    circ = circuit.synthesize(net, args.t, FieldModulus(args.modulus), args.seed)
    circuit.write_circuit(circ, args.out)
    print(f"inputs={len(net.inputs)} outputs={len(net.outputs)} "
          f"edges={len(net.edges)} modulus={args.modulus}")
    bound = circuit.failure_bound(
        net.depth, len(net.outputs), args.t, circ.modulus
    )
    print(f"failure_bound={bound:.3e}")
    return _print_result("ok", len(circ.coefficients))


def _cmd_verify_ss(args):
    circ = circuit.read_circuit(args.circuit)
    report = circuit.validate_scheme(circ, args.budget, args.seed)
    print(f"recover_checks={report.recover_checks} "
          f"privacy_checks={report.privacy_checks} mode={report.mode}")
    return _print_result(
        report.verdict, report.recover_checks + report.privacy_checks, report.witness
    )


def _cmd_share(args):
    circ = circuit.read_circuit(args.circuit)
    shares = circuit.share(circ, args.secret, args.seed)
    circuit.write_shares(shares, args.out)
    print(f"shares={len(shares.values)}")
    return _print_result("ok", len(shares.values))


def _cmd_reconstruct(args):
    circ = circuit.read_circuit(args.circuit)
    _, entries = circuit.read_shares(args.shares)
    t = circ.threshold
    if len(entries) < t:
        raise ShareCircuitError(f"need at least t = {t} shares, got {len(entries)}")
    chosen = sorted(entries)[:t]
    T = [i for i, _ in chosen]
    y_T = [v for _, v in chosen]
    secret = circuit.reconstruct(circ, T, y_T)
    print(f"secret={secret}")
    return _print_result("ok", t)


def _cmd_entropy_verify(args):
    circ = circuit.read_circuit(args.circuit)
    t = args.t if args.t is not None else circ.threshold
    dist = infocheck.enumerate_distribution(circ)
    n = dist.variable_count - 1
    h_s = infocheck.entropy(dist, [0])
    print(f"H(S)={h_s:.9f}")
    for size in (t, t - 1):
        for T in itertools.combinations(range(1, n + 1), size):
            h = infocheck.cond_entropy(dist, [0], T) if T else h_s
            print(f"H(S|Y_{{{','.join(map(str, T))}}})={h:.9f}")
    defn = infocheck.verify_threshold_definition(dist, t, args.tol)
    print(f"threshold_definition={defn.verdict}")
    if defn.verdict == "proved":
        bounds = infocheck.verify_entropy_bounds(dist, t, args.tol)
        print(f"entropy_bounds={bounds.verdict}")
        residual = (
            infocheck.han_check(dist, range(1, n + 1), args.tol) if n >= 2 else 0.0
        )
        print(f"han_residual={residual:.9f}")
        if not bounds.ok:
            return _print_result(bounds.verdict, bounds.subsets_checked, bounds.witness)
    return _print_result(defn.verdict, defn.subsets_checked, defn.witness)


def _cmd_lambda(args):
    print(ackermann.lam(args.d, args.n))
    return 0


def _cmd_alpha(args):
    print(ackermann.alpha(args.m, args.n))
    return 0


def _cmd_bench(args):
    sizes = [int(s) for s in args.sizes.split(",")]
    writer = csv.writer(sys.stdout)
    writer.writerow(["builder", "n", "m", "edges", "ratio"])
    for n in sizes:
        if args.builder == "sc-depth2":
            m = n
            net = superconcentrator.build_sc_depth2(n, m, args.seed, args.budget)
            denom = m * math.log2(m) * math.log2(n)
        elif args.builder == "sc-depth2-linear":
            m = math.ceil(n**2.5)
            net = superconcentrator.build_sc_depth2_linear(
                m, n, 0.5, args.seed, args.budget
            )
            denom = m
        else:
            raise ShareCircuitError(f"unknown builder {args.builder!r}")
        writer.writerow([args.builder, n, m, len(net.edges), f"{len(net.edges) / denom:.4f}"])
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sharecircuit",
        description="Threshold secret-sharing circuits from superconcentrator-like graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("gen-concentrator", _cmd_gen_concentrator)
    p.add_argument("--m", type=int, required=True, help="input count")
    p.add_argument("--n", type=int, required=True, help="output count")
    p.add_argument("--k", type=int, required=True, help="capacity")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", default=None)

    p = add("gen-sc", _cmd_gen_sc)
    p.add_argument("--inputs", type=int, required=True)
    p.add_argument("--outputs", type=int, required=True)
    p.add_argument("--depth", default="auto")
    p.add_argument("--epsilon", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", required=True)

    p = add("verify-graph", _cmd_verify_graph)
    p.add_argument("file")
    p.add_argument("--property", required=True,
                   help="sc | concentrator:k | partial:p,q")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = add("synth-ss", _cmd_synth_ss)
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--modulus", type=int, default=DEFAULT_PRIME)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", required=True)

    p = add("verify-ss", _cmd_verify_ss)
    p.add_argument("--circuit", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = add("share", _cmd_share)
    p.add_argument("--circuit", required=True)
    p.add_argument("--secret", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", required=True)

    p = add("reconstruct", _cmd_reconstruct)
    p.add_argument("--circuit", required=True)
    p.add_argument("--shares", required=True)

    p = add("entropy-verify", _cmd_entropy_verify)
    p.add_argument("--circuit", required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("lambda", _cmd_lambda)
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)

    p = add("alpha", _cmd_alpha)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = add("bench", _cmd_bench)
    p.add_argument("--builder", default="sc-depth2",
                   choices=["sc-depth2", "sc-depth2-linear"])
    p.add_argument("--sizes", default="8,16,32,64")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--budget", type=int, default=500)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ShareCircuitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
