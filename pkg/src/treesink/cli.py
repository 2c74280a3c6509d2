"""Command-line front end.

Exit codes: 0 ok, 1 unreadable or malformed file, 2 invalid instance,
3 infeasible threshold, 4 validation mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from .feasibility import SOLVERS, Configuration
from .fileformat import ParseError, dumps, parse
from .optimizer import SearchStats, partition_fixed_sinks, solve_parametric_fast, solve_parametric_iterative
from .oracles import Oracle, make_oracle
from .tree import Instance, TreeError, build
from .validation import DEFAULT_CAP, TooLarge, brute_force_optimal

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_MISMATCH = 0, 1, 2, 3, 4

OPTIMIZERS = {"iterative": solve_parametric_iterative, "fast": solve_parametric_fast}
SHAPES = ("random", "path", "star", "caterpillar")


class CliError(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def load(path: str, k: int | None = None) -> Instance:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {e.strerror}") from None
    try:
        doc = parse(text)
    except ParseError as e:
        raise CliError(EXIT_PARSE, f"{path}: {e}") from None
    try:
        return doc.instance(k)
    except TreeError as e:
        raise CliError(EXIT_INVALID, f"{path}: invalid instance: {e}") from None


def report(out, *, algorithm: str, oracle: Oracle, cost, blocks, calls: dict[str, int],
           started: float, as_json: bool) -> None:
    """Key/value report followed by a one-line summary."""
    sinks = sorted(s for _, s in blocks)
    doc = {
        "algorithm": algorithm,
        "oracle": oracle.tag,
        "cost": cost,
        "sinks": sinks,
        "blocks": [[s, sorted(b)] for b, s in sorted(blocks, key=lambda bs: bs[1])],
        "oracle_calls": sum(calls.values()),
        **{f"oracle_calls_{k}": v for k, v in calls.items()},
        "wall_time_ms": round((time.perf_counter() - started) * 1000, 3),
    }
    if as_json:
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return
    for key, val in doc.items():
        if key == "blocks":
            for s, b in val:
                out.write(f"block {s}: {' '.join(map(str, b))}\n")
        elif key == "sinks":
            out.write(f"sinks: {' '.join(map(str, val))}\n")
        else:
            out.write(f"{key}: {val}\n")
    out.write(f"# cost {cost} with {len(sinks)} sink(s) at {', '.join(map(str, sinks))}\n")


def verify_blocks(inst: Instance, oracle: Oracle, cost, blocks) -> None:
    bad = [s for b, s in blocks if oracle.fn(inst, set(b), s) > cost]
    if bad:
        raise CliError(EXIT_MISMATCH, f"blocks of sinks {bad} exceed the reported cost {cost}")


def _calls(oracle: Oracle, stats: SearchStats) -> dict[str, int]:
    return {"pc": oracle.by_phase.get("pc", 0), "rc": oracle.by_phase.get("rc", 0),
            "probes": stats.probe_calls, "verify": stats.verify_calls}


def cmd_solve(args, out) -> int:
    started = time.perf_counter()
    inst = load(args.file, args.k)
    oracle = make_oracle(inst, args.oracle)
    stats = SearchStats()
    cost, conf = OPTIMIZERS[args.algo](inst, oracle, inst.k, stats)
    verify_blocks(inst, oracle, cost, conf.blocks)
    report(out, algorithm=args.algo, oracle=oracle, cost=cost, blocks=conf.blocks,
           calls=_calls(oracle, stats), started=started, as_json=args.json)
    return EXIT_OK


def cmd_check(args, out) -> int:
    started = time.perf_counter()
    inst = load(args.file, args.k)
    oracle = make_oracle(inst, args.oracle)
    conf = SOLVERS[args.algo][1](inst, oracle, args.threshold, inst.k)
    if conf is None:
        out.write(f"infeasible: no placement of at most {inst.k} sink(s) within {args.threshold}\n")
        return EXIT_INFEASIBLE
    verify_blocks(inst, oracle, args.threshold, conf.blocks)
    out.write("feasible\n")
    cost = max(oracle.fn(inst, set(b), s) for b, s in conf.blocks)
    report(out, algorithm=args.algo, oracle=oracle, cost=cost, blocks=conf.blocks,
           calls={"pc": oracle.by_phase.get("pc", 0), "rc": oracle.by_phase.get("rc", 0)},
           started=started, as_json=args.json)
    return EXIT_OK


def _sink_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sink list {text!r}") from None


def cmd_partition(args, out) -> int:
    started = time.perf_counter()
    inst = load(args.file)
    if not args.sinks or any(not 0 <= s < inst.n for s in args.sinks):
        raise CliError(EXIT_INVALID, f"sinks must be a non-empty list of vertices 0..{inst.n - 1}")
    oracle = make_oracle(inst, args.oracle)
    stats = SearchStats()
    cost, blocks = partition_fixed_sinks(inst, oracle, args.sinks, stats)
    verify_blocks(inst, oracle, cost, blocks)
    report(out, algorithm="fixed", oracle=oracle, cost=cost, blocks=blocks,
           calls={"search": stats.replay_calls, "probes": stats.probe_calls,
                  "verify": stats.verify_calls},
           started=started, as_json=args.json)
    return EXIT_OK


def validate(inst: Instance, tag: str, seed: int = 0, samples: int = 8,
             cap: int = DEFAULT_CAP) -> list[str]:
    """Disagreements between the solvers (and brute force when small enough)."""
    problems = []
    fn = make_oracle(inst, tag).fn
    f = lambda U, v: fn(inst, U, v)  # noqa: E731
    found = {}
    for name, solve in OPTIMIZERS.items():
        cost, conf = solve(inst, make_oracle(inst, tag), inst.k)
        found[name] = cost
        problems += [f"{name}: {e}" for e in conf.check(inst, fn, cost, inst.k)]
    try:
        found["brute"] = brute_force_optimal(inst, f, inst.k, cap)[0]
    except TooLarge:
        print(f"warning: n={inst.n} exceeds the brute-force cap {cap}; solver-only self-check",
              file=sys.stderr)
    if len(set(found.values())) != 1:
        problems.append("optimal costs differ: " + ", ".join(f"{k}={v}" for k, v in found.items()))
    rng = random.Random(seed)
    top = int(fn(inst, set(range(inst.n)), 0))
    for _ in range(samples):
        t = rng.randint(0, top)
        verdicts = {name: SOLVERS[name][1](inst, make_oracle(inst, tag), t, inst.k) is not None
                    for name in SOLVERS}
        if "brute" in found:
            verdicts["brute"] = found["brute"] <= t
        if len(set(verdicts.values())) != 1:
            problems.append(f"verdicts differ at {t}: {verdicts}")
    return problems


def cmd_validate(args, out) -> int:
    inst = load(args.file, args.k)
    problems = validate(inst, args.oracle, args.seed)
    for p in problems:
        out.write(f"mismatch: {p}\n")
    if problems:
        return EXIT_MISMATCH
    out.write("ok: solvers agree\n")
    return EXIT_OK


def generate(n: int, seed: int = 0, max_tau: int = 1, max_cap: int = 1, max_w: int = 1,
             shape: str = "random", k: int = 1) -> Instance:
    """Deterministic instance; travel times, capacities and weights are drawn from 1..max."""
    if n < 1:
        raise TreeError("n must be positive")
    if min(max_tau, max_cap, max_w) < 1:
        raise TreeError("maxima must be at least 1")
    rng = random.Random(seed)
    if shape == "path":
        parent = [i - 1 for i in range(n)]
    elif shape == "star":
        parent = [0] * n
    elif shape == "caterpillar":
        spine = (n + 1) // 2
        parent = [i - 1 for i in range(spine)] + [i - spine for i in range(spine, n)]
    elif shape == "random":
        parent = [rng.randrange(i) if i else 0 for i in range(n)]
    else:
        raise TreeError(f"unknown shape {shape!r}")
    edges = [(parent[i], i, rng.randint(1, max_tau), rng.randint(1, max_cap)) for i in range(1, n)]
    weights = [rng.randint(1, max_w) for _ in range(n)]
    return build(n, edges, weights, k)


def cmd_gen(args, out) -> int:
    inst = generate(args.n, args.seed, args.max_tau, args.max_cap, args.max_w, args.shape, args.k)
    out.write(dumps(inst))
    return EXIT_OK


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treesink", description="Minmax k-sink location on trees.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, k=True, algo=True):
        sp.add_argument("file")
        if k:
            sp.add_argument("--k", type=int, default=None, help="sink budget (default: from file)")
        sp.add_argument("--oracle", choices=("evac", "kcenter"), default="evac")
        if algo:
            sp.add_argument("--algo", choices=tuple(OPTIMIZERS), default="iterative")
        sp.add_argument("--json", action="store_true", help="emit one JSON document")

    common(sp := sub.add_parser("solve", help="minimize the worst block cost"))
    sp.set_defaults(run=cmd_solve)
    common(sp := sub.add_parser("check", help="decide feasibility at a threshold"))
    sp.add_argument("--threshold", type=int, required=True)
    sp.set_defaults(run=cmd_check)
    common(sp := sub.add_parser("partition", help="best partition for given sinks"), k=False, algo=False)
    sp.add_argument("--sinks", type=_sink_list, required=True, help="e.g. 0,3")
    sp.set_defaults(run=cmd_partition)
    sp = sub.add_parser("validate", help="cross-check solvers against brute force")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--oracle", choices=("evac", "kcenter"), default="evac")
    sp.set_defaults(run=cmd_validate)
    sp = sub.add_parser("gen", help="write a random instance to stdout")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-tau", type=int, default=1)
    sp.add_argument("--max-cap", type=int, default=1)
    sp.add_argument("--max-w", type=int, default=1)
    sp.add_argument("--shape", choices=SHAPES, default="random")
    sp.set_defaults(run=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = parser().parse_args(argv)
    except SystemExit as e:
        # usage errors share the malformed-input code; --help stays 0
        return EXIT_PARSE if e.code else EXIT_OK
    try:
        return args.run(args, out)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except TreeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
