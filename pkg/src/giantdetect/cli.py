"""Command line interface.

    giantdetect detect GENFILE (--k K | --epsilon EPS) [--strategy S] [--seed N]
    giantdetect sample --degree N --count C [--alternating] [--seed N]
    giantdetect ktable --degrees 10 1e4 --epsilons 0.1 0.01 [--trials T]
    giantdetect proportion --degree N --predicate P [--trials T]
    giantdetect generators FAMILY DEGREE

``detect`` exits 0 when a giant is proven, 1 when not, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import groups
from .altsym import Strategy, detect
from .cycletype import format_cycle_type
from .experiment import PREDICATES, estimate_k, proportion, reference_k
from .perm import PermutationError, format_permutation, read_generator_file
from .sampler import RandomSource, random_type_of_class

EXIT_PROVEN, EXIT_NOT_PROVEN, EXIT_USAGE = 0, 1, 2

KTABLE_COLUMNS = ("degree", "epsilon", "strategy", "cls", "k", "trials", "failures",
                  "failure_rate", "ci_high")
PROPORTION_COLUMNS = ("degree", "predicate", "trials", "hits", "estimate", "ci_low", "ci_high")


def _degree(text: str) -> int:
    """Accept ``1000000``, ``10^6`` or ``1e6``."""
    try:
        if "^" in text:
            base, exp = text.split("^")
            value = int(base) ** int(exp)
        elif "e" in text.lower():
            value = int(float(text))
            if value != float(text):
                raise ValueError
        else:
            value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer degree: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"degree must be positive, got {value}")
    return value


def _epsilon(text: str) -> float:
    try:
        eps = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0 < eps < 1:
        raise argparse.ArgumentTypeError(f"epsilon must lie in (0, 1), got {eps}")
    return eps


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _rows(rows: list[dict], columns, fmt: str) -> str:
    if fmt == "json":
        return "\n".join(json.dumps({c: r[c] for c in columns}) for r in rows)
    lines = ["\t".join(columns)]
    lines += ["\t".join("" if r[c] is None else str(r[c]) for c in columns) for r in rows]
    return "\n".join(lines)


def cmd_detect(args) -> int:
    try:
        gens = read_generator_file(args.genfile)
    except (OSError, PermutationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.k is not None:
        k, how = args.k, "given"
    else:
        k, how = reference_k(gens.degree, args.epsilon)
    if args.verbose:
        print(f"# k={k} ({how}; epsilon->k is a heuristic)", file=sys.stderr)
    verdict = detect(gens, k, RandomSource(args.seed), args.strategy)
    record = verdict.to_dict()
    record["k"] = k
    if args.format == "json":
        print(json.dumps(record))
    else:
        print(f"giant_proven: {str(verdict.giant_proven).lower()}")
        print(f"strategy: {verdict.strategy}")
        print(f"degree: {verdict.degree}")
        print(f"k: {k}")
        print(f"transitive: {str(verdict.transitive).lower()}")
        print(f"certificate: {verdict.jordan or 'none'}")
        print(f"remaining_r: {' '.join(map(str, verdict.remaining_r)) or 'none'}")
        print(f"elements_examined: {verdict.elements_examined}")
        print(f"elements_skipped: {verdict.elements_skipped}")
    return EXIT_PROVEN if verdict.giant_proven else EXIT_NOT_PROVEN


def cmd_sample(args) -> int:
    rng = RandomSource(args.seed)
    cls = "alt" if args.alternating else "sym"
    if args.alternating and args.degree < 2:
        cls = "sym"
    out = sys.stdout
    for _ in range(args.count):
        out.write(format_cycle_type(random_type_of_class(args.degree, cls, rng)) + "\n")
    return 0


def cmd_ktable(args) -> int:
    rows = []
    for n in args.degrees:
        for eps in args.epsilons:
            est = estimate_k(n, eps, args.strategy, args.trials, args.cls,
                             RandomSource(args.seed), workers=args.workers)
            rows.append(est.to_dict())
    print(_rows(rows, KTABLE_COLUMNS, args.format))
    return 0


def cmd_proportion(args) -> int:
    try:
        rep = proportion(args.degree, args.predicate, args.trials, RandomSource(args.seed),
                         workers=args.workers)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(_rows([rep.to_dict()], PROPORTION_COLUMNS, args.format))
    return 0


def cmd_generators(args) -> int:
    g = groups.FAMILIES[args.family](args.degree)
    print(f"degree {g.degree}")
    for x in g:
        print(format_permutation(x))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="giantdetect",
        description="One-sided Monte Carlo detection of giant permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    strategies = [s.value for s in Strategy]

    p = sub.add_parser("detect", help="test whether generators give A_n or S_n")
    p.add_argument("genfile")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=_nonneg, help="number of random elements")
    group.add_argument("--epsilon", type=_epsilon,
                       help="error bound, mapped to k through the reference k table (heuristic)")
    p.add_argument("--strategy", choices=strategies, default="altsym")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("sample", help="print random cycle types")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--count", type=_nonneg, default=1)
    p.add_argument("--alternating", action="store_true", help="sample from A_n")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("ktable", help="estimate k(N, epsilon)")
    p.add_argument("--degrees", type=_degree, nargs="+", required=True)
    p.add_argument("--epsilons", type=_epsilon, nargs="+", required=True)
    p.add_argument("--trials", type=int, default=20000)
    p.add_argument("--strategy", choices=strategies, default="altsym")
    p.add_argument("--class", dest="cls", choices=("sym", "alt"), default="sym")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_ktable)

    p = sub.add_parser("proportion", help="estimate a cycle-type proportion in S_n")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--predicate", choices=PREDICATES, required=True)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_proportion)

    p = sub.add_parser("generators", help="write a generator file for a standard group")
    p.add_argument("family", choices=sorted(groups.FAMILIES))
    p.add_argument("degree", type=_degree)
    p.set_defaults(func=cmd_generators)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
