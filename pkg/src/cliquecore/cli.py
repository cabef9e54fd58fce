"""Command-line front end.

Verbs: solve, verify, check-perfect, cliques, generate, corpus.
Exit codes: 0 success / in-core / perfect, 1 input error, 2 size-guard
violation, 3 property failure (violated imputation, imperfect graph,
failed corpus property).  All JSON output is canonical (sorted keys, no
timestamps), so identical configuration and seed give byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import corpus as corpus_mod
from .cliques import maximal_cliques
from .core import (
    Imputation,
    compute_core_imputation,
    game_worth,
    verify_core_certificate,
    verify_core_exhaustive,
)
from .errors import DualGapError, GraphParseError, GuardError
from .generators import from_spec
from .graph import (
    WeightedGraph,
    fraction_str,
    graph_to_json_dict,
    parse_fraction,
    parse_graph,
    serialize_graph,
)
from .lp import (
    build_clique_cover_lp,
    build_stable_set_lp,
    is_integral,
    lp_format,
    solve_dual,
    solve_primal,
)
from .perfection import is_perfect

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GUARD = 2
EXIT_PROPERTY = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None
    generate_spec: str | None
    seed: int | None
    max_n: int | None
    as_json: bool


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for guard violations; bad usage is an input error
    def error(self, message):
        raise _InputError(message)


def _emit_json(payload: dict):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _load_graph(config: RunConfig) -> WeightedGraph:
    if (config.input_path is None) == (config.generate_spec is None):
        raise _InputError("exactly one of --input and --generate is required")
    if config.input_path is not None:
        try:
            text = Path(config.input_path).read_text(encoding="utf-8")
        except OSError as exc:
            raise _InputError(f"cannot read {config.input_path}: {exc}") from exc
        g = parse_graph(text)
    else:
        try:
            g = from_spec(config.generate_spec, seed=config.seed)
        except ValueError as exc:
            raise _InputError(str(exc)) from exc
    if config.max_n is not None and g.n > config.max_n:
        raise GuardError(f"graph has {g.n} vertices, --max-n is {config.max_n}")
    return g


def _config(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        generate_spec=getattr(args, "generate", None),
        seed=getattr(args, "seed", None),
        max_n=getattr(args, "max_n", None),
        as_json=getattr(args, "json", False),
    )


def cmd_solve(args) -> int:
    config = _config(args)
    g = _load_graph(config)
    cliques = maximal_cliques(g)
    worth = game_worth(g)
    primal = solve_primal(g, cliques)
    dual = solve_dual(g, cliques)
    if args.dump_lp:
        fracs = g.weights
        Path(args.dump_lp + ".primal.lp").write_text(
            lp_format(build_stable_set_lp(fracs, cliques.cliques), "stable-set"),
            encoding="utf-8",
        )
        Path(args.dump_lp + ".dual.lp").write_text(
            lp_format(build_clique_cover_lp(fracs, cliques.cliques), "clique-cover"),
            encoding="utf-8",
        )
    dual_matches = dual.value == worth
    if config.as_json:
        _emit_json(
            {
                "worth": fraction_str(worth),
                "primal": {
                    "value": fraction_str(primal.value),
                    "x": [fraction_str(v) for v in primal.x],
                    "integral": is_integral(primal),
                },
                "dual": {
                    "value": fraction_str(dual.value),
                    "y": {
                        cliques.key(cid): fraction_str(v)
                        for cid, v in enumerate(dual.y)
                        if v != 0
                    },
                    "integral": is_integral(dual),
                },
                "dualEqualsWorth": dual_matches,
            }
        )
    else:
        print(f"worth: {fraction_str(worth)}")
        print(f"primal optimum: {fraction_str(primal.value)}"
              f" (integral: {'yes' if is_integral(primal) else 'no'})")
        print(f"dual optimum: {fraction_str(dual.value)}"
              f" (integral: {'yes' if is_integral(dual) else 'no'})")
        for cid, v in enumerate(dual.y):
            if v != 0:
                print(f"  firm {cliques.key(cid)}: {fraction_str(v)}")
    if not dual_matches:
        print(
            f"warning: dual optimum {fraction_str(dual.value)} != worth "
            f"{fraction_str(worth)}; graph is not perfect",
            file=sys.stderr,
        )
    return EXIT_OK


def cmd_verify(args) -> int:
    config = _config(args)
    g = _load_graph(config)
    cliques = maximal_cliques(g)
    try:
        raw = json.loads(Path(args.imputation).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise _InputError(f"cannot read imputation file: {exc}") from exc
    if not isinstance(raw, dict):
        raise _InputError("imputation file must be a JSON object")
    mapping = {}
    for key, value in raw.items():
        try:
            amount = parse_fraction(value) if isinstance(value, str) else parse_fraction(str(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise _InputError(f"bad amount {value!r} for clique {key!r}") from exc
        mapping[key] = amount
    try:
        imputation = Imputation.from_mapping(cliques, mapping)
    except (KeyError, ValueError) as exc:
        raise _InputError(str(exc)) from exc
    if args.exhaustive:
        report = verify_core_exhaustive(g, cliques, imputation)
    else:
        report = verify_core_certificate(g, cliques, imputation)
    if config.as_json:
        _emit_json(report.to_json_dict())
    else:
        print(f"verdict: {report.verdict}")
        print(f"total: {fraction_str(report.total_money)}  worth: {fraction_str(report.game_worth)}")
        if report.violation is not None:
            v = report.violation
            print(
                f"violated scenario {list(v.scenario)}: "
                f"money {fraction_str(v.money)} < cost {fraction_str(v.cost)}"
            )
        if report.scenarios_checked:
            print(f"scenarios checked: {report.scenarios_checked}")
    return EXIT_OK if report.in_core else EXIT_PROPERTY


def cmd_check_perfect(args) -> int:
    config = _config(args)
    g = _load_graph(config)
    verdict = is_perfect(g)
    if config.as_json:
        _emit_json(verdict.to_json_dict())
    else:
        if verdict.is_perfect:
            print("perfect")
        else:
            where = "complement" if verdict.hole_in_complement else "graph"
            print(f"not perfect: odd hole {list(verdict.hole)} in {where}")
    return EXIT_OK if verdict.is_perfect else EXIT_PROPERTY


def cmd_cliques(args) -> int:
    config = _config(args)
    g = _load_graph(config)
    cliques = maximal_cliques(g)
    if config.as_json:
        _emit_json({"cliques": cliques.to_json_list()})
    else:
        for q in cliques.cliques:
            print(" ".join(str(v) for v in q))
    return EXIT_OK


def cmd_generate(args) -> int:
    config = _config(args)
    if config.generate_spec is None:
        raise _InputError("generate requires --generate SPEC")
    g = _load_graph(config)
    if config.as_json:
        _emit_json(graph_to_json_dict(g))
    else:
        sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def cmd_corpus(args) -> int:
    config = _config(args)
    if config.seed is None:
        raise _InputError("corpus requires --seed")
    instances = corpus_mod.build_corpus(
        count=args.count,
        seed=config.seed,
        n_min=4,
        n_max=max(4, args.n),
        include_imperfect=args.include_imperfect,
    )
    rng = random.Random(config.seed ^ 0x5EED)
    reports = [corpus_mod.run_instance_suite(inst, rng) for inst in instances]
    summary = corpus_mod.summarize(reports)
    if config.as_json:
        _emit_json(summary)
    else:
        print(f"instances: {summary['instances']}")
        for prop in (
            "coreAgreement",
            "optimalDualInCore",
            "perturbedRejected",
            "dualIntegrality",
            "chainInequalities",
            "chainGapClosed",
        ):
            counts = summary[prop]
            print(f"{prop}: {counts['pass']} pass, {counts['fail']} fail")
        if args.include_imperfect:
            print(
                "imperfect instances with open integrality gap (expected): "
                f"{summary['imperfectChainGapObserved']}"
            )
        print("result: " + ("ok" if summary["allOk"] else "FAILED"))
    return EXIT_OK if summary["allOk"] else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cliquecore",
        description="Exact core imputations for the investment game on perfect graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_graph=True):
        if needs_graph:
            p.add_argument("--input", metavar="PATH", help="graph file to load")
            p.add_argument("--generate", metavar="SPEC", help="generator spec, e.g. paley3x3, cycle:5")
        p.add_argument("--seed", type=int, help="seed for random generators")
        p.add_argument("--json", action="store_true", help="emit canonical JSON")
        p.add_argument("--max-n", type=int, dest="max_n", help="refuse graphs larger than this")

    p = sub.add_parser("solve", help="worth, primal optimum and dual imputation")
    add_common(p)
    p.add_argument("--dump-lp", metavar="PREFIX", help="write both LPs in LP format")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check an imputation file for core membership")
    add_common(p)
    p.add_argument("imputation", metavar="IMPUTATION_JSON", help="JSON {clique-key: amount}")
    p.add_argument("--exhaustive", action="store_true", help="check all 2^n scenarios")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-perfect", help="perfection verdict with witness")
    add_common(p)
    p.set_defaults(func=cmd_check_perfect)

    p = sub.add_parser("cliques", help="list the maximal cliques (the firms)")
    add_common(p)
    p.set_defaults(func=cmd_cliques)

    p = sub.add_parser("generate", help="emit a generated graph file")
    add_common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("corpus", help="run the property suites on a random corpus")
    add_common(p, needs_graph=False)
    p.add_argument("--count", type=int, default=20, help="number of perfect instances")
    p.add_argument("--n", type=int, default=10, help="largest vertex count")
    p.add_argument(
        "--include-imperfect",
        action="store_true",
        help="append odd cycles; their integrality gaps are reported, not errors",
    )
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (GraphParseError, _InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except DualGapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROPERTY


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
