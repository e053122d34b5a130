"""Command-line surface: sort, complex, flipgraph, theta, bijection, quiver, verify.

JSON output follows {command, params, results, elapsed_ms} with sorted keys;
exit code 0 means every assertion-backed check passed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .coxeter import (
    CoxeterError,
    CoxeterSystem,
    ResourceLimitError,
    Word,
    demazure_product,
    enumerate_coxeter_words,
    format_word,
    longest_element,
    parse_descriptor,
    parse_word,
)
from .experiments import (
    EXPERIMENTS,
    flip_graph_diameter,
    run_maximality_experiment,
)
from .multicluster import (
    multi_cluster_word,
    permutation_order,
    theta_orbits_on_facets,
    theta_order_formula,
    theta_permutation,
    type_a_bijection,
    type_b_bijection,
)
from .quivers import ar_quiver, export_dot, repetition_window
from .sorting import sorting_word_w0
from .subword import (
    f_vector,
    flip_graph,
    flip_graph_dot,
    minimal_nonfaces,
    reduced_euler_characteristic,
    subword_complex,
)


def _emit_json(command: str, params: dict, results, started: float) -> None:
    payload = {
        "command": command,
        "params": params,
        "results": results,
        "elapsed_ms": round((time.perf_counter() - started) * 1000.0, 3),
    }
    print(json.dumps(payload, indent=2, sort_keys=True))


def _system_from(args) -> CoxeterSystem:
    if not args.type:
        raise CoxeterError("--type is required")
    return CoxeterSystem(parse_descriptor(args.type))


def _coxeter_word_from(args, system: CoxeterSystem) -> Word:
    if args.cox:
        return parse_word(args.cox)
    return enumerate_coxeter_words(system)[0]


def _complex_from(args, system: CoxeterSystem):
    if args.word:
        word = parse_word(args.word)
        if args.pi == "w0":
            target = longest_element(system)
        else:
            target = demazure_product(system, word)
    else:
        word = multi_cluster_word(system, _coxeter_word_from(args, system), args.k)
        target = longest_element(system)
    return subword_complex(system, word, target)


# ---------------------------------------------------------------------------
# Subcommands

def _cmd_sort(args) -> int:
    started = time.perf_counter()
    system = _system_from(args)
    cox = _coxeter_word_from(args, system)
    report = sorting_word_w0(system, cox)
    phi = {f"s{s}": count for s, count in sorted(report.phi.items())}
    factorization = [[f"s{s}" for s in block] for block in report.factorization]
    if args.json:
        _emit_json(
            "sort",
            {"type": args.type, "cox": format_word(cox)},
            {"word": format_word(report.word), "phi": phi, "factorization": factorization},
            started,
        )
    else:
        print(f"word: {format_word(report.word)}")
        print(f"phi: {phi}")
        print("factorization: " + " | ".join(",".join(block) for block in factorization))
    return 0


def _cmd_complex(args) -> int:
    started = time.perf_counter()
    system = _system_from(args)
    complex_ = _complex_from(args, system)
    if args.action == "facets":
        results = {
            "word": format_word(complex_.word),
            "facets": [list(facet) for facet in complex_.facets],
            "count": len(complex_.facets),
        }
        if args.json:
            _emit_json("complex facets", _complex_params(args), results, started)
        else:
            print(f"word: {results['word']}")
            print(f"{results['count']} facets:")
            for facet in complex_.facets:
                print("  {" + ",".join(map(str, facet)) + "}")
    elif args.action == "fvector":
        fv = f_vector(complex_)
        results = {
            "word": format_word(complex_.word),
            "f_vector": list(fv),
            "reduced_euler_characteristic": reduced_euler_characteristic(complex_),
        }
        if args.json:
            _emit_json("complex fvector", _complex_params(args), results, started)
        else:
            print(f"f-vector: {fv}")
            print(f"reduced Euler characteristic: {results['reduced_euler_characteristic']}")
    else:  # nonfaces
        cap = args.max_size or complex_.facet_size() + 1
        found = minimal_nonfaces(complex_, cap)
        results = {
            "word": format_word(complex_.word),
            "max_size": cap,
            "minimal_nonfaces": [list(x) for x in found],
            "sizes": sorted({len(x) for x in found}),
        }
        if args.json:
            _emit_json("complex nonfaces", _complex_params(args), results, started)
        else:
            print(f"{len(found)} minimal non-faces (sizes {results['sizes']}):")
            for group in found:
                print("  {" + ",".join(map(str, group)) + "}")
    return 0


def _complex_params(args) -> dict:
    return {
        "type": args.type,
        "cox": args.cox,
        "k": args.k,
        "word": args.word,
        "pi": args.pi,
    }


def _cmd_flipgraph(args) -> int:
    system = _system_from(args)
    complex_ = _complex_from(args, system)
    graph = flip_graph(complex_)
    dot = flip_graph_dot(graph)
    if args.dot and args.dot != "-":
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(dot)
    else:
        sys.stdout.write(dot)
    if args.diameter:
        print(f"diameter: {flip_graph_diameter(complex_)}")
    return 0


def _cmd_theta(args) -> int:
    started = time.perf_counter()
    system = _system_from(args)
    cox = _coxeter_word_from(args, system)
    perm = theta_permutation(system, cox, args.k)
    if args.order:
        order = permutation_order(perm)
        results = {"order": order, "formula": theta_order_formula(system, args.k)}
        if args.json:
            _emit_json("theta", {"type": args.type, "cox": format_word(cox), "k": args.k}, results, started)
        else:
            print(f"order: {order} (formula: {results['formula']})")
    elif args.orbits:
        orbits = theta_orbits_on_facets(system, cox, args.k)
        results = {
            "orbit_sizes": [len(orbit) for orbit in orbits],
            "orbits": [[list(facet) for facet in orbit] for orbit in orbits],
        }
        if args.json:
            _emit_json("theta", {"type": args.type, "cox": format_word(cox), "k": args.k}, results, started)
        else:
            for orbit in orbits:
                print(" -> ".join("{" + ",".join(map(str, facet)) + "}" for facet in orbit))
    else:
        results = {"permutation": list(perm)}
        if args.json:
            _emit_json("theta", {"type": args.type, "cox": format_word(cox), "k": args.k}, results, started)
        else:
            print("positions:", list(range(1, len(perm) + 1)))
            print("images:   ", list(perm))
    return 0


def _cmd_bijection(args) -> int:
    started = time.perf_counter()
    cox = parse_word(args.cox) if args.cox else None
    if args.flavor == "typea":
        n = args.m - 2 * args.k - 1
        system = CoxeterSystem(f"A{n}")
        if cox is None:
            cox = enumerate_coxeter_words(system)[0]
        table = type_a_bijection(args.m, args.k, cox)
        word = multi_cluster_word(system, cox, args.k)
        results = [
            {"position": p, "letter": f"s{s}", "diagonal": list(table[p - 1])}
            for p, s in enumerate(word, start=1)
        ]
    else:
        n = args.m - args.k
        system = CoxeterSystem(f"B{n}")
        if cox is None:
            cox = enumerate_coxeter_words(system)[0]
        table = type_b_bijection(args.m, args.k, cox)
        word = multi_cluster_word(system, cox, args.k)
        results = [
            {
                "position": p,
                "letter": f"s{s}",
                "pair": sorted(list(d) for d in table[p - 1]),
            }
            for p, s in enumerate(word, start=1)
        ]
    _emit_json(
        f"bijection {args.flavor}",
        {"m": args.m, "k": args.k, "cox": format_word(cox)},
        results,
        started,
    )
    return 0


def _cmd_quiver(args) -> int:
    system = _system_from(args)
    cox = _coxeter_word_from(args, system)
    if args.flavor == "ar":
        quiver = ar_quiver(system, cox)
    else:
        quiver = repetition_window(system, cox, args.copies).quiver
    dot = export_dot(quiver, name=args.flavor)
    if args.dot and args.dot != "-":
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(dot)
    else:
        sys.stdout.write(dot)
    return 0


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    names = list(EXPERIMENTS) if args.what == "all" else [args.what]
    reports = []
    for name in names:
        if name == "maximality":
            report = run_maximality_experiment(seed=args.seed)
        else:
            runner = EXPERIMENTS[name]
            report = runner()
        if args.type or args.k is not None:
            report.rows = [
                row
                for row in report.rows
                if (not args.type or row.get("type") == args.type)
                and (args.k is None or row.get("k") == args.k)
            ]
        reports.append(report)
    failed = [r.name for r in reports if r.verdict == "fail"]
    if args.json:
        _emit_json(
            f"verify {args.what}",
            {"type": args.type, "k": args.k, "seed": args.seed},
            [report.as_dict() for report in reports],
            started,
        )
    else:
        for report in reports:
            print(f"[{report.verdict:11s}] {report.name} ({report.elapsed_ms:.0f} ms)")
            for row in report.rows:
                print(f"    {row}")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# Parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subwordlab",
        description="Subword complexes and multi-cluster complexes of finite Coxeter groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_k=True, with_word=False):
        p.add_argument("--type", help="group descriptor, e.g. A3, B4, H3, I2(7)")
        p.add_argument("--cox", help="Coxeter word, e.g. s1,s3,s2,s4")
        if with_k:
            p.add_argument("-k", type=int, default=1, help="number of prefix copies")
        if with_word:
            p.add_argument("--word", help="explicit word instead of the multi-cluster word")
            p.add_argument("--pi", choices=["auto", "w0"], default="auto",
                           help="target element for explicit words (auto = Demazure product)")
        p.add_argument("--json", action="store_true")

    p_sort = sub.add_parser("sort", help="sorting word of the longest element")
    add_common(p_sort, with_k=False)
    p_sort.set_defaults(func=_cmd_sort)

    p_complex = sub.add_parser("complex", help="facets, f-vector or minimal non-faces")
    p_complex.add_argument("action", choices=["facets", "fvector", "nonfaces"])
    add_common(p_complex, with_word=True)
    p_complex.add_argument("--max-size", type=int, help="cap for minimal non-face search")
    p_complex.set_defaults(func=_cmd_complex)

    p_flip = sub.add_parser("flipgraph", help="flip graph as DOT, optional diameter")
    add_common(p_flip, with_word=True)
    p_flip.add_argument("--dot", help="output DOT file ('-' for stdout)")
    p_flip.add_argument("--diameter", action="store_true")
    p_flip.set_defaults(func=_cmd_flipgraph)

    p_theta = sub.add_parser("theta", help="the next-occurrence cyclic action")
    add_common(p_theta)
    group = p_theta.add_mutually_exclusive_group()
    group.add_argument("--orbits", action="store_true")
    group.add_argument("--order", action="store_true")
    p_theta.set_defaults(func=_cmd_theta)

    p_bij = sub.add_parser("bijection", help="polygon bijections, JSON output")
    p_bij.add_argument("flavor", choices=["typea", "typeb"])
    p_bij.add_argument("--m", type=int, required=True, help="polygon size parameter")
    p_bij.add_argument("-k", type=int, default=1)
    p_bij.add_argument("--cox", help="Coxeter word of the underlying system")
    p_bij.set_defaults(func=_cmd_bijection)

    p_quiver = sub.add_parser("quiver", help="translation quivers as DOT")
    p_quiver.add_argument("flavor", choices=["ar", "repetition"])
    p_quiver.add_argument("--type", help="group descriptor")
    p_quiver.add_argument("--cox", help="Coxeter word")
    p_quiver.add_argument("--copies", type=int, default=2)
    p_quiver.add_argument("--dot", help="output DOT file ('-' for stdout)")
    p_quiver.set_defaults(func=_cmd_quiver)

    p_verify = sub.add_parser("verify", help="experiment suite")
    p_verify.add_argument(
        "what",
        choices=["all"] + sorted(EXPERIMENTS),
    )
    p_verify.add_argument("--type", help="restrict rows to one type")
    p_verify.add_argument("-k", type=int, default=None, help="restrict rows to one k")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CoxeterError, ResourceLimitError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
