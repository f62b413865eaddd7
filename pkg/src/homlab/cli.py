"""Command-line front end: solve, oracle, generate, verify, inspect.

Exit codes: 0 success / yes, 2 infeasible / no / failed verification,
3 budget exceeded, 1 everything else.  All output is byte-reproducible for
fixed inputs and flags; --jobs 1 is the deterministic reference mode.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import reductions as red
from .bruteforce import max_bisection, max_cut, nae_satisfiable, sat_satisfiable, independence_number
from .errors import BudgetExceededError, HomlabError
from .geometry import SegmentArrangement, intersection_graph, slope_count
from .graph import Graph
from .induced_paths import longest_induced_path_length
from .local import (
    LocalConfig,
    oracle_local,
    solve_lbhom,
    solve_lihom,
    solve_lshom_c4,
    solve_lshom_p3,
)
from .models import (
    weight_model_independent_set,
    weight_model_maxcut,
    weight_model_oct,
)
from .separator import DEFAULT_BETA, find_balanced_separator, heuristic_separator
from .star import forbidden_subgraph_witness, has_property_star
from .targets import by_name, cycle as cycle_target, path as path_target
from .weights import ListAssignment, WeightModel, format_ext, parse_ext
from .whom import INFEASIBLE, WhomConfig, WhomInstance, oracle_whom, solve_whom
from .reductions.cnf import CnfFormula, Dialect, parse_dimacs

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO = 2
EXIT_BUDGET = 3


def _deadline() -> float | None:
    ms = os.environ.get("HOMLAB_BUDGET_MS")
    if ms is None:
        return None
    return time.monotonic() + int(ms) / 1000.0


def _load_graph(path: str) -> Graph:
    return Graph.from_text(Path(path).read_text())


def _resolve_target(args) -> Graph:
    if getattr(args, "target_file", None):
        return _load_graph(args.target_file)
    if getattr(args, "target", None):
        return by_name(args.target)
    raise HomlabError("a target is required (--target or --target-file)")


def _resolve_weights(args, g: Graph, h: Graph):
    spec = getattr(args, "weights", None)
    if spec is None:
        return h, WeightModel()
    named = {
        "maxcut": weight_model_maxcut,
        "oct": weight_model_oct,
        "independent-set": weight_model_independent_set,
    }
    if spec in named:
        model_h, w = named[spec](g)
        if h is not None and h != model_h:
            raise HomlabError(
                f"named weight model {spec!r} implies a different target graph"
            )
        return model_h, w
    return h, WeightModel.from_text(Path(spec).read_text())


def _emit(args, text: str):
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _print_witness(hom: dict[int, int]) -> str:
    return "".join(f"m {v} {hom[v]}\n" for v in sorted(hom))


def cmd_solve(args, use_oracle: bool) -> int:
    g = _load_graph(args.graph)
    deadline = _deadline()
    mode = args.mode
    if mode == "local":
        variants = {"inj": "lihom", "bij": "lbhom", "surj": "lshom"}
        if args.variant is None:
            raise HomlabError("solve local requires --variant inj|bij|surj")
        mode = variants[args.variant]
    if mode == "whom":
        h = _resolve_target(args)
        h, w = _resolve_weights(args, g, h)
        lists = ListAssignment.full(g, h)
        if args.lists:
            lists = ListAssignment.from_text(Path(args.lists).read_text(), g, h)
        threshold = parse_ext(args.threshold) if args.threshold is not None else None
        inst = WhomInstance(g, h, w, lists, threshold)
        if use_oracle:
            res = oracle_whom(inst, deadline=deadline)
        else:
            res = solve_whom(inst, WhomConfig(jobs=args.jobs, deadline=deadline))
        out = []
        if res.optimum is INFEASIBLE:
            out.append("optimum infeasible\n")
            _emit(args, "".join(out))
            return EXIT_NO
        out.append(f"optimum {format_ext(res.optimum)}\n")
        if threshold is not None:
            from .weights import ext_lt

            yes = not ext_lt(res.optimum, threshold)
            out.append("yes\n" if yes else "no\n")
            out.append(_print_witness(res.witness))
            _emit(args, "".join(out))
            return EXIT_OK if yes else EXIT_NO
        out.append(_print_witness(res.witness))
        _emit(args, "".join(out))
        return EXIT_OK

    h = _resolve_target(args)
    config = LocalConfig(deadline=deadline)
    if mode == "lihom":
        hom = (
            oracle_local(g, h, "injective", deadline=deadline)
            if use_oracle
            else solve_lihom(g, h, config)
        )
    elif mode == "lbhom":
        hom = (
            oracle_local(g, h, "bijective", deadline=deadline)
            if use_oracle
            else solve_lbhom(g, h, config)
        )
    elif mode == "lshom":
        if use_oracle:
            hom = oracle_local(g, h, "surjective", deadline=deadline)
        else:
            if h == path_target(3):
                hom = solve_lshom_p3(g, config)
            elif h == cycle_target(4):
                hom = solve_lshom_c4(g, config)
            else:
                raise HomlabError(
                    "the subexponential locally surjective solver covers only P3 and C4 "
                    "targets; use `oracle lshom` for other targets"
                )
    else:
        raise HomlabError(f"unknown solve mode {mode!r}")
    if hom is None:
        _emit(args, "no\n")
        return EXIT_NO
    _emit(args, "yes\n" + _print_witness(hom))
    return EXIT_OK


_GENERATORS = (
    "maxcut-clauses",
    "bisection",
    "maxcut-segments",
    "oct",
    "whom-c4",
    "lshom-path",
    "lshom-cycle",
    "lshom-loopedge",
)


def _load_cnf(args) -> CnfFormula:
    dialect = Dialect.POS_NAE_3SAT if args.dialect == "posnae3" else Dialect.THREE_SAT
    return parse_dimacs(Path(args.cnf).read_text(), dialect)


def _generate(args) -> tuple[red.ReductionOutput, bool]:
    """Build the requested instance and its brute-force source answer."""
    kind = args.generator
    if kind == "maxcut-clauses":
        phi = _load_cnf(args)
        out = red.lemma1_output(phi)
        src = nae_satisfiable(phi.num_vars, phi.clauses)
    elif kind == "bisection":
        g = _load_graph(args.graph)
        out = red.lemma2_output(g, args.k)
        src = max_cut(g) >= args.k
    elif kind == "maxcut-segments":
        g = _load_graph(args.graph)
        out = red.bisection_to_maxcut_segments(g, args.k)
        mb = max_bisection(g)
        src = mb is not None and mb >= args.k
    elif kind == "oct":
        g = _load_graph(args.graph)
        out = red.is_to_oct_segments(g, args.k)
        src = independence_number(g) >= args.k
    elif kind == "whom-c4":
        g = _load_graph(args.graph)
        out = red.is_to_whom_c4(g, args.k)
        src = independence_number(g) >= args.k
    elif kind == "lshom-path":
        phi = _load_cnf(args)
        out = red.threesat_to_lshom_path(phi, args.target_k)
        src = sat_satisfiable(phi.num_vars, phi.clauses)
    elif kind == "lshom-cycle":
        phi = _load_cnf(args)
        out = red.threesat_to_lshom_cycle(phi, args.target_k)
        src = sat_satisfiable(phi.num_vars, phi.clauses)
    elif kind == "lshom-loopedge":
        phi = _load_cnf(args)
        out = red.threesat_to_lshom_loopedge(phi, occ_clique=args.occ_clique)
        src = sat_satisfiable(phi.num_vars, phi.clauses)
    else:
        raise HomlabError(f"unknown generator {kind!r}")
    return out, src


def cmd_generate(args) -> int:
    out, _ = _generate(args)
    prefix = Path(args.out_prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    written = []

    def write(suffix: str, text: str):
        p = prefix.with_name(prefix.name + suffix)
        p.write_text(text)
        written.append(p.name)

    write(".graph", out.instance.to_text())
    write(".target.graph", out.target.to_text())
    if out.weights is not None:
        write(".weights", out.weights.to_text())
    if out.lists is not None:
        write(".lists", out.lists.to_text())
    if out.arrangement is not None:
        write(".seg", out.arrangement.to_text())
    meta = [f"problem {out.problem}"]
    if out.threshold is not None:
        meta.append(f"threshold {format_ext(out.threshold)}")
    if out.claimed_slope_count is not None:
        meta.append(f"slopes {out.claimed_slope_count}")
    meta.append(f"notes {out.notes}")
    write(".meta", "".join(line + "\n" for line in meta))
    summary = [f"n {out.instance.n}"] + meta + [f"files {' '.join(written)}"]
    sys.stdout.write("".join(line + "\n" for line in summary))
    return EXIT_OK


def cmd_verify(args) -> int:
    out, src = _generate(args)
    deadline = _deadline()
    if args.jobs > 1:
        # the two sides are independent; the source answer above was cheap,
        # so only the target side benefits, but honor the flag
        pass
    ok = red.verify_reduction(src, out, budget=args.budget, deadline=deadline)
    sys.stdout.write(
        f"source {'yes' if src else 'no'}\n"
        f"equivalent {'yes' if ok else 'NO'}\n"
    )
    return EXIT_OK if ok else EXIT_NO


def cmd_check_star(args) -> int:
    g = _load_graph(args.graph)
    holds = has_property_star(g)
    lines = ["true\n" if holds else "false\n"]
    if not holds:
        wit = forbidden_subgraph_witness(g)
        lines.append(f"witness {wit.label} {' '.join(str(v) for v in wit.embedding)}\n")
    _emit(args, "".join(lines))
    return EXIT_OK


def cmd_separator(args) -> int:
    g = _load_graph(args.graph)
    beta = Fraction(args.beta)
    max_size = args.max_size if args.max_size is not None else g.n
    if args.heuristic:
        sep = heuristic_separator(g, beta)
    else:
        sep = find_balanced_separator(g, max_size, beta)
    if sep is None:
        _emit(args, "none\n")
        return EXIT_NO
    _emit(
        args,
        f"s {' '.join(str(v) for v in sorted(sep.s))}\n"
        f"v1 {' '.join(str(v) for v in sorted(sep.v1))}\n"
        f"v2 {' '.join(str(v) for v in sorted(sep.v2))}\n",
    )
    return EXIT_OK


def cmd_segments_to_graph(args) -> int:
    arr = SegmentArrangement.from_text(Path(args.segments).read_text())
    g = intersection_graph(arr)
    text = g.to_text() + f"# slopes {slope_count(arr)}\n"
    _emit(args, text)
    return EXIT_OK


def cmd_induced_path(args) -> int:
    g = _load_graph(args.graph)
    _emit(args, f"{longest_induced_path_length(g, args.cap)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(prog="homlab")
    root.add_argument("--jobs", type=int, default=1, help="1 is the deterministic reference mode")
    root.add_argument("--seed", type=int, default=0, help="accepted for reproducibility bookkeeping; all operations are deterministic")
    sub = root.add_subparsers(dest="command", required=True)

    def add_solve(name):
        p = sub.add_parser(name)
        p.add_argument("mode", choices=["whom", "lihom", "lbhom", "lshom", "local"])
        p.add_argument("-g", "--graph", required=True)
        p.add_argument("--target")
        p.add_argument("--target-file")
        p.add_argument("--weights", help="maxcut | oct | independent-set | a weight file")
        p.add_argument("--lists")
        p.add_argument("--threshold")
        p.add_argument("--variant", choices=["inj", "bij", "surj"])
        p.add_argument("-o", "--output")
        return p

    add_solve("solve")
    add_solve("oracle")

    g = sub.add_parser("generate")
    g.add_argument("generator", choices=_GENERATORS)
    g.add_argument("--graph", "-g")
    g.add_argument("--cnf")
    g.add_argument("--dialect", choices=["3sat", "posnae3"], default="3sat")
    g.add_argument("-k", type=int, default=1, help="source threshold (independent set size, cut size)")
    g.add_argument("--target-k", type=int, default=4, help="path/cycle length for the locally surjective generators")
    g.add_argument("--occ-clique", action="store_true")
    g.add_argument("-o", "--out-prefix", required=True)

    v = sub.add_parser("verify")
    v.add_argument("generator", choices=_GENERATORS)
    v.add_argument("--graph", "-g")
    v.add_argument("--cnf")
    v.add_argument("--dialect", choices=["3sat", "posnae3"], default="3sat")
    v.add_argument("-k", type=int, default=1)
    v.add_argument("--target-k", type=int, default=4)
    v.add_argument("--occ-clique", action="store_true")
    v.add_argument("--budget", type=int, default=50_000_000)

    c = sub.add_parser("check-star")
    c.add_argument("graph")
    c.add_argument("-o", "--output")

    s = sub.add_parser("separator")
    s.add_argument("graph")
    s.add_argument("--max-size", type=int)
    s.add_argument("--beta", default="2/3")
    s.add_argument("--heuristic", action="store_true")
    s.add_argument("-o", "--output")

    sg = sub.add_parser("segments-to-graph")
    sg.add_argument("segments")
    sg.add_argument("-o", "--output")

    ip = sub.add_parser("induced-path")
    ip.add_argument("-g", "--graph", required=True)
    ip.add_argument("--cap", type=int, default=16)
    ip.add_argument("-o", "--output")
    return root


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            return cmd_solve(args, use_oracle=False)
        if args.command == "oracle":
            return cmd_solve(args, use_oracle=True)
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "check-star":
            return cmd_check_star(args)
        if args.command == "separator":
            return cmd_separator(args)
        if args.command == "segments-to-graph":
            return cmd_segments_to_graph(args)
        if args.command == "induced-path":
            return cmd_induced_path(args)
        raise HomlabError(f"unknown command {args.command!r}")
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HomlabError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
