"""Command-line interface: ``cliquezf <command> ...`` (or ``python -m cliquezf``)."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import checks
from .cliques import clique_cover_number, enumerate_minmax_si_covers, maximalize_cover, minimum_cover
from .compressed import NotSimplyCoverable, compressed_cliques_graph
from .corpus import DEFAULT_MAX_N, CorpusTooLarge, enumerate_connected
from .detect import check_compressed_candidate
from .families import GRAMMAR, FamilyError, generate, parse_family
from .forcing import zplus
from .graph import Graph, GraphError
from .io import FORMATS_OUT, FormatError, emit_graph, parse_graph, to_graph6

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

INPUT_HELP = """\
graph input: a file path, '-' for stdin, an inline graph6 string, or --family SPEC.
edgelist files start with 'n m' followed by m lines 'u v' (0-indexed)."""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n\n{GRAMMAR}\n\n{INPUT_HELP}\n")
        raise SystemExit(EXIT_USAGE)


def _graph_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("graph", nargs="?", help="graph file, '-' or inline graph6")
    p.add_argument("--family", metavar="SPEC", help="generate the input from a family spec")
    p.add_argument("--input-format", choices=("auto", "edgelist", "graph6", "json"), default="auto")
    return p


def _output_options(default_fmt: str) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS_OUT, default=default_fmt)
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cliquezf", description=__doc__,
                     epilog=f"{GRAMMAR}\n\n{INPUT_HELP}",
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    gin = _graph_options()

    p = sub.add_parser("gen", help="generate a family member",
                       parents=[_output_options("edgelist")])
    p.add_argument("spec", help="family spec, e.g. musical:4 or circ:6:1,2")

    sub.add_parser("cc", help="clique cover number and a min-max cover",
                   parents=[gin, _output_options("edgelist")])

    p = sub.add_parser("zplus", help="positive zero forcing number",
                       parents=[gin, _output_options("edgelist")])
    p.add_argument("--show-set", action="store_true", help="also print an optimal set")

    sub.add_parser("compress", help="compressed cliques graph",
                   parents=[gin, _output_options("edgelist")])

    sub.add_parser("detect", help="claw / diamond / suspended cycle / J' embedding report",
                   parents=[gin, _output_options("edgelist")])

    p = sub.add_parser("check", help="re-verify the theorem registry",
                       parents=[_output_options("edgelist")])
    p.add_argument("--corpus", type=int, metavar="N", help="all connected graphs with at most N vertices")
    p.add_argument("--corpus-file", metavar="PATH", help="graph6 file, one graph per line")
    p.add_argument("--family", action="append", default=[], metavar="SPEC",
                   help="family instance (repeatable)")
    p.add_argument("--theorem", action="append", default=[], metavar="ID",
                   help="restrict to this theorem id (repeatable)")
    p.add_argument("--json", action="store_true", help="emit the full JSON report")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timeout", type=float, default=checks.DEFAULT_TIMEOUT,
                   help="per instance and theorem, seconds (0 disables)")
    p.add_argument("--max-n-guard", type=int, default=DEFAULT_MAX_N,
                   help="largest order the generated corpus may reach")
    p.add_argument("--list", action="store_true", help="list theorem ids and exit")

    p = sub.add_parser("corpus", help="write the generated corpus as graph6")
    p.add_argument("max_n", type=int)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n-guard", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--out", metavar="PATH")
    return parser


# -- helpers ------------------------------------------------------------------------

def _read_graph(args) -> Graph:
    if args.family:
        if args.graph:
            raise UsageError("give either a graph or --family, not both")
        return generate(parse_family(args.family))
    if not args.graph:
        raise UsageError("no input graph")
    src = args.graph
    if src == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(src) as fh:
                text = fh.read()
        except FileNotFoundError:
            text = src  # inline graph6
    return parse_graph(text, args.input_format)


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_sets(sets) -> str:
    return " ".join("{" + ",".join(map(str, s)) + "}" for s in sets)


# -- commands -------------------------------------------------------------------------

def cmd_gen(args) -> int:
    _write(args, emit_graph(generate(parse_family(args.spec)), args.format))
    return EXIT_OK


def cmd_cc(args) -> int:
    g = _read_graph(args)
    cc = clique_cover_number(g)
    cover = maximalize_cover(g, minimum_cover(g))
    si = enumerate_minmax_si_covers(g)
    if args.format == "json":
        obj = {"cc": cc, "cover": [list(c) for c in cover.cliques], "minmax_si_covers": len(si)}
        _write(args, json.dumps(obj, sort_keys=True) + "\n")
    else:
        _write(args, f"{cc}\ncover: {_fmt_sets(cover.cliques)}\nmin-max SI covers: {len(si)}\n")
    return EXIT_OK


def cmd_zplus(args) -> int:
    g = _read_graph(args)
    k, s, _ = zplus(g)
    if args.format == "json":
        _write(args, json.dumps({"zplus": k, "set": list(s)}) + "\n")
    elif args.show_set:
        _write(args, f"{k}\nset: {_fmt_sets([s])}\n")
    else:
        _write(args, f"{k}\n")
    return EXIT_OK


def cmd_compress(args) -> int:
    g = _read_graph(args)
    try:
        cg = compressed_cliques_graph(g)
    except NotSimplyCoverable as exc:
        sys.stderr.write(f"cliquezf: {exc}\n")
        return EXIT_FAIL
    _write(args, emit_graph(cg.graph, args.format))
    return EXIT_OK


def cmd_detect(args) -> int:
    g = _read_graph(args)
    rep = check_compressed_candidate(g)
    obj = {
        "claw_free": rep.claw_free,
        "claw": list(rep.claw.witness) if rep.claw else None,
        "diamond": list(rep.diamond.witness) if rep.diamond else None,
        "no_suspended_cycle": rep.no_suspended_cycle,
        "suspended_cycle": ({"kind": rep.suspended_cycle.kind, "witness": list(rep.suspended_cycle.witness)}
                            if rep.suspended_cycle else None),
        "cover_number": rep.cover_number,
        "embeds_in_jprime": rep.embeds_in_jprime,
        "may_be_compressed": rep.may_be_compressed,
    }
    if args.format == "json":
        _write(args, json.dumps(obj, sort_keys=True) + "\n")
    else:
        _write(args, "".join(f"{k}: {v}\n" for k, v in obj.items()))
    return EXIT_OK


def cmd_check(args) -> int:
    if args.list:
        _write(args, "".join(f"{tid}\t{anchor}\n" for tid, anchor in checks.theorem_matrix()))
        return EXIT_OK
    unknown = [t for t in args.theorem if t not in checks.REGISTRY]
    if unknown:
        raise UsageError(f"unknown theorem id(s): {', '.join(unknown)}; see 'check --list'")
    instances = []
    if args.corpus is not None:
        instances += checks.corpus_instances(args.corpus, max_n_guard=args.max_n_guard)
    if args.corpus_file:
        instances += checks.file_instances(args.corpus_file)
    instances += checks.family_instances(args.family)
    if args.corpus is None and not args.corpus_file and not args.family:
        instances = checks.corpus_instances(5) + checks.family_instances(checks.DEFAULT_FAMILIES)
    results = checks.run_checks(instances, args.theorem or None, jobs=args.jobs,
                                timeout=args.timeout or None)
    if args.json:
        _write(args, checks.results_to_json(results) + "\n")
    else:
        lines = [f"{'theorem':28} {'pass':>6} {'fail':>6} {'skip':>6}"]
        for tid, row in checks.summarize(results).items():
            lines.append(f"{tid:28} {row['pass']:6d} {row['fail']:6d} {row['skipped']:6d}")
        for r in results:
            if r.verdict == checks.FAIL:
                lines.append(f"FAIL {r.theorem} {r.instance}: expected {r.expected} observed {r.observed}"
                             + (f" ({r.reason})" if r.reason else ""))
        _write(args, "\n".join(lines) + "\n")
    return EXIT_FAIL if any(r.verdict == checks.FAIL for r in results) else EXIT_OK


def cmd_corpus(args) -> int:
    graphs = enumerate_connected(args.max_n, args.min_n, args.max_n_guard)
    _write(args, "".join(to_graph6(g) + "\n" for g in graphs))
    return EXIT_OK


COMMANDS = {"gen": cmd_gen, "cc": cmd_cc, "zplus": cmd_zplus, "compress": cmd_compress,
            "detect": cmd_detect, "check": cmd_check, "corpus": cmd_corpus}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, FamilyError, FormatError, GraphError, CorpusTooLarge) as exc:
        sys.stderr.write(f"cliquezf: error: {exc}\n")
        if isinstance(exc, (UsageError, FamilyError)) and GRAMMAR not in str(exc):
            sys.stderr.write(f"\n{GRAMMAR}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
