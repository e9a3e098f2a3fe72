"""Command-line entry point.

Subcommands: gadget build, decompose, verify decomposition/lemma/sampled,
at number/coefficient/orientation, choose check, gen triangulation/graph.
Exit codes: 0 pass/success, 1 verification failure, 2 usage or input
error, 3 enumeration cap exceeded.  All randomized commands take --seed;
configuration is flags-only and file arguments accept "-" for the
standard streams.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from .alon_tarsi import at_number, eulerian_diff, find_at_orientation, poly_coefficient
from .choosability import (
    ListAssignment,
    is_l_colorable,
    verify_witness_not_k_choosable,
)
from .decompose import (
    Decomposition,
    decompose,
    decompose_any_planar,
    verify_decomposition,
)
from .errors import ArtifactError, CapExceeded
from .gadgets import build_gadget, verify_lemma1, verify_lemma2, verify_lemma6, verify_sampled, verify_theorem7_core
from .graph import (
    PlaneGraph,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
)
from .report import VerificationReport
from .testkit import random_graph, random_near_triangulation

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


@dataclass
class CommandResult:
    exit_code: int
    text: str = ""
    payload: Optional[dict] = None
    files: dict = field(default_factory=dict)  # path -> content written
    as_json: bool = False

    def output(self) -> str:
        if self.as_json and self.payload is not None:
            return json.dumps(self.payload, sort_keys=True)
        return self.text


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); keep it in-process
        raise _UsageError(message)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str):
    try:
        return graph_from_json(_read_text(path))
    except (OSError, json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        raise _UsageError(f"cannot read graph from {path!r}: {exc}")


def _load_lists(path: str) -> ListAssignment:
    try:
        return ListAssignment.from_json_dict(json.loads(_read_text(path)))
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise _UsageError(f"cannot read lists from {path!r}: {exc}")


def _emit(result: CommandResult, path: Optional[str], content: str) -> None:
    if path is None or path == "-":
        result.text = content if not result.text else result.text + "\n" + content
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(content if content.endswith("\n") else content + "\n")
        result.files[path] = content


def _from_report(report: VerificationReport) -> CommandResult:
    return CommandResult(
        EXIT_PASS if report.verdict else EXIT_FAIL,
        str(report),
        report.to_json_dict(),
    )


def _build_parser() -> _Parser:
    p = _Parser(prog="atforest", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gadget", parents=[], description="gadget constructions")
    gsub = g.add_subparsers(dest="action", required=True)
    gb = gsub.add_parser("build")
    gb.add_argument("name")
    gb.add_argument("--selector")
    gb.add_argument("--format", choices=("json", "dot"), default="json")
    gb.add_argument("--output", default="-")
    gb.add_argument("--json", action="store_true")

    d = sub.add_parser("decompose")
    d.add_argument("--input", required=True)
    d.add_argument("--handle")
    d.add_argument("--check", choices=("structural", "parity"))
    d.add_argument("--output", default="-")
    d.add_argument("--json", action="store_true")

    v = sub.add_parser("verify")
    vsub = v.add_subparsers(dest="target_kind", required=True)
    vd = vsub.add_parser("decomposition")
    vd.add_argument("--input", required=True)
    vd.add_argument("--decomposition", required=True)
    vd.add_argument("--check", choices=("structural", "parity"), default="structural")
    vd.add_argument("--json", action="store_true")
    vl = vsub.add_parser("lemma")
    vl.add_argument("--name", required=True)
    vl.add_argument("--selector")
    vl.add_argument("--json", action="store_true")
    vs = vsub.add_parser("sampled")
    vs.add_argument("--target", required=True)
    vs.add_argument("--count", type=int, required=True)
    vs.add_argument("--seed", type=int, required=True)
    vs.add_argument("--json", action="store_true")

    a = sub.add_parser("at")
    asub = a.add_subparsers(dest="quantity", required=True)
    an = asub.add_parser("number")
    an.add_argument("--input", required=True)
    an.add_argument("--json", action="store_true")
    ac = asub.add_parser("coefficient")
    ac.add_argument("--input", required=True)
    ac.add_argument("--eta", required=True, help="comma list vertex=exponent")
    ac.add_argument("--json", action="store_true")
    ao = asub.add_parser("orientation")
    ao.add_argument("--input", required=True)
    ao.add_argument("--k", type=int, required=True)
    ao.add_argument("--json", action="store_true")

    c = sub.add_parser("choose")
    csub = c.add_subparsers(dest="action", required=True)
    cc = csub.add_parser("check")
    cc.add_argument("--input", required=True)
    cc.add_argument("--lists", required=True)
    cc.add_argument("--k", type=int)
    cc.add_argument("--json", action="store_true")

    gen = sub.add_parser("gen")
    gensub = gen.add_subparsers(dest="kind", required=True)
    gt = gensub.add_parser("triangulation")
    gt.add_argument("--n", type=int, required=True)
    gt.add_argument("--boundary", type=int, required=True)
    gt.add_argument("--seed", type=int, required=True)
    gt.add_argument("--output", default="-")
    gt.add_argument("--json", action="store_true")
    gg = gensub.add_parser("graph")
    gg.add_argument("--n", type=int, required=True)
    gg.add_argument("--p", type=float, required=True)
    gg.add_argument("--seed", type=int, required=True)
    gg.add_argument("--output", default="-")
    gg.add_argument("--json", action="store_true")
    return p


_LEMMA_VERIFIERS = {
    "lemma2": verify_lemma2,
    "lemma6": verify_lemma6,
    "theorem7core": verify_theorem7_core,
}


def _cmd_gadget(args) -> CommandResult:
    g = build_gadget(args.name, args.selector)
    content = graph_to_json(g) if args.format == "json" else graph_to_dot(g)
    result = CommandResult(EXIT_PASS, payload=json.loads(content) if args.format == "json" else None)
    _emit(result, args.output, content)
    return result


def _cmd_decompose(args) -> CommandResult:
    pg = _load_graph(args.input)
    if not isinstance(pg, PlaneGraph):
        raise _UsageError("decompose needs an embedded input (rotation + outer_face)")
    if args.handle is not None:
        parts = args.handle.split(",")
        if len(parts) != 2:
            raise _UsageError("--handle must be u,v")
        d = decompose(pg, (parts[0], parts[1]))
        report = verify_decomposition(pg, d, args.check or "structural")
        payload = d.to_json_dict()
    else:
        forest, orientation = decompose_any_planar(pg)
        ok = orientation.is_acyclic() and all(
            c <= 2 for c in orientation.out_degrees().values()
        )
        report = VerificationReport(
            ok,
            "restricted certificate: forest plus acyclic orientation, out-degrees <= 2",
            stats={"forest_edges": len(forest), "arcs": len(orientation.arcs)},
        )
        payload = {
            "forest": [list(e) for e in sorted(forest)],
            "arcs": [list(a) for a in sorted(orientation.arcs)],
        }
    result = _from_report(report)
    result.payload = {**payload, "report": report.to_json_dict()}
    _emit(result, args.output, json.dumps(payload, sort_keys=True))
    return result


def _cmd_verify(args) -> CommandResult:
    if args.target_kind == "decomposition":
        pg = _load_graph(args.input)
        if not isinstance(pg, PlaneGraph):
            raise _UsageError("verification needs an embedded input")
        try:
            data = json.loads(_read_text(args.decomposition))
            d = Decomposition.from_json_dict(data, pg.graph)
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
            raise _UsageError(f"cannot read decomposition: {exc}")
        return _from_report(verify_decomposition(pg, d, args.check))
    if args.target_kind == "lemma":
        if args.name == "lemma1":
            if args.selector is not None:
                return _from_report(verify_lemma1(args.selector))
            fails = []
            for i in range(64):
                word = "".join("ab"[i >> j & 1] for j in range(6))
                if not verify_lemma1(word).verdict:
                    fails.append(word)
            report = VerificationReport(
                not fails,
                "all 64 selectors verified" if not fails else "selectors failed",
                counterexample=fails or None,
                stats={"cases_examined": 64},
            )
            return _from_report(report)
        verifier = _LEMMA_VERIFIERS.get(args.name)
        if verifier is None:
            raise _UsageError(f"unknown lemma {args.name!r}")
        return _from_report(verifier())
    if args.target_kind == "sampled":
        if args.target not in ("theorem2", "theorem7", "corollary3"):
            raise _UsageError(f"unknown sampling target {args.target!r}")
        if args.count < 0:
            raise _UsageError("--count must be non-negative")
        return _from_report(verify_sampled(args.target, args.count, args.seed))
    raise _UsageError("unknown verify target")


def _cmd_at(args) -> CommandResult:
    pg = _load_graph(args.input)
    g = pg.graph if isinstance(pg, PlaneGraph) else pg
    if args.quantity == "number":
        value = at_number(g)
        return CommandResult(EXIT_PASS, str(value), {"at_number": value})
    if args.quantity == "coefficient":
        eta = {}
        for item in args.eta.split(","):
            if "=" not in item:
                raise _UsageError("--eta items must be vertex=exponent")
            name, _, val = item.partition("=")
            try:
                eta[name] = int(val)
            except ValueError:
                raise _UsageError(f"bad exponent {val!r}")
        value = poly_coefficient(g, eta)
        return CommandResult(EXIT_PASS, str(value), {"coefficient": value})
    if args.quantity == "orientation":
        d = find_at_orientation(g, args.k)
        if d is None:
            return CommandResult(
                EXIT_FAIL, f"no orientation within out-degree budget {args.k - 1}",
                {"verdict": "FAIL", "k": args.k},
            )
        pc = eulerian_diff(d)
        return CommandResult(
            EXIT_PASS,
            "\n".join(f"{t} -> {h}" for t, h in sorted(d.arcs)),
            {
                "arcs": [list(a) for a in sorted(d.arcs)],
                "even": pc.even_count,
                "odd": pc.odd_count,
            },
        )
    raise _UsageError("unknown at quantity")


def _cmd_choose(args) -> CommandResult:
    pg = _load_graph(args.input)
    g = pg.graph if isinstance(pg, PlaneGraph) else pg
    lists = _load_lists(args.lists)
    if args.k is not None:
        # witness mode: PASS means the lists admit no coloring
        return _from_report(verify_witness_not_k_choosable(g, lists, args.k))
    coloring = is_l_colorable(g, lists)
    if coloring is None:
        return CommandResult(EXIT_FAIL, "FAIL: no proper coloring from the lists", {"verdict": "FAIL"})
    return CommandResult(
        EXIT_PASS, "PASS: proper coloring found", {"verdict": "PASS", "coloring": coloring}
    )


def _cmd_gen(args) -> CommandResult:
    if args.kind == "triangulation":
        pg = random_near_triangulation(args.n, args.boundary, args.seed)
        content = graph_to_json(pg.graph, pg)
    else:
        g = random_graph(args.n, args.p, args.seed)
        content = graph_to_json(g)
    result = CommandResult(EXIT_PASS, payload=json.loads(content))
    _emit(result, args.output, content)
    return result


def run(argv) -> CommandResult:
    """Parse and execute one command; never raises, never exits."""
    as_json = False
    try:
        args = _build_parser().parse_args(argv)
        as_json = bool(getattr(args, "json", False))
        dispatch = {
            "gadget": _cmd_gadget,
            "decompose": _cmd_decompose,
            "verify": _cmd_verify,
            "at": _cmd_at,
            "choose": _cmd_choose,
            "gen": _cmd_gen,
        }
        result = dispatch[args.command](args)
        result.as_json = as_json
        return result
    except _UsageError as exc:
        return CommandResult(EXIT_USAGE, f"usage error: {exc}", {"verdict": "ERROR", "error": str(exc)}, as_json=as_json)
    except CapExceeded as exc:
        return CommandResult(EXIT_CAP, f"cap exceeded: {exc}", {"verdict": "ERROR", "error": str(exc)}, as_json=as_json)
    except ArtifactError as exc:
        return CommandResult(EXIT_USAGE, f"input error: {exc}", {"verdict": "ERROR", "error": str(exc)}, as_json=as_json)


def main(argv=None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    out = result.output()
    if out:
        print(out)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
