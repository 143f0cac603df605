"""
Command line: generate semigroups, run any analysis on a Cayley table or a
biordered set, and batch checks over the small-order corpus.

Exit codes: 0 success, 1 a mathematical failure with witness (e.g. an axiom
fails on user input), 2 usage or input format error, 3 a cap or budget was
exceeded.
"""
from __future__ import annotations

import argparse
import logging
import os
import random
import sys
from dataclasses import fields, replace

from . import __version__
from .biorder import (
    classify_pseudo_inverse,
    extract_biorder,
    format_biorder,
    read_biorder,
    sandwich_table,
    verify_axioms,
    write_biorder,
)
from .category import (
    build_LS,
    check_principal_homomorphism,
    check_principal_kernel,
    cone_semigroup,
    recover_category,
    verify_NC,
)
from .checks import BUG, CAP, CHECKS, FAIL, make_check
from .config import ENV_PREFIX, Caps
from .core import (
    FAMILIES,
    enumerate_corpus,
    generate_family,
    is_fundamental,
    is_inverse,
    is_regular,
    read_cayley,
    write_cayley,
)
from .core.cayley import format_cayley
from .errors import (
    CapExceeded,
    CayleyFormatError,
    IndexOutOfRange,
    NonAssociative,
    SemigroupError,
)
from .fundamental import build_TE_mod_p, fundamental_image
from .groupoid import build_GS, check_inductive_axioms, check_schein, reconstruct, singular_squares
from .presentation import (
    check_proper,
    format_cycles,
    gamma0,
    gamma_tau,
    present_IG,
    present_RIG,
    read_cycles,
)
from .report import Stopwatch, analysis_report, dumps, dumps_line

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_INPUT_ERRORS = (NonAssociative, CayleyFormatError, IndexOutOfRange)


class WitnessFailure(Exception):
    """A result that is reported in full but ends the run with exit code 1."""

    def __init__(self, report):
        super().__init__("check failed")
        self.report = report


def _caps(args) -> Caps:
    caps = Caps.from_env()
    overrides = {f.name: getattr(args, f"cap_{f.name}") for f in fields(Caps) if getattr(args, f"cap_{f.name}", None) is not None}
    return replace(caps, **overrides)


def _load(args, caps: Caps):
    """(semigroup or None, biorder, input descriptor)."""
    if args.family:
        kind, *params = args.family
        try:
            params = [int(p) for p in params]
        except ValueError:
            raise argparse.ArgumentTypeError(f"family parameters must be integers, got {params}") from None
        S = generate_family(kind, *params, caps=caps)
        return S, extract_biorder(S), {"family": kind, "params": params, "hash": S.content_hash()}
    if args.input is None:
        raise argparse.ArgumentTypeError("give an input file or --family KIND PARAM...")
    if args.input.endswith(".bos"):
        E = read_biorder(args.input)
        return None, E, {"file": args.input}
    S = read_cayley(args.input, caps=caps)
    return S, extract_biorder(S), {"file": args.input, "hash": S.content_hash()}


def _need_semigroup(S, command: str):
    if S is None:
        raise argparse.ArgumentTypeError(f"{command} needs a Cayley table, not a biordered set")
    return S


def _emit(args, report: dict) -> None:
    text = dumps(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def cmd_gen(args, caps: Caps):
    S = generate_family(args.kind, *args.params, caps=caps)
    if args.output:
        write_cayley(S, args.output, comments=[f"{args.kind} {' '.join(map(str, args.params))}"])
        logger.info(f"wrote {S!r} to {args.output}")
    else:
        sys.stdout.write(format_cayley(S))
    return None


def cmd_analyze(args, caps: Caps, watch: Stopwatch):
    S, E, descriptor = _load(args, caps)
    S = _need_semigroup(S, "analyze")
    with watch.stage("core"):
        regular = bool(is_regular(S))
        green = S.green
        results = {
            "order": S.order,
            "idempotents": len(S.idempotents),
            "regular": regular,
            "inverse": bool(is_inverse(S)),
            "fundamental": bool(is_fundamental(S)),
            "identity": S.identity,
            "green": {rel: len(set(getattr(green, f"{rel}_class"))) for rel in ("r", "l", "h", "d", "j")},
        }
    with watch.stage("biorder"):
        results["biorder"] = verify_axioms(E).to_dict()
    if regular:
        with watch.stage("pseudo_inverse"):
            results["pseudo_inverse"] = classify_pseudo_inverse(S).to_dict()
    return analysis_report(descriptor, results, watch)


def _idempotent(E, token: str) -> int:
    labels = [E.label(e) for e in range(E.size)]
    if token in labels:
        return labels.index(token)
    try:
        e = int(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{token!r} is neither a label nor an index of E") from None
    if not 0 <= e < E.size:
        raise argparse.ArgumentTypeError(f"idempotent index {e} out of range 0..{E.size - 1}")
    return e


def cmd_biorder(args, caps: Caps, watch: Stopwatch):
    S, E, descriptor = _load(args, caps)
    if args.action == "extract":
        if args.output:
            write_biorder(E, args.output)
        else:
            sys.stdout.write(format_biorder(E))
        return None
    with watch.stage("axioms"):
        report = verify_axioms(E)
    results = {
        "size": E.size,
        "labels": [E.label(e) for e in range(E.size)],
        "semilattice": E.is_semilattice(),
        "axioms": report.to_dict(),
    }
    if args.action == "sandwich":
        if not report.biordered:
            raise WitnessFailure(analysis_report(descriptor, results, watch))
        with watch.stage("sandwich"):
            table = sandwich_table(E)
            if args.pair:
                e, f = (_idempotent(E, token) for token in args.pair)
                pairs = [(e, f)]
            else:
                pairs = [(e, f) for e in range(E.size) for f in range(E.size)]
            results["sandwich"] = {f"{E.label(e)},{E.label(f)}": [E.label(h) for h in table[e][f]] for e, f in pairs}
    out = analysis_report(descriptor, results, watch)
    if not report.biordered:
        raise WitnessFailure(out)
    return out


def cmd_fundamental(args, caps: Caps, watch: Stopwatch):
    S, E, descriptor = _load(args, caps)
    results = {}
    if args.action == "image":
        S = _need_semigroup(S, "fundamental image")
        with watch.stage("image"):
            image = fundamental_image(S, caps=caps)
        results["image"] = image.to_dict()
        results["fundamental"] = image.injective
        return analysis_report(descriptor, results, watch)

    with watch.stage("TE_mod_p"):
        quotient = build_TE_mod_p(E, caps=caps, max_workers=args.workers)
        results["quotient"] = quotient.to_dict()
    if args.seed is not None:
        with watch.stage("spot_check"):
            again = build_TE_mod_p(E, rng=random.Random(args.seed), caps=caps)
            results["choice_independent"] = again.semigroup.table.tolist() == quotient.semigroup.table.tolist()
    report = analysis_report(descriptor, results, watch)
    if args.output and not args.json:
        # quotient table plus a sidecar with the representative ω-isomorphism of each class
        write_cayley(quotient.semigroup, args.output, comments=["T_E/p"])
        sidecar = os.path.splitext(args.output)[0] + ".json"
        with open(sidecar, "w", encoding="utf-8") as f:
            f.write(dumps(report) + "\n")
        logger.info(f"wrote {args.output} and {sidecar}")
        return None
    return report


def cmd_groupoid(args, caps: Caps, watch: Stopwatch):
    S, E, descriptor = _load(args, caps)
    S = _need_semigroup(S, "groupoid")
    if args.action == "squares":
        with watch.stage("squares"):
            squares = singular_squares(E, include_trivial=args.include_trivial)
        results = {"singular_squares": [square.to_dict(E) for square in squares]}
        return analysis_report(descriptor, results, watch)

    with watch.stage("G(S)"):
        G = build_GS(S)
    with watch.stage("inductive"):
        inductive = check_inductive_axioms(S, raise_on_failure=False)
    results = {
        "morphisms": len(G.morphisms),
        "vertices": len(G.vertices),
        "inductive": inductive.to_dict(),
        "vacuous": list(inductive.vacuous),
    }
    if inductive.passed:
        with watch.stage("reconstruct"):
            results["reconstruction"] = reconstruct(S, rng=random.Random(args.seed) if args.seed is not None else None).to_dict()
    if is_inverse(S):
        results["schein"] = check_schein(S)
    out = analysis_report(descriptor, results, watch)
    if not inductive.passed:
        raise WitnessFailure(out)
    return out


def cmd_presentation(args, caps: Caps, watch: Stopwatch):
    S, E, descriptor = _load(args, caps)
    with watch.stage("presentation"):
        presentation = present_RIG(E) if args.kind == "RIG" else present_IG(E)
    results = {"presentation": presentation.to_dict()}
    gamma = None
    with watch.stage("cycles"):
        if args.cycles_file:
            gamma = read_cycles(E, args.cycles_file)
        elif args.cycles == "gamma0":
            gamma = gamma0(E, max(caps.chain_length, 5))
        elif args.cycles == "gamma_tau":
            gamma = gamma_tau(E, caps=caps)
        if gamma is not None:
            results["cycles"] = gamma.to_dict()
            results["proper"] = check_proper(E, gamma).to_dict()
    if not args.json:
        text = presentation.to_gap() if args.gap else presentation.to_text()
        if gamma is not None:
            text += format_cycles(gamma)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
        return None
    return analysis_report(descriptor, results, watch)


def cmd_category(args, caps: Caps, watch: Stopwatch):
    S, E, descriptor = _load(args, caps)
    S = _need_semigroup(S, "category")
    with watch.stage("build"):
        C = build_LS(S, args.side, verify=False)
    results = {"category": C.to_dict()}
    with watch.stage("NC"):
        report = verify_NC(C, caps)
        results["NC"] = report.to_dict()
    if args.action == "cones":
        with watch.stage("cones"):
            results["cone_semigroup"] = cone_semigroup(C, caps, max_workers=args.workers).to_dict()
    elif args.action == "check":
        with watch.stage("principal"):
            check_principal_homomorphism(C)
            results["principal_kernel"] = [list(b) for b in check_principal_kernel(C).blocks]
        if C.n_objects <= 3:
            with watch.stage("recovery"):
                results["recovery"] = recover_category(C, caps).to_dict()
    out = analysis_report(descriptor, results, watch)
    if not report.passed:
        raise WitnessFailure(out)
    return out


def cmd_corpus(args, caps: Caps, watch: Stopwatch):
    with watch.stage("enumerate"):
        semigroups = list(enumerate_corpus(args.max_order, caps=caps, max_workers=args.workers))
    failed = False
    capped = False
    stream = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        for kind in args.check:
            check = make_check(
                kind,
                semigroups,
                out_path=args.dump_dir,
                silent=args.no_progress,
                save_json=args.dump_dir is not None,
                caps=caps,
                options={"seed": args.seed or 0},
            )
            with watch.stage(kind):
                check.run(max_workers=args.workers)
            check.write_ndjson(stream)
            summary = check.summary()
            logger.info(f"{kind}: {summary}")
            failed = failed or summary[FAIL] + summary[BUG] > 0
            capped = capped or summary[CAP] > 0
            if args.summary:
                df = check.into_DataFrame()
                sys.stderr.write(df.groupby(["order", "status"]).size().unstack(fill_value=0).to_string() + "\n")
        stream.write(dumps_line({"summary": {"max_order": args.max_order, "inputs": len(semigroups), "checks": args.check}, "timing": watch.to_dict()}) + "\n")
    finally:
        if stream is not sys.stdout:
            stream.close()
    if failed:
        return EXIT_WITNESS
    return EXIT_CAP if capped else EXIT_OK


def _add_input(p):
    p.add_argument("input", nargs="?", help="Cayley table (.cay) or biordered set (.bos)")
    p.add_argument("--family", nargs="+", metavar=("KIND", "PARAM"), help="generate the input instead of reading it")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write the report here instead of stdout")
    common.add_argument("--json", action="store_true", help="emit the full JSON report")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    common.add_argument("--no-progress", action="store_true", help="hide progress bars")
    common.add_argument("--seed", type=int, default=None, help="seed for extra randomized spot checks")
    common.add_argument("-j", "--workers", type=int, default=1, help="worker threads (default: 1)")
    for f in fields(Caps):
        common.add_argument(f"--cap-{f.name.replace('_', '-')}", dest=f"cap_{f.name}", type=int, default=None,
                            help=f"override cap {f.name} (default: {f.default})")

    parser = argparse.ArgumentParser(
        prog="semigroups",
        description="Structure of finite regular semigroups",
        epilog=f"Caps can also be set with environment variables {ENV_PREFIX}<CAP>, e.g. {ENV_PREFIX}MAX_ELEMENTS=1024. Flags win over the environment.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a family member as a Cayley table")
    p.add_argument("kind", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="+", type=int)

    p = sub.add_parser("analyze", parents=[common], help="regularity, Green's relations, biorder and pseudo-inverse classification")
    _add_input(p)

    p = sub.add_parser("biorder", parents=[common], help="extract a biordered set, check its axioms, list sandwich sets")
    p.add_argument("action", choices=["extract", "check", "sandwich"])
    _add_input(p)
    p.add_argument("--pair", nargs=2, metavar=("E", "F"), help="sandwich set of one pair, by label or index")

    p = sub.add_parser("fundamental", parents=[common], help="T_E/p as a Cayley table, or the fundamental image of S")
    p.add_argument("action", choices=["build", "image"])
    _add_input(p)

    p = sub.add_parser("groupoid", parents=[common], help="G(S), inductive axioms and reconstruction, singular squares")
    p.add_argument("action", choices=["roundtrip", "squares"])
    _add_input(p)
    p.add_argument("--include-trivial", action="store_true", help="also list degenerate squares")

    p = sub.add_parser("presentation", parents=[common], help="IG/RIG presentations and cycle sets")
    _add_input(p)
    p.add_argument("--kind", choices=["IG", "RIG"], default="IG")
    p.add_argument("--gap", action="store_true", help="GAP syntax instead of plain text")
    p.add_argument("--cycles", choices=["none", "gamma0", "gamma_tau"], default="none")
    p.add_argument("--cycles-file", help="check a user supplied cycle set")

    p = sub.add_parser("category", parents=[common], help="normal categories and cones")
    p.add_argument("action", choices=["build", "cones", "check"])
    _add_input(p)
    p.add_argument("--side", choices=["L", "R"], default="L")

    p = sub.add_parser("corpus", parents=[common], help="run checks over every semigroup up to an order")
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--check", action="append", choices=sorted(CHECKS), help="repeatable (default: axioms)")
    p.add_argument("--summary", action="store_true", help="print a table of statuses per order to stderr")
    p.add_argument("--dump-dir", help="also dump each check's results as one JSON file in this directory")
    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "biorder": cmd_biorder,
    "fundamental": cmd_fundamental,
    "groupoid": cmd_groupoid,
    "presentation": cmd_presentation,
    "category": cmd_category,
}


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    logging.basicConfig(
        level={0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if args.command == "corpus" and not args.check:
        args.check = ["axioms"]
    watch = Stopwatch()
    try:
        caps = _caps(args)
        if args.command == "gen":
            cmd_gen(args, caps)
            return EXIT_OK
        if args.command == "corpus":
            return cmd_corpus(args, caps, watch)
        report = COMMANDS[args.command](args, caps, watch)
        if report is not None:
            _emit(args, report)
        return EXIT_OK
    except WitnessFailure as e:
        _emit(args, e.report)
        return EXIT_WITNESS
    except (argparse.ArgumentTypeError, ValueError, OSError) as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except _INPUT_ERRORS as e:
        sys.stderr.write(dumps(e.to_dict()) + "\n")
        return EXIT_USAGE
    except CapExceeded as e:
        sys.stderr.write(dumps(e.to_dict()) + "\n")
        return EXIT_CAP
    except SemigroupError as e:
        sys.stderr.write(dumps(e.to_dict()) + "\n")
        return EXIT_WITNESS


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
