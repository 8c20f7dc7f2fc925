"""Command-line front end.

Every operation is one subcommand; the default output is aligned
human-readable text and ``--json`` switches to a single JSON document.
Exit status: 0 for any computed answer (including negative decisions such
as "no witness"), 2 for invalid input or violated preconditions, 1 for
internal errors.  Output is deterministic for a fixed invocation.

Integers whose magnitude reaches 2**53 are emitted as exact decimal
strings in JSON so consumers with double-precision number parsing cannot
lose digits.

Set MBS_LOG to quiet (default), info or debug to control logging.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .embedding import (
    construct_certificate,
    linking_matrix_of_braid,
    parse_braid_word,
    s3_obstruction,
)
from .genus0 import (
    Case1Witness,
    Genus0Decision,
    Genus0Verdict,
    case1_bruteforce,
    genus0_report,
    slopes_from_witness,
)
from .homology import homology_h1
from .surfaces import MultibranchedSurface, is_regular, make_xg, parse_surface

log = logging.getLogger("mbsurf")

_LOG_LEVELS = {"quiet": logging.WARNING, "info": logging.INFO, "debug": logging.DEBUG}
_JSON_SAFE = 1 << 53

_NO_REALIZATION_LINE = "no Case 1 or Case 2 realization in any assignment"


def _configure_logging() -> None:
    level = _LOG_LEVELS.get(os.environ.get("MBS_LOG", "quiet"), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    log.setLevel(level)


def _jsonable(value):
    """Exact JSON form: large integers become decimal strings."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= _JSON_SAFE else value
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    return value


def _emit(doc: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(_jsonable(doc)))
    else:
        for line in lines:
            print(line)


def _parse_degrees(text: str) -> list[int]:
    try:
        return [int(token) for token in text.split(",")]
    except ValueError:
        raise ValueError(f"--degrees expects a comma-separated list of integers, got {text!r}") from None


def _load_surface(args: argparse.Namespace) -> MultibranchedSurface:
    by_file = args.file is not None
    by_family = args.degrees is not None or args.genus is not None
    if by_file and by_family:
        raise ValueError("give either --file or --genus/--degrees, not both")
    if by_file:
        try:
            with open(args.file, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise ValueError(f"cannot read {args.file}: {exc}") from None
        return parse_surface(text)
    if args.degrees is None:
        raise ValueError("one of --file or --degrees is required")
    return make_xg(args.genus if args.genus is not None else 0, _parse_degrees(args.degrees))


def _describe_surface(args: argparse.Namespace) -> str:
    if args.file is not None:
        return f"surface from {args.file}"
    genus = args.genus if args.genus is not None else 0
    return f"one sector of genus {genus}, degrees ({args.degrees})"


def _cmd_homology(args: argparse.Namespace) -> int:
    surface = _load_surface(args)
    group = homology_h1(surface)
    doc = {"rank": group.rank, "torsion": list(group.torsion)}
    lines = [
        _describe_surface(args),
        f"H1 = {group}",
        f"rank: {group.rank}",
        f"torsion: {list(group.torsion)}",
    ]
    _emit(doc, lines, args.json)
    return 0


def _cmd_regular(args: argparse.Namespace) -> int:
    surface = _load_surface(args)
    regular = is_regular(surface)
    _emit({"regular": regular},
          [_describe_surface(args), f"regular: {'yes' if regular else 'no'}"],
          args.json)
    return 0


def _cmd_obstruct(args: argparse.Namespace) -> int:
    surface = _load_surface(args)
    report = s3_obstruction(surface)
    doc = {
        "regular": report.regular,
        "torsion": list(report.torsion),
        "verdict": report.verdict.value,
    }
    lines = [
        _describe_surface(args),
        f"regular: {'yes' if report.regular else 'no'}",
        f"torsion: {list(report.torsion)}",
        f"verdict: {report.verdict.value}",
    ]
    _emit(doc, lines, args.json)
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    cert = construct_certificate(args.p1, args.p2, args.p3)
    a = cert.linking
    doc = {
        "p": list(cert.degrees),
        "a": [a.a12, a.a13, a.a23],
        "q": list(cert.slopes),
        "linking_check": all(cert.zero_linking),
        "gcd_check": all(cert.coprime),
        "braid": str(cert.braid),
    }
    sums = cert.linking_sums()
    lines = [
        f"degrees: p1={cert.degrees[0]} p2={cert.degrees[1]} p3={cert.degrees[2]}",
        f"linking numbers: a12={a.a12} a13={a.a13} a23={a.a23}",
        f"cable slopes: q1={cert.slopes[0]} q2={cert.slopes[1]} q3={cert.slopes[2]}",
        f"zero linking: lk(l1,K)={sums[0]} lk(l2,K)={sums[1]} lk(l3,K)={sums[2]}"
        f" [{'ok' if all(cert.zero_linking) else 'FAILED'}]",
        f"coprime slopes: {'ok' if all(cert.coprime) else 'FAILED'}"
        f" (gcd(p_i, q_i) = 1 for each i)",
        f"braid: {cert.braid}",
    ]
    _emit(doc, lines, args.json)
    return 0


def _genus0_doc(decision: Genus0Decision, oracle: dict | None) -> dict:
    assignments = []
    for idx, asg in enumerate(decision.assignments):
        entry: dict = {"p1": asg.p1, "p2": asg.p2, "p3": asg.p3}
        if asg.case1 is not None:
            r, s, eps = asg.case1
            entry["case1"] = {"r": r, "s": s, "eps": eps}
        else:
            entry["case1"] = None
            entry["case1_exhaustion"] = [
                {"eps": ev.eps, "n": ev.n, "divisors": list(ev.divisors)}
                for ev in asg.case1_exhaustion
            ]
        if asg.case2 is not None:
            entry["case2"] = {"t": asg.case2.t, "p2": asg.case2.p2, "p3": asg.case2.p3}
        else:
            entry["case2"] = None
        if oracle is not None:
            entry["oracle"] = oracle[idx]
        assignments.append(entry)
    return {
        "triple": list(decision.triple),
        "verdict": decision.verdict.value,
        "assignments": assignments,
    }


def _genus0_lines(decision: Genus0Decision, oracle: dict | None) -> list[str]:
    lines = [f"triple: {decision.triple}"]
    for idx, asg in enumerate(decision.assignments):
        lines.append(f"assignment p1={asg.p1} (pair {asg.p2}, {asg.p3}):")
        if asg.case1 is not None:
            r, s, eps = asg.case1
            lines.append(f"  case 1: witness r={r} s={s} ({s}*{asg.p2} + {r}*{asg.p3}"
                         f" + {s}*{r}*{asg.p1} = {eps})")
        else:
            for ev in asg.case1_exhaustion:
                sign = "+" if ev.eps > 0 else "-"
                lines.append(f"  case 1: no witness for N({sign}1) = {ev.n},"
                             f" divisors {list(ev.divisors)}")
        if asg.case2 is not None:
            hit = asg.case2
            lines.append(f"  case 2: t={hit.t} with p3={hit.p3} = 1 + {hit.t}*{asg.p1}"
                         f" (p2={hit.p2})")
        else:
            lines.append(f"  case 2: none (neither {asg.p2} nor {asg.p3} is 1 mod {asg.p1})")
        if oracle is not None:
            found = oracle[idx]
            if found is None:
                lines.append("  oracle: no witness within bound")
            else:
                lines.append(f"  oracle: witness r={found['r']} s={found['s']} eps={found['eps']}")
    realized = decision.realization()
    if realized is None:
        lines.append(_NO_REALIZATION_LINE)
    else:
        asg, verdict = realized
        if verdict is Genus0Verdict.REALIZABLE_CASE2:
            hit = asg.case2
            lines.append(f"realizable as Case 2: p1={asg.p1}, p3={hit.p3}, t={hit.t}")
        else:
            r, s, eps = asg.case1
            lines.append(f"realizable as Case 1: p1={asg.p1}, r={r}, s={s}, eps={eps}")
    return lines


def _cmd_genus0(args: argparse.Namespace) -> int:
    decision = genus0_report(args.a, args.b, args.c)
    oracle = None
    if args.oracle:
        oracle = {}
        for idx, asg in enumerate(decision.assignments):
            found = case1_bruteforce(asg.p1, asg.p2, asg.p3, args.bound)
            oracle[idx] = (None if found is None
                           else {"r": found[0], "s": found[1], "eps": found[2]})
            agree = (found is not None) == (asg.case1 is not None)
            log.info("oracle agreement for p1=%s: %s", asg.p1, agree)
    _emit(_genus0_doc(decision, oracle), _genus0_lines(decision, oracle), args.json)
    return 0


def _cmd_slopes(args: argparse.Namespace) -> int:
    witness = Case1Witness(args.p, args.q, args.r, args.s, args.n2, args.n3)
    data = slopes_from_witness(witness)
    names = ("C1", "C2", "C3")
    doc = {
        "witness": {"p": witness.p, "q": witness.q, "r": witness.r,
                    "s": witness.s, "n2": witness.n2, "n3": witness.n3},
        "determinant": witness.determinant,
        "components": [
            {
                "component": name,
                "raw": list(raw),
                "slope": [slope.lam, slope.mu],
                "multiplicity": mult,
                "integral": slope.is_integral,
                "meridional": slope.is_meridional,
            }
            for name, raw, slope, mult in zip(names, data.raw, data.slopes, data.multiplicities)
        ],
    }
    lines = [
        f"witness: p={witness.p} q={witness.q} r={witness.r} s={witness.s}"
        f" n2={witness.n2} n3={witness.n3}  (ps - qr = {witness.determinant})",
    ]
    for name, raw, slope, mult, bad in zip(names, data.raw, data.slopes,
                                           data.multiplicities, data.degenerate):
        flag = "  [multiplicity <= 1: not admissible]" if bad else ""
        lines.append(f"{name}: raw {raw}  slope {slope}  multiplicity {mult}{flag}")
    _emit(doc, lines, args.json)
    return 0


def _cmd_braid_linking(args: argparse.Namespace) -> int:
    word = parse_braid_word(" ".join(args.word))
    matrix = linking_matrix_of_braid(word)
    doc = {"a12": matrix.a12, "a13": matrix.a13, "a23": matrix.a23}
    lines = [
        f"word: {word if str(word) else '(empty)'}",
        "permutation: identity (pure)",
        f"a12={matrix.a12} a13={matrix.a13} a23={matrix.a23}",
    ]
    _emit(doc, lines, args.json)
    return 0


def _add_surface_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--file", help="surface document (JSON) to analyze")
    sub.add_argument("--genus", type=int, help="one-sector family genus (default 0)")
    sub.add_argument("--degrees", help="comma-separated covering degrees, e.g. 2,3,5")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mbs",
        description="Exact-arithmetic embeddability toolkit for multibranched surfaces.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("homology", help="first homology (rank and invariant factors)")
    _add_surface_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_homology)

    p = sub.add_parser("regular", help="uniform covering degrees at every branch?")
    _add_surface_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_regular)

    p = sub.add_parser("obstruct", help="3-sphere embedding obstructions")
    _add_surface_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_obstruct)

    p = sub.add_parser("construct", help="arithmetic embedding certificate for three degrees")
    p.add_argument("p1", type=int)
    p.add_argument("p2", type=int)
    p.add_argument("p3", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("genus0", help="genus-0 realization conditions for a triple")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--oracle", action="store_true",
                   help="also run the bounded brute-force search per assignment")
    p.add_argument("--bound", type=int, default=1000,
                   help="brute-force bound for --oracle (default 1000)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_genus0)

    p = sub.add_parser("slopes", help="boundary slopes from a Case-1 witness")
    for name in ("p", "q", "r", "s", "n2", "n3"):
        p.add_argument(name, type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_slopes)

    p = sub.add_parser("braid-linking", help="linking matrix of a closed pure 3-braid")
    p.add_argument("word", nargs="*", help="braid word tokens, e.g. s1^12 s2 s1^-26 s2^-15")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_braid_linking)

    return parser


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    log.debug("dispatch %s", args.subcommand)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        log.exception("internal error")
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
