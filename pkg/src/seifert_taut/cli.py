"""Command-line interface: ``seifert-taut classify|witness|family|census|verify``.

Exit codes: 0 success, 1 a verification report has failures, 2 input errors.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import census
from .census import Bounds, Claim, classify, default_bounds, emit, family, verify
from .construction import construct_witness
from .errors import ConstructionError, InvalidInvariant, ParseError, SeifertError
from .invariants import SeifertInvariant, Slope, normalize

_TOKEN = re.compile(r"[+-]?\d+|[();,/]")


def _tokens(text: str, pos: int):
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            return
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, pos)
        yield m.group(), pos
        pos = m.end()


def parse_invariant(text: str) -> SeifertInvariant:
    """Parse ``(c; b1/a1, ..., bn/an)``, optionally prefixed by ``M``.

    A three-part form ``(g; c; slopes)`` is accepted when the genus g is 0.
    The result is normalized.
    """
    start = len(text) - len(text.lstrip())
    if text[start:start + 1] in ("M", "m"):
        start += 1
    toks = list(_tokens(text, start))
    i = 0

    def fail(msg):
        pos = toks[i][1] if i < len(toks) else len(text)
        raise ParseError(msg, text, pos)

    def expect(sym):
        nonlocal i
        if i >= len(toks) or toks[i][0] != sym:
            fail(f"expected {sym!r}")
        i += 1

    def integer():
        nonlocal i
        if i >= len(toks) or toks[i][0] in "();,/":
            fail("expected an integer")
        i += 1
        return int(toks[i - 1][0])

    expect("(")
    head = [integer()]
    expect(";")
    # lookahead: a second ';' before any '/' means a genus field
    if i + 1 < len(toks) and toks[i + 1][0] == ";":
        head.append(integer())
        expect(";")
    if len(head) == 2 and head[0] != 0:
        raise InvalidInvariant(f"genus {head[0]} base surfaces are not supported; the base must be a sphere")
    c = head[-1]
    slopes = []
    while True:
        b = integer()
        expect("/")
        a = integer()
        slopes.append(Slope(b, a))
        if i < len(toks) and toks[i][0] == ",":
            i += 1
            continue
        break
    expect(")")
    if i != len(toks):
        fail("trailing input")
    return normalize(SeifertInvariant(c, tuple(slopes)))


def _classify_payload(M: SeifertInvariant) -> dict:
    rec = classify(M)
    row = rec.to_row()
    v = rec.verdict
    row = {
        "invariant": str(rec.invariant),
        "notation": rec.invariant.m_notation(),
        **row,
        "reduced": str(v.reduced) if v.reduced is not None else None,
        "constructed": rec.constructed.as_dict() if rec.constructed else None,
    }
    return row


def _print(payload: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for k, v in payload.items():
            if isinstance(v, dict):
                v = json.dumps(v)
            elif isinstance(v, list):
                v = ", ".join(map(str, v))
            print(f"{k}: {'-' if v is None else v}")


def cmd_classify(args) -> int:
    _print(_classify_payload(parse_invariant(args.invariant)), args.format)
    return 0


def cmd_witness(args) -> int:
    M = parse_invariant(args.invariant)
    try:
        trace = construct_witness(M)
    except ConstructionError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    _print({"input": str(M), **trace.as_dict()}, args.format)
    return 0


def _family_params(args) -> dict:
    params = {}
    for key in ("n", "k", "k_max", "a3", "b3", "a_max", "b_max"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    if args.b is not None:
        params["b"] = args.b
    if args.tail is not None:
        params["tail"] = [tuple(map(int, s.split("/"))) for s in args.tail.split(",")]
    return params


def cmd_family(args) -> int:
    members = family(args.name, **_family_params(args))
    count = emit(census.records_for(members), args.format, args.out)
    print(f"{count} members of {args.name}", file=sys.stderr)
    return 0


def cmd_census(args) -> int:
    if args.qhs:
        b0 = tuple(args.b0) if args.b0 else None
        invariants = census.qhs_invariants(args.n, args.amax, b0)
    else:
        if args.b0:
            print("--b0 only applies to --qhs censuses", file=sys.stderr)
            return 2
        invariants = census.zhs_invariants(args.n, args.amax)
    count = emit(census.records_for(invariants), args.format, args.out)
    print(f"{count} records written to {args.out}", file=sys.stderr)
    return 0


_VERBS = {
    "main1": [Claim.MAIN_THEOREM_1],
    "main2": [Claim.MAIN_THEOREM_2],
    "geom-notaut": [Claim.GEOM_NO_TAUT],
    "prop-global": [Claim.PROP_GLOBAL],
    "claims": [Claim.CLAIM_8_2, Claim.LEMMA_8_3],
    "witness-agreement": [Claim.WITNESS_AGREEMENT],
    "zhs-unique": [Claim.ZHS_UNIQUENESS],
}


def cmd_verify(args) -> int:
    failed = False
    for claim in _VERBS[args.claim]:
        base = default_bounds(claim)
        bounds = Bounds(
            n=tuple(args.n) if args.n else base.n,
            a_max=args.amax if args.amax is not None else base.a_max,
            b0_range=tuple(args.b0) if args.b0 else base.b0_range,
            k_max=base.k_max,
            b_max=base.b_max,
        )
        report = verify(claim, bounds)
        failed |= not report.passed
        if args.out == "-" and args.format == "jsonl":
            print(json.dumps(report.as_dict(), indent=2))
        else:
            emit(report, args.format, args.out)
        status = "PASS" if report.passed else "FAIL"
        print(f"{claim.value}: {status} ({report.checked} checked, {len(report.failures)} failures)", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="seifert-taut", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn in (("classify", cmd_classify), ("witness", cmd_witness)):
        s = sub.add_parser(name)
        s.add_argument("invariant", help='e.g. "(-1; 1/2, 1/3, 1/7)"; the first entry is c = -b0')
        s.add_argument("--format", choices=("json", "text"), default="json")
        s.set_defaults(func=fn)

    s = sub.add_parser("family")
    s.add_argument("name", choices=census.FAMILY_NAMES)
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--k-max", dest="k_max", type=int)
    s.add_argument("--a3", type=int)
    s.add_argument("--b3", type=int)
    s.add_argument("--a-max", dest="a_max", type=int)
    s.add_argument("--b", type=int, nargs="+")
    s.add_argument("--b-max", dest="b_max", type=int)
    s.add_argument("--tail", help='comma separated slopes, e.g. "1/7,1/9"')
    s.add_argument("--out", default="-")
    s.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("census")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--amax", type=int, required=True)
    kind = s.add_mutually_exclusive_group()
    kind.add_argument("--zhs", action="store_true", default=True)
    kind.add_argument("--qhs", action="store_true")
    s.add_argument("--b0", type=int, nargs="+")
    s.add_argument("--out", default="-")
    s.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify")
    s.add_argument("claim", choices=tuple(_VERBS))
    s.add_argument("--n", type=int, nargs="+")
    s.add_argument("--amax", type=int)
    s.add_argument("--b0", type=int, nargs="+")
    s.add_argument("--out", default="-")
    s.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SeifertError, ValueError, KeyError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
