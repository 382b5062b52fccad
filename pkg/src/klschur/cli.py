"""Command-line entry point: ``klschur <subcommand> ...``.

Exit codes: 0 success, 1 a verification or invariant failed, 2 usage error
(including a tripped size guard).
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from typing import Sequence

from . import __version__
from .errors import KLSchurError, SizeGuardExceeded
from .hecke import HeckeAlgebra, Report
from .qschur import MnrIndex, QSchurAlgebra

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- serialisation helpers -----------------------------------------------------

def _s(x) -> str:
    return str(x)


def _matrix(A) -> list[list[str]]:
    return [[_s(x) for x in row] for row in A]


def _reports(reports: Sequence[Report]) -> list[dict]:
    return [r.to_json() for r in reports]


def _all_pass(reports: Sequence[Report]) -> bool:
    return all(r.passed for r in reports)


def _index_json(S: QSchurAlgebra, k: int) -> dict:
    return {"ordinal": k, "label": S.indices[k].label(), **S.indices[k].to_json()}


def _plain(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_plain(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            return pad + " ".join(map(str, obj))
        return "\n".join(_plain(x, indent) if not isinstance(x, dict)
                         else _plain(x, indent) + ("\n" + pad + "-" if i < len(obj) - 1 else "")
                         for i, x in enumerate(obj))
    return pad + str(obj)


# -- guards and argument parsing -----------------------------------------------

def mnr_size(n: int, r: int) -> int:
    """|M(n, r)|: n x n non-negative integer matrices with entry sum r."""
    return comb(n * n + r - 1, r)


def _guard(args, gram: bool) -> None:
    if args.force:
        return
    if args.r > args.max_r:
        raise SizeGuardExceeded(f"r = {args.r} exceeds the guard {args.max_r}; use --force")
    n = getattr(args, "n", None)
    if gram and n is not None and mnr_size(n, args.r) > args.max_size:
        raise SizeGuardExceeded(
            f"|M({n},{args.r})| = {mnr_size(n, args.r)} exceeds the guard {args.max_size}; use --force")


def _index(S: QSchurAlgebra, text: str) -> int:
    text = text.strip()
    if text.isdigit():
        k = int(text)
        if not 0 <= k < S.size:
            raise UsageError(f"ordinal {k} out of range 0..{S.size - 1}")
        return k
    try:
        idx = MnrIndex.parse(text, S.r)
    except (ValueError, KLSchurError) as exc:
        raise UsageError(f"cannot parse index {text!r}: {exc}") from exc
    if idx not in S.index:
        raise UsageError(f"{text!r} is not an element of M({S.n},{S.r})")
    return S.index[idx]


def _schur_overrides(S: QSchurAlgebra, items: Sequence[str] | None) -> dict:
    from .celltrace import iso_classes
    from .exactarith import parse_ratfunc
    if not items:
        return {}
    classes = iso_classes(S)
    by_label = {c.label(): c.ordinal for c in classes}
    by_label.update({",".join(map(str, c.shape)): c.ordinal for c in classes})
    out = {}
    for item in items:
        key, sep, expr = item.partition("=")
        if not sep:
            raise UsageError(f"--schur expects CLASS=EXPR, got {item!r}")
        key = key.strip()
        if key.isdigit() and int(key) < len(classes):
            k = int(key)
        elif key in by_label:
            k = by_label[key]
        else:
            raise UsageError(f"unknown class {key!r}; known: {sorted(by_label)}")
        try:
            value = parse_ratfunc(expr)
        except Exception as exc:
            raise UsageError(f"cannot parse {expr!r}: {exc}") from exc
        if not value:
            raise UsageError(f"Schur element for class {key} must be nonzero")
        out[k] = value
    return out


def _form(S: QSchurAlgebra, args):
    from .celltrace import TraceForm
    return TraceForm(S, _schur_overrides(S, args.schur))


# -- subcommands -----------------------------------------------------------

def cmd_hecke(args) -> tuple[dict, bool]:
    _guard(args, gram=False)
    H = HeckeAlgebra(args.r)
    el = H.elements
    if args.action == "klpoly":
        rows = [{"y": el[y].word_str(), "w": el[w].word_str(), "p": _s(p)}
                for w in range(H.size) for y, p in sorted(H._kl[w].items())]
        return {"klPolynomials": rows}, True
    if args.action == "afn":
        return {"elements": [{"w": el[k].word_str(), "a": H.a_idx(k), "Delta": H._delta[k],
                              "distinguished": k in H._distinguished} for k in range(H.size)]}, True
    if args.action == "cells":
        left, right, lr = H.cells_idx()

        def cls(pre):
            return [[el[k].word_str() for k in c] for c in pre.classes]
        return {"left": cls(left), "right": cls(right), "twoSided": cls(lr),
                "distinguished": [el[k].word_str() for k in sorted(H._distinguished)]}, True
    reports = H.verify(include_p15=not args.no_p15)
    return {"reports": _reports(reports)}, _all_pass(reports)


def cmd_qschur(args) -> tuple[dict, bool]:
    _guard(args, gram=False)
    S = QSchurAlgebra(args.n, args.r)
    if args.action == "basis":
        return {"size": S.size, "basis": [_index_json(S, k) for k in range(S.size)]}, True
    if args.action == "fconst":
        if len(args.indices) == 3:
            a, b, c = (_index(S, x) for x in args.indices)
            return {"a": _index_json(S, a), "b": _index_json(S, b), "c": _index_json(S, c),
                    "f": _s(S.product_idx(a, b).get(c, 0))}, True
        if args.indices:
            raise UsageError("fconst takes either no indices or exactly three")
        triples = [[[a, b, c], _s(f)] for a in range(S.size) for b in S.by_row.get(S.co[a], ())
                   for c, f in sorted(S.product_idx(a, b).items())]
        return {"structureConstants": triples}, True
    if args.indices:
        raise UsageError(f"{args.action} takes no indices")
    if args.action == "cells":
        left, right, lr = S.cells_idx()

        def cls(pre):
            return [[S.indices[k].label() for k in c] for c in pre.classes]
        return {"left": cls(left), "right": cls(right), "twoSided": cls(lr),
                "distinguished": [S.indices[d].label() for d in S.distinguished_idx],
                "a": {S.indices[k].label(): S.a_idx(k) for k in range(S.size)}}, True
    reports = S.verify(include_q15=not args.no_q15)
    return {"reports": _reports(reports)}, _all_pass(reports)


def cmd_wedderburn(args) -> tuple[dict, bool]:
    from .celltrace import WedderburnData
    _guard(args, gram=True)
    S = QSchurAlgebra(args.n, args.r)
    form = _form(S, args)
    out = {"traceForm": form.to_json()}
    if args.action == "gram":
        out["gram"] = _matrix(form.gram)
        return out, True
    W = WedderburnData(form)
    if args.action == "dual":
        out["dual"] = _matrix(W.gram_inv)
    elif args.action == "basis":
        out["basis"] = [{"c": S.indices[c].label(), "d": S.indices[W.d_of[c]].label(),
                         "coords": {S.indices[k].label(): _s(x) for k, x in sorted(b.coords.items())}}
                        for c, b in enumerate(W.basis)]
    elif args.action == "M":
        out["M"] = _matrix(W.M)
    elif args.action == "D":
        out["D"] = _matrix(W.D)
        out["schurElements"] = {S.indices[d].label(): _s(c) for d, c in sorted(W.schur_elements.items())}
    else:
        reports = W.verify(exhaustive_triples=not args.skip_triples)
        out["reports"] = _reports(reports)
        return out, _all_pass(reports)
    return out, True


def cmd_asymptotic(args) -> tuple[dict, bool]:
    from .asymptotic import AsymptoticAlgebra, default_forms, phi_preimage_check
    _guard(args, gram=args.action == "verify")
    S = QSchurAlgebra(args.n, args.r)
    J = AsymptoticAlgebra(S)
    if args.action == "phi":
        return {"phi": _matrix(J.phi_matrix),
                "rows": "t-basis", "columns": "theta-basis"}, True
    forms = default_forms(S)
    if args.schur:
        forms[1] = _form(S, args)
    reports = J.verify() + phi_preimage_check(J, forms)
    return {"forms": [f.to_json() for f in forms], "reports": _reports(reports)}, _all_pass(reports)


def cmd_james(args) -> tuple[dict, bool]:
    from .james import james_report
    _guard(args, gram=True)
    primes = _int_list(args.primes, "--primes")
    v_images = None
    if args.v_image is not None:
        v_images = {ell: args.v_image for ell in primes}
    S = QSchurAlgebra(args.n, args.r)
    report = james_report(_form(S, args), args.e, primes, v_images=v_images,
                          both_lifts=args.both_lifts, allow_small_ell=args.allow_small_ell)
    ok = report.chain_holds
    return {"report": report.to_json(), "chainHolds": ok}, ok


def cmd_verify_all(args) -> tuple[dict, bool]:
    from .asymptotic import AsymptoticAlgebra, default_forms, phi_preimage_check
    from .celltrace import WedderburnData
    _guard(args, gram=True)
    H = HeckeAlgebra(args.r)
    S = QSchurAlgebra(args.n, args.r, hecke=H)
    suites = {
        "hecke": H.verify(include_p15=not args.no_p15),
        "qschur": S.verify(include_q15=not args.no_q15),
        "wedderburn": WedderburnData(_form(S, args)).verify(exhaustive_triples=not args.skip_triples),
    }
    J = AsymptoticAlgebra(S)
    suites["asymptotic"] = J.verify() + phi_preimage_check(J, default_forms(S))
    ok = all(_all_pass(r) for r in suites.values())
    return {"suites": {k: _reports(v) for k, v in suites.items()}, "passed": ok}, ok


def _int_list(text: str, flag: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"{flag} expects comma-separated integers") from exc
    if not values:
        raise UsageError(f"{flag} is empty")
    return values


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--force", action="store_true", help="ignore the size guards")
    common.add_argument("--max-r", type=int, default=5)
    common.add_argument("--max-size", type=int, default=256, help="guard on |M(n,r)|")

    def nr(p, need_n=True):
        if need_n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--r", type=int, required=True)

    def schur(p):
        p.add_argument("--schur", action="append", metavar="CLASS=EXPR",
                       help="Schur element for an iso-class (ordinal or partition label)")

    parser = _Parser(prog="klschur", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("hecke", parents=[common], help="Hecke algebra of S_r")
    nr(p, need_n=False)
    p.add_argument("action", choices=["klpoly", "cells", "afn", "verify"])
    p.add_argument("--no-p15", action="store_true")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("qschur", parents=[common], help="q-Schur algebra S_q(n,r)")
    nr(p)
    p.add_argument("action", choices=["basis", "cells", "fconst", "verify"])
    p.add_argument("indices", nargs="*", help="a b c as 'lambda/word/mu' or ordinals")
    p.add_argument("--no-q15", action="store_true")
    p.set_defaults(func=cmd_qschur)

    p = sub.add_parser("wedderburn", parents=[common], help="trace form and Wedderburn basis")
    nr(p)
    schur(p)
    p.add_argument("action", choices=["gram", "dual", "basis", "M", "D", "verify"])
    p.add_argument("--skip-triples", action="store_true", help="skip the O(|M|^3) triple scans")
    p.set_defaults(func=cmd_wedderburn)

    p = sub.add_parser("asymptotic", parents=[common], help="asymptotic algebra and Phi")
    nr(p)
    schur(p)
    p.add_argument("action", choices=["phi", "verify"])
    p.set_defaults(func=cmd_asymptotic)

    p = sub.add_parser("james", parents=[common], help="rank report for James' criterion")
    nr(p)
    schur(p)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--primes", required=True, help="comma-separated, e.g. 5,13")
    p.add_argument("--v-image", type=int, help="image of v in every F_l (must give ord(v^2) = e)")
    p.add_argument("--both-lifts", action="store_true", help="also run v -> -t")
    p.add_argument("--allow-small-ell", action="store_true", help="permit primes l <= r")
    p.set_defaults(func=cmd_james)

    p = sub.add_parser("verify-all", parents=[common], help="every verification suite")
    nr(p)
    schur(p)
    p.add_argument("--no-p15", action="store_true")
    p.add_argument("--no-q15", action="store_true")
    p.add_argument("--skip-triples", action="store_true")
    p.set_defaults(func=cmd_verify_all)
    return parser


def _config(args) -> dict:
    skip = {"func", "json"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.r < 1 or getattr(args, "n", 1) < 1:
            raise UsageError("n and r must be positive")
        result, ok = args.func(args)
    except (UsageError, SizeGuardExceeded, ValueError) as exc:
        print(f"klschur: error: {exc}", file=sys.stderr)
        return 2
    except KLSchurError as exc:
        print(f"klschur: invariant failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    payload = {"schemaVersion": SCHEMA_VERSION, "config": _config(args), "result": result, "ok": ok}
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(_plain(result))
        if not ok:
            print("FAILED")
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
