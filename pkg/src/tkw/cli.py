"""Command line front end: ``tkw <command> ...``.

Inputs are a Gauss code, a path to a ``.gauss`` file (``path#label`` picks an
entry), or ``corpus:REF`` for the shipped corpus (e.g. ``corpus:L6a1/K1``).

Exit codes: 0 equal/pass, 1 distinct, 2 unknown, 3 property violation,
64 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus
from .g2 import conjugate_equal, phi2
from .gauss import (
    GaussCodeError,
    LinearGaussDiagram,
    Parity,
    parse_gauss_code,
    reverse_diagram,
    serialize,
)
from .gbar import abelianize, compare, default_budget, phibar
from .fuzz import run_fuzz
from .moves import _resolve_r3, apply_move, enumerate_moves, parse_move
from .words import letters_phi2, letters_phibar, render_word

EXIT_EQUAL, EXIT_DISTINCT, EXIT_UNKNOWN, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


def load_input(arg: str) -> LinearGaussDiagram:
    if arg.startswith("corpus:"):
        try:
            return corpus.get(arg[len("corpus:"):]).diagram
        except KeyError as exc:
            raise UsageError(str(exc)) from exc
    path, _, label = arg.partition("#")
    if path and os.path.isfile(path):
        found = corpus.load_file(path)
        if label:
            found = [e for e in found if e.label == label]
        if not found:
            raise UsageError(f"no diagram {label!r} in {path}")
        return found[0].diagram
    return parse_gauss_code(arg)


def _stats(d: LinearGaussDiagram) -> dict:
    odd = [c for c in d.classification if c.parity is Parity.ODD]
    return {
        "m": d.m,
        "odd": len(odd),
        "first": sum(1 for c in odd if c.type.value == "first"),
        "second": sum(1 for c in odd if c.type.value == "second"),
    }


def invariant_bundle(d: LinearGaussDiagram, scheme: str) -> dict:
    if scheme == "phi2":
        return {
            "scheme": scheme,
            "code": serialize(d),
            "raw_word": render_word(letters_phi2(d)),
            "reduced": phi2(d).to_json(),
            "stats": _stats(d),
        }
    word = phibar(d)
    return {
        "scheme": scheme,
        "code": serialize(d),
        "raw_word": render_word(letters_phibar(d)),
        "reduced": str(word),
        "abelian": list(abelianize(word)),
        "stats": _stats(d),
    }


def parse_report(d: LinearGaussDiagram) -> dict:
    return {
        "code": serialize(d),
        "m": d.m,
        "chords": [
            {
                "id": ch.id,
                "over": ch.over_pos,
                "under": ch.under_pos,
                "sign": ch.sign,
                "parity": cls.parity.value,
                "type": None if cls.type is None else cls.type.value,
                "linked": sorted(d.link_sets[ch.id - 1]),
            }
            for ch, cls in zip(d.chords, d.classification)
        ],
        "phi2_word": render_word(letters_phi2(d)),
        "phibar_word": render_word(letters_phibar(d)),
    }


def compare_diagrams(d1, d2, scheme: str, budget: int | None = None, closed: bool = False) -> dict:
    if scheme == "phi2":
        x, y = phi2(d1), phi2(d2)
        same = conjugate_equal(x, y) if closed else x == y
        return {
            "verdict": "equal" if same else "distinct",
            "witness": None,
            "budget_spent": 0,
            "scheme": scheme,
            "closed": closed,
        }
    if closed:
        raise UsageError("--closed is only available for --scheme phi2")
    out = compare(phibar(d1), phibar(d2), budget).to_json()
    out["scheme"] = scheme
    return out


def _emit(args, data: dict, text: str) -> None:
    print(json.dumps(data, sort_keys=True) if args.json else text)


def cmd_parse(args) -> int:
    d = load_input(args.input)
    rep = parse_report(d)
    lines = [f"m = {d.m}"]
    for ch in rep["chords"]:
        kind = ch["parity"] + (f"/{ch['type']}" if ch["type"] else "")
        lines.append(
            f"  chord {ch['id']}: over {ch['over']}, under {ch['under']}, "
            f"sign {'+' if ch['sign'] > 0 else '-'}, {kind}"
        )
    lines.append(f"phi2 letters:   {rep['phi2_word']}")
    lines.append(f"phibar letters: {rep['phibar_word']}")
    _emit(args, rep, "\n".join(lines))
    return 0


def cmd_word(args) -> int:
    d = load_input(args.input)
    word = letters_phi2(d) if args.scheme == "phi2" else letters_phibar(d)
    _emit(args, {"scheme": args.scheme, "word": render_word(word)}, render_word(word))
    return 0


def cmd_invariant(args) -> int:
    d = load_input(args.input)
    b = invariant_bundle(d, args.scheme)
    if args.scheme == "phi2":
        text = f"{b['raw_word']}\n= {phi2(d)}"
    else:
        text = f"{b['raw_word']}\n= {b['reduced']}\nabelian image {tuple(b['abelian'])}"
    _emit(args, b, text)
    return 0


def cmd_compare(args) -> int:
    d1, d2 = load_input(args.input1), load_input(args.input2)
    res = compare_diagrams(d1, d2, args.scheme, args.budget, args.closed)
    text = res["verdict"]
    if res["witness"]:
        text += f" (abelian images {tuple(res['witness'][0])} vs {tuple(res['witness'][1])})"
    elif res["verdict"] == "unknown":
        text += f" (budget exhausted after {res['budget_spent']} words)"
    _emit(args, res, text)
    return {"equal": EXIT_EQUAL, "distinct": EXIT_DISTINCT, "unknown": EXIT_UNKNOWN}[res["verdict"]]


def cmd_moves(args) -> int:
    d = load_input(args.input)
    if not args.apply:
        listed = [str(mv) for mv in enumerate_moves(d)]
        _emit(args, {"code": serialize(d), "moves": listed}, "\n".join(listed))
        return 0
    trajectory = [d]
    for spec in args.apply:
        mv = _resolve_r3(d, parse_move(spec))
        d = apply_move(d, mv)
        trajectory.append(d)
    codes = [serialize(x) for x in trajectory]
    _emit(args, {"trajectory": codes}, "\n".join(codes))
    return 0


def cmd_reverse(args) -> int:
    d = reverse_diagram(load_input(args.input))
    _emit(args, {"code": serialize(d)}, serialize(d))
    return 0


def cmd_fuzz(args) -> int:
    if args.iters < 0 or args.max_moves < 0:
        raise UsageError("--iters and --max-moves must be non-negative")
    rep = run_fuzz(args.seed, args.iters, args.max_moves, args.scheme, args.budget)
    if rep["status"] == "pass":
        text = f"pass: {rep['iters']} walks, {rep['steps_checked']} moves checked ({args.scheme})"
    else:
        ce = rep["counterexample"]
        text = "\n".join(
            [f"FAIL at iteration {ce['iteration']}, step {ce['step']}: {ce['reason']}"]
            + [f"  {code}" for code in ce["trajectory"]]
            + [f"reproduce with: {ce['reproduce']}"]
        )
    _emit(args, rep, text)
    return EXIT_EQUAL if rep["status"] == "pass" else EXIT_VIOLATION


def _budget(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("budget must be >= 0")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tkw", description="Group-valued invariants of long knots in the full torus.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="machine readable output")
        p.set_defaults(func=func)
        return p

    def scheme(p):
        p.add_argument("--scheme", choices=("phi2", "phibar"), default="phi2")

    p = add("parse", cmd_parse, "chord table and letter previews")
    p.add_argument("input")
    p = add("word", cmd_word, "raw letter word")
    p.add_argument("input")
    scheme(p)
    p = add("invariant", cmd_invariant, "reduced invariant")
    p.add_argument("input")
    scheme(p)
    p = add("compare", cmd_compare, "compare the invariants of two diagrams")
    p.add_argument("input1")
    p.add_argument("input2")
    scheme(p)
    p.add_argument("--budget", type=_budget, default=None,
                   help=f"search budget for phibar (default {default_budget()}, env TKW_BUDGET)")
    p.add_argument("--closed", action="store_true", help="compare phi2 up to conjugacy")
    p = add("moves", cmd_moves, "list applicable moves or apply some")
    p.add_argument("input")
    p.add_argument("--apply", action="append", metavar="MOVE",
                   help='e.g. "R1a:insert@3" or "R3a@c1,c2,c3"; repeatable')
    p = add("reverse", cmd_reverse, "reverse the orientation")
    p.add_argument("input")
    p = add("fuzz", cmd_fuzz, "check invariance along random move walks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--max-moves", type=int, default=10)
    p.add_argument("--budget", type=_budget, default=None)
    scheme(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GaussCodeError, UsageError) as exc:
        kind = type(exc).__name__
        print(f"tkw: {kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
