"""Command-line front end.

    nasheq solve-enum  game.txt            all extreme equilibria + components
    nasheq solve-lh    game.txt --label T  one equilibrium (Lemke-Howson)
    nasheq solve-lemke game.xml --seed 7   one equilibrium (tracing from a prior)
    nasheq to-strategic game.xml           reduced strategic form payoff blocks
    nasheq to-sequence  game.xml           sequence-form constraints and payoffs
    nasheq roundtrip-xml game.xml          parse and re-emit canonical XML

Input is a file path or "-" for stdin; format is sniffed (XML vs matrix
text) unless --format forces it.  Exit codes: 0 success, 2 input error,
3 timeout.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from .errors import ComputationCancelled, GameError
from .pathfollow import lemke_howson, lemke_prior, random_prior
from .rational import parse_rational
from .reporting import (
    payoff_blocks,
    render,
    single_equilibrium_report,
    solve_enumerate,
)
from .seqform import (
    BehaviorStrategy,
    build_sequence_form,
    render_sequence_form,
    sequence_form_of_game,
)
from .strategic import BimatrixGame, MixedStrategy, game_from_text
from .tree import GameTree
from .treexml import read_game_xml, to_xml

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_TIMEOUT = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nasheq", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "solve-enum": "enumerate all extreme equilibria with components and cliques",
        "solve-lh": "one equilibrium via Lemke-Howson from a dropped label",
        "solve-lemke": "one equilibrium via Lemke's algorithm from a prior",
        "to-strategic": "print the (reduced) strategic form",
        "to-sequence": "print the sequence form",
        "roundtrip-xml": "parse a game file and re-emit canonical XML",
    }
    for name, help_text in commands.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="game file, or - for stdin")
        p.add_argument("--format", choices=["auto", "xml", "matrix"], default="auto")
        p.add_argument("--zero-sum", action="store_true", help="matrix input: B = -A")
        p.add_argument("--symmetric", action="store_true", help="matrix input: B = A^T")
        p.add_argument("--mode", choices=["rational", "decimal", "both"], default="both")
        p.add_argument("--timeout", type=float, default=None, help="seconds before exit 3")
        if name == "solve-lh":
            p.add_argument("--label", required=True, help="pure strategy to drop")
        if name == "solve-lemke":
            p.add_argument("--prior", help="prior as 'p1 ... pm ; q1 ... qn'")
            p.add_argument("--seed", type=int, help="seeded random prior")
    return parser


def load_game(args):
    """The parsed input: a BimatrixGame or a GameTree."""
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    fmt = args.format
    if fmt == "auto":
        fmt = "xml" if text.lstrip().startswith("<") else "matrix"
    if fmt == "xml":
        return read_game_xml(text)
    return game_from_text(text, zero_sum=args.zero_sum, symmetric=args.symmetric)


def _deadline_check(args):
    if args.timeout is None and args.command == "solve-enum":
        args.timeout = 300.0
    if args.timeout is None:
        return None
    deadline = time.monotonic() + args.timeout
    return lambda: time.monotonic() >= deadline


def _as_strategic(loaded) -> BimatrixGame:
    if isinstance(loaded, GameTree):
        return loaded.to_strategic_form()
    return loaded


def _resolve_label(game: BimatrixGame, name: str):
    hits = []
    if name in game.row_names:
        hits.append((1, game.row_names.index(name)))
    if name in game.col_names:
        hits.append((2, game.col_names.index(name)))
    if not hits:
        raise GameError(f"unknown strategy label {name!r}")
    if len(hits) > 1:
        raise GameError(f"strategy label {name!r} is ambiguous; rename a strategy")
    return hits[0]


def _parse_prior(game: BimatrixGame, text: str):
    halves = text.split(";")
    if len(halves) != 2:
        raise GameError("prior must be two vectors separated by ';'")
    x = tuple(parse_rational(tok) for tok in halves[0].replace(",", " ").split())
    y = tuple(parse_rational(tok) for tok in halves[1].replace(",", " ").split())
    return MixedStrategy(1, x), MixedStrategy(2, y)


def _behavior_text(sf, beh: BehaviorStrategy) -> str:
    parts = []
    isets = sf.isets1 if beh.player == 1 else sf.isets2
    for sid, _, _count in isets:
        probs = " ".join(str(p) for p in beh.local[sid])
        parts.append(f"  set {sid}: {probs}")
    return "\n".join(parts)


def run(argv) -> int:
    args = build_parser().parse_args(argv)
    should_stop = _deadline_check(args)
    try:
        loaded = load_game(args)
        out = sys.stdout
        if args.command == "solve-enum":
            game = _as_strategic(loaded)
            report = solve_enumerate(game, should_stop=should_stop)
            out.write(render(report, mode=args.mode))
        elif args.command == "solve-lh":
            game = _as_strategic(loaded)
            label = _resolve_label(game, args.label)
            ee = lemke_howson(game, label, should_stop=should_stop)
            out.write(single_equilibrium_report(game, ee, mode=args.mode))
        elif args.command == "solve-lemke":
            _run_lemke(args, loaded, out, should_stop)
        elif args.command == "to-strategic":
            out.write(payoff_blocks(_as_strategic(loaded)) + "\n")
        elif args.command == "to-sequence":
            if not isinstance(loaded, GameTree):
                raise GameError("to-sequence needs an extensive-form (XML) game")
            out.write(render_sequence_form(build_sequence_form(loaded)) + "\n")
        elif args.command == "roundtrip-xml":
            if not isinstance(loaded, GameTree):
                raise GameError("roundtrip-xml needs an extensive-form (XML) game")
            out.write(to_xml(loaded))
    except ComputationCancelled:
        print("timeout: computation exceeded the allotted time", file=sys.stderr)
        return EXIT_TIMEOUT
    except (GameError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def _run_lemke(args, loaded, out, should_stop):
    import random

    from .enumeration import ExtremeEquilibrium
    from .strategic import expected_payoffs

    if isinstance(loaded, GameTree):
        sf = build_sequence_form(loaded)
        prior1 = prior2 = None
        if args.prior:
            raise GameError("explicit priors on trees are not supported; use --seed")
        b1, b2 = lemke_prior(sf, prior1, prior2, should_stop=should_stop)
        out.write("Behavior strategy player 1:\n")
        out.write(_behavior_text(sf, b1) + "\n")
        out.write("Behavior strategy player 2:\n")
        out.write(_behavior_text(sf, b2) + "\n")
        game = loaded.to_strategic_form()
        x = loaded.mixed_from_behavior(1, b1.local)
        y = loaded.mixed_from_behavior(2, b2.local)
    else:
        game = loaded
        if args.prior:
            prior1, prior2 = _parse_prior(game, args.prior)
        elif args.seed is not None:
            rng = random.Random(args.seed)
            prior1 = MixedStrategy(1, random_prior(game.m, rng))
            prior2 = MixedStrategy(2, random_prior(game.n, rng))
        else:
            prior1 = prior2 = None
        x, y = lemke_prior(game, prior1, prior2, should_stop=should_stop)
    u, v = expected_payoffs(game, x, y)
    ee = ExtremeEquilibrium(x=x.probs, y=y.probs, u=u, v=v, idx1=1, idx2=1)
    out.write(single_equilibrium_report(game, ee, mode=args.mode))


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
