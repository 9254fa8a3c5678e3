"""Command-line interface.

    skewgrowth growth bii --max-degree 8 --format json
    skewgrowth verify --preset abel:2 --max-degree 9
    skewgrowth mcm gn:3 --set b,c --max-degree 7
    skewgrowth cancel --file bad.mono --max-degree 3

Exit status: 0 success, 1 mathematical failure (inversion mismatch,
cancellation witness), 2 usage or validation error, 3 budget, cap or
overflow error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .cancellativity import cancellative_up_to, left_cancellative_up_to, right_cancellative_up_to
from .config import DEFAULT_BUDGET, DEFAULT_DEGREE_CAP, BudgetExceeded, CapExceeded, Limits
from .divisibility import condition_l_report, left_divides, mcm
from .enumeration import graded_elements, growth_series
from .presentation import Presentation, PresentationError, parse_preset_spec, parse_presentation
from .rewrite import canonical, equivalence_class
from .series import SeriesOverflow, verify_inversion
from .towers import enumerate_towers, observed_height, skew_growth

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

COMMANDS = ("growth", "skew", "verify", "mcm", "towers", "divides", "classes", "cancel", "condition-l")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    presentation: Presentation
    max_degree: int
    fmt: str
    limits: Limits


def _emit(doc, fmt: str, text: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, separators=(",", ":")) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def load_presentation(args: argparse.Namespace) -> Presentation:
    sources = [s for s in (args.source, args.preset, args.file) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one presentation source (preset name or --file)")
    if args.file is not None:
        path = Path(args.file)
        return parse_presentation(path.read_text(encoding="utf-8"), name=path.stem)
    if args.preset is not None:
        return parse_preset_spec(args.preset)
    path = Path(args.source)
    if path.is_file():
        return parse_presentation(path.read_text(encoding="utf-8"), name=path.stem)
    return parse_preset_spec(args.source)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewgrowth", description="Growth and skew growth of homogeneous monoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("source", nargs="?", help="preset (bii, gn:3, abel:2, ...) or presentation file")
        sp.add_argument("--preset", help="preset name, optionally name:param")
        sp.add_argument("--file", help="presentation file")
        sp.add_argument("--max-degree", type=int, default=None, help="degree bound (7 for cancel, 8 otherwise)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="tower search subset budget")
        sp.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
        return sp

    add("growth", "truncated growth series P(t)")
    add("skew", "truncated skew growth series N(t)")
    add("verify", "check P(t) N(t) = 1 through the bound")
    sp = add("mcm", "minimal common right multiples of a set of words")
    sp.add_argument("--set", required=True, dest="elements", help="comma-separated words, e.g. b,c")
    sp = add("towers", "list towers of minimal common multiples")
    sp.add_argument("--max-height", type=int, default=None, help="only list towers up to this height")
    sp = add("divides", "left divisibility test")
    sp.add_argument("--divisor", required=True)
    sp.add_argument("--multiple", required=True)
    sp = add("classes", "elements by degree, or the class of one word")
    sp.add_argument("--word", default=None)
    sp = add("cancel", "bounded cancellativity check")
    sp.add_argument("--side", choices=("left", "right", "both"), default="both")
    add("condition-l", "look for generator subsets with several minimal common multiples")
    return parser


def _words(p: Presentation, ws) -> list[str]:
    return [p.format_word(w) for w in ws]


def execute(cfg: RunConfig, args: argparse.Namespace, out) -> int:
    p, d, fmt, limits = cfg.presentation, cfg.max_degree, cfg.fmt, cfg.limits
    cmd = cfg.command
    if cmd == "growth":
        s = growth_series(p, d, limits)
        _emit(s.to_json(), fmt, f"P(t) = {s.pretty()}", out)
        return EXIT_OK
    if cmd == "skew":
        s = skew_growth(p, d, limits)
        _emit(s.to_json(), fmt, f"N(t) = {s.pretty()}", out)
        return EXIT_OK
    if cmd == "verify":
        rep = verify_inversion(p, d, limits)
        if rep.passed:
            text = f"{p.label}: inversion holds to t^{d}"
        else:
            text = f"{p.label}: inversion FAILS at t^{rep.first_failing_degree}\nP.N = {rep.product.pretty()}"
        _emit(rep.to_json(), fmt, text, out)
        return EXIT_OK if rep.passed else EXIT_FAIL
    if cmd == "mcm":
        items = [s for s in args.elements.split(",")]
        J = [p.parse_word(s) for s in items]
        if not J:
            raise UsageError("--set is empty")
        ms = mcm(p, J, d, limits)
        doc = {
            "set": _words(p, J),
            "max_degree": d,
            "mcm": [{"word": p.format_word(m.canonical), "degree": m.degree} for m in ms],
        }
        text = "\n".join(f"{p.format_word(m.canonical)}\tdegree {m.degree}" for m in ms) or "(none within bound)"
        _emit(doc, fmt, text, out)
        return EXIT_OK
    if cmd == "towers":
        towers = enumerate_towers(p, d, limits)
        if args.max_height is not None:
            towers = [t for t in towers if t.height <= args.max_height]
        h = observed_height(p, d, limits)
        doc = {"max_degree": d, "observed_height": h, "towers": [t.to_json(p) for t in towers]}
        lines = [f"observed height (lower bound) up to degree {d}: {h}"]
        for t in towers:
            stages = " ; ".join("{" + ",".join(_words(p, (e.canonical for e in J))) + "}" for J in t.stages)
            top = ",".join(_words(p, (e.canonical for e in t.top)))
            lines.append(f"height {t.height} sign {t.sign:+d} stages [{stages}] top {{{top}}}")
        _emit(doc, fmt, "\n".join(lines), out)
        return EXIT_OK
    if cmd == "divides":
        u, v = p.parse_word(args.divisor), p.parse_word(args.multiple)
        ok = left_divides(p, u, v, limits)
        doc = {"divisor": p.format_word(u), "multiple": p.format_word(v), "divides": ok}
        _emit(doc, fmt, "true" if ok else "false", out)
        return EXIT_OK
    if cmd == "classes":
        if args.word is not None:
            w = p.parse_word(args.word)
            members = sorted(equivalence_class(p, w, limits))
            canon = canonical(p, w, limits)
            doc = {"word": p.format_word(w), "canonical": p.format_word(canon.canonical), "class": _words(p, members)}
            text = f"canonical {p.format_word(canon.canonical)}: " + " ".join(_words(p, members))
        else:
            table = graded_elements(p, d, limits)
            doc = {
                "max_degree": d,
                "strata": [[p.format_word(e.canonical) for e in s] for s in table.strata],
            }
            text = "\n".join(
                f"degree {k} ({len(s)}): " + " ".join(p.format_word(e.canonical) or "1" for e in s)
                for k, s in enumerate(table.strata)
            )
        _emit(doc, fmt, text, out)
        return EXIT_OK
    if cmd == "cancel":
        check = {
            "left": left_cancellative_up_to,
            "right": right_cancellative_up_to,
            "both": cancellative_up_to,
        }[args.side]
        rep = check(p, d, limits)
        _emit(rep.to_json(p), fmt, rep.summary(p), out)
        return EXIT_OK if rep.ok else EXIT_FAIL
    if cmd == "condition-l":
        rep = condition_l_report(p, d, limits)
        doc = rep.to_json(p)
        lines = [f"condition L up to degree {d}: {rep.verdict}"]
        for J, ms in rep.witnesses:
            lines.append(
                "  {" + ",".join(_words(p, (j.canonical for j in J))) + "} has minimal common multiples "
                + ", ".join(_words(p, (m.canonical for m in ms)))
            )
        for J in rep.undetermined:
            lines.append("  {" + ",".join(_words(p, (j.canonical for j in J))) + "}: no common multiple within bound")
        _emit(doc, fmt, "\n".join(lines), out)
        return EXIT_OK
    raise UsageError(f"unknown command {cmd!r}")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.max_degree is None:
            args.max_degree = 7 if args.command == "cancel" else 8
        if args.max_degree < 0:
            raise UsageError("--max-degree must be nonnegative")
        limits = Limits(degree_cap=args.degree_cap, budget=args.budget)
        cfg = RunConfig(args.command, load_presentation(args), args.max_degree, args.format, limits)
        return execute(cfg, args, out)
    except (CapExceeded, BudgetExceeded, SeriesOverflow) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_LIMIT
    except (UsageError, PresentationError, OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> int:
    return run()


if __name__ == "__main__":
    raise SystemExit(main())
