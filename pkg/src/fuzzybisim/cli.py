"""Command-line front end.

Exit codes: 0 the property holds (or the command succeeded), 1 it fails,
2 usage or input error, 3 undecided because a fixpoint hit its cap.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .automaton import DEFAULT_MAX_LEN, factor_automaton, language_equal_bounded, language_value, reverse
from .bisim import (
    DEFAULT_MAX_ITER,
    BisimKind,
    bisim_equivalence_fixpoint,
    check_relation,
    greatest,
)
from .errors import FuzzyBisimError, UnconvergedError
from .io import (
    automaton_to_dict,
    dumps,
    equivalence_to_dict,
    factor_to_dict,
    load_automaton,
    load_relation,
    relation_to_dict,
)
from .lattice import Lattice
from .relations import FuzzyEquivalence
from .ufb import EQUIVALENT, UNDECIDED, reduce, ufb_equivalent
from .uniform import classify

OK, FAILS, USAGE, UNDECIDED_EXIT = 0, 1, 2, 3

KIND_CHOICES = [k.cli_name for k in BisimKind]


class _Usage(Exception):
    pass


def _j(lat: Lattice, v):
    return None if v is None else lat.to_json(v)


def _violation(lat, v):
    if v is None:
        return None
    return {
        "part": v.part,
        "letter": v.letter,
        "condition": v.condition,
        "coordinate": list(v.coordinate),
        "states": list(v.states),
        "lhs": _j(lat, v.lhs),
        "rhs": _j(lat, v.rhs),
    }


def _fixpoint(rep) -> dict:
    return {
        "kind": rep.kind.replace("_", "-") if rep.kind else None,
        "exists": rep.result is not None,
        "converged": rep.converged,
        "iterations": rep.iterations,
        "failure_reason": rep.failure_reason,
        "detail": rep.detail,
        "result": relation_to_dict(rep.result) if rep.result is not None else None,
    }


def _fix_opts(args) -> dict:
    return {"max_iter": args.iteration_cap, "workers": args.workers}


# -- verbs ---------------------------------------------------------------------


def cmd_check(args):
    a, b = load_automaton(args.a), load_automaton(args.b)
    phi = load_relation(args.rel, a.lattice, a.states, b.states)
    v = check_relation(a, b, phi, args.kind)
    return (OK if v.holds else FAILS), {
        "verb": "check",
        "kind": BisimKind.parse(args.kind).cli_name,
        "holds": v.holds,
        "violation": _violation(a.lattice, v.violation),
    }


def cmd_greatest(args):
    a, b = load_automaton(args.a), load_automaton(args.b)
    rep = greatest(a, b, args.kind, **_fix_opts(args))
    code = UNDECIDED_EXIT if not rep.converged else (OK if rep.result is not None else FAILS)
    return code, {"verb": "greatest", **_fixpoint(rep)}


def cmd_greatest_equiv(args):
    a = load_automaton(args.a)
    rep = bisim_equivalence_fixpoint(a, args.kind, **_fix_opts(args))
    doc = {"verb": "greatest-equiv", **_fixpoint(rep)}
    if rep.result is not None:
        doc["index"] = FuzzyEquivalence(rep.result).index
    return (OK if rep.converged else UNDECIDED_EXIT), doc


def cmd_factor(args):
    a = load_automaton(args.a)
    e = load_relation(args.rel, a.lattice, a.states, a.states)
    fa = factor_automaton(a, FuzzyEquivalence(e))
    return OK, {"verb": "factor", "equivalence": equivalence_to_dict(fa.equivalence), "factor": factor_to_dict(fa)}


def cmd_reduce(args):
    a = load_automaton(args.a)
    fa, e = reduce(a, **_fix_opts(args))
    return OK, {
        "verb": "reduce",
        "original_states": len(a.states),
        "reduced_states": fa.size,
        "equivalence": equivalence_to_dict(e),
        "factor": factor_to_dict(fa),
    }


def cmd_ufb_equiv(args):
    a, b = load_automaton(args.a), load_automaton(args.b)
    v = ufb_equivalent(a, b, **_fix_opts(args))
    doc = {
        "verb": "ufb-equiv",
        "status": v.status.replace("_", "-"),
        "equivalent": v.equivalent,
        "reason": v.reason,
        "E": equivalence_to_dict(v.E) if v.E is not None else None,
        "F": equivalence_to_dict(v.F) if v.F is not None else None,
        "factor_a": factor_to_dict(v.factor_a) if v.factor_a is not None else None,
        "factor_b": factor_to_dict(v.factor_b) if v.factor_b is not None else None,
        "iso": v.iso,
        "witness": relation_to_dict(v.witness) if v.witness is not None else None,
    }
    code = {EQUIVALENT: OK, UNDECIDED: UNDECIDED_EXIT}.get(v.status, FAILS)
    return code, doc


def cmd_lang(args):
    a = load_automaton(args.a)
    try:
        word = a.parse_word(args.word)
    except KeyError as exc:
        raise _Usage(exc.args[0]) from None
    return OK, {"verb": "lang", "word": list(word), "value": _j(a.lattice, language_value(a, word))}


def cmd_lang_eq(args):
    a, b = load_automaton(args.a), load_automaton(args.b)
    if args.max_len < 0:
        raise _Usage("--max-len must be non-negative")
    v = language_equal_bounded(a, b, args.max_len)
    doc = {
        "verb": "lang-eq",
        "equal_up_to_bound": v.equal_up_to_bound,
        "bounded_check": True,
        "max_len": v.max_len,
        "words_checked": v.words_checked,
        "first_differing_word": list(v.first_differing_word) if v.first_differing_word is not None else None,
        "value_a": _j(a.lattice, v.value_a),
        "value_b": _j(a.lattice, v.value_b),
    }
    return (OK if v.equal_up_to_bound else FAILS), doc


def cmd_reverse(args):
    a = load_automaton(args.a)
    return OK, automaton_to_dict(reverse(a))


def cmd_classify(args):
    rows = cols = None
    lat = None
    if args.a is not None:
        a = load_automaton(args.a)
        lat, rows = a.lattice, a.states
        cols = rows
    if args.b is not None:
        b = load_automaton(args.b)
        if lat is not None and b.lattice != lat:
            raise _Usage("the two automata use different lattices")
        lat, cols = b.lattice, b.states
    phi = load_relation(args.rel, lat, rows, cols)
    c = classify(phi)
    return (OK if c.is_uniform else FAILS), {
        "verb": "classify",
        "uniform": c.is_uniform,
        "l_function": c.is_l_function,
        "surjective": c.is_surjective,
        "partial_fuzzy_function": c.is_partial_fuzzy_function,
        "witness": {k: list(v) for k, v in c.witness.items()},
    }


# -- parser --------------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fuzzybisim", description="Simulations, bisimulations and reduction of fuzzy automata.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json", help="report format (default json)")
    common.add_argument("--output", "-o", help="write the report to this file instead of standard output")

    fix = argparse.ArgumentParser(add_help=False)
    fix.add_argument("--iteration-cap", type=_positive, default=DEFAULT_MAX_ITER,
                     help=f"maximum fixpoint iterations (default {DEFAULT_MAX_ITER})")
    fix.add_argument("--workers", type=_positive, default=1, help="threads for per-letter residuals (default 1)")

    def verb(name, func, help_, parents=(common,)):
        s = sub.add_parser(name, help=help_, parents=list(parents))
        s.set_defaults(func=func)
        return s

    s = verb("check", cmd_check, "check a relation against a (bi)simulation kind")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--rel", required=True, help="relation file between the states of A and B")
    s.add_argument("--kind", required=True, choices=KIND_CHOICES)

    s = verb("greatest", cmd_greatest, "greatest (bi)simulation of a kind", (common, fix))
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--kind", required=True, choices=KIND_CHOICES)

    s = verb("greatest-equiv", cmd_greatest_equiv, "greatest bisimulation fuzzy equivalence", (common, fix))
    s.add_argument("a")
    s.add_argument("--kind", choices=("forward", "backward"), default="forward")

    s = verb("factor", cmd_factor, "factor automaton by a fuzzy equivalence")
    s.add_argument("a")
    s.add_argument("--rel", required=True, help="fuzzy equivalence on the states of A")

    s = verb("reduce", cmd_reduce, "reduce by the greatest forward bisimulation equivalence", (common, fix))
    s.add_argument("a")

    s = verb("ufb-equiv", cmd_ufb_equiv, "decide UFB-equivalence", (common, fix))
    s.add_argument("a")
    s.add_argument("b")

    s = verb("lang", cmd_lang, "degree to which A accepts a word")
    s.add_argument("a")
    s.add_argument("--word", required=True, help="letters, e.g. 'xy' or 'x y' (empty string for the empty word)")

    s = verb("lang-eq", cmd_lang_eq, "bounded language comparison")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN, help=f"longest word checked (default {DEFAULT_MAX_LEN})")

    s = verb("reverse", cmd_reverse, "reverse automaton")
    s.add_argument("a")

    s = verb("classify", cmd_classify, "uniformity properties of a relation")
    s.add_argument("--rel", required=True)
    s.add_argument("a", nargs="?", help="automaton supplying the lattice and row states")
    s.add_argument("b", nargs="?", help="automaton supplying the column states")
    return p


# -- text rendering --------------------------------------------------------------


def _scalar(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _is_matrix(v) -> bool:
    return isinstance(v, list) and bool(v) and all(isinstance(r, list) for r in v)


def render_text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for k, v in doc.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(render_text(v, indent + 1) if v else f"{pad}  (empty)")
        elif _is_matrix(v):
            lines.append(f"{pad}{k}:")
            lines.extend(f"{pad}  [" + ", ".join(_scalar(x) for x in r) + "]" for r in v)
        elif isinstance(v, list):
            lines.append(f"{pad}{k}: [" + ", ".join(_scalar(x) for x in v) + "]")
        else:
            lines.append(f"{pad}{k}: {_scalar(v)}")
    return "\n".join(lines)


def _emit(doc, args):
    text = dumps(doc) if args.format == "json" else render_text(doc) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        code, doc = args.func(args)
    except _Usage as exc:
        print(f"fuzzybisim: error: {exc}", file=sys.stderr)
        return USAGE
    except UnconvergedError as exc:
        _emit({"verb": args.verb, "status": "undecided", "detail": str(exc)}, args)
        return UNDECIDED_EXIT
    except FuzzyBisimError as exc:
        print(f"fuzzybisim: error: {exc}", file=sys.stderr)
        return USAGE
    except (ValueError, KeyError) as exc:
        print(f"fuzzybisim: error: {exc}", file=sys.stderr)
        return USAGE
    _emit(doc, args)
    return code


def main(argv=None):
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()
