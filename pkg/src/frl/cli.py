"""``frl``: command-line front end.

Exit status is 0 on success (holds, witness found, certificate found), 1 on
a negative answer (refuted, no witness, not separated, false, not a member)
and 2 on malformed input.  The seed in effect is written to stderr as a
``# seed: N`` header so stdout stays machine-readable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import encode, modelcheck, quotients, stallings
from .groupring import GroupRingElement, LiteralSyntaxError, format_ring_literal, is_prime
from .groupring import parse_ring_literal as _parse_literal
from .groupring import zero_divisor_probe
from .logic import (
    L0, L2, ParseError, classify, parse_formula, parse_matrix, print_formula,
)
from .perms import Permutation, cyclic_group, symmetric_group
from .words import DEFAULT_RANK, WordSyntaxError, check_rank, format_word, letter_name, parse_word

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_ring_literal(text: str, rank: int | None = None) -> GroupRingElement:
    """Parse ``[c1*w1 + c2*w2 - ...]`` into a normalized element of Z[F]."""
    return _parse_literal(text, rank)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def split_list(text: str) -> list[str]:
    """Split on commas that are not inside brackets or parentheses."""
    items, depth, cur = [], 0, []
    for ch in text:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    last = "".join(cur).strip()
    if last or items:
        items.append(last)
    if any(not item for item in items):
        raise UsageError(f"empty item in list {text!r}")
    return items


def _ring_value(text: str, rank: int) -> GroupRingElement:
    text = text.strip()
    return parse_ring_literal(text if text.startswith("[") else f"[{text}]", rank)


# models

def _standard_gens(kind: str, n: int) -> list[Permutation]:
    if kind == "cyclic":
        return [cyclic_group(n)[1 % n]] if n > 1 else [Permutation.identity(1)]
    if n == 1:
        return [Permutation.identity(1)]
    return [Permutation.from_cycles(n, (1, 2)), Permutation.from_cycles(n, tuple(range(1, n + 1)))]


def make_model(name: str, rank: int):
    """``free``, ``zfree``, ``sym:n``, ``cyclic:n``, ``zp-sym:n:p``, ``zp-cyclic:n:p``.

    In the finite models generator ``a`` is the first standard generator
    ((1 2) for S_n, (1 2 ... n) for C_n) and ``b`` is (1 2 ... n).
    """
    parts = name.split(":")
    try:
        nums = [int(x) for x in parts[1:]]
    except ValueError:
        raise UsageError(f"bad model {name!r}") from None
    kind = parts[0]
    if kind == "free" and not nums:
        return modelcheck.FreeGroup(rank)
    if kind == "zfree" and not nums:
        return modelcheck.FreeGroupRing(rank)
    if kind in ("sym", "cyclic") and len(nums) == 1 and 1 <= nums[0] <= 7:
        n = nums[0]
        elements = symmetric_group(n) if kind == "sym" else cyclic_group(n)
        return modelcheck.FiniteGroup(elements, _standard_gens(kind, n), name=f"{kind}{n}")
    if kind in ("zp-sym", "zp-cyclic") and len(nums) == 2 and 1 <= nums[0] <= 5:
        n, p = nums
        if not is_prime(p):
            raise UsageError(f"coefficient modulus {p} is not prime")
        base = kind[3:]
        elements = symmetric_group(n) if base == "sym" else cyclic_group(n)
        return modelcheck.FiniteGroupRing(elements, p, _standard_gens(base, n), name=f"{base}{n}")
    raise UsageError(f"bad model {name!r}; expected free, zfree, sym:n, cyclic:n, "
                     "zp-sym:n:p or zp-cyclic:n:p")


def _language(model) -> str:
    return L2 if model.is_ring else L0


def _model_value(text: str, model, rank: int):
    """A word or bracket literal, mapped into the model through its generators."""
    if isinstance(model, modelcheck.FreeGroup):
        return parse_word(text, rank)
    x = _ring_value(text, rank)
    if isinstance(model, modelcheck.FreeGroupRing):
        return x
    hom = quotients.FiniteHom(model.elements[0].degree, tuple(model.gens))
    if x.is_zero():
        image = GroupRingElement.zero(getattr(model, "modulus", None))
    else:
        image = GroupRingElement(((hom(g), c) for g, c in x.terms), getattr(model, "modulus", None))
    if isinstance(model, modelcheck.FiniteGroup):
        if not image.is_group_element():
            raise UsageError(f"{text!r} is not a group element")
        return image.as_group_element()
    return image


# output helpers

def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _automaton_json(A, words=None) -> dict:
    out = {
        "vertices": A.num_vertices,
        "edges": [[s, letter_name(l), t] for s, l, t in A.edges],
        "rank": A.rank,
        "basis": [format_word(w) for w in stallings.basis(A)],
    }
    if words:
        out["membership"] = {format_word(w): stallings.membership(A, w) for w in words}
    return out


def _automaton_text(A, words=None) -> str:
    lines = [str(A), "basis: " + (", ".join(format_word(w) for w in stallings.basis(A)) or "(trivial)")]
    for w in words or ():
        verdict = "member" if stallings.membership(A, w) else "not a member"
        lines.append(f"{format_word(w)}: {verdict}")
    return "\n".join(lines)


def _bounds(args) -> modelcheck.DomainBounds:
    try:
        return modelcheck.DomainBounds(args.word_len, args.support, args.coeff)
    except ValueError as e:
        raise UsageError(str(e)) from None


# subcommands

def cmd_eval(args) -> int:
    model = make_model(args.model, args.rank)
    matrix = parse_matrix(args.formula, _language(model), args.rank)
    assignment = {}
    for item in split_list(args.assign) if args.assign else []:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"assignment {item!r} is not of the form var=value")
        assignment[name.strip()] = _model_value(value, model, args.rank)
    try:
        value = modelcheck.eval_qf(matrix, assignment, model)
    except modelcheck.EvaluationError as e:
        raise UsageError(str(e)) from None
    text = print_formula(matrix)
    _emit(args, {"formula": text, "value": value}, "true" if value else "false")
    return EXIT_OK if value else EXIT_NEGATIVE


def cmd_check(args) -> int:
    model = make_model(args.model, args.rank)
    s = parse_formula(args.sentence, _language(model), args.rank)
    try:
        verdict = modelcheck.check_bounded(s, _bounds(args), model)
    except (ValueError, modelcheck.EvaluationError) as e:
        raise UsageError(str(e)) from None
    _emit(args, verdict.to_json(), str(verdict))
    return EXIT_OK if verdict.success else EXIT_NEGATIVE


def cmd_translate(args) -> int:
    s = parse_formula(args.sentence, L0, args.rank)
    try:
        horn = encode.primitive_to_horn(s)
    except ValueError as e:
        raise UsageError(str(e)) from None
    text = print_formula(horn)
    _emit(args, {"sentences": [text]}, text)
    return EXIT_OK


def _parse_any(text: str, language: str, rank: int):
    if language != "auto":
        return parse_formula(text, language, rank)
    try:
        return parse_formula(text, L0, rank)
    except ParseError:
        return parse_formula(text, L2, rank)


def cmd_classify(args) -> int:
    s = _parse_any(args.sentence, args.language, args.rank)
    c = classify(s)
    payload = {"sentence": print_formula(s), "language": s.language, "flags": c.as_dict()}
    _emit(args, payload, " ".join(c.flags()) or "(none)")
    return EXIT_OK


def cmd_axioms(args) -> int:
    if args.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    lines = [print_formula(s) for s in encode.family(args.family, args.n_max)]
    _emit(args, {"sentences": lines}, "\n".join(lines))
    return EXIT_OK


def cmd_diagram(args) -> int:
    constants = [_ring_value(c, args.rank) for c in split_list(args.constants)] if args.constants.strip() else []
    if args.depth < 0:
        raise UsageError("--depth must be non-negative")
    try:
        sentences = encode.diagram_fragment(constants, args.depth)
    except ValueError as e:
        raise UsageError(str(e)) from None
    lines = [print_formula(s) for s in sentences]
    _emit(args, {"sentences": lines}, "\n".join(lines))
    return EXIT_OK


def cmd_separate(args) -> int:
    r = parse_ring_literal(args.element, args.rank)
    if r.is_zero():
        raise UsageError("0 cannot be separated")
    cert = quotients.separate_ring_element(r, args.max_degree, args.seed, args.rank)
    if cert is None:
        print(f"no separating quotient of degree <= {args.max_degree} found", file=sys.stderr)
        return EXIT_NEGATIVE
    print(json.dumps(cert.to_json()))
    return EXIT_OK


def cmd_zerodivisor(args) -> int:
    u = parse_ring_literal(args.element, args.rank)
    if u.is_zero():
        raise UsageError("the probe needs a nonzero element")
    if args.cyclic:
        hom = quotients.FiniteHom(args.cyclic, (_standard_gens("cyclic", args.cyclic)[0],))
        try:
            u = quotients.induced_ring_hom(hom, u)
        except ValueError as e:
            raise UsageError(f"{e}; only generator a is mapped into the cyclic group") from None
        if u.is_zero():
            raise UsageError("element maps to 0 in the cyclic group ring")
        witness = zero_divisor_probe(u)
        radius = None
    else:
        witness = zero_divisor_probe(u, args.radius, rank=args.rank)
        radius = args.radius
    shown = format_ring_literal(witness) if witness is not None else None
    payload = {"element": format_ring_literal(u), "radius": radius, "witness": shown}
    _emit(args, payload, shown or "none")
    return EXIT_OK


def _subgroup(text: str, rank: int):
    return stallings.build_subgroup([parse_word(w, rank) for w in split_list(text)])


def cmd_stallings(args) -> int:
    if len(args.subgroup) != 1:
        raise UsageError("stallings takes exactly one --subgroup")
    A = _subgroup(args.subgroup[0], args.rank)
    words = [parse_word(w, args.rank) for w in args.word]
    _emit(args, _automaton_json(A, words), _automaton_text(A, words))
    return EXIT_OK if all(stallings.membership(A, w) for w in words) else EXIT_NEGATIVE


def cmd_intersect(args) -> int:
    if len(args.subgroup) != 2:
        raise UsageError("intersect takes exactly two --subgroup options")
    A, B = (_subgroup(t, args.rank) for t in args.subgroup)
    C = stallings.intersect(A, B)
    _emit(args, _automaton_json(C), _automaton_text(C))
    return EXIT_OK


# argument parsing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=None, help="free group rank (default $FRL_RANK or 2)")
    common.add_argument("--seed", type=int, default=None, help="random seed (default $FRL_SEED or 0)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--word-len", type=int, default=2)
    bounds.add_argument("--support", type=int, default=2)
    bounds.add_argument("--coeff", type=int, default=2)

    parser = argparse.ArgumentParser(prog="frl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a quantifier-free formula")
    p.add_argument("--model", default="zfree")
    p.add_argument("--formula", required=True)
    p.add_argument("--assign", default="", help="comma-separated var=value pairs")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", parents=[common, bounds], help="bounded check of a sentence")
    p.add_argument("--model", default="zfree")
    p.add_argument("--sentence", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("translate", parents=[common], help="primitive sentence to Horn form")
    p.add_argument("--sentence", required=True)
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("classify", parents=[common], help="syntactic classes of a sentence")
    p.add_argument("--sentence", required=True)
    p.add_argument("--language", choices=["auto", L0, L2], default="auto")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("axioms", parents=[common], help="print an axiom family")
    p.add_argument("--family", choices=encode.FAMILIES, required=True)
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("diagram", parents=[common], help="finite fragment of the diagram of Z[F]")
    p.add_argument("--constants", required=True)
    p.add_argument("--depth", type=int, default=1)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("separate", parents=[common], help="finite quotient certificate for r != 0")
    p.add_argument("--element", required=True)
    p.add_argument("--max-degree", type=int, default=quotients.DEFAULT_MAX_DEGREE)
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("zerodivisor", parents=[common], help="exact bounded annihilator search")
    p.add_argument("--element", required=True)
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--cyclic", type=int, default=0, metavar="N",
                   help="work in Z[C_N] with a as the N-cycle")
    p.set_defaults(func=cmd_zerodivisor)

    p = sub.add_parser("stallings", parents=[common], help="folded automaton of a subgroup")
    p.add_argument("--subgroup", action="append", default=[], required=True)
    p.add_argument("--word", action="append", default=[], help="membership query")
    p.set_defaults(func=cmd_stallings)

    p = sub.add_parser("intersect", parents=[common], help="intersection of two subgroups")
    p.add_argument("--subgroup", action="append", default=[], required=True)
    p.set_defaults(func=cmd_intersect)
    return parser


def _report(message: str, text: str | None = None, position: int | None = None) -> None:
    print(f"frl: error: {message}", file=sys.stderr)
    if text is not None and position is not None:
        print(f"  {text}", file=sys.stderr)
        print("  " + " " * position + "^", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        if args.rank is None:
            args.rank = _env_int("FRL_RANK", DEFAULT_RANK)
        if args.seed is None:
            args.seed = _env_int("FRL_SEED", 0)
        check_rank(args.rank)
        print(f"# seed: {args.seed}", file=sys.stderr)
        return args.func(args)
    except ParseError as e:
        _report(str(e), e.text, e.position)
    except (WordSyntaxError, LiteralSyntaxError) as e:
        _report(str(e))
    except UsageError as e:
        _report(str(e))
    except ValueError as e:
        _report(str(e))
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
