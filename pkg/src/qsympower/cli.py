"""Command-line front end.

Exit codes: 0 success, 1 a verified identity found a counterexample,
2 usage, parse or size-cap errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import combinatorics as comb
from . import compositions as comps
from .algebra import (
    NSYM,
    Element,
    antipode,
    convert,
    get_basis,
    hall_pair,
    lyndon_rewrite,
    multiply,
    omega,
)
from .errors import QSymError, UsageError
from .formats import format_output, parse_composition, parse_element

ALGEBRA_CAP = 8
PERMUTATION_CAP = 7


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _cap(args, default):
    return default if args.max_n is None else args.max_n


def _check_degree(f: Element, cap):
    deg = max((a.n for a in f), default=0)
    comps.check_cap(deg, cap, "algebraic operation")


def _element(text, args):
    f = parse_element(text)
    _check_degree(f, _cap(args, ALGEBRA_CAP))
    return f


def _comp(text, flag):
    if text is None:
        raise UsageError(f"missing {flag}")
    return parse_composition(text)


def _osp(text, flag):
    if text is None:
        raise UsageError(f"missing {flag}")
    return comb.OrderedSetPartition.parse(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_expand(args):
    f = _element(args.element, args)
    return convert(f, "h" if f.side == NSYM else "M")


def cmd_convert(args):
    if not args.basis:
        raise UsageError("convert needs --basis")
    return convert(_element(args.element, args), get_basis(args.basis))


def cmd_multiply(args):
    return multiply(_element(args.left, args), _element(args.right, args))


def cmd_antipode(args):
    return antipode(_element(args.element, args))


def cmd_omega(args):
    return omega(_element(args.element, args))


def cmd_pair(args):
    return hall_pair(_element(args.left, args), _element(args.right, args))


def cmd_lyndon(args):
    alpha = parse_composition(args.composition)
    comps.check_cap(alpha.n, _cap(args, ALGEBRA_CAP), "Lyndon rewriting")
    return lyndon_rewrite(alpha)


def cmd_bijection(args):
    # single applications are linear time, so no size cap applies here
    if args.kind == "sh":
        alpha, beta = _comp(args.alpha, "--alpha"), _comp(args.beta, "--beta")
        if args.sigma is None:
            raise UsageError("missing --sigma")
        sigma = comb.Permutation.parse(args.sigma)
        if args.inverse:
            s, shifts = comb.sh_inverse(sigma, alpha, beta)
            return {"sigma": str(s), "shifts": [list(x) for x in shifts]}
        if args.shifts is None:
            raise UsageError("missing --shifts")
        shifts = comb.shape_shifts(parse_composition_zero(args.shifts), alpha, beta)
        return str(comb.sh_forward(sigma, shifts, alpha, beta))
    if args.kind == "br":
        beta = _comp(args.beta, "--beta")
        if args.B is not None:
            if args.cycles is None:
                raise UsageError("missing --cycles")
            alpha, sigma = comb.br_inverse(_osp(args.B, "--B"), comb.CycleForm.parse(args.cycles), beta)
            return {"alpha": str(alpha), "sigma": str(sigma)}
        if args.sigma is None:
            raise UsageError("br needs --B --cycles --beta, or --alpha --sigma --beta")
        blocks, cycles = comb.br_forward(_comp(args.alpha, "--alpha"), comb.Permutation.parse(args.sigma), beta)
        return {"B": str(blocks), "cycles": str(cycles)}
    if args.kind == "g":
        beta = _comp(args.beta, "--beta")
        if args.C is not None:
            A, B = comb.g_inverse(_comp(args.alpha, "--alpha"), _osp(args.C, "--C"), beta)
            return {"A": str(A), "B": str(B)}
        alpha, C = comb.g_forward(_osp(args.A, "--A"), _osp(args.B, "--B"), _comp(args.lam, "--lambda"), beta)
        return {"alpha": str(alpha), "C": str(C)}
    raise UsageError(f"unknown bijection {args.kind!r}")


def parse_composition_zero(text):
    """Comma-separated nonnegative integers (shift vectors may contain zeros)."""
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def cmd_enumerate(args):
    what = args.what
    if what in ("cons", "osp"):
        alpha, beta = _comp(args.alpha, "--alpha"), _comp(args.beta, "--beta")
        if what == "cons":
            found = comb.enumerate_cons(alpha, beta, max_n=_cap(args, PERMUTATION_CAP))
        else:
            comps.check_cap(alpha.n, _cap(args, ALGEBRA_CAP), "ordered set partition enumeration")
            found = comb.enumerate_osp(alpha, beta)
        return [str(x) for x in found]
    if what in ("coarsenings", "refinements"):
        alpha = _comp(args.alpha, "--alpha")
        fn = comps.coarsenings if what == "coarsenings" else comps.refinements
        return [str(a) for a in fn(alpha, max_n=_cap(args, ALGEBRA_CAP))]
    if args.n is None:
        raise UsageError(f"enumerate {what} needs --n")
    if what == "compositions":
        return [str(a) for a in comps.compositions(args.n, max_n=_cap(args, ALGEBRA_CAP))]
    if what == "partitions":
        return [str(a) for a in comps.partitions(args.n, max_n=_cap(args, ALGEBRA_CAP))]
    if what == "lyndon":
        comps.check_cap(args.n, _cap(args, ALGEBRA_CAP), "Lyndon enumeration")
        return [str(a) for a in comps.lyndon_words(args.n)]
    raise UsageError(f"cannot enumerate {what!r}")


def cmd_verify(args):
    from .oracle import verify

    n = 6 if args.n is None else args.n
    return verify(args.identity, n, max_n=_cap(args, ALGEBRA_CAP))


COMMANDS = {
    "expand": cmd_expand,
    "convert": cmd_convert,
    "multiply": cmd_multiply,
    "antipode": cmd_antipode,
    "omega": cmd_omega,
    "pair": cmd_pair,
    "lyndon": cmd_lyndon,
    "bijection": cmd_bijection,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--n", type=int, help="degree or size bound")
    common.add_argument("--max-n", type=int, dest="max_n", help="override the size cap (prints a warning)")

    parser = _Parser(prog="qsympower", description="Quasisymmetric power sums, exactly.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    p = add("expand", "expand in M (quasisymmetric) or h (noncommutative)")
    p.add_argument("element")
    p = add("convert", "change basis")
    p.add_argument("element")
    p.add_argument("--basis", required=False)
    for name, text in (("multiply", "product of two quasisymmetric elements"), ("pair", "Hall pairing")):
        p = add(name, text)
        p.add_argument("left")
        p.add_argument("right")
    for name in ("antipode", "omega"):
        p = add(name, f"apply {name}")
        p.add_argument("element")
    p = add("lyndon", "rewrite Psi_alpha through Lyndon-indexed generators")
    p.add_argument("composition")

    p = add("bijection", "run one of the bijections sh, br, g")
    p.add_argument("kind", choices=["sh", "br", "g"])
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--sigma")
    p.add_argument("--shifts")
    p.add_argument("--inverse", action="store_true", help="sh only: treat --sigma as the image and invert")
    p.add_argument("--B", dest="B")
    p.add_argument("--cycles")
    p.add_argument("--A", dest="A")
    p.add_argument("--C", dest="C")
    p.add_argument("--lambda", dest="lam")

    p = add("enumerate", "list combinatorial objects")
    p.add_argument("what", choices=["cons", "osp", "coarsenings", "refinements", "compositions", "partitions", "lyndon"])
    p.add_argument("--alpha")
    p.add_argument("--beta")

    p = add("verify", "check an identity exhaustively with the polynomial oracle")
    p.add_argument("identity")
    return parser


def _render(result, as_json: bool) -> str:
    if as_json:
        return format_output(result, "json")
    if isinstance(result, list):
        return "\n".join(map(str, result))
    if isinstance(result, dict):
        width = max(map(len, result), default=0)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in result.items())
    if hasattr(result, "summary"):
        lines = [result.summary()]
        lines += [f"  counterexample: {json.dumps(f)}" for f in result.failures]
        return "\n".join(lines)
    return format_output(result, "text")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.max_n is not None:
            print(f"warning: size cap overridden to n <= {args.max_n}", file=sys.stderr)
        result = COMMANDS[args.command](args)
    except QSymError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_render(result, args.json))
    if hasattr(result, "passed") and not result.passed:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
