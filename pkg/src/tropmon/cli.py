"""Command-line front end.

Exit status: 0 success, 1 a verification failed (or could not finish within
``--limit``), 2 usage or input error.
"""

import argparse
import csv
import json
import sys

from . import froidure_pin as fp
from .errors import LimitExceeded, ParseError, RangeError, SpecMismatch
from .factorize import eval_word, factor, word_tokens
from .generators import GeneratorSet, Opaque, descriptor_token, standard_gens, parse_descriptor
from .matrix import mat_format, mat_from_json, mat_parse, mat_to_json
from .semiring import Family, SemiringSpec
from .verify import check_conjecture, small_generating_set, verify_full, verify_irredundant

FAMILIES = {"min-plus": Family.MIN_PLUS, "max-plus": Family.MAX_PLUS}


class UsageError(Exception):
    pass


def _common(p, n=True, t_required=False):
    p.add_argument("--semiring", choices=sorted(FAMILIES), default="min-plus")
    if n:
        p.add_argument("--n", type=int, choices=(2, 3), default=None, help="dimension (default 2)")
    g = p.add_mutually_exclusive_group(required=t_required)
    g.add_argument("--t", type=int, help="saturation threshold (finite quotient)")
    g.add_argument("--infinite", action="store_true", help="use the infinite semiring")
    p.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    p.add_argument("--limit", type=int, default=None, help="element limit for enumerations")
    p.add_argument("--gens-file", help="JSON generator list overriding the standard family")


def build_parser():
    parser = argparse.ArgumentParser(prog="tropmon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gens", help="list a generator family")
    _common(p)

    p = sub.add_parser("enumerate", help="enumerate the generated monoid")
    _common(p)
    p.add_argument("--elements-out", help="write elements and words as JSON lines")
    p.add_argument("--cayley-out", help="write the right Cayley graph as CSV")

    p = sub.add_parser("factorize", help="factor a 2x2 matrix into generators")
    _common(p, n=False)
    p.add_argument("matrix", help='rows separated by ";", e.g. "inf 2; 3 inf"')

    p = sub.add_parser("verify-full", help="check that a set generates the whole monoid")
    _common(p)

    p = sub.add_parser("verify-irredundant", help="check that no generator is redundant")
    _common(p)

    p = sub.add_parser("check-conjecture", help="check the 3x3 min-plus generating family")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--limit", type=int, default=None)

    p = sub.add_parser("min-gens", help="greedy irredundant generating set of M_n")
    _common(p)
    p.add_argument("--recheck", action="store_true",
                   help="re-verify fullness and irredundancy from scratch")
    return parser


def _spec(args, finite=True):
    family = FAMILIES[args.semiring]
    if args.t is not None:
        if args.t < 0:
            raise UsageError("--t must be a natural number")
        return SemiringSpec(family, args.t)
    if args.infinite:
        if finite:
            raise UsageError(f"{args.command} needs a finite quotient; pass --t")
        return SemiringSpec(family, None)
    raise UsageError("pass --t <threshold>" + ("" if finite else " or --infinite"))


def load_gens_file(spec, path, n=None):
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ParseError("generator file must hold a JSON array")
    items = []
    for i, entry in enumerate(data):
        if isinstance(entry, dict):
            if "matrix" not in entry:
                raise ParseError(f"generator {i} has no matrix")
            m = mat_from_json(spec, entry["matrix"], n)
            d = parse_descriptor(entry["descriptor"]) if entry.get("descriptor") else Opaque(i)
        else:
            m = mat_from_json(spec, entry, n)
            d = Opaque(i)
        items.append((d, m))
    if not items:
        raise ParseError("generator file is empty")
    dims = {m.n for _, m in items}
    if len(dims) != 1:
        raise ParseError("generators have mixed dimensions")
    return GeneratorSet(spec, dims.pop(), tuple(items))


def _gens(args):
    spec = _spec(args)
    if args.gens_file:
        gens = load_gens_file(spec, args.gens_file)
        if args.n is not None and gens.n != args.n:
            raise UsageError(f"generator file holds {gens.n}x{gens.n} matrices")
        return gens
    try:
        return standard_gens(spec, args.n or 2)
    except ValueError as e:
        raise UsageError(f"{e}; supply --gens-file") from None


def gens_json(gens):
    return [{"descriptor": descriptor_token(d), "matrix": mat_to_json(m)} for d, m in gens]


def _emit(args, doc, lines):
    if getattr(args, "json", False):
        print(json.dumps(doc))
    else:
        for line in lines:
            print(line)


def cmd_gens(args):
    gens = _gens(args)
    _emit(args, gens_json(gens), gens.describe())
    return 0


def cmd_enumerate(args):
    gens = _gens(args)
    want_cayley = bool(args.cayley_out)
    res = fp.enumerate_monoid(gens, element_limit=args.limit, cayley=want_cayley)
    if args.elements_out:
        with open(args.elements_out, "w") as fh:
            for i in range(res.size):
                fh.write(json.dumps({
                    "index": i,
                    "key": int(res.keys[i]),
                    "matrix": mat_to_json(res.matrix(i)),
                    "word": [descriptor_token(d) for d in fp.element_word(res, i)],
                }) + "\n")
    if want_cayley:
        with open(args.cayley_out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["element_index", "generator_index", "target_index"])
            w.writerows(res.cayley_edges())
    doc = {"size": res.size, "complete": res.complete, "seconds": round(res.seconds, 6)}
    lines = [f"size: {res.size}", f"complete: {str(res.complete).lower()}",
             f"seconds: {res.seconds:.3f}"]
    if not res.complete:
        print(f"element limit reached after {res.size} elements", file=sys.stderr)
    _emit(args, doc, lines)
    return 0


def cmd_factorize(args):
    spec = _spec(args, finite=False)
    m = mat_parse(spec, 2, args.matrix)
    word = factor(m)
    product = eval_word(spec, 2, word)
    tokens = [descriptor_token(d) for d in word]
    doc = {"word": tokens, "length": len(word), "product": mat_to_json(product),
           "matches": product == m}
    lines = [f"word: {word_tokens(word)}", f"json: {json.dumps(tokens)}",
             f"product: {mat_format(product)}"]
    _emit(args, doc, lines)
    return 0 if product == m else 1


def cmd_verify_full(args):
    gens = _gens(args)
    rep = verify_full(gens, element_limit=args.limit)
    lines = [f"generators: {len(gens)}",
             f"generated {rep['generated_size']} of {rep['expected_size']} elements: "
             + ("FULL" if rep["full"] else "NOT FULL")]
    _emit(args, dict(rep, generator_count=len(gens)), lines)
    return 0 if rep["full"] else 1


def cmd_verify_irredundant(args):
    gens = _gens(args)
    rep = verify_irredundant(gens, element_limit=args.limit)
    lines = [f"{r['descriptor']}: {'redundant' if r['redundant'] else 'irredundant'}"
             for r in rep["generators"]]
    lines.append("IRREDUNDANT" if rep["irredundant"] else "REDUNDANT")
    _emit(args, rep, lines)
    return 0 if rep["irredundant"] else 1


def cmd_check_conjecture(args):
    if args.t < 0:
        raise UsageError("--t must be a natural number")
    rep = check_conjecture(args.t, element_limit=args.limit)
    lines = [f"t = {rep['t']}: {rep['generator_count']} generators "
             f"(formula {rep['formula_count']}), generated {rep['generated_size']} "
             f"of {rep['expected_size']}: " + ("VERIFIED" if rep["verified"] else "FAILED")]
    _emit(args, rep, lines)
    return 0 if rep["verified"] else 1


def cmd_min_gens(args):
    spec = _spec(args)
    gens, rep = small_generating_set(spec, args.n or 2, element_limit=args.limit)
    ok = True
    if args.recheck:
        full = verify_full(gens, element_limit=args.limit)["full"]
        irr = verify_irredundant(gens, element_limit=args.limit)["irredundant"]
        rep = dict(rep, full=full, irredundant=irr)
        ok = full and irr
    lines = [f"irredundant generating set of size {rep['size']} "
             f"(greedy pass kept {rep['greedy_size']})"]
    if rep["reported_size"] is not None and not rep["matches_reported"]:
        msg = f"note: size {rep['size']} differs from the reported {rep['reported_size']}"
        print(msg, file=sys.stderr)
        lines.append(msg)
    if args.recheck:
        lines.append(f"recheck: full={rep['full']} irredundant={rep['irredundant']}")
    lines += gens.describe()
    _emit(args, dict(rep, generators=gens_json(gens)), lines)
    return 0 if ok else 1


COMMANDS = {
    "gens": cmd_gens,
    "enumerate": cmd_enumerate,
    "factorize": cmd_factorize,
    "verify-full": cmd_verify_full,
    "verify-irredundant": cmd_verify_irredundant,
    "check-conjecture": cmd_check_conjecture,
    "min-gens": cmd_min_gens,
}


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, RangeError, SpecMismatch, ValueError, OSError) as e:
        print(f"tropmon {args.command}: error: {e}", file=sys.stderr)
        return 2
    except OverflowError as e:
        print(f"tropmon {args.command}: arithmetic overflow: {e}", file=sys.stderr)
        return 2
    except LimitExceeded as e:
        print(f"tropmon {args.command}: element limit exceeded: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
