"""Command line front end: ``gbeatty <verb> [flags]``.

Exit codes: 0 success / property holds, 1 property fails, 2 usage error.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import complementary as comp
from . import returns as ret
from .gbs import GBS, FitError, difference_word, fit_from_terms
from .quadratic import QuadraticIrrational
from .words import Morphism, fibonacci_word, fixed_point

FORMATS = ("text", "json", "csv", "bfile")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


@dataclass
class Report:
    data: dict
    text: str = ""
    header: tuple = ()
    rows: list = field(default_factory=list)
    ok: bool = True


def emit(report, fmt):
    """Render a report as text, json, csv or an OEIS-style b-file."""
    if fmt == "json":
        return json.dumps(report.data, separators=(",", ":"))
    if fmt == "text":
        return report.text or json.dumps(report.data, indent=1)
    if fmt == "csv":
        if not report.header:
            raise UsageError("this command has no tabular output; use --format json or text")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(report.header)
        writer.writerows(report.rows)
        return buf.getvalue()
    if fmt == "bfile":
        if len(report.header) != 2:
            raise UsageError("b-file output needs an (n, value) table")
        return "".join(f"{n} {v}\n" for n, v in report.rows)
    raise UsageError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def parse_bfile(text):
    """Parse b-file text into a list of (n, value) pairs; '#' lines are comments."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, v = line.split()
        out.append((int(n), int(v)))
    return out


def _gbs_arg(args, name="v", start_name=None):
    text = getattr(args, name)
    start = getattr(args, start_name) if start_name else None
    return GBS.parse(text, alpha=QuadraticIrrational.parse(args.alpha), start=start)


def _ints(text):
    return [int(x) for x in text.split(",") if x.strip()]


def _partition_text(r):
    lines = [f"verdict: {r.verdict} (verified to depth {r.depth})"]
    if r.missing:
        lines.append(f"missing: {r.missing[:20]}{' ...' if len(r.missing) > 20 else ''}")
    if r.collisions:
        shown = ", ".join(f"{v} (x{c})" for v, c in r.collisions[:20])
        lines.append(f"collisions: {shown}{' ...' if len(r.collisions) > 20 else ''}")
    if r.out_of_range:
        lines.append(f"values below 1: {r.out_of_range[:20]}")
    for m in r.mismatches:
        lines.append(f"letter {m[0]}: term {m[1]} expected {m[2]}, got {m[3]}")
    return "\n".join(lines)


def _triple(g):
    return f"({g.p},{g.q},{g.r})"


# -- verbs -----------------------------------------------------------------

def cmd_eval(args):
    g = _gbs_arg(args, "v", "start")
    rows = [(n, g.eval(n)) for n in range(g.start, g.start + args.n)]
    return Report({"gbs": g.to_text(), "terms": [v for _, v in rows]},
                  text=", ".join(str(v) for _, v in rows), header=("n", "value"), rows=rows)


def cmd_diff_word(args):
    g = _gbs_arg(args, "v", "start")
    word = difference_word(g, args.n)
    return Report({"gbs": g.to_text(), "word": word}, text=",".join(map(str, word)),
                  header=("n", "value"), rows=list(enumerate(word, start=g.start)))


def cmd_fit(args):
    alpha = QuadraticIrrational.parse(args.alpha)
    try:
        g = fit_from_terms(alpha, _ints(args.terms), args.start)
    except FitError as exc:
        return Report({"fit": None, "error": str(exc), "index": exc.index}, text=f"no fit: {exc}", ok=False)
    return Report({"fit": list(g.params), "gbs": g.to_text()}, text=f"{_triple(g)} {g.to_text()}")


def cmd_fixpoint(args):
    mu = Morphism.parse(args.morphism)
    word = fixed_point(mu, args.seed, args.n)
    return Report({"morphism": mu.to_text(), "seed": args.seed, "word": word}, text=word,
                  header=("n", "letter"), rows=list(enumerate(word, start=1)))


def cmd_pair_check(args):
    v, w = _gbs_arg(args, "v", "v_start"), _gbs_arg(args, "w", "w_start")
    r = comp.partition_check([v, w], args.depth)
    density = comp.density_holds(v.alpha, v.p, v.q, w.p, w.q)
    data = r.to_dict()
    data["density"] = density
    return Report(data, text=_partition_text(r) + f"\ndensity equation: {'holds' if density else 'fails'}",
                  ok=r.exact)


def cmd_pair_search(args):
    alpha = QuadraticIrrational.parse(args.alpha)
    try:
        sols = comp.pair_search(alpha, args.depth, args.branch_bound)
    except comp.BranchBoundExceeded as exc:
        return Report({"error": str(exc), "solutions": None}, text=str(exc), ok=False)
    tuples = [list(s.sixtuple) for s in sols]
    lines = [f"({','.join(map(str, t))})  verified to depth {args.depth}" for t in tuples]
    return Report({"alpha": alpha.to_text(), "depth": args.depth, "solutions": tuples},
                  text="\n".join(lines) or "no solutions",
                  header=("p", "q", "r", "s", "t", "u"), rows=tuples)


def cmd_triple_check(args):
    alpha = QuadraticIrrational.parse(args.alpha)
    if args.morphism:
        mu = Morphism.parse(args.morphism)
        post = Morphism.parse(args.post_map) if args.post_map else None
        expected = []
        for item in args.expect:
            letter, _, g = item.partition("=")
            expected.append((letter, GBS.parse(g, alpha=alpha)))
        r = comp.morphic_partition_check(mu, args.seed, expected, args.depth, post_map=post)
    else:
        if not args.seq:
            raise UsageError("give --seq GBS (repeatable) or --morphism with --expect")
        r = comp.partition_check([GBS.parse(s, alpha=alpha) for s in args.seq], args.depth)
    return Report(r.to_dict(), text=_partition_text(r), ok=r.exact)


def cmd_pell(args):
    ps = [args.p] if args.p else list(range(1, args.max + 1))
    rows = []
    for p in ps:
        wit = comp.pell_witness(p)
        rows.append((p, comp.divides_odd_index_fib(p), comp.neg_one_square_mod(p),
                     wit[0] if wit else "", wit[1] if wit else ""))
    data = {"results": [{"p": p, "divides_odd_index_fib": d, "neg_one_square": s,
                         "witness": [x, y] if x != "" else None} for p, d, s, x, y in rows]}
    text = "\n".join(f"p={p}: odd-index Fibonacci divisor: {'yes' if d else 'no'}; "
                     f"-1 square mod p: {'yes' if s else 'no'}"
                     + (f"; 5p^2x^2-4x=y^2 with (x,y)=({x},{y})" if x != "" else "")
                     for p, d, s, x, y in rows)
    return Report(data, text=text, header=("p", "divides_odd_index_fib", "neg_one_square", "x", "y"),
                  rows=rows)


def cmd_returns(args):
    rs = ret.return_words(args.w)
    g = ret.occurrence_gbs(args.w)
    data = {"w": rs.w, "r0": rs.r0, "r1": rs.r1, "r2": rs.r2, "k": rs.k, "mu1": rs.mu1, "mu2": rs.mu2,
            "occurrence_gbs": list(g.params), "sr0": ret.sr0_check(args.w)}
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    return Report(data, text=text)


def cmd_transform(args):
    g = ret.transform_gbs(args.w, args.depth)
    word = ret.kimberling_transform(fibonacci_word(ret.CORPUS_LENGTH), args.w)[:args.n]
    return Report({"w": args.w, "transform": word, "gbs": list(g.params)},
                  text=f"{word}\n{_triple(g)}")


def cmd_decompose(args):
    parts = ret.gbs_union_decompose(args.w, args.depth, require_sr0=not args.allow_sr0_failure)
    data = {letter: {"components": [{"gbs": list(g.params), "start": g.start} for g in u.components],
                     "uncovered": u.exceptions}
            for letter, u in parts.items()}
    lines = []
    for letter, u in parts.items():
        comps = " + ".join(_triple(g) + ("@0" if g.start == 0 else "") for g in u.components)
        extra = f"  (uncovered: {u.exceptions[:10]})" if u.exceptions else ""
        lines.append(f"{letter}: {comps}{extra}")
    return Report({"w": args.w, "depth": args.depth, "letters": data}, text="\n".join(lines),
                  ok=not any(u.exceptions for u in parts.values()))


def build_parser():
    parser = _Parser(prog="gbeatty", description="Generalized Beatty sequences over quadratic irrationals.")
    parser.add_argument("--format", choices=FORMATS, default="text")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)

    def verb(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
        return p

    p = verb("eval", cmd_eval, "terms of a GBS")
    p.add_argument("--v", "--gbs", dest="v", required=True, help="p,q,r or gbs:p,q,r@alpha#start")
    p.add_argument("--alpha", default="golden")
    p.add_argument("--start", type=int, choices=(0, 1))
    p.add_argument("--n", type=int, default=20)

    p = verb("diff-word", cmd_diff_word, "first differences of a GBS")
    p.add_argument("--v", "--gbs", dest="v", required=True)
    p.add_argument("--alpha", default="golden")
    p.add_argument("--start", type=int, choices=(0, 1))
    p.add_argument("--n", type=int, default=20)

    p = verb("fit", cmd_fit, "fit (p,q,r) to initial terms")
    p.add_argument("--terms", required=True)
    p.add_argument("--alpha", default="golden")
    p.add_argument("--start", type=int, choices=(0, 1), default=1)

    p = verb("fixpoint", cmd_fixpoint, "prefix of a morphism fixed point")
    p.add_argument("--morphism", required=True, help="e.g. 0>01;1>0")
    p.add_argument("--seed", default="0")
    p.add_argument("--n", type=int, default=40)

    p = verb("pair-check", cmd_pair_check, "check a complementary pair")
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--alpha", default="golden")
    p.add_argument("--v-start", type=int, choices=(0, 1))
    p.add_argument("--w-start", type=int, choices=(0, 1))
    p.add_argument("--depth", type=int, default=10**4)

    p = verb("pair-search", cmd_pair_search, "search increasing complementary pairs")
    p.add_argument("--alpha", default="golden")
    p.add_argument("--depth", type=int, default=10**4)
    p.add_argument("--branch-bound", type=int, default=10**6)

    p = verb("triple-check", cmd_triple_check, "check a partition by several GBS or a morphic word")
    p.add_argument("--seq", action="append", default=[], help="GBS, repeatable")
    p.add_argument("--alpha", default="golden")
    p.add_argument("--morphism")
    p.add_argument("--seed", default="0")
    p.add_argument("--post-map")
    p.add_argument("--expect", action="append", default=[], help="letter=GBS, repeatable")
    p.add_argument("--depth", type=int, default=10**4)

    p = verb("pell", cmd_pell, "Fibonacci/Pell conditions for p")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", type=int)
    g.add_argument("--max", type=int)

    p = verb("returns", cmd_returns, "return words of a Fibonacci factor")
    p.add_argument("--w", required=True)

    p = verb("transform", cmd_transform, "Kimberling transform w -> 2 of the Fibonacci word")
    p.add_argument("--w", required=True)
    p.add_argument("--n", type=int, default=40)
    p.add_argument("--depth", type=int, default=10**4)

    p = verb("decompose", cmd_decompose, "letter positions of a transform as GBS unions")
    p.add_argument("--w", required=True)
    p.add_argument("--depth", type=int, default=10**4)
    p.add_argument("--allow-sr0-failure", action="store_true")
    return parser


def _attach_negative_values(argv):
    # argparse reads "-1,4,0" as an option; glue it to the preceding flag
    out = []
    for tok in argv:
        if out and len(tok) > 1 and tok[0] == "-" and tok[1].isdigit() and out[-1].startswith("--") \
                and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def run(argv):
    """Run one command; returns (exit_code, output_text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_negative_values(list(argv)))
        if args.verb is None:
            raise UsageError(parser.format_help())
        if getattr(args, "depth", 2) < 2:
            raise UsageError("--depth must be at least 2")
        report = args.func(args)
        text = emit(report, args.format)
    except UsageError as exc:
        return 2, str(exc)
    except (ValueError, AssertionError) as exc:
        return 1, f"error: {exc}"
    return (0 if report.ok else 1), text


def main(argv=None):
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code != 2 else sys.stderr
    stream.write(text if text.endswith("\n") else text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
