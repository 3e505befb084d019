"""Command-line front end.

Exit status: 0 success / true / pass, 1 false / fail / counterexample found,
2 usage or parse error.  ``--json`` prints a single object with keys
``command``, ``inputs``, ``verdict``, ``certificates`` and, when there is
one, ``counterexample``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrays import (ArraySpecError, ExplicitArray, LogLinearArray, RegularArray,
                     check_admissible_bounded, format_rational,
                     is_degenerate, load_array_spec, weight)
from .ideal_loglinear import (FINGEN_ARRAY, INFGEN_ARRAY, RewriteSystem, enumerate_relations,
                              infgen_witness, verify_appendix, verify_fingen, weight_classes)
from .ideal_regular import (NotInIdealError, ResourceLimitError, decompose, enumerate_disjoint,
                            enumerate_fibers, member, minimal_generators)
from .order import Outcome, classify_lenlex, compare, orders_equivalent_bounded
from .words import BinomialDifference, check_letters, format_word, parse_word, pretty_word

DEFAULT_MAX_LEN = 5
DEFAULT_MAX_SHIFT = 4


class UsageError(Exception):
    pass


def _q(x) -> str:
    return format_rational(x)


def _w(w) -> str:
    return format_word(w)


def _diff(d: BinomialDifference) -> dict:
    return {"lhs": _w(d.lhs), "rhs": _w(d.rhs)}


def _family(A) -> str:
    if isinstance(A, RegularArray):
        return "regular"
    if isinstance(A, LogLinearArray):
        return "loglinear"
    return "explicit"


def _load(path, default=None):
    if path is None:
        if default is None:
            raise UsageError("--array is required")
        return default
    return load_array_spec(path)


def _word_arg(text, A):
    w = parse_word(text)
    if not w:
        raise UsageError("empty word")
    check_letters(w, A.t)
    return w


def _weight_label(A, w) -> str:
    return str(weight(A, w))


class Result:
    def __init__(self, command, inputs, verdict, status=0):
        self.data = {"command": command, "inputs": inputs, "verdict": verdict,
                     "certificates": []}
        self.status = status
        self.lines: list[str] = []

    def cert(self, **kw):
        self.data["certificates"].append(kw)

    def counterexample(self, value):
        self.data["counterexample"] = value

    def say(self, line=""):
        self.lines.append(line)


# -- commands ----------------------------------------------------------------

def cmd_check(args) -> Result:
    A = _load(args.array)
    deg = is_degenerate(A)
    rep = check_admissible_bounded(A, args.max_len, args.max_shift)
    res = Result("check", {"array": args.array, "family": _family(A), "max_len": args.max_len,
                           "max_shift": args.max_shift},
                 "pass" if rep.passed else "counterexample", 0 if rep.passed else 1)
    res.cert(kind="degeneracy", degenerate=deg is not None,
             letters=list(deg) if deg else None)
    res.cert(kind="admissibility", passed=rep.passed, max_len=args.max_len,
             max_shift=args.max_shift)
    if deg:
        res.say(f"degenerate: x{deg[0]} and x{deg[1]} have equal weight")
    else:
        res.say("degenerate: no")
    if rep.passed:
        res.say(f"admissible up to length {args.max_len}, shift {args.max_shift}: pass")
    else:
        w1, w2, k = rep.counterexample
        res.counterexample({"lhs": _w(w1), "rhs": _w(w2), "shift": k,
                            "weights": {str(k): [_q(weight(A, w1, k).value), _q(weight(A, w2, k).value)],
                                        str(k + 1): [_q(weight(A, w1, k + 1).value),
                                                     _q(weight(A, w2, k + 1).value)]}})
        res.say(f"counterexample: {pretty_word(w1)} vs {pretty_word(w2)} at shift {k}")
        for s in (k, k + 1):
            res.say(f"  shift {s}: {_q(weight(A, w1, s).value)} vs {_q(weight(A, w2, s).value)}")
    return res


def cmd_compare(args) -> Result:
    A = _load(args.array)
    u, v = _word_arg(args.lhs, A), _word_arg(args.rhs, A)
    out = compare(A, u, v)
    res = Result("compare", {"array": args.array, "lhs": _w(u), "rhs": _w(v)}, out.name)
    in_ideal = out is Outcome.EQ and u != v
    res.cert(kind="weights", lhs=_q(weight(A, u).value), rhs=_q(weight(A, v).value),
             exponential=isinstance(A, LogLinearArray), difference_in_ideal=in_ideal)
    res.say(f"{out.name} (difference lies in I_A)" if in_ideal else out.name)
    res.say(f"  {pretty_word(u)}: {_weight_label(A, u)}")
    res.say(f"  {pretty_word(v)}: {_weight_label(A, v)}")
    return res


def cmd_classify(args) -> Result:
    A = _load(args.array)
    c = classify_lenlex(A, args.confirm_len)
    ok = c.verdict != "Inconclusive"
    res = Result("classify-order", {"array": args.array, "confirm_len": args.confirm_len},
                 c.verdict, 0 if ok else 1)
    res.cert(kind="gap-conditions", alpha=_q(c.alpha), beta=_q(c.beta), slope=_q(c.slope),
             hypotheses=dict(c.hypotheses), letter_order=list(c.letter_order),
             confirmed_up_to=c.bounded_confirmation, diagnostics=list(c.diagnostics))
    res.say(c.verdict)
    res.say(f"  alpha = {_q(c.alpha)}, beta = {_q(c.beta)}, slope = {_q(c.slope)}")
    res.say(f"  letter order: {' < '.join(f'x{x}' for x in c.letter_order)}")
    res.say(f"  confirmed exhaustively up to length {c.bounded_confirmation}")
    for d in c.diagnostics:
        res.say(f"  {d}")
    return res


def cmd_equiv(args) -> Result:
    A, B = _load(args.array), _load(args.other)
    rep = orders_equivalent_bounded(A, B, args.max_len)
    res = Result("equiv", {"array": args.array, "other": args.other, "max_len": args.max_len},
                 "agree" if rep.agree else "counterexample", 0 if rep.agree else 1)
    res.cert(kind="bounded-equivalence", agree=rep.agree, max_len=args.max_len)
    if rep.agree:
        res.say(f"orders agree on all words up to length {args.max_len}")
    else:
        w1, w2, oa, ob = rep.counterexample
        res.counterexample({"lhs": _w(w1), "rhs": _w(w2), "array": oa.name, "other": ob.name})
        res.say(f"counterexample: {pretty_word(w1)} vs {pretty_word(w2)}: {oa.name} vs {ob.name}")
    return res


def cmd_relations(args) -> Result:
    A = _load(args.array)
    inputs = {"array": args.array, "length": args.length,
              "disjoint_only": args.disjoint_only, "minimal_only": args.minimal_only}
    if isinstance(A, ExplicitArray):
        raise UsageError("relations needs a regular or log-linear array")
    if isinstance(A, LogLinearArray):
        if args.disjoint_only or args.minimal_only:
            raise UsageError("--disjoint-only/--minimal-only apply to regular arrays")
        rels = enumerate_relations(A, args.length)
        res = Result("relations", inputs, "listed")
        for r in rels:
            res.cert(kind="relation", log_weight=_q(weight(A, r.lhs).value), **_diff(r))
            res.say(f"{r}    (log-weight {_q(weight(A, r.lhs).value)})")
        res.say(f"{len(rels)} relations of length {args.length}")
        return res
    res = Result("relations", inputs, "listed")
    if args.minimal_only:
        if args.length < 2:
            raise UsageError("--length must be >= 2")
        gens = minimal_generators(A, args.length)
        rels = [g for g in gens if len(g) == args.length]
    elif args.disjoint_only:
        if args.length < 2:
            raise UsageError("--length must be >= 2")
        rels = enumerate_disjoint(A, args.length)
    else:
        fibers = [f for f in enumerate_fibers(A, args.length) if len(f) > 1]
        for f in fibers:
            words = sorted(e.canonical_word() for e in f.members)
            res.cert(kind="fiber", weight=_q(f.weight), members=[_w(w) for w in words])
            res.say(f"weight {_q(f.weight)}: " + ", ".join(pretty_word(w) for w in words))
        res.say(f"{len(fibers)} fibers with more than one monomial at degree {args.length}")
        return res
    for r in rels:
        res.cert(kind="relation", **_diff(r))
        res.say(str(r))
    res.say(f"{len(rels)} differences of length {args.length}")
    return res


def cmd_gens(args) -> Result:
    A = _load(args.array)
    inputs = {"array": args.array, "max_len": args.max_len}
    if isinstance(A, RegularArray):
        gens = minimal_generators(A, args.max_len)
        res = Result("gens", inputs, "listed")
        for g in gens:
            res.cert(kind="minimal", length=len(g), **_diff(g))
        res.cert(kind="certified-length", max_len_certified=gens.max_len_certified)
        res.say("commutators x_i x_j - x_j x_i, together with:")
        for g in gens:
            res.say(f"  {g}")
        res.say(f"complete up to length {gens.max_len_certified}; no claim beyond it")
        return res
    if isinstance(A, LogLinearArray):
        res = Result("gens", inputs, "listed")
        res.say("length  relations  irreducible-over-shorter")
        for length in range(1, args.max_len + 1):
            classes = weight_classes(A, length)
            big = [ws for ws in classes.values() if len(ws) > 1]
            total = sum(len(ws) * (len(ws) - 1) // 2 for ws in big)
            if length == 1 or not big:
                irreducible = total
            else:
                comp = RewriteSystem(A, length - 1).components(length)
                irreducible = sum(1 for ws in big for i, u in enumerate(ws) for v in ws[i + 1:]
                                  if comp[u] != comp[v])
            res.cert(kind="stratum", length=length, relations=total, irreducible=irreducible)
            res.say(f"{length:>6}  {total:>9}  {irreducible:>24}")
        return res
    raise UsageError("gens needs a regular or log-linear array")


def cmd_decompose(args) -> Result:
    A = _load(args.array)
    if not isinstance(A, RegularArray):
        raise UsageError("decompose needs a regular array")
    u, v = _word_arg(args.lhs, A), _word_arg(args.rhs, A)
    inputs = {"array": args.array, "lhs": _w(u), "rhs": _w(v)}
    if len(u) != len(v) or u == v:
        raise UsageError("lhs and rhs must be distinct words of equal length")
    diff = BinomialDifference(u, v)
    if not member(A, diff):
        res = Result("decompose", inputs, "not-member", 1)
        res.say(f"{diff} is not in I_A")
        return res
    gens = minimal_generators(A, len(diff)) if len(diff) >= 2 else []
    dec = decompose(A, diff, gens)
    res = Result("decompose", inputs, "decomposed")
    for t in dec.terms:
        res.cert(kind="term", sign=t.sign, left=_w(t.left), right=_w(t.right),
                 commutator=t.generator.is_commutator(), **_diff(t.generator))
    res.cert(kind="expansion", verified=dec.verify())
    res.say(f"{diff} =")
    for t in dec.terms:
        res.say(f"  {t}")
    res.say(f"{len(dec.commutator_terms())} commutator terms, "
            f"{len(dec.generator_terms())} disjoint-support terms; expansion verified")
    return res


def cmd_verify_fingen(args) -> Result:
    A = _load(args.array, FINGEN_ARRAY)
    if not isinstance(A, LogLinearArray):
        raise UsageError("verify fingen needs a log-linear array")
    rep = verify_fingen(A, args.max_len, args.gen_len)
    res = Result("verify fingen", {"array": args.array, "max_len": args.max_len,
                                   "gen_len": args.gen_len},
                 "pass" if rep.passed else "fail", 0 if rep.passed else 1)
    for length, st in rep.per_length.items():
        res.cert(kind="stratum", length=length, **st)
    if rep.counterexample is not None:
        res.counterexample(_diff(rep.counterexample))
    res.say(f"relations of length <= {args.max_len} reduce over length <= {args.gen_len}: "
            f"{'pass' if rep.passed else 'fail'}")
    for length, st in rep.per_length.items():
        res.say(f"  length {length}: {st['differences']} relations in {st['classes']} classes, "
                f"{st['unreduced']} unreduced")
    if rep.counterexample is not None:
        res.say(f"  first unreduced: {rep.counterexample}")
    return res


def cmd_verify_infgen(args) -> Result:
    A = _load(args.array, INFGEN_ARRAY)
    if A != INFGEN_ARRAY:
        raise UsageError("verify infgen needs log column 2 4 7 with slope 2")
    c = infgen_witness(args.n, A)
    res = Result("verify infgen", {"array": args.array, "n": args.n},
                 "pass" if c.passed else "fail", 0 if c.passed else 1)
    res.cert(kind="membership", delta_coefficients=[_q(x) for x in c.delta.coefficients],
             delta_value=_q(c.delta_value), member=c.member, **_diff(c.difference))
    res.cert(kind="isolated-factors", all_isolated=c.factors_isolated,
             factors={_w(f): n for f, n in sorted(c.factor_class_sizes.items())})
    res.cert(kind="irreducible", reduction_found=c.reduction is not None)
    res.cert(kind="closed-form", tail_coefficient=_q(c.tail_coefficient),
             values={_q(k): _q(v) for k, v in sorted(c.closed_form_values.items())},
             notes=list(c.notes))
    res.say(f"{c.difference}  (length {c.length})")
    res.say(f"  delta coefficients: {', '.join(_q(x) for x in c.delta.coefficients)}; "
            f"value {_q(c.delta_value)}")
    res.say(f"  factors of length 2..{c.length - 1} with no equal-weight partner: "
            f"{'all' if c.factors_isolated else 'not all'}")
    res.say(f"  rewrite chain over shorter relations: {'found' if c.reduction else 'none'}")
    for note in c.notes:
        res.say(f"  note: {note}")
    res.say("pass" if c.passed else "fail")
    return res


def cmd_verify_appendix(args) -> Result:
    A = _load(args.array, FINGEN_ARRAY)
    if A != FINGEN_ARRAY:
        raise UsageError("verify appendix needs log column 2 3 4 6 with slope 2")
    rep = verify_appendix(args.max_len, A)
    res = Result("verify appendix", {"array": args.array, "max_len": args.max_len},
                 "pass" if rep.passed else "fail", 0 if rep.passed else 1)
    for r in rep.relations:
        res.cert(kind="length-2-relation", **_diff(r))
    for case in rep.cases:
        res.cert(kind="prefix-case", lhs_prefix=_w(case.lhs_prefix), rhs_prefix=_w(case.rhs_prefix),
                 status=case.status, tail_target=_q(case.tail_target),
                 solver=case.solve.verdict, differences=case.differences, reduced=case.reduced,
                 sample=[_w(w) for w in case.sample.words()] if case.sample else None)
    if rep.fingen.counterexample is not None:
        res.counterexample(_diff(rep.fingen.counterexample))
    res.say("length-2 relations: " + ", ".join(str(r) for r in rep.relations))
    for case in rep.cases:
        if case.status == "empty":
            continue
        head = f"{pretty_word(case.lhs_prefix)}.. vs {pretty_word(case.rhs_prefix)}..: {case.status}"
        if case.status == "blocked":
            head += f" ({case.solve.verdict}, tail target {_q(case.tail_target)})"
        else:
            head += f" ({case.reduced}/{case.differences}; e.g. {case.sample})"
        res.say(head)
    res.say("pass" if rep.passed else "fail")
    return res


# -- plumbing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="weightideals", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="degeneracy and bounded admissibility")
    s.add_argument("--array", required=True)
    s.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    s.add_argument("--max-shift", type=int, default=DEFAULT_MAX_SHIFT)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("compare", parents=[common], help="compare two words")
    s.add_argument("--array", required=True)
    s.add_argument("--lhs", required=True)
    s.add_argument("--rhs", required=True)
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("classify-order", parents=[common],
                       help="length-lexicographic test for a log-linear array")
    s.add_argument("--array", required=True)
    s.add_argument("--confirm-len", type=int, default=DEFAULT_MAX_LEN)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("equiv", parents=[common], help="bounded order equivalence")
    s.add_argument("--array", required=True)
    s.add_argument("--other", required=True)
    s.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("relations", parents=[common], help="relations of one length")
    s.add_argument("--array", required=True)
    s.add_argument("--length", type=int, default=2)
    s.add_argument("--disjoint-only", action="store_true")
    s.add_argument("--minimal-only", action="store_true")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("gens", parents=[common], help="generator summary up to a length")
    s.add_argument("--array", required=True)
    s.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    s.set_defaults(func=cmd_gens)

    s = sub.add_parser("decompose", parents=[common],
                       help="explicit decomposition over commutators and minimal differences")
    s.add_argument("--array", required=True)
    s.add_argument("--lhs", required=True)
    s.add_argument("--rhs", required=True)
    s.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="machine checks").add_subparsers(dest="which", required=True)
    s = v.add_parser("fingen", parents=[common], help="relations reduce over short ones")
    s.add_argument("--array")
    s.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    s.add_argument("--gen-len", type=int, default=2)
    s.set_defaults(func=cmd_verify_fingen)
    s = v.add_parser("infgen", parents=[common], help="irreducible witness of length n + 2")
    s.add_argument("--array")
    s.add_argument("--n", type=int, default=4)
    s.set_defaults(func=cmd_verify_infgen)
    s = v.add_parser("appendix", parents=[common], help="prefix case analysis")
    s.add_argument("--array")
    s.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    s.set_defaults(func=cmd_verify_appendix)
    return p


def _positive_bounds(args):
    for name in ("max_len", "max_shift", "confirm_len", "length", "n", "gen_len"):
        value = getattr(args, name, None)
        if value is not None and value < (0 if name == "max_shift" else 1):
            raise UsageError(f"--{name.replace('_', '-')} must be positive")


def render_json(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _positive_bounds(args)
        res = args.func(args)
    except (UsageError, ArraySpecError, NotInIdealError, ResourceLimitError,
            ValueError, TypeError, OSError) as exc:
        kind = type(exc).__name__
        msg = str(exc).replace("\n", " ")
        print(f"error: {kind}: {msg}", file=sys.stderr)
        return 2
    if args.json:
        sys.stdout.write(render_json(res.data))
    else:
        sys.stdout.write("\n".join(res.lines) + "\n")
    return res.status


if __name__ == "__main__":
    sys.exit(main())
