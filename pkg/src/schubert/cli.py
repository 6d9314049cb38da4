"""Command-line front end.

Exit codes: 0 success (decomposable / pass), 1 negative verdict, 2 the
independent predicates disagree, 64 malformed input or bad arguments.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import acceptance, kp, pluecker
from .partitions import InvalidArguments
from .symmetric import TensorCoefficients

EXIT_OK, EXIT_NO, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags, which would collide with the disagreement code
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidArguments(f"cannot read {path}: {exc.strerror}") from exc


def _json_documents(text: str) -> list:
    """One JSON document, or several separated by newlines."""
    text = text.strip()
    if not text:
        raise InvalidArguments("empty input")
    try:
        return [json.loads(text)]
    except json.JSONDecodeError:
        pass
    docs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip():
            try:
                docs.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise InvalidArguments(f"line {lineno}: invalid JSON ({exc.msg})") from exc
    return docs


def cmd_decomposable(args, out: list[str]) -> int:
    tensors = [TensorCoefficients.from_json(doc) for doc in _json_documents(_read_text(args.input))]
    for t in tensors:
        if t.rank < 1:
            raise InvalidArguments("decomposability needs rank r >= 1")
    code = EXIT_OK
    for t in tensors:
        m = t.to_exterior()
        verdicts = {
            "theorem2": pluecker.theorem2_check(t),
            "classical": pluecker.classical_criterion(m),
            "theorem1": pluecker.theorem1_check(m, pluecker.NORMATIVE),
        }
        agree = len(set(verdicts.values())) == 1
        report = dict(verdicts, agree=agree, decomposable=verdicts["theorem2"] if agree else None)
        out.append(json.dumps(report))
        if not agree:
            code = EXIT_DISAGREE
        elif not verdicts["theorem2"] and code == EXIT_OK:
            code = EXIT_NO
    return code


def cmd_ideal(args, out: list[str]) -> int:
    quadrics = pluecker.pluecker_ideal(args.r, args.n)
    if args.format == "json":
        out.append(pluecker.quadrics_to_json(quadrics, args.r, args.n))
    else:
        out.extend(q.text() for q in quadrics)
    return EXIT_OK


def cmd_kp_check(args, out: list[str]) -> int:
    if args.weight < 1:
        raise InvalidArguments("--weight must be at least 1")
    tau = kp.QPolynomial.from_json(json.loads(_read_text(args.tau)) if args.tau else None)
    if tau.weight() > args.weight:
        raise InvalidArguments(f"tau has weight {tau.weight()}, above --weight {args.weight}")
    W = args.weight
    tau = kp.QPolynomial(tau.family, tau.terms, W)
    bosonic = kp.kp_residue_check(tau, W)
    out.append(bosonic.describe())
    as_h = kp.x_to_h(tau)
    if as_h.is_integral():
        integer = kp.kp_integer_check(as_h, W)
        out.append(integer.describe())
        if integer.passed != bosonic.passed:
            out.append("disagreement between the integer and the bosonic forms")
            return EXIT_DISAGREE
    else:
        out.append("integer form skipped: tau has non-integral h-coefficients")
    return EXIT_OK if bosonic.passed else EXIT_NO


def cmd_random_gen(args, out: list[str]) -> int:
    if args.count < 0:
        raise InvalidArguments("--count must be nonnegative")
    rng = random.Random(args.seed)
    for _ in range(args.count):
        t = pluecker.random_decomposable(args.r, args.n, rng.randrange(2**63))
        out.append(t.dumps())
    return EXIT_OK


def cmd_selftest(args, out: list[str]) -> int:
    with acceptance.mutated(args.mutate):
        results = acceptance.run_all()
    out.extend(res.line() for res in results)
    passed = sum(res.passed for res in results)
    out.append(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schubert", description="Schubert derivations, Pluecker quadrics and KP checks.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("decomposable", help="decide whether a tensor is decomposable")
    p.add_argument("--input", help="TensorCoefficients JSON (default: standard input)")
    p.set_defaults(func=cmd_decomposable)

    p = sub.add_parser("ideal", help="Pluecker quadrics of G(r, n)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("kp-check", help="truncated KP residue check for a tau function")
    p.add_argument("--tau", required=True, help="tau JSON file")
    p.add_argument("--weight", type=int, required=True, help="weight bound W")
    p.set_defaults(func=cmd_kp_check)

    p = sub.add_parser("random-gen", help="random decomposable tensors, one JSON per line")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_random_gen)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--mutate", choices=sorted(acceptance.MUTATIONS), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)

    for name in ("decomposable", "ideal", "kp-check", "random-gen", "selftest"):
        sub.choices[name].add_argument("--output", help="write the report here instead of standard output")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out: list[str] = []
        code = args.func(args, out)
    except (UsageError, InvalidArguments) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    # output is buffered so that an error exit never leaves a partial report
    text = "\n".join(out) + ("\n" if out else "")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
