"""Command-line interface.

Exit codes: 0 the property holds / success, 1 it fails, 2 usage or input
error, 3 a size guard was exceeded.  Verdicts and data go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import random
import re
import sys

from .armstrong import ArmstrongSpec, build_armstrong, verify_armstrong
from .atoms import GAtom, format_atoms, parse_atom, read_atoms, variables_of
from .calculus import (CLOSURE_LIMIT, derivation_errors, entails,
                       parse_derivation, semantic_oracle)
from .errors import GDepError, ParseError, SizeError
from .logic import EvalContext, evaluate, parse_formula, read_structure
from .logic.semantics import EMPTY_ASSIGNMENT_TEAM
from .sampling import random_gatom, random_sigma, var_names
from .team import emit_team, holds, mine_gdeps, read_team
from .translate import rewrite_formula, translate_atom

OK, FAIL, USAGE, GUARD = 0, 1, 2, 3


class UsageError(GDepError):
    pass


def _verdict(flag: bool) -> int:
    print("true" if flag else "false")
    return OK if flag else FAIL


def _gdep_only(atoms, what: str) -> list:
    for a in atoms:
        if not isinstance(a, GAtom):
            raise UsageError(f"{what} must contain only gdep atoms, found {a}")
    return list(atoms)


def _write(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_check(args) -> int:
    team = read_team(args.team)
    return _verdict(holds(team, parse_atom(args.atom)))


def cmd_entail(args) -> int:
    sigma = _gdep_only(read_atoms(args.sigma), "premise file")
    goal = _gdep_only([parse_atom(args.goal)], "goal")[0]
    result = entails(sigma, goal)
    print("derivable" if result.verdict else "not derivable")
    if args.witness:
        if result.verdict:
            _write(result.derivation.format(), args.witness)
        else:
            _write(emit_team(result.counter_model.team), args.witness)
    return OK if result.verdict else FAIL


def _split_vars(text: str) -> list[str]:
    return [v for v in re.split(r"[,\s]+", text) if v]


def cmd_armstrong(args) -> int:
    sigma = _gdep_only(read_atoms(args.sigma), "premise file")
    universe = set(_split_vars(args.vars)) if args.vars is not None else variables_of(sigma)
    if not universe:
        raise UsageError("no variables: give --vars or a non-empty premise file")
    team = build_armstrong(ArmstrongSpec(frozenset(sigma), frozenset(universe), args.bound))
    _write(emit_team(team), args.output)
    return OK


def cmd_verify_armstrong(args) -> int:
    team = read_team(args.team)
    sigma = _gdep_only(read_atoms(args.sigma), "premise file")
    report = verify_armstrong(team, sigma, bound=args.bound,
                              multi_antecedent=args.all_atoms)
    sys.stdout.write(report.format())
    return OK if report.ok else FAIL


def cmd_check_proof(args) -> int:
    sigma = read_atoms(args.sigma)
    with open(args.proof, encoding="utf-8") as fh:
        d = parse_derivation(fh.read())
    errors = derivation_errors(sigma, d)
    for e in errors:
        print(e, file=sys.stderr)
    if not errors and args.goal:
        goal = parse_atom(args.goal)
        if d.conclusion != goal:
            print(f"root concludes {d.conclusion}, not {goal}", file=sys.stderr)
            return _verdict(False)
    return _verdict(not errors)


def cmd_translate(args) -> int:
    direction = f"to_{args.to}"
    try:
        atom = parse_atom(args.text)
    except ParseError:
        atom = None
    if atom is not None:
        sys.stdout.write(format_atoms(translate_atom(atom, direction)))
    else:
        print(rewrite_formula(parse_formula(args.text), direction))
    return OK


def cmd_eval(args) -> int:
    structure = read_structure(args.structure)
    phi = parse_formula(args.formula)
    team = read_team(args.team) if args.team else EMPTY_ASSIGNMENT_TEAM
    ctx = EvalContext(structure, team, max_split_rows=args.max_split_rows,
                      max_choices=args.max_choices)
    return _verdict(evaluate(ctx, phi))


def cmd_mine(args) -> int:
    if args.max_lhs < 1:
        raise UsageError("--max-lhs must be at least 1")
    team = read_team(args.team)
    sys.stdout.write(format_atoms(mine_gdeps(team, args.max_lhs)))
    return OK


def cmd_crosscheck(args) -> int:
    """Random entailment queries decided both by the calculus and by
    enumerating two-row teams; any disagreement is printed."""
    rng = random.Random(args.seed)
    names = var_names(args.vars)
    bad = 0
    for _ in range(args.count):
        sigma = random_sigma(rng, names)
        goal = random_gatom(rng, names)
        got = entails(sigma, goal).verdict
        want = semantic_oracle(sigma, goal)
        if got != want:
            bad += 1
            print(f"{format_atoms(sigma).strip()} |- {goal}: calculus {got}, "
                  f"oracle {want}")
    print(f"{args.count} queries, {bad} discrepancies")
    return OK if bad == 0 else FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gdep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="check an atom on a CSV team")
    s.add_argument("team")
    s.add_argument("atom")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("entail", help="decide sigma |- goal")
    s.add_argument("sigma", help="atom file, one atom per line")
    s.add_argument("goal")
    s.add_argument("--witness", metavar="OUT",
                   help="write the derivation or counter-model here ('-' for stdout)")
    s.set_defaults(func=cmd_entail)

    s = sub.add_parser("armstrong", help="build an Armstrong relation")
    s.add_argument("sigma")
    s.add_argument("--vars", help="universe, comma separated (default: variables of sigma)")
    s.add_argument("-o", "--output", help="CSV output path (default stdout)")
    s.add_argument("--bound", type=int, default=CLOSURE_LIMIT)
    s.set_defaults(func=cmd_armstrong)

    s = sub.add_parser("verify-armstrong", help="compare a team against derivability")
    s.add_argument("team")
    s.add_argument("sigma")
    s.add_argument("--all-atoms", action="store_true",
                   help="also check multi-antecedent atoms")
    s.add_argument("--bound", type=int, default=CLOSURE_LIMIT)
    s.set_defaults(func=cmd_verify_armstrong)

    s = sub.add_parser("check-proof", help="check a derivation file")
    s.add_argument("sigma")
    s.add_argument("proof")
    s.add_argument("--goal", help="also require the root to conclude this atom")
    s.set_defaults(func=cmd_check_proof)

    s = sub.add_parser("translate", help="rewrite between dep and gdep")
    s.add_argument("text", help="an atom or a formula")
    s.add_argument("--to", choices=("gdep", "fdep"), required=True)
    s.set_defaults(func=cmd_translate)

    s = sub.add_parser("eval", help="evaluate a formula in team semantics")
    s.add_argument("structure")
    s.add_argument("formula")
    s.add_argument("--team", help="CSV team (default: the single empty assignment)")
    s.add_argument("--max-split-rows", type=int, default=10)
    s.add_argument("--max-choices", type=int, default=10**6)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("mine", help="list minimal G-dependencies holding in a team")
    s.add_argument("team")
    s.add_argument("--max-lhs", type=int, default=1)
    s.set_defaults(func=cmd_mine)

    s = sub.add_parser("crosscheck", help="random calculus-vs-oracle comparison")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=1000)
    s.add_argument("--vars", type=int, default=5)
    s.set_defaults(func=cmd_crosscheck)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeError as e:
        print(f"error: {e}", file=sys.stderr)
        return GUARD
    except (GDepError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
