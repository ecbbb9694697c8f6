from .semantics import (EMPTY_ASSIGNMENT_TEAM, EvalContext, eval_first_order_oracle,
                        evaluate, evaluate_sentence)
from .structure import Structure, format_structure, load_structure, read_structure
from .syntax import (And, EqLiteral, Exists, FDepAtom, Forall, GDepAtom, Or,
                     RelLiteral, all_vars, depth, free_vars, has_dependence_atoms,
                     parse_formula, subformulas)

__all__ = [
    "And", "EMPTY_ASSIGNMENT_TEAM", "EqLiteral", "EvalContext", "Exists",
    "FDepAtom", "Forall", "GDepAtom", "Or", "RelLiteral", "Structure",
    "all_vars", "depth", "eval_first_order_oracle", "evaluate",
    "evaluate_sentence", "format_structure", "free_vars",
    "has_dependence_atoms", "load_structure", "parse_formula",
    "read_structure", "subformulas",
]
