"""G-dependence: team checks, entailment with witnesses, Armstrong relations,
translation to and from functional dependence, and a team-semantics
evaluator for G-dependence logic."""

from .armstrong import (ArmstrongReport, ArmstrongSpec, build_armstrong,
                        verify_armstrong)
from .atoms import (FAtom, GAtom, format_atoms, gatom, load_atoms, normalize,
                    normalize_set, parse_atom, parse_gatom, read_atoms)
from .calculus import (CounterModel, Derivation, EntailmentResult, check_derivation,
                       deductive_closure, derivable, derivation_errors, entails,
                       parse_derivation, reach_set, semantic_oracle)
from .errors import (ContractError, DomainError, FormatError, GDepError,
                     ParseError, SizeError)
from .team import (Team, binary_pair_team, check_fdep, check_gdep, emit_team,
                   holds, load_team, mine_gdeps, read_team)
from .translate import fdep_to_gdeps, gdep_to_fdeps, rewrite_formula

__version__ = "0.1.0"
