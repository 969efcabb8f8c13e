"""Dependence and independence logic with monotone generalized quantifiers.

Team semantics for D(Q) and I(Q), an ESO(Q) model checker, the translations
between them, and property sweeps that check the two sides agree on small
structures.
"""

from .errors import (
    CapExceeded, DialectError, EvaluationError, NonMonotoneError, ParseError, SignatureError,
    TeamLogicError, TranslationError,
)
from .harness import PROPERTIES, SweepReport, SweepSpec, check_equiv, random_formula, run_sweep
from .model import (
    Structure, Team, count_structures, count_teams, enumerate_structures, enumerate_teams,
    format_structure, format_team, load_structure, load_team, parse_structure, parse_team,
    restrict, subteams, team_rel,
)
from .quantifiers import (
    Quantifier, Registry, atleast, default_registry, dual, exists_q, forall_q, most, qs,
)
from .semantics import (
    BRUTE, PAPER, ESOEvaluator, EvalConfig, eval_eso, eval_fo, eval_sentence, eval_team,
    flatness_check,
)
from .syntax import Signature, free_variables, parse_formula, to_text
from .transform import (
    TranslationResult, dq_to_eso, eliminate_definable_q, eso_to_dq, eso_to_dq_sentence,
    eso_to_dq_total, flatten_functions, is_flat, to_normal_form, translate,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTE", "CapExceeded", "DialectError", "ESOEvaluator", "EvalConfig", "EvaluationError",
    "NonMonotoneError", "PAPER", "PROPERTIES", "ParseError", "Quantifier", "Registry",
    "Signature", "SignatureError", "Structure", "SweepReport", "SweepSpec", "Team",
    "TeamLogicError", "TranslationError", "TranslationResult", "atleast", "check_equiv",
    "count_structures", "count_teams", "default_registry", "dq_to_eso", "dual",
    "eliminate_definable_q", "enumerate_structures", "enumerate_teams", "eso_to_dq",
    "eso_to_dq_sentence", "eso_to_dq_total", "eval_eso", "eval_fo", "eval_sentence",
    "eval_team", "exists_q", "flatness_check", "flatten_functions", "forall_q",
    "format_structure", "format_team", "free_variables", "is_flat", "load_structure",
    "load_team", "most", "parse_formula", "parse_structure", "parse_team", "qs",
    "random_formula", "restrict", "run_sweep", "subteams", "team_rel", "to_normal_form",
    "to_text", "translate",
]
