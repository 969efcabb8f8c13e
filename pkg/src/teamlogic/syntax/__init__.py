"""Syntax of team logics and ESO(Q): trees, parser, printer, rewrites."""

from .ast import (
    ATOMS, BOT, TOP, And, Bot, Dep, Eq, Exists, ExistsFunc, ExistsRel, Forall, Formula,
    Func, GQ, Indep, Neg, NormalFormSentence, Or, Rel, Signature, Term, Top, Var, conj,
    disj, exists_many, forall_many, is_literal, is_relation_name, is_reserved, neq,
    subterms, term_vars, tuple_eq, tuple_neq, variables,
)
from .ops import *  # noqa: F401,F403
from .ops import __all__ as _ops_all
from .parser import parse_formula, parse_so_formula, parse_team_formula, tokenize
from .printer import prefix_text, pretty, term_text, to_text

print_formula = to_text

__all__ = [
    "ATOMS", "BOT", "TOP", "And", "Bot", "Dep", "Eq", "Exists", "ExistsFunc", "ExistsRel",
    "Forall", "Formula", "Func", "GQ", "Indep", "Neg", "NormalFormSentence", "Or", "Rel",
    "Signature", "Term", "Top", "Var", "conj", "disj", "exists_many", "forall_many",
    "is_literal", "is_relation_name", "is_reserved", "neq", "parse_formula",
    "parse_so_formula", "parse_team_formula", "prefix_text", "pretty", "print_formula",
    "subterms", "term_text", "term_vars", "to_text", "tokenize", "tuple_eq", "tuple_neq",
    "variables", *_ops_all,
]
