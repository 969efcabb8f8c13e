"""Recursive-descent parser for the ASCII formula grammar.

Grammar::

    formula  := conj ('|' conj)*
    conj     := unary ('&' unary)*
    unary    := 'E' var '.' formula | 'A' var '.' formula
              | '[' qname var+ ']' formula
              | 'Ef' fname '/' N '.' formula | 'ER' Rname '/' N '.' formula
              | '~' atom | '(' formula ')' | atom
    atom     := 'top' | 'bot' | 'dep' '(' terms ')'
              | 'perp' '(' terms ';' terms ';' terms ')'
              | Rname '(' terms? ')' | term '=' term | term '!=' term
    term     := var | fname '(' terms? ')'

Quantifier bodies extend as far right as possible. ``&`` binds tighter
than ``|``; both associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError, SignatureError
from .ast import (
    BOT, TOP, And, Dep, Eq, Exists, ExistsFunc, ExistsRel, Forall, Func, GQ, Indep,
    Neg, Or, Rel, Signature, Var, is_relation_name,
)

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<op>!=|[()\[\],;.&|~=/])
  | (?P<num>\d+)
  | (?P<name>_*[A-Za-z][A-Za-z0-9_]*(?:\^d)*)
    """,
    re.VERBOSE,
)

_VAR = re.compile(r"_*[a-z][a-z0-9_]*$")
_KEYWORDS = {"top", "bot", "dep", "perp"}


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[_Tok]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        if m.lastgroup != "ws":
            out.append(_Tok(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(_Tok("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, sig, registry, allow_reserved, allow_team, allow_so):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.sig = sig
        self.registry = registry
        self.allow_reserved = allow_reserved
        self.allow_team = allow_team
        self.allow_so = allow_so
        # inferred arities when no signature is given
        self.seen: dict[str, int] = {}
        self.bound_so: list[tuple[str, int]] = []

    # -- token helpers
    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, tok.pos, self.text)

    def accept(self, text):
        if self.tok.text == text and self.tok.kind != "eof":
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def name(self, what):
        tok = self.tok
        if tok.kind != "name":
            raise self.error(f"expected {what}")
        if tok.text.startswith("_") and not self.allow_reserved:
            raise self.error(f"names starting with '_' are reserved: {tok.text!r}")
        self.i += 1
        return tok.text

    def var(self):
        tok = self.tok
        v = self.name("variable")
        if not _VAR.match(v):
            raise self.error(f"invalid variable name {v!r}", tok)
        return v

    # -- symbol checks
    def check_symbol(self, name, arity, kind, tok):
        for bname, bar in reversed(self.bound_so):
            if bname == name:
                if bar != arity:
                    raise SignatureError(f"{name} used with {arity} arguments but bound with arity {bar} (position {tok.pos})")
                return
        if self.sig is not None:
            table = self.sig.relations if kind == "relation" else self.sig.functions
            if name not in table:
                raise SignatureError(f"unknown {kind} symbol {name!r} (position {tok.pos})")
            if table[name] != arity:
                raise SignatureError(f"{kind} {name} has arity {table[name]}, used with {arity} (position {tok.pos})")
            return
        prev = self.seen.setdefault(name, arity)
        if prev != arity:
            raise SignatureError(f"{name} used with arities {prev} and {arity} (position {tok.pos})")

    def check_quantifier(self, qname, k, tok):
        if self.registry is None:
            return
        try:
            q = self.registry[qname]
        except KeyError:
            raise SignatureError(f"unknown quantifier {qname!r} (position {tok.pos})") from None
        if q.arity != k:
            raise SignatureError(f"quantifier {qname} has arity {q.arity}, binds {k} variables (position {tok.pos})")

    # -- grammar
    def formula(self):
        left = self.conj()
        while self.accept("|"):
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.accept("&"):
            left = And(left, self.unary())
        return left

    def unary(self):
        tok = self.tok
        nxt = self.peek()
        if tok.kind == "name" and tok.text in ("E", "A") and nxt.kind == "name":
            self.i += 1
            v = self.var()
            self.expect(".")
            body = self.formula()
            return Exists(v, body) if tok.text == "E" else Forall(v, body)
        if tok.kind == "name" and tok.text in ("Ef", "ER") and nxt.kind == "name":
            if not self.allow_so:
                raise self.error("second-order quantifiers are not allowed here")
            self.i += 1
            sym_tok = self.tok
            sym = self.name("symbol")
            if tok.text == "Ef" and is_relation_name(sym):
                raise self.error(f"function symbol must start lower-case: {sym!r}", sym_tok)
            if tok.text == "ER" and not is_relation_name(sym):
                raise self.error(f"relation symbol must start upper-case: {sym!r}", sym_tok)
            self.expect("/")
            if self.tok.kind != "num":
                raise self.error("expected arity")
            arity = int(self.tok.text)
            self.i += 1
            self.expect(".")
            self.bound_so.append((sym, arity))
            try:
                body = self.formula()
            finally:
                self.bound_so.pop()
            return ExistsFunc(sym, arity, body) if tok.text == "Ef" else ExistsRel(sym, arity, body)
        if tok.text == "[":
            self.i += 1
            qtok = self.tok
            qname = self.name("quantifier name")
            vs = []
            while not self.accept("]"):
                self.accept(",")
                vs.append(self.var())
            if not vs:
                raise self.error("generalized quantifier binds no variables", qtok)
            if len(set(vs)) != len(vs):
                raise self.error("variables bound by a generalized quantifier must be distinct", qtok)
            self.check_quantifier(qname, len(vs), qtok)
            return GQ(qname, tuple(vs), self.formula())
        if tok.text == "~":
            self.i += 1
            inner_tok = self.tok
            if inner_tok.text == "(":
                raise self.error("negation applies only to atoms", inner_tok)
            atom = self.atom()
            if atom is TOP:
                return BOT
            if atom is BOT:
                return TOP
            if isinstance(atom, Indep):
                raise self.error("negated independence atoms are not supported", inner_tok)
            if isinstance(atom, Neg):
                raise self.error("double negation", inner_tok)
            return Neg(atom)
        if tok.text == "(":
            self.i += 1
            phi = self.formula()
            self.expect(")")
            return phi
        return self.atom()

    def term_list(self, closers=(")",)):
        out = []
        if self.tok.text in closers:
            return out
        out.append(self.term())
        while self.accept(","):
            out.append(self.term())
        return out

    def term(self):
        tok = self.tok
        if tok.kind != "name" or is_relation_name(tok.text) or tok.text in _KEYWORDS:
            raise self.error("expected a term")
        if self.peek().text == "(":
            name = self.name("function symbol")
            self.expect("(")
            args = self.term_list()
            self.expect(")")
            self.check_symbol(name, len(args), "function", tok)
            return Func(name, tuple(args))
        return Var(self.var())

    def atom(self):
        tok = self.tok
        if tok.kind == "name" and tok.text in ("top", "bot"):
            self.i += 1
            return TOP if tok.text == "top" else BOT
        if tok.kind == "name" and tok.text == "dep" and self.peek().text == "(":
            if not self.allow_team:
                raise self.error("dependence atoms are not allowed here")
            self.i += 2
            ts = self.term_list()
            self.expect(")")
            if not ts:
                raise self.error("dep() needs at least one term", tok)
            return Dep(tuple(ts))
        if tok.kind == "name" and tok.text == "perp" and self.peek().text == "(":
            if not self.allow_team:
                raise self.error("independence atoms are not allowed here")
            self.i += 2
            parts = [self.term_list((";", ")"))]
            while self.accept(";"):
                parts.append(self.term_list((";", ")")))
            self.expect(")")
            if len(parts) != 3:
                raise self.error("perp expects three ';'-separated groups (left; condition; right)", tok)
            return Indep(*map(tuple, parts))
        if tok.kind == "name" and is_relation_name(tok.text):
            name = self.name("relation symbol")
            self.expect("(")
            args = self.term_list()
            self.expect(")")
            self.check_symbol(name, len(args), "relation", tok)
            return Rel(name, tuple(args))
        left = self.term()
        if self.accept("="):
            return Eq(left, self.term())
        if self.accept("!="):
            return Neg(Eq(left, self.term()))
        raise self.error("expected '=' or '!=' after term")


def _run(text, sig, registry, allow_reserved, allow_team, allow_so):
    p = _Parser(text, sig, registry, allow_reserved, allow_team, allow_so)
    phi = p.formula()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    return phi


def parse_formula(text: str, sig: Signature | None = None, registry=None, *, allow_reserved=True):
    """Parse any supported construct (team atoms and second-order quantifiers alike)."""
    return _run(text, sig, registry, allow_reserved, True, True)


def parse_team_formula(text: str, sig: Signature | None = None, registry=None, *, allow_reserved=False):
    """Parse a D(Q)/I(Q)/FO(Q) formula. Second-order quantifiers are rejected."""
    return _run(text, sig, registry, allow_reserved, True, False)


def parse_so_formula(text: str, sig: Signature | None = None, registry=None, *, allow_reserved=False):
    """Parse an ESO(Q) formula. Dependence and independence atoms are rejected."""
    return _run(text, sig, registry, allow_reserved, False, True)
