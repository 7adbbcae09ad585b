"""Concrete syntax: tokenizer, recursive-descent parser and printer.

Grammar (whitespace-insensitive, ``#`` starts a comment)::

    process  := "0" | species ("|" species)*
    species  := (caps ".")? inner
    inner    := IDENT | "(" species ":" species ")"
              | "[" "'" IDENT species "]" | "[" species species "]"
    caps     := "{}" | "{" gamma ("+" gamma)* "}" | "rec" IDENT "." caps | IDENT
    gamma    := ("[" "+" names? ";" "-" names? "]")? op
    op       := "bind" "(" name ")" caps | "cbind" "(" name ")" caps
              | "mod" "(" "'" IDENT ")" caps | "cleave" "(" name ")"
              | "conv" "(" process ")" | "prod" "(" process ")"
    name     := IDENT | "(" name ":" name ")" | "[" "'" IDENT name "]" | "[" name name "]"

As sugar, ``S1:S2`` without parentheses is accepted wherever a species or
name is expected and groups to the left, with empty capabilities on the
compound; ``0`` may appear among parallel components.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .actions import print_action
from .congruence import (
    canonical_caps,
    canonical_name,
    canonicalize,
    render_caps,
    render_name,
    render_process,
)
from .terms import (
    EMPTY,
    Basic,
    CleaveTargetError,
    Cleave,
    ContractivityError,
    CovalentBond,
    CovalentMod,
    CovBind,
    CovMod,
    Convert,
    Elementary,
    NonCovalent,
    NonCovBind,
    Process,
    Produce,
    Rec,
    Species,
    Sum,
    Var,
)

__all__ = [
    "ParseError",
    "SourceSpan",
    "parse_process",
    "parse_species",
    "parse_name",
    "parse_caps",
    "print_process",
    "print_name",
    "print_caps",
    "print_action",
]


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class ParseError(ValueError):
    """Syntax or validation error with the offending input span."""

    def __init__(self, message: str, span: SourceSpan, expected=()):
        super().__init__(message)
        self.message = message
        self.span = span
        self.expected = list(expected)

    def __str__(self):
        s = f"{self.message} at offset {self.span.start}"
        if self.expected:
            s += f" (expected {', '.join(self.expected)})"
        return s


_TOKEN = re.compile(
    r"(?P<ws>\s+|\#[^\n]*)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<zero>0)|(?P<punct>[|.:()\[\]{}'+\-;,])"
)


@dataclass(frozen=True)
class _Tok:
    kind: str  # "ident", "0", a punctuation char, or "eof"
    text: str
    start: int
    end: int


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", SourceSpan(pos, pos + 1))
        if m.lastgroup == "ident":
            toks.append(_Tok("ident", m.group(), m.start(), m.end()))
        elif m.lastgroup == "zero":
            toks.append(_Tok("0", "0", m.start(), m.end()))
        elif m.lastgroup == "punct":
            toks.append(_Tok(m.group(), m.group(), m.start(), m.end()))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text), len(text)))
    return toks


_KEYWORDS = ("bind", "cbind", "mod", "cleave", "conv", "prod")


@dataclass
class _Parser:
    text: str
    toks: list = field(init=False)
    i: int = 0
    scope: list = field(default_factory=list)

    def __post_init__(self):
        self.toks = _tokenize(self.text)

    # token helpers
    def peek(self, k: int = 0) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self) -> _Tok:
        t = self.peek()
        self.i += 1
        return t

    def error(self, message, expected=(), tok=None):
        tok = tok or self.peek()
        desc = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"{message}, found {desc}", SourceSpan(tok.start, tok.end), expected)

    def expect(self, kind: str, what: str | None = None) -> _Tok:
        if self.peek().kind != kind:
            what = what or repr(kind)
            raise self.error(f"expected {what}", [what])
        return self.next()

    def at(self, kind: str) -> bool:
        return self.peek().kind == kind

    def finish(self):
        if not self.at("eof"):
            raise self.error("unexpected trailing input", ["end of input"])

    # grammar
    def process(self) -> Process:
        ms = []
        while True:
            if self.at("0"):
                self.next()
            else:
                ms.append(self.chain(True))
            if not self.at("|"):
                return Process(tuple(ms))
            self.next()

    def chain(self, with_caps: bool) -> Species:
        acc = self.primary(with_caps)
        while self.at(":"):
            self.next()
            acc = Species(EMPTY, NonCovalent(acc, self.primary(with_caps)))
        return acc

    def _caps_ahead(self) -> bool:
        t = self.peek()
        if t.kind == "{":
            return True
        if t.kind == "ident":
            if t.text == "rec" and self.peek(1).kind == "ident":
                return True
            return self.peek(1).kind == "."
        return False

    def primary(self, with_caps: bool) -> Species:
        c = EMPTY
        if with_caps and self._caps_ahead():
            c = self.caps()
            self.expect(".")
        return Species(c, self.atom(with_caps))

    def atom(self, with_caps: bool):
        t = self.peek()
        what = "species" if with_caps else "name"
        if t.kind == "ident":
            self.next()
            return Elementary(t.text)
        if t.kind == "(":
            self.next()
            acc = self.primary(with_caps)
            self.expect(":")
            acc = NonCovalent(acc, self.primary(with_caps))
            while self.at(":"):
                self.next()
                acc = NonCovalent(Species(EMPTY, acc), self.primary(with_caps))
            self.expect(")")
            return acc
        if t.kind == "[":
            self.next()
            if self.at("'"):
                self.next()
                q = self.expect("ident", "modification type").text
                s = self.chain(with_caps)
                self.expect("]")
                return CovalentMod(q, s)
            left = self.chain(with_caps)
            right = self.chain(with_caps)
            self.expect("]")
            return CovalentBond(left, right)
        raise self.error(f"expected {what}", ["identifier", "'('", "'['"])

    def name(self) -> Species:
        return canonical_name(self.chain(False))

    def caps(self):
        t = self.peek()
        if t.kind == "{":
            self.next()
            if self.at("}"):
                self.next()
                return EMPTY
            items = [self.gamma()]
            while self.at("+"):
                self.next()
                items.append(self.gamma())
            self.expect("}")
            return Sum(frozenset(items))
        if t.kind == "ident" and t.text == "rec" and self.peek(1).kind == "ident":
            self.next()
            var = self.next().text
            self.expect(".")
            self.scope.append(var)
            try:
                body = self.caps()
            finally:
                self.scope.pop()
            try:
                return Rec(var, body)
            except ContractivityError as e:
                raise ParseError(str(e), SourceSpan(t.start, self.peek().start)) from None
        if t.kind == "ident":
            self.next()
            if t.text not in self.scope:
                raise ParseError(f"unbound variable {t.text!r}", SourceSpan(t.start, t.end))
            return Var(t.text)
        raise self.error("expected capability", ["'{'", "'rec'", "variable"])

    def names(self, closer: str) -> frozenset:
        out = []
        if not self.at(closer):
            out.append(self.name())
            while self.at(","):
                self.next()
                out.append(self.name())
        return frozenset(out)

    def gamma(self) -> Basic:
        nu = iota = frozenset()
        if self.at("["):
            self.next()
            self.expect("+")
            nu = self.names(";")
            self.expect(";")
            self.expect("-")
            iota = self.names("]")
            self.expect("]")
        t = self.peek()
        if t.kind != "ident" or t.text not in _KEYWORDS:
            raise self.error("expected capability operator", list(_KEYWORDS))
        self.next()
        self.expect("(")
        kw = t.text
        if kw in ("bind", "cbind"):
            partner = self.name()
            self.expect(")")
            cont = self.caps()
            op = NonCovBind(partner, cont) if kw == "bind" else CovBind(partner, cont)
        elif kw == "mod":
            self.expect("'")
            q = self.expect("ident", "modification type").text
            self.expect(")")
            op = CovMod(q, self.caps())
        elif kw == "cleave":
            start = self.peek().start
            target = self.name()
            end = self.peek().start
            self.expect(")")
            try:
                op = Cleave(target)
            except CleaveTargetError as e:
                raise ParseError(str(e), SourceSpan(start, end)) from None
        else:
            p = self.process()
            self.expect(")")
            op = Convert(p) if kw == "conv" else Produce(p)
        return Basic(op, nu, iota)


def parse_process(text: str) -> Process:
    """Parse a process term; the result is validated but not canonicalized."""
    p = _Parser(text)
    out = p.process()
    p.finish()
    return out


def parse_species(text: str) -> Species:
    p = _Parser(text)
    out = p.chain(True)
    p.finish()
    return out


def parse_name(text: str) -> Species:
    """Parse a capability-free name into its canonical form."""
    p = _Parser(text)
    out = p.name()
    p.finish()
    return out


def parse_caps(text: str):
    p = _Parser(text)
    out = p.caps()
    p.finish()
    return out


def print_process(p: Process) -> str:
    return render_process(canonicalize(p))


def print_name(n: Species) -> str:
    return render_name(canonical_name(n))


def print_caps(c) -> str:
    return render_caps(canonical_caps(c))
