"""Propositional formulas and language specification files.

A language is declared in a small line-oriented text format::

    # comment
    language prices
    atoms: cell_a cell_b
    believe: cell_a | cell_b
    believe: !(cell_a & cell_b)

Formulas use ``!``, ``&``, ``|``, ``->`` with precedence ``!`` > ``&`` >
``|`` > ``->``; parentheses override.  ``->`` is sugar for ``!left | right``
and is removed by :func:`desugar` before any evaluation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DuplicateAtomError, ParseError, UndeclaredAtomError

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


# --- abstract syntax ---------------------------------------------------------


@dataclass(frozen=True)
class Formula:
    pass


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Arrow(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class TrueLit(Formula):
    pass


@dataclass(frozen=True)
class FalseLit(Formula):
    pass


TRUE = TrueLit()
FALSE = FalseLit()


def desugar(formula: Formula) -> Formula:
    """Rewrite every ``a -> b`` into ``!a | b``."""
    if isinstance(formula, Arrow):
        return Or(Not(desugar(formula.left)), desugar(formula.right))
    if isinstance(formula, Not):
        return Not(desugar(formula.child))
    if isinstance(formula, And):
        return And(desugar(formula.left), desugar(formula.right))
    if isinstance(formula, Or):
        return Or(desugar(formula.left), desugar(formula.right))
    return formula


def formula_atoms(formula: Formula) -> set[str]:
    """All elementary proposition names mentioned by the formula."""
    if isinstance(formula, Atom):
        return {formula.name}
    if isinstance(formula, Not):
        return formula_atoms(formula.child)
    if isinstance(formula, (And, Or, Arrow)):
        return formula_atoms(formula.left) | formula_atoms(formula.right)
    return set()


# --- printing ----------------------------------------------------------------

_PREC = {Arrow: 1, Or: 2, And: 3, Not: 4}


def format_formula(formula: Formula) -> str:
    """Render a formula; parse(format(f)) returns f unchanged."""
    return _fmt(formula, 0)


def _fmt(f: Formula, context: int) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, TrueLit):
        return "true"
    if isinstance(f, FalseLit):
        return "false"
    if isinstance(f, Not):
        return "!" + _fmt(f.child, _PREC[Not])
    if isinstance(f, And):
        op, prec = "&", _PREC[And]
    elif isinstance(f, Or):
        op, prec = "|", _PREC[Or]
    else:
        op, prec = "->", _PREC[Arrow]
    if isinstance(f, Arrow):
        # right-associative: parenthesise an Arrow on the left
        left = _fmt(f.left, prec + 1)
        right = _fmt(f.right, prec)
    else:
        # left-associative: parenthesise an equal-precedence right child
        left = _fmt(f.left, prec)
        right = _fmt(f.right, prec + 1)
    text = f"{left} {op} {right}"
    return f"({text})" if prec < context else text


# --- tokenizer / parser ------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<arrow>->)"
    r"|(?P<op>[!&|()])"
)


class _Tok:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str, line: int = 1):
    tokens = []
    pos = 0
    col0 = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - col0 + 1)
        if m.lastgroup == "ws":
            line += m.group().count("\n")
            if "\n" in m.group():
                col0 = m.end() - len(m.group().rsplit("\n", 1)[1])
        elif m.lastgroup == "ident":
            word = m.group()
            kind = word if word in ("true", "false") else "ident"
            tokens.append(_Tok(kind, word, line, m.start() - col0 + 1))
        else:
            tokens.append(_Tok(m.group(), m.group(), line, m.start() - col0 + 1))
        pos = m.end()
    tokens.append(_Tok("end", "", line, pos - col0 + 1))
    return tokens


class _FormulaParser:
    def __init__(self, tokens, declared=None):
        self.tokens = tokens
        self.i = 0
        self.declared = declared

    @property
    def cur(self):
        return self.tokens[self.i]

    def _fail(self, expected):
        tok = self.cur
        got = tok.text or "end of input"
        raise ParseError(f"expected {expected}, got {got!r}", tok.line, tok.column)

    def eat(self, kind, expected):
        if self.cur.kind != kind:
            self._fail(expected)
        tok = self.cur
        self.i += 1
        return tok

    def parse(self) -> Formula:
        node = self.arrow()
        if self.cur.kind != "end":
            self._fail("end of formula")
        return node

    def arrow(self) -> Formula:
        left = self.disjunction()
        if self.cur.kind == "->":
            self.i += 1
            return Arrow(left, self.arrow())
        return left

    def disjunction(self) -> Formula:
        node = self.conjunction()
        while self.cur.kind == "|":
            self.i += 1
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Formula:
        node = self.negation()
        while self.cur.kind == "&":
            self.i += 1
            node = And(node, self.negation())
        return node

    def negation(self) -> Formula:
        if self.cur.kind == "!":
            self.i += 1
            return Not(self.negation())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.cur
        if tok.kind == "true":
            self.i += 1
            return TRUE
        if tok.kind == "false":
            self.i += 1
            return FALSE
        if tok.kind == "ident":
            self.i += 1
            if self.declared is not None and tok.text not in self.declared:
                raise UndeclaredAtomError(
                    f"undeclared atom {tok.text!r}", tok.line, tok.column
                )
            return Atom(tok.text)
        if tok.kind == "(":
            self.i += 1
            node = self.arrow()
            self.eat(")", "')'")
            return node
        self._fail("a formula")


# --- language specifications -------------------------------------------------


@dataclass(frozen=True)
class LanguageSpec:
    """A named finite stock of elementary propositions plus believed formulas."""

    name: str
    elementary: tuple[str, ...]
    beliefs: tuple[Formula, ...]

    def __post_init__(self):
        if not self.elementary:
            raise ParseError("a language needs at least one elementary proposition")
        seen = set()
        for atom in self.elementary:
            if atom in ("true", "false"):
                raise ParseError(f"{atom!r} is a reserved word")
            if atom in seen:
                raise DuplicateAtomError(f"duplicate atom {atom!r}")
            seen.add(atom)
        for belief in self.beliefs:
            undeclared = formula_atoms(belief) - seen
            if undeclared:
                raise UndeclaredAtomError(
                    f"belief mentions undeclared atom {sorted(undeclared)[0]!r}"
                )


def parse_formula(text: str, spec: LanguageSpec | None = None, line: int = 1) -> Formula:
    """Parse one formula; atoms must be declared in ``spec`` when given."""
    declared = set(spec.elementary) if spec is not None else None
    return _FormulaParser(_tokenize(text, line), declared).parse()


def parse_language(text: str) -> LanguageSpec:
    """Parse a language specification document."""
    name = None
    elementary = None
    belief_lines: list[tuple[str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("language"):
            if name is not None:
                raise ParseError("duplicate 'language' line", lineno, 1)
            rest = line[len("language"):].strip()
            if not IDENT_RE.fullmatch(rest):
                raise ParseError("expected an identifier after 'language'", lineno, 1)
            name = rest
        elif line.startswith("atoms:"):
            if elementary is not None:
                raise ParseError("duplicate 'atoms:' line", lineno, 1)
            names = line[len("atoms:"):].split()
            for atom in names:
                if not IDENT_RE.fullmatch(atom):
                    raise ParseError(f"bad atom name {atom!r}", lineno, 1)
                if names.count(atom) > 1:
                    raise DuplicateAtomError(f"duplicate atom {atom!r}", lineno, 1)
            elementary = tuple(names)
        elif line.startswith("believe:"):
            belief_lines.append((line[len("believe:"):].strip(), lineno))
        else:
            raise ParseError(
                "expected 'language', 'atoms:' or 'believe:'", lineno, 1
            )
    if name is None:
        raise ParseError("missing 'language' line")
    if elementary is None or not elementary:
        raise ParseError("missing 'atoms:' line")
    probe = LanguageSpec(name, elementary, ())
    beliefs = tuple(parse_formula(text, probe, line) for text, line in belief_lines)
    return LanguageSpec(name, elementary, beliefs)


def format_language(spec: LanguageSpec) -> str:
    """Render a spec back to the document format (canonical form)."""
    lines = [f"language {spec.name}", "atoms: " + " ".join(spec.elementary)]
    lines.extend("believe: " + format_formula(b) for b in spec.beliefs)
    return "\n".join(lines) + "\n"
