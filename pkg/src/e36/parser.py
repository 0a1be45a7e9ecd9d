"""Recursive descent parser for element expressions.

Grammar::

    expr     := ['-'] term (('+' | '-') term)*
    term     := [rational '*'] atom ('*' atom)*
    atom     := base ('^' nat)*
    base     := 'x'digit | 'd'digit digit | 'dp'digit | ident | '(' expr ')'
    rational := int ['/' nat]

``d35`` is dx3^dx5, ``dp3`` is d/dx3 and any other identifier is looked up
in the named-element table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .algebra import NAMED
from .e510 import InvariantError, N, SuperElement, const, d, dp, x
from .scalar import Polynomial, format_rational


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class InvalidElementError(ValueError):
    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        super().__init__(f"invalid element: {invariant}" + (f" ({detail})" if detail else ""))


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op" or "end"
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    i: int


@dataclass(frozen=True)
class FormAtom:
    j: int
    k: int


@dataclass(frozen=True)
class FieldAtom:
    i: int


@dataclass(frozen=True)
class Named:
    name: str


@dataclass(frozen=True)
class Power:
    base: "Atom"
    n: int


@dataclass(frozen=True)
class Group:
    expr: "Expr"


Atom = Union[Var, FormAtom, FieldAtom, Named, Power, Group]


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    atoms: Tuple[Atom, ...]


@dataclass(frozen=True)
class Expr:
    terms: Tuple[Term, ...]


ExpressionAST = Expr


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def eat(self, text: Optional[str] = None, kind: Optional[str] = None) -> Token:
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            got = "end of input" if t.kind == "end" else repr(t.text)
            raise ParseError(f"expected {want}, found {got}", t.pos)
        self.i += 1
        return t

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def expr(self) -> Expr:
        sign = 1
        if self.tok.text == "-":
            self.eat("-")
            sign = -1
        elif self.tok.text == "+":
            self.eat("+")
        terms = [self.term(sign)]
        while self.tok.text in ("+", "-"):
            sign = 1 if self.eat().text == "+" else -1
            terms.append(self.term(sign))
        return Expr(tuple(terms))

    def term(self, sign: int) -> Term:
        coeff = Fraction(sign)
        atoms = []
        if self.tok.kind == "num":
            coeff *= self.rational()
            if self.tok.text != "*":
                raise ParseError("a coefficient must be followed by '*'", self.tok.pos)
            self.eat("*")
        atoms.append(self.atom())
        while self.tok.text == "*":
            self.eat("*")
            atoms.append(self.atom())
        return Term(coeff, tuple(atoms))

    def rational(self) -> Fraction:
        num = int(self.eat(kind="num").text)
        if self.tok.text == "/":
            self.eat("/")
            t = self.eat(kind="num")
            den = int(t.text)
            if den == 0:
                raise ParseError("zero denominator", t.pos)
            return Fraction(num, den)
        return Fraction(num)

    def atom(self) -> Atom:
        a = self.base()
        while self.tok.text == "^":
            self.eat("^")
            a = Power(a, int(self.eat(kind="num").text))
        return a

    def base(self) -> Atom:
        t = self.tok
        if t.text == "(":
            self.eat("(")
            e = self.expr()
            self.eat(")")
            return Group(e)
        if t.kind != "ident":
            got = "end of input" if t.kind == "end" else repr(t.text)
            raise ParseError(f"expected an atom, found {got}", t.pos)
        self.eat()
        s = t.text
        if re.fullmatch(r"x[1-5]", s):
            return Var(int(s[1]))
        if re.fullmatch(r"dp[1-5]", s):
            return FieldAtom(int(s[2]))
        m = re.fullmatch(r"d([1-5])([1-5])", s)
        if m:
            j, k = int(m.group(1)), int(m.group(2))
            if j == k:
                raise ParseError(f"{s} has a repeated index", t.pos)
            return FormAtom(j, k)
        if s not in NAMED:
            raise ParseError(f"unknown name {s!r}", t.pos)
        return Named(s)


def parse_expression(text: str) -> Expr:
    return _Parser(text).parse()


# -- printing -----------------------------------------------------------------


def _atom_str(a: Atom) -> str:
    if isinstance(a, Var):
        return f"x{a.i}"
    if isinstance(a, FormAtom):
        return f"d{a.j}{a.k}"
    if isinstance(a, FieldAtom):
        return f"dp{a.i}"
    if isinstance(a, Named):
        return a.name
    if isinstance(a, Power):
        return f"{_atom_str(a.base)}^{a.n}"
    return f"({to_text(a.expr)})"


def to_text(e: Expr) -> str:
    out = []
    for t in e.terms:
        c = t.coeff
        body = "*".join(_atom_str(a) for a in t.atoms)
        mag = abs(c)
        if mag != 1:
            body = f"{mag.numerator}/{mag.denominator}*{body}" if mag.denominator != 1 else f"{mag.numerator}*{body}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# -- evaluation ---------------------------------------------------------------

Value = Union[Polynomial, SuperElement]


def _mul(a: Value, b: Value, where: str) -> Value:
    if isinstance(a, Polynomial) and isinstance(b, Polynomial):
        return a * b
    if isinstance(a, Polynomial):
        return b.times(a)
    if isinstance(b, Polynomial):
        return a.times(b)
    raise InvalidElementError("product of two algebra elements", where)


def _eval_atom(a: Atom) -> Value:
    if isinstance(a, Var):
        return x(a.i)
    if isinstance(a, FormAtom):
        return d(a.j, a.k, check=False)
    if isinstance(a, FieldAtom):
        return dp(a.i, check=False)
    if isinstance(a, Named):
        return NAMED[a.name]
    if isinstance(a, Power):
        v = _eval_atom(a.base)
        if not isinstance(v, Polynomial):
            if a.n == 1:
                return v
            raise InvalidElementError("power of an algebra element", _atom_str(a))
        return v ** a.n
    return _eval_expr(a.expr)


def _eval_expr(e: Expr) -> Value:
    total: Optional[Value] = None
    for t in e.terms:
        v: Value = const(t.coeff)
        for a in t.atoms:
            v = _mul(v, _eval_atom(a), _atom_str(a))
        if total is None:
            total = v
        elif isinstance(total, Polynomial) != isinstance(v, Polynomial):
            raise InvalidElementError("sum of a function and an algebra element", to_text(e))
        else:
            total = total + v
    return total


def evaluate(e: Expr) -> SuperElement:
    """Evaluate to a validated SuperElement."""
    v = _eval_expr(e)
    if isinstance(v, Polynomial):
        raise InvalidElementError("expression is a function, not an algebra element", str(v))
    try:
        return v.validate()
    except InvariantError as exc:
        raise InvalidElementError(exc.invariant, exc.detail) from None


def parse_element(text: str) -> SuperElement:
    return evaluate(parse_expression(text))


def evaluate_model(e: Expr):
    """Read x_i and dp_i as the model generators and return a ModelElement."""
    from .model import NV, ModelElement, dvar, xvar

    def atom(a: Atom) -> Polynomial:
        if isinstance(a, Var) and a.i <= 3:
            return xvar(a.i)
        if isinstance(a, FieldAtom) and a.i <= 3:
            return dvar(a.i)
        if isinstance(a, Power):
            return atom(a.base) ** a.n
        if isinstance(a, Group):
            return expr(a.expr)
        raise InvalidElementError("model expressions use only x1..x3 and dp1..dp3", _atom_str(a))

    def expr(ex: Expr) -> Polynomial:
        total = Polynomial.zero(NV)
        for t in ex.terms:
            v = Polynomial.const(t.coeff, NV)
            for a in t.atoms:
                v = v * atom(a)
            total = total + v
        return total

    return ModelElement(expr(e))


def evaluate_lminus(e: Expr) -> Dict:
    """Read dp_i, dplus_i, dminus_i as letters of L- and normal-order the result."""
    from .induced import normal_order

    def letter(a: Atom):
        if isinstance(a, FieldAtom) and a.i <= 3:
            return [("h", a.i)]
        if isinstance(a, Named) and re.fullmatch(r"d(plus|minus)[1-3]", a.name):
            return [("+" if "plus" in a.name else "-", int(a.name[-1]))]
        if isinstance(a, Power):
            return letter(a.base) * a.n
        raise InvalidElementError("L- words use only dp1..dp3, dplus1..3 and dminus1..3", _atom_str(a))

    out: Dict = {}
    for t in e.terms:
        word = [l for a in t.atoms for l in letter(a)]
        for m, c in normal_order(word).items():
            out[m] = out.get(m, 0) + t.coeff * c
    return {m: c for m, c in out.items() if c}
