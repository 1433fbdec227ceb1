"""Abstract syntax, parser and pretty-printer for the ideal-expression language.

Grammar (``#`` starts a comment)::

    program  := stmt* expr? ";"?
    stmt     := "ring" ringitem ("," ringitem)* ";"
              | NAME "=" expr ";"
    ringitem := NAME | NAME ".." NAME          # x1..x5
    expr     := meet ("+" meet)*               # sum
    meet     := quot ("&" quot)*               # intersection
    quot     := prod (":" prod)*               # colon
    prod     := pow ("*" pow)*                 # product
    pow      := atom ("^" INT)*
    atom     := NAME | INT | STRING
              | "(" expr ("," expr)* ")"       # generator list or grouping
              | "[" INT ("," INT)* "]"
              | "{" NAME ("," NAME)* "}"
              | NAME "(" args? ")"             # constructor call

A name is resolved as a binding, then as a ring variable, then as a
juxtaposed monomial such as ``x1x2^2`` (split by longest variable name).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int, expected: tuple[str, ...] = ()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(expected)
        detail = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"line {line}, column {col}: {message}{detail}")


Pos = tuple[int, int]
_NOPOS: Pos = (0, 0)


@dataclass(frozen=True)
class Name:
    id: str
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Int:
    value: int
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Str:
    value: str
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class GenList:
    """Two or more comma-separated items in parentheses."""
    items: tuple["Expr", ...]
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class IntList:
    items: tuple[int, ...]
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class SetLit:
    names: tuple[str, ...]
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple["Expr", ...]
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


Expr = Union[Name, Int, Str, BinOp, GenList, IntList, SetLit, Call]


@dataclass(frozen=True)
class VarRange:
    first: str
    last: str


@dataclass(frozen=True)
class RingDecl:
    items: tuple[Union[str, VarRange], ...]
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Assign:
    name: str
    expr: Expr
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Program:
    stmts: tuple[Union[RingDecl, Assign], ...]
    result: Expr | None


# binding strength of the infix operators
PREC = {"+": 1, "&": 2, ":": 3, "*": 4, "^": 5}
ATOM_PREC = 6

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+|\#[^\n]*)
  | (?P<nl>\n)
  | (?P<range>\.\.)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<str>"[^"\n]*")
  | (?P<sym>[()\[\]{},;=+&:*^])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int

    @property
    def end(self) -> int:
        return self.col + len(self.text)


def tokenize(text: str) -> list[Token]:
    out = []
    line, start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind != "ws":
            tk = m.group()
            out.append(Token(tk if kind in ("sym", "range") else kind, tk, line, pos - start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, *kinds: str) -> Token:
        if self.tok.kind not in kinds:
            got = self.tok.text or "end of input"
            raise ParseError(f"unexpected {got!r}", self.tok.line, self.tok.col, kinds)
        return self.take()

    def program(self) -> Program:
        stmts = []
        result = None
        while self.tok.kind != "eof":
            t = self.tok
            if t.kind == "name" and t.text == "ring" and self.peek().kind == "name":
                stmts.append(self.ring_decl())
            elif t.kind == "name" and self.peek().kind == "=":
                self.take()
                self.take()
                stmts.append(Assign(t.text, self.expr(), (t.line, t.col)))
                self.expect(";")
            else:
                result = self.expr()
                if self.tok.kind == ";":
                    self.take()
                if self.tok.kind != "eof":
                    raise ParseError(f"unexpected {self.tok.text!r} after the result expression",
                                     self.tok.line, self.tok.col, (";", "end of input"))
        return Program(tuple(stmts), result)

    def ring_decl(self) -> RingDecl:
        t = self.take()
        items = []
        while True:
            first = self.expect("name").text
            if self.tok.kind == "..":
                self.take()
                items.append(VarRange(first, self.expect("name").text))
            else:
                items.append(first)
            if self.tok.kind != ",":
                break
            self.take()
        self.expect(";")
        return RingDecl(tuple(items), (t.line, t.col))

    def expr(self, level: int = 1) -> Expr:
        if level == PREC["^"]:
            return self.power()
        left = self.expr(level + 1)
        op = next(o for o, p in PREC.items() if p == level)
        while True:
            if self.tok.kind == op:
                t = self.take()
            elif op == "*" and self._juxtaposed():
                t = self.tok   # x1^3x2 reads as x1^3*x2
            else:
                return left
            left = BinOp(op, left, self.expr(level + 1), (t.line, t.col))

    def _juxtaposed(self) -> bool:
        prev, t = self.toks[self.i - 1], self.tok
        return (t.kind == "name" and prev.kind == "int" and t.line == prev.line
                and t.col == prev.end and self.peek().kind != "(")

    def power(self) -> Expr:
        base = self.atom()
        while self.tok.kind == "^":
            t = self.take()
            exp = self.expect("int")
            base = BinOp("^", base, Int(int(exp.text), (exp.line, exp.col)), (t.line, t.col))
        return base

    def atom(self) -> Expr:
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "int":
            self.take()
            return Int(int(t.text), pos)
        if t.kind == "str":
            self.take()
            return Str(t.text[1:-1], pos)
        if t.kind == "name":
            self.take()
            if self.tok.kind == "(":
                self.take()
                args = []
                if self.tok.kind != ")":
                    args.append(self.expr())
                    while self.tok.kind == ",":
                        self.take()
                        args.append(self.expr())
                self.expect(")")
                return Call(t.text, tuple(args), pos)
            return Name(t.text, pos)
        if t.kind == "(":
            self.take()
            items = [self.expr()]
            while self.tok.kind == ",":
                self.take()
                items.append(self.expr())
            self.expect(")")
            if len(items) == 1 and not (isinstance(items[0], Name) and self.tok.kind == "^"):
                return items[0]
            # "(x1x2)^2" keeps its parentheses: a bare "x1x2^2" binds the exponent to x2 only
            return GenList(tuple(items), pos)
        if t.kind == "[":
            self.take()
            vals = [int(self.expect("int").text)]
            while self.tok.kind == ",":
                self.take()
                vals.append(int(self.expect("int").text))
            self.expect("]")
            return IntList(tuple(vals), pos)
        if t.kind == "{":
            self.take()
            names = [self.expect("name").text]
            while self.tok.kind == ",":
                self.take()
                names.append(self.expect("name").text)
            self.expect("}")
            return SetLit(tuple(names), pos)
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.line, t.col,
                         ("name", "int", "string", "(", "[", "{"))


def parse(text: str) -> Program:
    return _Parser(text).program()


def parse_expr(text: str) -> Expr:
    prog = parse(text)
    if prog.stmts or prog.result is None:
        raise ParseError("expected a single expression", 1, 1)
    return prog.result


def _prec(e: Expr) -> int:
    return PREC[e.op] if isinstance(e, BinOp) else ATOM_PREC


def show(e: Expr) -> str:
    """Canonical text of an expression; ``parse_expr(show(e)) == e``."""
    if isinstance(e, Name):
        return e.id
    if isinstance(e, Int):
        return str(e.value)
    if isinstance(e, Str):
        return f'"{e.value}"'
    if isinstance(e, IntList):
        return "[" + ", ".join(map(str, e.items)) + "]"
    if isinstance(e, SetLit):
        return "{" + ", ".join(e.names) + "}"
    if isinstance(e, GenList):
        return "(" + ", ".join(show(x) for x in e.items) + ")"
    if isinstance(e, Call):
        return f"{e.func}(" + ", ".join(show(x) for x in e.args) + ")"
    p = PREC[e.op]
    left = show(e.left)
    if _prec(e.left) < p or (e.op == "^" and _prec(e.left) == p):
        left = f"({left})"
    right = show(e.right)
    if _prec(e.right) <= p:
        right = f"({right})"
    sep = e.op if e.op in "*^" else f" {e.op} "
    return left + sep + right


def show_program(prog: Program) -> str:
    lines = []
    for s in prog.stmts:
        if isinstance(s, RingDecl):
            items = [i if isinstance(i, str) else f"{i.first}..{i.last}" for i in s.items]
            lines.append("ring " + ", ".join(items) + ";")
        else:
            lines.append(f"{s.name} = {show(s.expr)};")
    if prog.result is not None:
        lines.append(show(prog.result))
    return "\n".join(lines)
