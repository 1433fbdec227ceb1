"""Evaluation of parsed programs against the kernel modules."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .. import combinatorics as comb
from ..errors import MonIdealError, ResourceLimitError
from ..ideal import (MonomialIdeal, colon_by_ideal, delete_variable, ideal_sum, intersection,
                     power, product, radical)
from ..ring import RingCtx, parse_monomial_exps
from ..transforms import expand, polarize
from .syntax import (Assign, BinOp, Call, Expr, GenList, Int, IntList, Name, Program, RingDecl,
                     SetLit, Str, VarRange, parse)


class EvalError(ValueError):
    def __init__(self, message: str, pos=(0, 0)):
        self.message = message
        self.line, self.col = pos
        where = f"line {self.line}, column {self.col}: " if self.line else ""
        super().__init__(where + message)


def expand_range(first: str, last: str) -> list[str]:
    """``x1..x5`` -> ``[x1, ..., x5]``; both ends need the same prefix."""
    a = re.fullmatch(r"(.*?)(\d+)", first)
    b = re.fullmatch(r"(.*?)(\d+)", last)
    if not a or not b or a.group(1) != b.group(1) or int(a.group(2)) > int(b.group(2)):
        raise ValueError(f"bad variable range {first}..{last}")
    return [f"{a.group(1)}{k}" for k in range(int(a.group(2)), int(b.group(2)) + 1)]


_ATOMIC = re.compile(r"[A-Za-z]\d*")


def _names_in(e: Expr, bound: set[str], out: set[str]) -> None:
    if isinstance(e, Name):
        if e.id not in bound:
            for tok in _ATOMIC.findall(e.id):
                out.add(tok)
    elif isinstance(e, SetLit):
        out.update(e.names)
    elif isinstance(e, BinOp):
        _names_in(e.left, bound, out)
        if e.op != "^":
            _names_in(e.right, bound, out)
    elif isinstance(e, GenList):
        for x in e.items:
            _names_in(x, bound, out)
    elif isinstance(e, Call):
        for x in e.args:
            _names_in(x, bound, out)


def embed(I: MonomialIdeal, ring: RingCtx) -> MonomialIdeal:
    """Reinterpret ``I`` in a ring containing all of its variables."""
    if I.ring == ring:
        return I
    try:
        idx = [ring.index(v) for v in I.ring.var_names]
    except (KeyError, ValueError):
        missing = [v for v in I.ring.var_names if v not in ring.var_names]
        raise EvalError(f"variables {missing} are not in {ring}") from None
    rows = []
    for e in I.exps:
        r = [0] * ring.n
        for i, a in zip(idx, e):
            r[i] = a
        rows.append(tuple(r))
    return MonomialIdeal(ring, tuple(sorted(rows, reverse=True)))


@dataclass
class Evaluator:
    """Holds the environment of one program run."""

    base_dir: Path = field(default_factory=Path.cwd)
    declared: RingCtx | None = None
    context: RingCtx | None = None
    env: dict[str, Any] = field(default_factory=dict)

    def run(self, prog: Program) -> Any:
        bound = {s.name for s in prog.stmts if isinstance(s, Assign)}
        names: set[str] = set()
        for s in prog.stmts:
            if isinstance(s, RingDecl):
                vs: list[str] = []
                for item in s.items:
                    try:
                        vs.extend(expand_range(item.first, item.last) if isinstance(item, VarRange)
                                  else [item])
                    except ValueError as exc:
                        raise EvalError(str(exc), s.pos) from None
                try:
                    self.declared = RingCtx(tuple(vs))
                except ValueError as exc:
                    raise EvalError(str(exc), s.pos) from None
            else:
                _names_in(s.expr, bound, names)
        if prog.result is not None:
            _names_in(prog.result, bound, names)
        if self.declared is not None:
            self.context = self.declared
        elif names:
            self.context = RingCtx(tuple(sorted(names, key=comb.natural_key)))
        value = None
        for s in prog.stmts:
            if isinstance(s, Assign):
                self.env[s.name] = self.eval(s.expr)
        if prog.result is not None:
            value = self.eval(prog.result)
        elif prog.stmts and isinstance(prog.stmts[-1], Assign):
            value = self.env[prog.stmts[-1].name]
        if isinstance(value, MonomialIdeal) and self.declared is not None:
            value = embed(value, self.declared)
        return value

    # -- helpers ------------------------------------------------------------
    def _unify(self, I: MonomialIdeal, J: MonomialIdeal, pos) -> tuple[MonomialIdeal, MonomialIdeal]:
        if I.ring == J.ring:
            return I, J
        if self.declared is not None:
            target = self.declared
        else:
            union = set(I.ring.var_names) | set(J.ring.var_names)
            target = RingCtx(tuple(sorted(union, key=comb.natural_key)))
        try:
            return embed(I, target), embed(J, target)
        except EvalError as exc:
            raise EvalError(exc.message, pos) from None

    def ideal(self, e: Expr) -> MonomialIdeal:
        v = self.eval(e)
        if isinstance(v, MonomialIdeal):
            return v
        raise EvalError(f"expected an ideal, got {_kind(v)}", e.pos)

    def graph(self, e: Expr) -> comb.Clutter:
        v = self.eval(e)
        if isinstance(v, comb.Clutter):
            return v
        raise EvalError(f"expected a graph or clutter, got {_kind(v)}", e.pos)

    def integer(self, e: Expr) -> int:
        if isinstance(e, Int):
            return e.value
        v = self.eval(e)
        if isinstance(v, int):
            return v
        raise EvalError(f"expected an integer, got {_kind(v)}", e.pos)

    def _ring(self, pos) -> RingCtx:
        if self.context is None:
            raise EvalError("no ring: declare one with 'ring x1..xn;'", pos)
        return self.context

    # -- evaluation ---------------------------------------------------------
    def eval(self, e: Expr) -> Any:
        try:
            return self._eval(e)
        except (EvalError, ResourceLimitError):
            raise
        except (MonIdealError, ValueError, KeyError, IndexError) as exc:
            raise EvalError(str(exc), e.pos) from exc

    def _eval(self, e: Expr) -> Any:
        if isinstance(e, Name):
            if e.id in self.env:
                return self.env[e.id]
            ring = self._ring(e.pos)
            try:
                exps = parse_monomial_exps(e.id, ring)
            except ValueError:
                raise EvalError(f"undeclared variable or name {e.id!r}", e.pos) from None
            return MonomialIdeal.from_exps(ring, [exps])
        if isinstance(e, Int):
            if e.value in (0, 1) and self.context is not None:
                ring = self.context
                return MonomialIdeal.zero(ring) if e.value == 0 else MonomialIdeal.unit(ring)
            return e.value
        if isinstance(e, Str):
            return e.value
        if isinstance(e, IntList):
            return list(e.items)
        if isinstance(e, SetLit):
            return frozenset(e.names)
        if isinstance(e, GenList):
            parts = [self.ideal(x) for x in e.items]
            acc = parts[0]
            for x, p in zip(e.items[1:], parts[1:]):
                acc, p = self._unify(acc, p, x.pos)
                acc = ideal_sum(acc, p)
            return acc
        if isinstance(e, BinOp):
            if e.op == "^":
                k = self.integer(e.right)
                left = e.left
                if (isinstance(left, Name) and left.id not in self.env and self.context is not None
                        and left.id not in self.context.var_names):
                    # the exponent binds to the last factor: x1x2^3 = x1*x2^3
                    try:
                        exps = parse_monomial_exps(f"{left.id}^{k}", self.context)
                    except ValueError:
                        raise EvalError(f"undeclared variable or name {left.id!r}", left.pos) from None
                    return MonomialIdeal.from_exps(self.context, [exps])
                return power(self.ideal(left), k)
            I, J = self._unify(self.ideal(e.left), self.ideal(e.right), e.pos)
            if e.op == "+":
                return ideal_sum(I, J)
            if e.op == "*":
                return product(I, J)
            if e.op == "&":
                return intersection(I, J)
            return colon_by_ideal(I, J)
        if isinstance(e, Call):
            fn = CALLS.get(e.func)
            if fn is None:
                raise EvalError(f"unknown function {e.func!r}; known: {', '.join(sorted(CALLS))}",
                                e.pos)
            arity, impl = fn
            if len(e.args) not in arity:
                raise EvalError(f"{e.func} takes {_arity_text(arity)} argument(s), got {len(e.args)}",
                                e.pos)
            return impl(self, e)
        raise EvalError(f"cannot evaluate {e!r}")


def _kind(v: Any) -> str:
    if isinstance(v, comb.Graph):
        return "a graph"
    if isinstance(v, comb.Clutter):
        return "a clutter"
    if isinstance(v, MonomialIdeal):
        return "an ideal"
    return type(v).__name__


def _arity_text(arity: range) -> str:
    return str(arity.start) if len(arity) == 1 else f"{arity.start}-{arity.stop - 1}"


def _clutter_lit(ev: Evaluator, e: Call) -> comb.Clutter:
    edges = []
    for a in e.args:
        if not isinstance(a, SetLit):
            raise EvalError("clutter edges are written {x1, x2, ...}", a.pos)
        edges.append(a.names)
    if ev.declared is not None:
        vertices = list(ev.declared.var_names)
    else:
        vertices = sorted({v for ed in edges for v in ed}, key=comb.natural_key)
    if edges and all(len(ed) == 2 for ed in edges):
        return comb.graph_from_pairs(vertices, [tuple(ed) for ed in edges])
    return comb.Clutter.from_names(vertices, edges)


def load_ideal_json(data: dict) -> MonomialIdeal:
    if "ideal" in data:
        data = data["ideal"]
    ring = RingCtx(tuple(data["vars"]))
    return MonomialIdeal.from_exps(ring, [tuple(g) for g in data["gens"]])


def _load(ev: Evaluator, e: Call):
    path = ev.eval(e.args[0])
    if not isinstance(path, str):
        raise EvalError("load expects a file name string", e.pos)
    p = Path(path)
    if not p.is_absolute():
        p = ev.base_dir / p
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise EvalError(f"cannot read {p}: {exc.strerror}", e.pos) from None
    if p.suffix == ".json":
        return load_ideal_json(json.loads(text))
    vertices = list(ev.declared.var_names) if ev.declared is not None else None
    return comb.parse_clutter_text(text, vertices)


def _var_index(ev: Evaluator, I: MonomialIdeal, e: Expr) -> int:
    if isinstance(e, Name) and e.id in I.ring.var_names:
        return I.ring.index(e.id)
    raise EvalError("expected a variable of the ideal's ring", e.pos)


def _simple(n: int, fn: Callable) -> tuple[range, Callable]:
    return range(n, n + 1), fn


CALLS: dict[str, tuple[range, Callable[[Evaluator, Call], Any]]] = {
    "path": _simple(1, lambda ev, e: comb.path(ev.integer(e.args[0]))),
    "cycle": _simple(1, lambda ev, e: comb.cycle(ev.integer(e.args[0]))),
    "complete": _simple(1, lambda ev, e: comb.complete(ev.integer(e.args[0]))),
    "wheel": _simple(1, lambda ev, e: comb.wheel(ev.integer(e.args[0]))),
    "helm": _simple(1, lambda ev, e: comb.helm(ev.integer(e.args[0]))),
    "cone": _simple(1, lambda ev, e: comb.cone(ev.graph(e.args[0]))),
    "complement": _simple(1, lambda ev, e: comb.complement_clutter(ev.graph(e.args[0]))),
    "edge": _simple(1, lambda ev, e: comb.edge_ideal(ev.graph(e.args[0]))),
    "cover": _simple(1, lambda ev, e: comb.cover_ideal(ev.graph(e.args[0]))),
    "dominating": _simple(1, lambda ev, e: comb.dominating_ideal(ev.graph(e.args[0]))),
    "dual": _simple(1, lambda ev, e: comb.alexander_dual(ev.ideal(e.args[0]))),
    "radical": _simple(1, lambda ev, e: radical(ev.ideal(e.args[0]))),
    "polarize": _simple(1, lambda ev, e: polarize(ev.ideal(e.args[0]))[0]),
    "expand": _simple(2, lambda ev, e: expand(ev.ideal(e.args[0]), _int_list(ev, e.args[1]))),
    "delete": _simple(2, lambda ev, e: (lambda I: delete_variable(I, _var_index(ev, I, e.args[1])))(
        ev.ideal(e.args[0]))),
    "drop": _simple(2, lambda ev, e: _drop(ev, e)),
    "clutter": (range(1, 10_000), _clutter_lit),
    "load": _simple(1, _load),
}


def _drop(ev: Evaluator, e: Call) -> MonomialIdeal:
    """The ideal generated by every minimal generator except the given one."""
    I, J = ev._unify(ev.ideal(e.args[0]), ev.ideal(e.args[1]), e.pos)
    if len(J) != 1 or J.exps[0] not in I.exps:
        raise EvalError(f"{J} is not a minimal generator of the ideal", e.args[1].pos)
    return MonomialIdeal.from_exps(I.ring, [g for g in I.exps if g != J.exps[0]])


def _int_list(ev: Evaluator, e: Expr) -> list[int]:
    v = ev.eval(e)
    if isinstance(v, list):
        return v
    raise EvalError("expected an integer list such as [1, 3, 2]", e.pos)


def evaluate(text: str, base_dir: Path | None = None) -> Any:
    ev = Evaluator(base_dir=base_dir or Path.cwd())
    return ev.run(parse(text))
