"""Run reports: one payload, two renderings (text and JSON)."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from ..closure import ClosureReport
from ..combinatorics import Clutter
from ..decomposition import Decomposition, PrimeIdeal
from ..ideal import MonomialIdeal
from ..properties import AssTable, PropertyReport
from ..ring import Monomial, RingCtx

EXIT_OK, EXIT_FAILS, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def ideal_json(I: MonomialIdeal) -> dict:
    return {"vars": list(I.ring.var_names), "gens": [list(e) for e in I.exps]}


def prime_json(p: PrimeIdeal) -> list[str]:
    return p.names()


def _value(v: Any) -> Any:
    """JSON-friendly form of a witness value."""
    if isinstance(v, (Monomial, PrimeIdeal, MonomialIdeal)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_value(x) for x in v]
    return v


def ideal_payload(I: MonomialIdeal) -> dict:
    return {"kind": "ideal", "ideal": ideal_json(I), "text": str(I), "generators": len(I)}


def clutter_payload(C: Clutter) -> dict:
    return {"kind": "clutter", "vertices": list(C.vertices), "edges": C.edge_names()}


def ass_payload(table: AssTable, powers: list[int] | None = None) -> dict:
    rows = []
    for s, row in enumerate(table.rows, start=1):
        if powers is None or s in powers:
            rows.append({"power": s, "count": len(row), "primes": [prime_json(p) for p in row]})
    return {"kind": "ass", "rows": rows, "partial": table.partial}


def decomposition_payload(D: Decomposition) -> dict:
    comps = [{D.ring.var_names[i]: a for i, a in c.entries.items()} for c in D.components]
    return {"kind": "decomposition", "components": comps, "text": str(D), "count": len(D)}


def property_payload(rep: PropertyReport) -> dict:
    return {
        "kind": "property",
        "property": rep.property.value,
        "bound": rep.bound,
        "verdict": rep.verdict.value,
        "fails_at": rep.fails_at,
        "witness": {k: _value(v) for k, v in rep.witness.items()},
        "m": rep.m,
        "q": prime_json(rep.q) if rep.q is not None else None,
        "ell": rep.ell,
        "note": rep.note,
    }


def closure_payload(closure: MonomialIdeal, rep: ClosureReport) -> dict:
    return {"kind": "closure", "closure": ideal_json(closure), "text": str(closure),
            "closed": rep.closed, "witness": _value(rep.witness)}


@dataclass
class RunReport:
    command: list[str]
    input_sha256: str | None
    payload: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK
    status: str = "ok"
    elapsed_seconds: float = 0.0
    peak_generators: int = 0
    seed: int | None = None
    error: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    def to_text(self, include_error: bool = True) -> str:
        lines = _render(self.payload)
        if self.error and include_error:
            lines.append(f"error: {self.error}")
        lines.append(f"# status {self.status} (exit {self.exit_code}); "
                     f"{self.elapsed_seconds:.3f}s; peak generators {self.peak_generators}")
        if self.input_sha256:
            lines.append(f"# input sha256 {self.input_sha256}")
        return "\n".join(lines)


def _prime_text(names: list[str]) -> str:
    return "(" + ", ".join(names) + ")"


def _ideal_text(d: dict) -> str:
    return str(MonomialIdeal.from_exps(RingCtx(tuple(d["vars"])), [tuple(g) for g in d["gens"]]))


def _render(p: dict) -> list[str]:
    kind = p.get("kind")
    if kind == "ideal":
        return [f"ring: {', '.join(p['ideal']['vars'])}", f"{p['generators']} generators",
                p["text"]]
    if kind == "clutter":
        return [f"vertices: {', '.join(p['vertices'])}"] + [
            "{" + ", ".join(e) + "}" for e in p["edges"]]
    if kind == "ass":
        out = []
        for row in p["rows"]:
            out.append(f"Ass(I^{row['power']}): {row['count']} primes")
            out.extend("  " + _prime_text(q) for q in row["primes"])
        if p.get("partial"):
            out.append("(partial table: budget exceeded)")
        return out
    if kind == "decomposition":
        return [f"{p['count']} irreducible components", p["text"]]
    if kind == "property":
        head = f"{p['property']}: "
        if p["verdict"] == "HOLDS_UP_TO_BOUND":
            head += f"holds up to power {p['bound']}"
        else:
            head += f"fails at power {p['fails_at']}"
        out = [head]
        for key in ("m", "ell"):
            if p[key] is not None:
                out.append(f"{key} = {p[key]}")
        if p["q"] is not None:
            out.append(f"q = {_prime_text(p['q'])}")
        for k, v in p["witness"].items():
            out.append(f"witness {k} = {v}")
        if p["note"]:
            out.append(f"note: {p['note']}")
        return out
    if kind == "closure":
        out = [f"integrally closed: {'yes' if p['closed'] else 'no'}", p["text"]]
        if p["witness"]:
            out.append(f"witness (in closure, not in ideal) = {p['witness']}")
        return out
    if kind == "beta1":
        return [f"beta1 = {p['beta1']}", "pairwise coprime generators: " + ", ".join(p["members"])]
    if kind == "polarization":
        out = [_ideal_text(p["ideal"])]
        out += [f"{base} -> {', '.join(sh)}" for base, sh in p["map"]["shadows"].items()]
        return out
    return [json.dumps(p)] if p else []
