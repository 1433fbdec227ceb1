"""Polarization, depolarization and the expansion operator."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .errors import RingMismatchError, UnitIdealError, ZeroIdealError
from .ideal import MonomialIdeal, ideal_sum, power, product
from .ring import RingCtx


@dataclass(frozen=True)
class PolarizationMap:
    base_ring: RingCtx
    shadow_ring: RingCtx
    forward: dict[tuple[int, int], int]   # (base index, occurrence j >= 1) -> shadow index
    backward: tuple[int, ...]             # shadow index -> base index

    def __hash__(self):
        return hash((self.base_ring, self.shadow_ring, self.backward))

    def shadows(self, i: int) -> list[int]:
        return [k for k, b in enumerate(self.backward) if b == i]

    def to_dict(self) -> dict:
        return {
            "base_vars": list(self.base_ring.var_names),
            "shadow_vars": list(self.shadow_ring.var_names),
            "shadows": {
                self.base_ring.var_names[i]: [self.shadow_ring.var_names[k] for k in self.shadows(i)]
                for i in range(self.base_ring.n) if self.shadows(i)
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PolarizationMap":
        base = RingCtx(tuple(d["base_vars"]))
        shadow = RingCtx(tuple(d["shadow_vars"]))
        back = [None] * shadow.n
        forward = {}
        for name, shadow_names in d["shadows"].items():
            i = base.index(name)
            for j, s in enumerate(shadow_names, start=1):
                k = shadow.index(s)
                back[k] = i
                forward[(i, j)] = k
        if any(b is None for b in back):
            raise ValueError("every shadow variable must map back to a base variable")
        return cls(base, shadow, forward, tuple(back))


def polarization_map(ring: RingCtx, occurrences: Sequence[int], structured: bool = False,
                     prefix: str | None = None) -> PolarizationMap:
    """Shadow ring with ``occurrences[i]`` shadows of variable ``i``.

    Flattened names ``x1, x2, ...`` by default; ``structured`` gives
    ``z_(i,j)`` with zero-based indices.
    """
    names: list[str] = []
    back: list[int] = []
    forward: dict[tuple[int, int], int] = {}
    for i, count in enumerate(occurrences):
        for j in range(1, count + 1):
            forward[(i, j)] = len(names)
            back.append(i)
            if structured:
                names.append(f"{prefix or 'z'}_({i},{j - 1})")
            else:
                names.append(f"{prefix or 'x'}{len(names) + 1}")
    return PolarizationMap(ring, RingCtx(tuple(names)), forward, tuple(back))


def polarize(I: MonomialIdeal, structured: bool = False, prefix: str | None = None,
             pmap: PolarizationMap | None = None) -> tuple[MonomialIdeal, PolarizationMap]:
    """Replace each ``x_i^a`` in every minimal generator by ``x_(i,1)···x_(i,a)``."""
    if I.is_zero():
        raise ZeroIdealError("polarization of the zero ideal")
    if I.is_unit() and pmap is None:
        raise UnitIdealError("the unit ideal has no polarization ring")
    if pmap is None:
        pmap = polarization_map(I.ring, I.max_exps(), structured, prefix)
    elif pmap.base_ring != I.ring:
        raise RingMismatchError("polarization map was built for another ring")
    rows = []
    for e in I.exps:
        r = [0] * pmap.shadow_ring.n
        for i, a in enumerate(e):
            for j in range(1, a + 1):
                try:
                    r[pmap.forward[(i, j)]] = 1
                except KeyError:
                    raise ValueError(f"map has too few shadows of {I.ring.var_names[i]}") from None
        rows.append(tuple(r))
    out = MonomialIdeal.from_exps(pmap.shadow_ring, rows)
    return out, pmap


def depolarize(J: MonomialIdeal, pmap: PolarizationMap) -> MonomialIdeal:
    """Substitute every shadow by its base variable and re-minimize."""
    if J.ring != pmap.shadow_ring:
        raise RingMismatchError(f"{J.ring} is not the shadow ring {pmap.shadow_ring}")
    rows = []
    for e in J.exps:
        r = [0] * pmap.base_ring.n
        for k, a in enumerate(e):
            r[pmap.backward[k]] += a
        rows.append(tuple(r))
    return MonomialIdeal.from_exps(pmap.base_ring, rows)


@dataclass(frozen=True)
class ExpansionSpec:
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(k) for k in self.counts))
        if any(k < 1 for k in self.counts):
            raise ValueError("expansion multiplicities must be >= 1")

    def target_ring(self, ring: RingCtx) -> RingCtx:
        if len(self.counts) != ring.n:
            raise ValueError(f"tuple of length {len(self.counts)} for a ring with {ring.n} variables")
        return RingCtx(tuple(f"{name}{k}" for name, cnt in zip(ring.var_names, self.counts)
                             for k in range(1, cnt + 1)))

    def blocks(self) -> list[list[int]]:
        out, start = [], 0
        for cnt in self.counts:
            out.append(list(range(start, start + cnt)))
            start += cnt
        return out


def expand(I: MonomialIdeal, spec: ExpansionSpec | Sequence[int]) -> MonomialIdeal:
    """``Σ_g p_1^{a_g(1)} ··· p_n^{a_g(n)}`` with block primes ``p_j``."""
    if not isinstance(spec, ExpansionSpec):
        spec = ExpansionSpec(tuple(spec))
    target = spec.target_ring(I.ring)
    blocks = [MonomialIdeal.prime(target, b) for b in spec.blocks()]
    if I.is_zero():
        return MonomialIdeal.zero(target)
    terms = []
    for e in I.exps:
        factors = [power(blocks[j], a) for j, a in enumerate(e) if a]
        terms.append(reduce(product, factors) if factors else MonomialIdeal.unit(target))
    return reduce(ideal_sum, terms)
