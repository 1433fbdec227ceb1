#!/usr/bin/env python3
"""Print |Ass(L^s)| for the polarization L of the NTF example ideal.

The first two rows are checked by the test suite; rows 3 and 4 run under the
``stretch`` marker. Higher rows take minutes (s = 6 about three minutes).
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from monideal import associated_primes, polarize
from monideal.cli.evaluate import evaluate
from monideal.properties import powers_of

EXAMPLE = Path(__file__).resolve().parent.parent / "docs" / "examples" / "ntf_base.mi"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-power", type=int, default=5)
    args = ap.parse_args()

    base = evaluate(EXAMPLE.read_text(encoding="utf-8"), EXAMPLE.parent)
    L, _ = polarize(base, structured=True)
    print(f"L has {len(L)} generators in {L.ring.n} variables")
    cache = powers_of(L)
    for s in range(1, args.max_power + 1):
        t0 = time.perf_counter()
        P = cache[s]
        count = len(associated_primes(P))
        print(f"s={s}  |Ass(L^s)|={count:4d}  generators={len(P):6d}  "
              f"{time.perf_counter() - t0:8.2f}s", flush=True)


if __name__ == "__main__":
    main()
