from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from monideal import MonomialIdeal, RingCtx
from monideal.cli.evaluate import evaluate

EXAMPLES = Path(__file__).resolve().parent.parent / "docs" / "examples"

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def load_example(name: str):
    path = EXAMPLES / name
    return evaluate(path.read_text(encoding="utf-8"), path.parent)


@st.composite
def ideals(draw, max_vars: int = 4, max_exp: int = 3, max_gens: int = 5, min_gens: int = 1,
           squarefree: bool = False):
    n = draw(st.integers(1, max_vars))
    ring = RingCtx.range(n)
    top = 1 if squarefree else max_exp
    vec = st.tuples(*[st.integers(0, top)] * n)
    gens = draw(st.lists(vec, min_size=min_gens, max_size=max_gens))
    return MonomialIdeal.from_exps(ring, gens)


@st.composite
def ideal_and_point(draw, max_vars: int = 4, max_exp: int = 3, point_max: int = 6, **kw):
    I = draw(ideals(max_vars=max_vars, max_exp=max_exp, **kw))
    pt = draw(st.tuples(*[st.integers(0, point_max)] * I.ring.n))
    return I, pt


# --- per-criterion summary for the acceptance suite -------------------------

_outcomes: dict[int, list[tuple[str, str]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        if hasattr(rep, "wasxfail"):
            state = "xfail"
        elif rep.skipped:
            state = "skipped"
        else:
            state = rep.outcome
        _outcomes[n].append((item.name, state))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_outcomes):
        results = [(name, s) for name, s in _outcomes[n] if s != "skipped"]
        bad = [f"{name} ({s})" for name, s in results if s != "passed"]
        skipped = [name for name, s in _outcomes[n] if s == "skipped"]
        if not results:
            line = f"criterion {n:2d}: SKIPPED"
        elif bad:
            line = f"criterion {n:2d}: FAIL  - " + "; ".join(bad)
        else:
            line = f"criterion {n:2d}: PASS  ({len(results)} check{'s' if len(results) > 1 else ''})"
        if skipped:
            line += f"  [not run: {', '.join(skipped)}]"
        tr.write_line(line)
