from __future__ import annotations

import itertools
from typing import Iterator, List, Tuple

import pytest

from cprk import ArcProfile

_ACCEPTANCE: List[Tuple[str, bool, str]] = []


def raw_profiles(m: int, n: int, k: int) -> Iterator[ArcProfile]:
    """Every (pink, black) composition pair, no symmetry reduction."""
    def comps(total, parts):
        for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
            bounds = (-1,) + cuts + (total + parts - 1,)
            yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(parts))

    for p in comps(m, k):
        for b in comps(n, k):
            yield ArcProfile(k, p, b)


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's pass/fail line for the terminal summary."""
    def record(ok: bool, detail: str = "") -> None:
        name = request.node.name
        _ACCEPTANCE.append((name, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'} {name} {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
