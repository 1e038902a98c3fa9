import sys
from itertools import combinations
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from crossres import BUNDLED, Skeleton, enumerate_cosets, load_bundled  # noqa: E402
from oracles import history_from_ops  # noqa: E402
from crossres.words import GeneratorSymbol  # noqa: E402

MALFORMED_DIR = Path(__file__).parent / "data" / "malformed"
ACCEPTANCE_LINES: list = []


@lru_cache(maxsize=None)
def skeleton(name: str, level: int = 3) -> Skeleton:
    return Skeleton(load_bundled(name), level)


@lru_cache(maxsize=None)
def table(name: str):
    return enumerate_cosets(load_bundled(name).presentation)


@pytest.fixture(params=BUNDLED)
def doc(request):
    return request.param


@pytest.fixture(params=[d for d in BUNDLED if d != "z1"])
def doc_with_identity(request):
    return request.param


def ops_of(sym: GeneratorSymbol):
    """Canonical degeneracy word of a symbol, found by search over decreasing index sequences."""
    n, k = sym.level, sym.birth_level
    hits = [ops for ops in combinations(range(n - 1, -1, -1), n - k)
            if history_from_ops(ops, k) == sym.history]
    assert len(hits) == 1, (sym, hits)
    return hits[0]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
