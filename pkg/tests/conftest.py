import itertools
from functools import lru_cache

import pytest

from anrest.repbuild import build_module


@lru_cache(maxsize=None)
def module(lam):
    return build_module(tuple(lam))


def grid(rank_max, coeff_max, nontrivial=True):
    for n in range(1, rank_max + 1):
        for lam in itertools.product(range(coeff_max + 1), repeat=n):
            if nontrivial and not any(lam):
                continue
            yield lam


@pytest.fixture
def realize():
    return module


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if verdicts:
        terminalreporter.write_sep("=", "acceptance criteria")
        for num in sorted(verdicts):
            terminalreporter.write_line(verdicts[num])
