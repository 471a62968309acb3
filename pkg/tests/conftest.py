from __future__ import annotations

import os
from itertools import combinations_with_replacement

import pytest

from ndeg.profile import Profile


def pytest_collection_modifyitems(config, items):
    if os.environ.get("NDEG_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow; set NDEG_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def all_positive_profiles(n: int):
    """Every profile of length n with demands in 1..n-1."""
    for seq in combinations_with_replacement(range(1, n), n):
        yield Profile.from_sequence(seq)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[key])
