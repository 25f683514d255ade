from __future__ import annotations

import pytest

from fk3double.checks import CheckResult, run_check

_RESULTS: dict[str, CheckResult] = {}


@pytest.fixture(scope="session")
def checked():
    """Run registry checks at most once per test session."""

    def get(check_id: str) -> CheckResult:
        if check_id not in _RESULTS:
            _RESULTS[check_id] = run_check(check_id)
        return _RESULTS[check_id]

    return get
