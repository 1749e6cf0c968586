from __future__ import annotations

from contextlib import contextmanager

import pytest


@pytest.fixture
def announce(capsys):
    """Emit one uncaptured PASS/FAIL line per acceptance criterion."""

    @contextmanager
    def _announce(tag: str):
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"\nFAIL {tag}", flush=True)
            raise
        with capsys.disabled():
            print(f"\nPASS {tag}", flush=True)

    return _announce
