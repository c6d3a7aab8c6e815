"""Runs every acceptance criterion and prints one PASS/FAIL line for each.

Use ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import pytest

from rookharmonics.acceptance import CRITERIA, format_line, run_criterion


@pytest.mark.parametrize("number", [k for k, _, _ in CRITERIA], ids=[f"criterion_{k}" for k, _, _ in CRITERIA])
def test_criterion(number):
    ok, detail, seconds = run_criterion(number)
    print(f"\n{format_line(number, ok, detail)} [{seconds:.2f}s]")
    assert ok, detail
