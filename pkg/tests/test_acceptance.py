"""Acceptance gate: every pinned criterion runs at its stated tolerance.

Each criterion prints one PASS/FAIL line; run with -v (or -s) to see them.
"""

import pytest

from tnomial.selftest import ALL_CRITERIA


@pytest.mark.parametrize('criterion', ALL_CRITERIA,
                         ids=[c.__name__.removeprefix('criterion_')
                              for c in ALL_CRITERIA])
def test_criterion(criterion):
    result = criterion()
    line = (f'{"PASS" if result.passed else "FAIL"} {result.name} '
            f'({result.seconds:.2f}s): {result.detail}')
    print(line)
    assert result.passed, line
