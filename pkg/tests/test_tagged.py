import pytest

import tagged


@pytest.mark.parametrize("check", [c for _, c in tagged.EXAMPLES], ids=[n for n, _ in tagged.EXAMPLES])
def test_worked_example(check):
    assert check() is True
