import doctest

import pytest

from qseidel import cli, grassmann, neighborhoods, perms, quantum

MODULES = [perms, grassmann, quantum, neighborhoods, cli]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__.split(".")[-1])
def test_docstring_examples(module):
    result = doctest.testmod(module)
    assert result.failed == 0
    assert result.attempted > 0 or module is cli
