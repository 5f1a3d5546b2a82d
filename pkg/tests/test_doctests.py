import doctest

from uniseq import submonoid, witness, words


def test_module_doctests():
    for module in (words, submonoid, witness):
        result = doctest.testmod(module)
        assert result.failed == 0, module.__name__
