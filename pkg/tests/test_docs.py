import doctest
import importlib
import pathlib
import re

import pytest

MODULES = ["core", "patterns", "machines", "layers", "closedforms", "gentree", "verify", "cli"]


@pytest.mark.parametrize("name", MODULES)
def test_docstring_examples(name):
    mod = importlib.import_module(f"invsort.{name}")
    assert doctest.testmod(mod).failed == 0


def test_readme_snippet():
    readme = (pathlib.Path(__file__).parents[1] / "README.md").read_text()
    block = re.search(r"```python\n(.*?)```", readme, re.S).group(1)
    test = doctest.DocTestParser().get_doctest(block, {}, "README", "README.md", 0)
    runner = doctest.DocTestRunner()
    runner.run(test)
    assert runner.failures == 0 and runner.tries == 4
