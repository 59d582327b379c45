"""Randomized invariant suites at a reduced case count.

Each suite is exercised separately so a regression points at one invariant;
the acceptance run repeats them at the full case count.
"""

import pytest

from stabkit import propsuite

REDUCED = 60
SEED = propsuite.DEFAULT_SEED


@pytest.mark.parametrize("name", sorted(propsuite.SUITES))
def test_suite(name):
    ran = propsuite.SUITES[name](SEED, REDUCED)
    assert ran >= REDUCED


def test_run_all_reports_every_suite():
    lines = []
    assert propsuite.run_all(seed=SEED, cases=5, emit=lines.append)
    assert len(lines) == len(propsuite.SUITES)
    assert all(line.startswith("PASS ") for line in lines)


def test_different_seeds_still_pass():
    for seed in (1, 2, 3):
        assert propsuite.SUITES["snf_integers"](seed, 20) >= 20
        assert propsuite.SUITES["character_selection"](seed, 20) >= 20
