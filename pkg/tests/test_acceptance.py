"""The nine acceptance criteria, one test each.

Tolerances are pinned here rather than taken from suite defaults so that a
change to the library cannot loosen them. Run with ``-s`` to see the
one-line verdicts.
"""

import pytest

from padic_stark import suite

M_GAMMA = 8
M_GAUSS = 8
M_L = 10
N_MAX = 60
HONESTY_OPS = 50

# wall-clock ceilings in seconds, None where no limit is stated
RUNTIME = {1: 10.0, 2: 60.0, 3: None, 4: None, 5: 60.0, 6: 30.0, 7: None, 8: None, 9: None}

RUNS = {
    1: lambda: suite.criterion_1(prec=M_GAMMA, seed=1, samples=100),
    2: lambda: suite.criterion_2(prec=M_GAUSS),
    3: lambda: suite.criterion_3(),
    4: lambda: suite.criterion_4(prec=M_L),
    5: lambda: suite.criterion_5(prec=M_L),
    6: lambda: suite.criterion_6(bound=500),
    7: lambda: suite.criterion_7(),
    8: lambda: suite.criterion_8(prec=M_L, n_max=N_MAX),
    9: lambda: suite.criterion_9(prec=8, seed=9, count=HONESTY_OPS),
}


@pytest.mark.parametrize("number", sorted(RUNS))
def test_criterion(number, acceptance_log):
    r = RUNS[number]()
    print()
    print(r.line())
    acceptance_log.append(r.line())
    assert r.number == number
    assert r.passed, r.to_record()["details"]
    limit = RUNTIME[number]
    if limit is not None:
        assert r.seconds < limit, f"criterion {number} took {r.seconds:.1f}s (limit {limit}s)"
