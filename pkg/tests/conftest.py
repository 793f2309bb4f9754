import numpy as np
import pytest
from hypothesis import settings, strategies as st

from oftt.eos import GasParams

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

GASES = [GasParams(1.4, 1.4), GasParams(1.4, 1.67), GasParams(5.0 / 3.0, 5.0 / 3.0)]

positive = st.floats(0.05, 20.0, allow_nan=False)
velocity = st.floats(-3.0, 3.0, allow_nan=False)
states = st.tuples(positive, velocity, velocity, positive, positive).map(np.array)
gases = st.sampled_from(GASES)


def random_states(rng, n, lo=0.1, hi=5.0, vmax=2.0):
    """Admissible primitive states, one per row."""
    W = np.empty((n, 5))
    W[:, 0] = rng.uniform(lo, hi, n)
    W[:, 1:3] = rng.uniform(-vmax, vmax, (n, 2))
    W[:, 3:] = rng.uniform(lo, hi, (n, 2))
    return W


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


#: acceptance lines filled by test_acceptance.py: number -> (passed, detail)
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
