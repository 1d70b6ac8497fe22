import numpy as np
import pytest
from hypothesis import settings

from nadosc.clifford import build_dirac_set
from nadosc.gauge_algebra import build_charges

settings.register_profile("nadosc", deadline=None, max_examples=50, derandomize=True)
settings.load_profile("nadosc")


@pytest.fixture(scope="session")
def gammas():
    return build_dirac_set()


@pytest.fixture(scope="session")
def charges():
    return build_charges(1.0)


def random_hermitian(n, seed):
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return g + g.conj().T


# (number, title, passed, seconds, detail) rows filled by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, seconds, detail in sorted(ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number} {status} [{seconds:.2f}s] {title}: {detail}")
