import cmath
import random
import sys

import pytest
from hypothesis import strategies as st

from rrcablocks.exactnum import Cyclotomic, euler_phi


def to_complex(a: Cyclotomic) -> complex:
    """Numeric image of a cyclotomic number under zeta_N -> exp(2 pi i / N)."""
    z = cmath.exp(2j * cmath.pi / a.order)
    return sum(float(c) * z**k for k, c in enumerate(a.coeffs))


def random_cyclotomic(rng: random.Random, order: int, spread: int = 5, allow_zero: bool = True) -> Cyclotomic:
    while True:
        coeffs = []
        for _ in range(euler_phi(order)):
            num = rng.randint(-spread, spread)
            den = rng.randint(1, 4)
            coeffs.append(f"{num}/{den}")
        value = Cyclotomic(order, coeffs)
        if allow_zero or not value.is_zero():
            return value


small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def cyclotomics(draw, order=None, nonzero=False):
    n = order if order is not None else draw(st.integers(min_value=1, max_value=12))
    coeffs = draw(st.lists(small_rationals, min_size=euler_phi(n), max_size=euler_phi(n)))
    value = Cyclotomic(n, [str(c) for c in coeffs])
    if nonzero:
        from hypothesis import assume

        assume(not value.is_zero())
    return value


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
