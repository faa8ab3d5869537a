import itertools

import pytest
from hypothesis import settings

from bbquiver import Biquandle, verify_axioms
from bbquiver.fixtures import load_biquandle, load_bracket, load_diagram

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def linear_biquandles(max_n: int = 4) -> list[Biquandle]:
    """Every biquandle on Z/n (n <= max_n) with operations a*x + b*y and c*x + d*y."""
    out = []
    for n in range(2, max_n + 1):
        for a, b, c, d in itertools.product(range(n), repeat=4):
            U = [[(a * x + b * y) % n for y in range(n)] for x in range(n)]
            O = [[(c * x + d * y) % n for y in range(n)] for x in range(n)]
            if verify_axioms(U, O).ok:
                out.append(Biquandle(U, O))
    return out


LINEAR = linear_biquandles()


@pytest.fixture(scope="session")
def z2():
    return load_biquandle("z2.biq")


@pytest.fixture(scope="session")
def alex3():
    return load_biquandle("alex3.biq")


@pytest.fixture(scope="session")
def z2_bracket(z2):
    return load_bracket("z2_z5.brk", z2)


@pytest.fixture(scope="session")
def alex3_bracket(alex3):
    return load_bracket("alex3_z3.brk", alex3)


@pytest.fixture(scope="session")
def hopf():
    return load_diagram("hopf_pos.dia")
