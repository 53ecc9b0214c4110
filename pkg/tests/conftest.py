import random

import pytest

from colorsig.ccomplex import CComplexData, sign_vectors
from colorsig.laurent import LaurentPoly


def t(i, n=2):
    return LaurentPoly.variable(i - 1, n)


def random_cc(rng: random.Random, mu: int, g: int, bound: int = 2, beta0: int = 1):
    mats = {eps: [[rng.randint(-bound, bound) for _ in range(g)] for _ in range(g)]
            for eps in sign_vectors(mu, half=True)}
    return CComplexData(mu=mu, g=g, half_matrices=mats, beta0=beta0)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def trefoil():
    return CComplexData.from_seifert([[-1, 1], [0, -1]], name="trefoil")


@pytest.fixture
def hopf():
    return CComplexData(mu=1, g=1, half_matrices={(1,): [[1]]}, components_per_color=(2,),
                        name="hopf_annulus")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
