import math
import random
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from valinterp.intersect import CurveGerm
from valinterp.poly import MPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# --- hypothesis strategies -----------------------------------------------------

small_rats = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


@st.composite
def polys(draw, nvars=2, max_deg=3, max_terms=5, zero_const=False):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exp = tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))
        if zero_const and not any(exp):
            continue
        terms[exp] = draw(small_rats)
    return MPoly(nvars, terms)


# --- seeded generators used by acceptance and property tests --------------------


def random_poly(rng: random.Random, max_deg=4, coeff=5, zero_const=True, density=0.4):
    terms = {}
    for i in range(max_deg + 1):
        for j in range(max_deg + 1 - i):
            if zero_const and i == j == 0:
                continue
            if rng.random() < density:
                c = rng.randint(-coeff, coeff)
                if c:
                    terms[(i, j)] = c
    if not terms:
        terms[rng.choice([(1, 0), (0, 1)])] = rng.choice([-1, 1])
    return MPoly(2, terms)


def random_germ(rng: random.Random) -> CurveGerm:
    """A germ whose irreducibility the sufficient test can certify."""
    kind = rng.random()
    if kind < 0.6:
        # smooth: y - p(x) or x - p(y)
        terms = {(0, 1): 1}
        for m in range(1, rng.randint(1, 5) + 1):
            c = rng.randint(-3, 3)
            if c:
                terms[(m, 0)] = -c
        if rng.random() < 0.3:
            terms = {(b, a): c for (a, b), c in terms.items()}
        return CurveGerm.from_poly(MPoly(2, terms), "verify")
    # one Newton edge from (0, p) to (q, 0) with gcd(p, q) = 1
    while True:
        p, q = rng.randint(2, 4), rng.randint(2, 7)
        if math.gcd(p, q) == 1:
            break
    terms = {(0, p): 1, (q, 0): rng.choice([-3, -2, -1, 1, 2, 3])}
    for _ in range(rng.randint(0, 3)):
        i, j = rng.randint(0, q + 2), rng.randint(0, p + 1)
        if i * p + j * q > p * q:
            terms[(i, j)] = rng.randint(-3, 3)
    return CurveGerm.from_poly(MPoly(2, terms), "verify")


def random_t(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 30), rng.randint(1, 6)) + 1


@pytest.fixture
def rng():
    return random.Random(20241019)
