from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from hypernum import ZERO, Hyper, Sign

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

positive = st.builds(Fraction, st.integers(1, 400), st.integers(1, 24))
rationals = st.builds(Fraction, st.integers(-400, 400), st.integers(1, 24))
nonzero_signs = st.sampled_from([Sign.PLUS, Sign.MINUS, Sign.LAMBDA])
signs = st.sampled_from(list(Sign))


@st.composite
def hypers(draw, sign=None):
    s = draw(signs) if sign is None else sign
    if s is Sign.ZERO:
        return ZERO
    return Hyper(s, draw(positive))


@st.composite
def hyper_pairs(draw):
    """Pairs over every sign pattern, with equal magnitudes drawn often."""
    x = draw(hypers())
    y = draw(hypers())
    if not x.is_zero and not y.is_zero and draw(st.booleans()):
        y = Hyper(y.sign, x.mag)
    return x, y


@st.composite
def hyper_triples(draw):
    x, y = draw(hyper_pairs())
    z = draw(hypers())
    if not z.is_zero and draw(st.booleans()):
        z = Hyper(z.sign, draw(st.sampled_from([h.mag for h in (x, y) if not h.is_zero] or [Fraction(1)])))
    return x, y, z


# --- acceptance summary ----------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""
    from contextlib import contextmanager

    @contextmanager
    def run(label: str):
        try:
            yield
        except BaseException:
            ACCEPTANCE_LINES.append(f"FAIL  {label}")
            raise
        ACCEPTANCE_LINES.append(f"PASS  {label}")

    return run


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
