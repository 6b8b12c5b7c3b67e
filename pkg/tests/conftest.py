from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from isograss.arith import Field, GaussianRational
from isograss.forms import CaseTag, GroupParams

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

RO = CaseTag.REAL_ORTHOGONAL
UN = CaseTag.UNITARY
CO = CaseTag.COMPLEX_ORTHOGONAL
SP = CaseTag.SYMPLECTIC

small_fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)


def scalars(field):
    return small_fractions if field is Field.Q else gaussians


@st.composite
def matrices(draw, field=Field.Q, max_rows=4, max_cols=5, sparse=True):
    nr = draw(st.integers(1, max_rows))
    nc = draw(st.integers(1, max_cols))
    elem = scalars(field)
    if sparse:
        zero = Fraction(0) if field is Field.Q else GaussianRational(0)
        elem = st.one_of(st.just(zero), elem)
    return [[draw(elem) for _ in range(nc)] for _ in range(nr)]


@pytest.fixture
def ro2211():
    return RO, GroupParams.signed(2, 2, 1, 1)


# one line per acceptance criterion, shown at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
