from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from pencilgit.fields import field_from_spec
from pencilgit.forms import LinearlyDependent, pencil_from_coeffs

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.large_base_example],
)
settings.load_profile("default")

F13 = field_from_spec("fp:13")
Q = field_from_spec("q")
QI = field_from_spec("q(sqrt:-1)")


@pytest.fixture
def f13():
    return F13


@pytest.fixture
def q():
    return Q


small_rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))
mod13 = st.integers(min_value=0, max_value=12)


@st.composite
def pencils(draw, field=F13):
    elem = mod13 if field is F13 else small_rationals
    a = [field(x) for x in draw(st.lists(elem, min_size=4, max_size=4))]
    b = [field(x) for x in draw(st.lists(elem, min_size=4, max_size=4))]
    try:
        return pencil_from_coeffs(field, a, b)
    except LinearlyDependent:
        assume(False)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERIA, RESULTS
    except ImportError:
        return
    report = RESULTS.get("report")
    if report is None:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    by_id = {c.id: c for c in report.checks}
    for number, ids in sorted(CRITERIA.items()):
        main = by_id[ids[0]]
        extra = "".join("; %s: %s" % (i, by_id[i].status) for i in ids[1:])
        tr.write_line("criterion %02d  %-4s  %s%s" % (number, main.status.upper(), main.id, extra))
    for c in report.checks:
        if not any(c.id in ids for ids in CRITERIA.values()):
            tr.write_line("supplementary %s  %s" % (c.status.upper(), c.id))
    tr.write_line("verify_all runtime %.1f s (limit 60 s), overall %s" % (RESULTS["elapsed"], report.status.upper()))
