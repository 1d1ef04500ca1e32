import pytest

from jacring import AGREEMENT_PRIMES, Domain, RingDescriptor, parse_polynomial

FERMAT_QUARTIC = "x0^4+x1^4+x2^4+x3^4"
FERMAT_QUINTIC = "x0^5+x1^5+x2^5+x3^5+x4^5"
FERMAT_CUBIC_SURFACE = "x0^3+x1^3+x2^3+x3^3"
PLANE_CUBIC = "x0^3+x1^3+x2^3"
QUARTIC_FAMILY = "x0^4+x1^4+x2^4+x3^4 - t*x0^2*x1^2"
QUINTIC_FAMILY = "x0^5+x1^5+x2^5+x3^5+x4^5 - t*x0^3*x1^2"


def poly(text, num_vars, domain=None):
    ring = RingDescriptor(num_vars, domain=domain or Domain())
    return parse_polynomial(text, ring)


@pytest.fixture
def quartic():
    return poly(FERMAT_QUARTIC, 4)


@pytest.fixture
def quintic():
    return poly(FERMAT_QUINTIC, 5)


@pytest.fixture
def cubic_surface():
    return poly(FERMAT_CUBIC_SURFACE, 4)


@pytest.fixture
def nodal_quartic():
    return poly("x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2", 4)


@pytest.fixture
def ring2():
    return RingDescriptor(2)


@pytest.fixture(params=AGREEMENT_PRIMES, ids=["p1", "p2", "p3"])
def prime(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
