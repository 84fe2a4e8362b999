import pytest

from limbfield import BinaryFieldParams, PrimeFieldParams
from limbfield import oracle as O


@pytest.fixture
def gf8():
    """GF(2^3) with p = x^3 + x + 1 at L = 8."""
    return BinaryFieldParams(3, (0, 1), 8)


@pytest.fixture
def f127():
    return PrimeFieldParams(7, 127, 8)


def oracle_mul(field, a, b):
    pb = O.bits_from_int(field.modulus)
    return O.int_from_bits(O.oracle_gf_mulmod(O.bits_from_int(a), O.bits_from_int(b), pb))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py" in rep.nodeid:
                lines.append((rep.nodeid.split("::")[-1], outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")
