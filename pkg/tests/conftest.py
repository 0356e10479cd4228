import pytest

from permeq import make_system, parse_proofterm, parse_system

RUNNING = """\
alphabet: A B
rules:
  alpha: B B -> A
  beta: A A B -> B A A B
"""

GAMMA = ("A B beta . A alpha A A B . A A beta . beta A A B . B beta A A B . "
         "alpha A A B A A B . A beta A A B")
GAMMA_PRIME = "A B beta . A alpha beta . beta A A B . B beta A A B . alpha beta A A B"

_acceptance_lines = []


@pytest.fixture(scope="session")
def running():
    return parse_system(RUNNING)


@pytest.fixture(scope="session")
def gamma(running):
    return parse_proofterm(GAMMA, running)


@pytest.fixture(scope="session")
def gamma_prime(running):
    return parse_proofterm(GAMMA_PRIME, running)


@pytest.fixture(scope="session")
def trace_system():
    """rho: A -> B B B, sigma: B B -> B, tau: B B -> C."""
    return make_system("A B C", "rho: A -> B B B; sigma: B B -> B; tau: B B -> C")


@pytest.fixture(scope="session")
def exchange_system():
    """The primed system for which the exchange law's right side is not a proof term."""
    return make_system("A A1 A2 B B1 B2 C",
                       "alpha: A -> A1 C; alphaP: A1 -> A2; beta: B -> B1; betaP: C B1 -> B2")


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion for the terminal summary."""
    def record(label, ok, detail=""):
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
        assert ok, f"{label}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
