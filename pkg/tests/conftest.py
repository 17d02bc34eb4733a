import numpy as np
import pytest

from lctkit.signals import GaussianChirp

# criterion number -> list of (ok, detail), filled by test_acceptance.py
ACCEPTANCE = {}

CRITERIA = {
    1: "algebra exactness",
    2: "special-case collapse",
    3: "Fourier / Laplace anchors",
    4: "FrFT cycle and additivity",
    5: "Versor inverse property",
    6: "identity suite",
    7: "Parseval anchor value",
    8: "Hermite correction",
    9: "hybrid table",
    10: "oracle vs quadrature",
    11: "CLI determinism",
}


def record(n, ok, detail=""):
    ACCEPTANCE.setdefault(n, []).append((bool(ok), detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, name in CRITERIA.items():
        parts = ACCEPTANCE.get(n)
        if parts is None:
            tr.write_line(f"criterion {n:2d} {name}: NOT RUN")
            continue
        failed = [d for ok, d in parts if not ok]
        verdict = "PASS" if not failed else "FAIL"
        if failed:
            extra = f" ({len(failed)}/{len(parts)} failed: {'; '.join(failed)})"
        elif len(parts) <= 3:
            extra = f" ({'; '.join(d for _, d in parts)})"
        else:
            extra = f" ({len(parts)} checks)"
        tr.write_line(f"criterion {n:2d} {name}: {verdict}{extra}")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def unit_gaussian():
    return GaussianChirp(1.0, 1.0, 0.0)
