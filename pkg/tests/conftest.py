import pathlib

import numpy as np
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]
MODELS = ROOT / "models"

_acceptance = []


def record(criterion, name, passed, detail=""):
    _acceptance.append((criterion, name, bool(passed), detail))


@pytest.fixture
def acceptance():
    return record


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def models_dir():
    return MODELS


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for criterion, name, passed, detail in sorted(_acceptance, key=lambda r: r[0]):
        mark = "PASS" if passed else "FAIL"
        line = f"[{mark}] {criterion:>2}. {name}"
        if detail:
            line += f"  ({detail})"
        tr.write_line(line)
