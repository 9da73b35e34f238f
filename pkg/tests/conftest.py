import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

import reference_data as ref  # noqa: E402
from wmsdrank import CriterionSpec, DecisionMatrix, WeightVector  # noqa: E402

DATA_DIR = Path(__file__).resolve().parents[1] / "data"


def close_within(value: float, target: float, tol: float) -> bool:
    """True when |value - target| <= tol, allowing for the diff landing
    on the tolerance boundary up to floating point representation."""
    diff = abs(value - target)
    return diff <= tol or abs(diff - tol) <= 1e-9 * tol


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def bus_criteria() -> list[CriterionSpec]:
    return [CriterionSpec(n, d, lo, hi) for n, d, lo, hi in ref.CRITERIA]


@pytest.fixture(scope="session")
def bus_matrix(bus_criteria) -> DecisionMatrix:
    values = np.array([ref.RAW[i] for i in ref.IDS], dtype=float)
    return DecisionMatrix(list(ref.IDS), values, bus_criteria)


@pytest.fixture(scope="session")
def unit_weights() -> WeightVector:
    return WeightVector(np.ones(len(ref.CRITERIA)))
