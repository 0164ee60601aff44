# Standard Library
import os
import sys
import json
from pathlib import Path

# Third Party
import numpy as np
import pytest


def pytest_configure(config):
    """
    Configure pytest to add the verifier unit to sys.path for module imports
    and pin the environment defaults read at import time.
    """
    # Get the absolute path to the project root
    project_root = Path(__file__).parent.parent

    # Add the deployable unit directory to sys.path
    src_path = project_root / "src" / "harnack-verifier"
    if str(src_path) not in sys.path:
        sys.path.insert(0, str(src_path))

    # Set environment variables for testing
    os.environ["HARNACK_DEFAULT_SEED"] = "7"
    os.environ["HARNACK_SEARCH_WORKERS"] = "1"
    os.environ["POWERTOOLS_LOG_LEVEL"] = "WARNING"

    config.addinivalue_line("markers", "slow: long-running evidence suites")
    return config


@pytest.fixture
def counterexample_matrices():
    """The published matrices ``Z1, Z2`` and unitary ``U``."""
    z1 = np.array([[0.34, -0.15], [-0.15, 0.07]], dtype=np.complex128)
    z2 = np.array([[0.02, -0.01], [-0.01, 0.01]], dtype=np.complex128)
    u = np.array([[-0.60, 0.80], [0.80, 0.60]], dtype=np.complex128)
    return z1, z2, u


@pytest.fixture
def rng():
    """Fresh seeded stream for each test."""
    # Local Modules
    from harnack_verifier.linalg import RngState

    return RngState(seed=20240611, stream=0)


@pytest.fixture
def write_matrix(tmp_path):
    """Write a matrix to a JSON file in the shared format, return its path."""
    # Local Modules
    from harnack_verifier.linalg import serialize_matrix

    counter = {"count": 0}

    def _write(matrix, name=None) -> str:
        counter["count"] += 1
        path = tmp_path / (name or f"matrix_{counter['count']}.json")
        path.write_text(json.dumps(serialize_matrix(np.asarray(matrix))))
        return str(path)

    return _write
