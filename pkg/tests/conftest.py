from pathlib import Path
import sys
from dotenv import load_dotenv
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))
load_dotenv()

from graphs.core import Graph, cartesian_product  # noqa: E402
from graphs.generators import complete, cycle, path, path_power  # noqa: E402
from user_data.user_config import SolverSettings  # noqa: E402


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def p5():
    return path(5)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def p5_square():
    """P_5 □ P_5."""
    return cartesian_product(path(5), path(5))


@pytest.fixture
def pp6_square():
    """P_6^2 □ P_6^2."""
    return cartesian_product(path_power(6, 2), path_power(6, 2))


@pytest.fixture
def settings():
    """Small limits so command tests stay fast."""
    return SolverSettings(
        exact_ceiling=16, bandwidth_ceiling=12, budget_ms=20_000, max_states=500_000
    )


@pytest.fixture
def tmp_config(tmp_path):
    config = tmp_path / "user_config.json"
    config.write_text('{"exact_ceiling": 16, "budget_ms": 20000}')
    return config
